#include <doctest.h>

#include <set>

#include "folcalc/testform.hpp"

using namespace folcalc;

namespace {

int meet(const std::vector<int>& idx, int lo, int hi) {
    int c = 0;
    for (int v : idx)
        if (v >= lo && v <= hi) ++c;
    return c;
}

// Test condition relative to an arbitrary transverse index window [lo,hi].
bool is_test_for_window(const std::vector<int>& I, const std::vector<int>& J, int lo, int hi,
                        int p) {
    int thr = (hi - lo + 1) - p;
    return meet(I, lo, hi) > thr || meet(J, lo, hi) > thr;
}

}  // namespace

TEST_CASE("test pair examples") {
    CHECK(is_test_pair({2}, {2}, 2, 1, 1));
    CHECK_FALSE(is_test_pair({1}, {1}, 2, 1, 1));
    CHECK(is_test_pair({2, 3}, {2, 3}, 3, 1, 1));
    CHECK_THROWS_AS(is_test_pair({2, 1}, {1, 2}, 3, 1, 1), Error);
    CHECK_THROWS_AS(is_test_pair({1}, {1, 2}, 3, 1, 1), Error);
}

TEST_CASE("basis enumeration examples") {
    auto basis = constant_test_form_basis(2, 1, 1);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == IndexPair{{1}, {2}});
    CHECK(basis[1] == IndexPair{{2}, {1}});
    CHECK(basis[2] == IndexPair{{2}, {2}});

    // p = n-k: the only excluded pair is I = J = {1..k}
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            int p = n - k;
            auto subs = subsets_of(n, n - p);
            size_t total = subs.size() * subs.size();
            auto b = constant_test_form_basis(n, k, p);
            CHECK(b.size() == total - 1);
            std::vector<int> full_leaf;
            for (int v = 1; v <= k; ++v) full_leaf.push_back(v);
            for (const auto& pr : b) CHECK_FALSE((pr.I == full_leaf && pr.J == full_leaf));
        }
    }

    // k = 0: the transverse block is everything, the count can never exceed
    // its bound, and no pair qualifies.
    for (int n = 2; n <= 5; ++n)
        for (int p = 1; p <= n - 1; ++p) CHECK(constant_test_form_basis(n, 0, p).empty());

    // k = n: every pair qualifies.
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p <= n - 1; ++p) {
            auto subs = subsets_of(n, n - p);
            CHECK(constant_test_form_basis(n, n, p).size() == subs.size() * subs.size());
        }
}

TEST_CASE("pairs failing the leaf test contain the shared leaf window") {
    // For all n <= 5, 0 <= l < k <= n, 1 <= p <= n-1: a pair that fails the
    // test condition for the rank-k projection contains {l+1..k} in I and J.
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int l = 0; l < k; ++l) {
                for (int p = 1; p <= n - 1; ++p) {
                    auto subs = subsets_of(n, n - p);
                    for (const auto& I : subs) {
                        for (const auto& J : subs) {
                            if (is_test_pair(I, J, n, k, p)) continue;
                            for (int v = l + 1; v <= k; ++v) {
                                CHECK(std::count(I.begin(), I.end(), v) == 1);
                                CHECK(std::count(J.begin(), J.end(), v) == 1);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("sum projection test pairs split into the two factors") {
    // F transverse on {k+1..n}; G transverse on {l+1..n-m+l}; the joined
    // projection is transverse on {k+1..n-m+l}.  Every test pair for the
    // join is a test pair for F or for G.  Exhaustive for n <= 5 over
    // admissible l <= min(k,m), k+m-l <= n.
    long checked = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int m = 1; m <= n; ++m) {
                for (int l = 0; l <= std::min(k, m); ++l) {
                    if (k + m - l > n) continue;
                    for (int p = 1; p <= n - 1; ++p) {
                        auto subs = subsets_of(n, n - p);
                        for (const auto& I : subs) {
                            for (const auto& J : subs) {
                                if (!is_test_for_window(I, J, k + 1, n - m + l, p)) continue;
                                bool for_f = is_test_for_window(I, J, k + 1, n, p);
                                bool for_g = is_test_for_window(I, J, l + 1, n - m + l, p);
                                CHECK((for_f || for_g));
                                ++checked;
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(checked > 10000);
}
