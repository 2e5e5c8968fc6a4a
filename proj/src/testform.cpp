#include "folcalc/testform.hpp"

#include <algorithm>

namespace folcalc {

bool operator==(const IndexPair& a, const IndexPair& b) { return a.I == b.I && a.J == b.J; }

namespace {

void validate_index(const std::vector<int>& idx, int n, int p, const char* which) {
    if (static_cast<int>(idx.size()) != n - p)
        throw Error(std::string("malformed multi-index ") + which + ": expected size " +
                    std::to_string(n - p));
    for (size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 1 || idx[t] > n)
            throw Error(std::string("malformed multi-index ") + which + ": entry out of range");
        if (t > 0 && idx[t] <= idx[t - 1])
            throw Error(std::string("malformed multi-index ") + which +
                        ": entries must strictly increase");
    }
}

int transverse_count(const std::vector<int>& idx, int n, int k) {
    int c = 0;
    for (int v : idx)
        if (v >= k + 1 && v <= n) ++c;
    return c;
}

}  // namespace

bool is_test_pair(const std::vector<int>& I, const std::vector<int>& J, int n, int k, int p) {
    if (p < 1 || p > n - 1) throw Error("p out of range");
    if (k < 0 || k > n) throw Error("k out of range");
    validate_index(I, n, p, "I");
    validate_index(J, n, p, "J");
    int thr = n - k - p;
    return transverse_count(I, n, k) > thr || transverse_count(J, n, k) > thr;
}

std::vector<std::vector<int>> subsets_of(int n, int size) {
    std::vector<std::vector<int>> out;
    if (size < 0 || size > n) return out;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i + 1;
    for (;;) {
        out.push_back(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i + 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<IndexPair> constant_test_form_basis(int n, int k, int p) {
    std::vector<IndexPair> out;
    auto subs = subsets_of(n, n - p);
    for (const auto& I : subs)
        for (const auto& J : subs)
            if (is_test_pair(I, J, n, k, p)) out.push_back({I, J});
    return out;
}

}  // namespace folcalc
