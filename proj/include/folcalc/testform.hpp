#ifndef FOLCALC_TESTFORM_HPP
#define FOLCALC_TESTFORM_HPP

#include <vector>

#include "folcalc/errors.hpp"

namespace folcalc {

// Multi-index pair (I, J) of dz_I ^ dzbar_J, 1-based strictly increasing,
// |I| = |J| = n - p.
struct IndexPair {
    std::vector<int> I, J;
};

bool operator==(const IndexPair& a, const IndexPair& b);

// A pair carries weight in a test form for a rank-k foliation in adapted
// coordinates exactly when I or J meets the transverse block {k+1..n} in
// more than n-k-p indices.
bool is_test_pair(const std::vector<int>& I, const std::vector<int>& J, int n, int k, int p);

// All qualifying pairs in lexicographic order (I major, J minor).
std::vector<IndexPair> constant_test_form_basis(int n, int k, int p);

std::vector<std::vector<int>> subsets_of(int n, int size);

}  // namespace folcalc

#endif
