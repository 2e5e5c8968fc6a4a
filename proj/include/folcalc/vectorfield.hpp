#ifndef FOLCALC_VECTORFIELD_HPP
#define FOLCALC_VECTORFIELD_HPP

#include <string>

#include "folcalc/module.hpp"

namespace folcalc {

// Polynomial vector field sum_i a_i d/dz_i on C^n; components live in the
// same PolyVec shape the module layer uses, with ambient rank n = nvars.
struct VectorField {
    PolyVec v;

    int dim() const { return v.ambient(); }
    static VectorField zero(int n) { return {PolyVec::zero(n, n)}; }
};

// [X,Y]^k = sum_i (X^i d_i Y^k - Y^i d_i X^k), exact.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

// Text form "a1*d1 + ... + an*dn": a polynomial in z1..zn and the symbols
// d1..dn, linear and homogeneous of degree one in the d's.
VectorField parse_vector_field(const std::string& text, int n);
std::string print_vector_field(const VectorField& x);
std::string print_vector_field(const PolyVec& v);

}  // namespace folcalc

#endif
