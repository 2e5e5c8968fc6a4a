#include "folcalc/vectorfield.hpp"

#include <cctype>

namespace folcalc {

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    int n = x.dim();
    if (y.dim() != n) throw DimensionMismatch("lie_bracket: vector field dimension");
    VectorField r = VectorField::zero(n);
    for (int k = 0; k < n; ++k) {
        MultiPoly acc = MultiPoly::zero(n);
        for (int i = 0; i < n; ++i) {
            acc = acc + x.v.c[i] * differentiate(y.v.c[k], i);
            acc = acc - y.v.c[i] * differentiate(x.v.c[k], i);
        }
        r.v.c[k] = std::move(acc);
    }
    return r;
}

namespace {

// Vector fields are parsed and printed through the extended ring
// z1..zn, d1..dn; a field is exactly a polynomial of degree one in the d
// block with no d-free part.
std::string extended_name(int n, int idx) {
    return idx < n ? "z" + std::to_string(idx + 1) : "d" + std::to_string(idx - n + 1);
}

MultiPoly vec_to_extended(const PolyVec& v) {
    int n = v.ambient();
    MultiPoly out = MultiPoly::zero(2 * n);
    for (int i = 0; i < n; ++i) {
        for (const auto& [m, c] : v.c[i].terms) {
            Monomial ext = Monomial::one(2 * n);
            for (int k = 0; k < n; ++k) ext.exp[k] = m.exp[k];
            ext.exp[n + i] = 1;
            out = out + MultiPoly::term(2 * n, std::move(ext), c);
        }
    }
    return out;
}

}  // namespace

VectorField parse_vector_field(const std::string& text, int n) {
    auto resolver = [n](const std::string& name) -> int {
        if (name.size() < 2) return -1;
        char head = name[0];
        if (head != 'z' && head != 'd') return -1;
        for (size_t k = 1; k < name.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) return -1;
        int idx = std::stoi(name.substr(1)) - 1;
        if (idx < 0 || idx >= n) return -1;
        return head == 'z' ? idx : n + idx;
    };
    MultiPoly ext = parse_poly(text, 2 * n, resolver);
    VectorField r = VectorField::zero(n);
    for (const auto& [m, c] : ext.terms) {
        int dcomp = -1, ddeg = 0;
        for (int k = 0; k < n; ++k) {
            ddeg += m.exp[n + k];
            if (m.exp[n + k] > 0) dcomp = k;
        }
        if (ddeg != 1)
            throw ParseError({1, 1}, "generator must be linear in d1..d" + std::to_string(n));
        Monomial base = Monomial::one(n);
        for (int k = 0; k < n; ++k) base.exp[k] = m.exp[k];
        r.v.c[dcomp] = r.v.c[dcomp] + MultiPoly::term(n, std::move(base), c);
    }
    return r;
}

std::string print_vector_field(const PolyVec& v) {
    int n = v.ambient();
    MultiPoly ext = vec_to_extended(v);
    return print_poly(ext, [n](int idx) { return extended_name(n, idx); });
}

std::string print_vector_field(const VectorField& x) { return print_vector_field(x.v); }

}  // namespace folcalc
