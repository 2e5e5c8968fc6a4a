#ifndef FOLCALC_POLY_HPP
#define FOLCALC_POLY_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "folcalc/monomial.hpp"
#include "folcalc/rational.hpp"

namespace folcalc {

// Multivariate polynomial over Q(i) in canonical form: terms sorted in
// descending degrevlex order, no zero coefficients.
struct MultiPoly {
    int nvars = 0;
    std::vector<std::pair<Monomial, GaussianRational>> terms;

    static MultiPoly zero(int n) { return MultiPoly{n, {}}; }
    static MultiPoly constant(int n, GaussianRational c);
    static MultiPoly variable(int n, int idx);  // z_{idx+1}
    static MultiPoly term(int n, Monomial m, GaussianRational c);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first.is_one()); }
    // -1 for the zero polynomial.
    int total_degree() const;
    const std::pair<Monomial, GaussianRational>& leading() const { return terms.front(); }
};

bool operator==(const MultiPoly& a, const MultiPoly& b);
inline bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const GaussianRational& c);
MultiPoly mono_scale(const MultiPoly& a, const Monomial& m, const GaussianRational& c);
MultiPoly poly_pow(const MultiPoly& a, int k);

// Exact formal partial derivative with respect to z_{var+1}.
MultiPoly differentiate(const MultiPoly& p, int var);

std::complex<double> eval_poly(const MultiPoly& p, std::span<const std::complex<double>> z);
GaussianRational eval_poly_exact(const MultiPoly& p, const std::vector<GaussianRational>& z);

// Quotient a/b in the polynomial ring; returns false if b does not divide a.
bool try_divexact(const MultiPoly& a, const MultiPoly& b, MultiPoly& q);
MultiPoly divexact(const MultiPoly& a, const MultiPoly& b);

// Multivariate gcd (primitive PRS), normalized to leading coefficient 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// ---- text form ----------------------------------------------------------
// Grammar: sums/differences of products of powers of atoms, where an atom
// is a rational literal "a" or "a/b", the imaginary unit "i", a variable,
// or a parenthesized subexpression; "^" takes a nonnegative integer.
// Canonical printing splits complex coefficients into a real and an
// imaginary term, so output never needs parentheses.

using VarNamer = std::function<std::string(int)>;
std::string default_var_name(int idx);

std::string print_poly(const MultiPoly& p, const VarNamer& namer = default_var_name);
// Resolves a variable name to its index, or -1 if unknown.
using VarResolver = std::function<int(const std::string&)>;
MultiPoly parse_poly(const std::string& text, int nvars,
                     const VarResolver& resolver = {});  // default resolver: z1..zn

}  // namespace folcalc

#endif
