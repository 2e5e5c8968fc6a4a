#ifndef FOLCALC_MONOMIAL_HPP
#define FOLCALC_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace folcalc {

// Exponent vector of a power product in z1..zn.
struct Monomial {
    std::vector<int> exp;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    }
};

inline bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

// Degree-reverse-lexicographic order, the one term order used everywhere.
// Returns >0 if a > b, 0 if equal, <0 if a < b.
inline int cmp_degrevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp[i] > b.exp[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.exp[i] += b.exp[i];
    return r;
}

// a / b; requires mono_divides(b, a).
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.exp[i] -= b.exp[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.nvars(); ++i) r.exp[i] = std::max(r.exp[i], b.exp[i]);
    return r;
}

}  // namespace folcalc

#endif
