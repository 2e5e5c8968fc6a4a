#ifndef FOLCALC_RATIONAL_HPP
#define FOLCALC_RATIONAL_HPP

#include <complex>
#include <string>

#include <gmpxx.h>

#include "folcalc/errors.hpp"

namespace folcalc {

// Element of Q(i): exact arbitrary-precision real and imaginary parts.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class r) : re(std::move(r)), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }
    static GaussianRational ratio(long num, long den) {
        if (den == 0) throw Error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, mpq_class(-im)}; }
    mpq_class norm() const { return re * re + im * im; }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw Error("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class r = (re * o.re + im * o.im) / n;
        mpq_class i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline GaussianRational operator-(const GaussianRational& a) {
    return {mpq_class(-a.re), mpq_class(-a.im)};
}
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

std::string rational_str(const mpq_class& q);

// Debug/report form "a/b+c/d*i"; the polynomial printer splits real and
// imaginary parts into separate terms instead of calling this.
std::string gaussian_str(const GaussianRational& g);

}  // namespace folcalc

#endif
