#ifndef FOLCALC_WEDGE_HPP
#define FOLCALC_WEDGE_HPP

#include <complex>
#include <vector>

#include "folcalc/rational.hpp"
#include "folcalc/testform.hpp"

namespace folcalc {

using CMatrix = std::vector<std::vector<std::complex<double>>>;
using GQMatrix = std::vector<std::vector<GaussianRational>>;

// Sign of the shuffle sorting (A ascending, B ascending) into 1..n, where
// A and B partition {1..n}.
int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b);

// Unit normalization factor nu(I,J) fixing i-powers and ordering signs so
// that the pairing below is p! det(H[Ic,Jc]), real nonnegative on diagonal
// pairs for positive semidefinite H.  The test form is nu * dz_I ^ dzbar_J.
std::complex<double> test_form_unit(int n, int p, const IndexPair& pair);
GaussianRational test_form_unit_exact(int n, int p, const IndexPair& pair);

// Scalar c with omega_H^p ^ u_(I,J) = c dV, where omega_H = i sum h_ab
// dz_a ^ dzbar_b and dV = omega_std^n / n!.  Equals p! det(H[Ic,Jc]).
std::complex<double> wedge_coefficient(const CMatrix& h, int p, const IndexPair& pair);
GaussianRational wedge_coefficient_exact(const GQMatrix& h, int p, const IndexPair& pair);

// omega_H^p ^ omega_std^(n-p) / dV = p!(n-p)! sum over principal p-minors.
double mass_coefficient(const CMatrix& h, int p);

// |c_(I,J)| <= sqrt(c_(I,I) c_(J,J)) + tol for all pairs with |I|=|J|=n-p.
// Throws if H is not positive semidefinite.
bool cauchy_schwarz_audit(const CMatrix& h, int p, double tol = 1e-12);

std::complex<double> det_complex(const CMatrix& h, const std::vector<int>& rows,
                                 const std::vector<int>& cols);

}  // namespace folcalc

#endif
