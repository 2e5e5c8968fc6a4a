#ifndef FOLCALC_FIELD_HPP
#define FOLCALC_FIELD_HPP

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "folcalc/errors.hpp"

namespace folcalc {

// Numeric expression over a chart point: Gaussian-rational literals, z_i,
// conj(.), abs2(.), eps, + - * / and integer powers.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Const, Var, Conj, Abs2, Eps, Add, Sub, Mul, Div, Neg, Pow };
    Kind kind = Kind::Const;
    std::complex<double> value;  // Const
    int var = -1;                // Var
    int ipow = 0;                // Pow
    ExprPtr a, b;
    SourcePos pos;
};

ExprPtr parse_expression(const std::string& text, int nvars);
std::complex<double> eval_expression(const Expr& e, std::span<const std::complex<double>> z,
                                     double eps);

// Pointwise Hermitian coefficient matrix H_eps(z) of an epsilon-family of
// (1,1)-forms; only the upper triangle is declared, the rest is conjugated.
struct HermitianField {
    int n = 0;
    std::vector<std::vector<ExprPtr>> upper;  // upper[a][b] valid for b >= a; null = 0
    std::vector<double> epsilons;             // strictly decreasing, positive

    static HermitianField make(int n);
    void set_entry(int a, int b, ExprPtr e);  // 0-based, requires a <= b
    // Fills an n x n Hermitian matrix; the diagonal must evaluate real.
    void eval(std::span<const std::complex<double>> z, double eps,
              std::vector<std::vector<std::complex<double>>>& out) const;
};

// Axis-aligned cube in R^{2n} with a midpoint grid; axis 2j / 2j+1 carry
// Re z_{j+1} / Im z_{j+1}.  The last n-k complex coordinates are the
// transverse directions of a foliation presented in adapted coordinates.
struct Chart {
    int n = 0;
    std::vector<double> center;  // size 2n
    double half_width = 1.0;
    int grid = 2;                // subdivisions per axis, >= 2
    int k = 0;                   // leaf dimension

    double volume() const;
    long long cell_count() const;
    void validate() const;
};

}  // namespace folcalc

#endif
