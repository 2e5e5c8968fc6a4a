#include "folcalc/wedge.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace folcalc {

int shuffle_sign(const std::vector<int>& a, const std::vector<int>& b) {
    // Inversions between the two ascending blocks.
    long inv = 0;
    for (int y : b)
        for (int x : a)
            if (x > y) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<int> complement_of(const std::vector<int>& idx, int n) {
    std::vector<int> out;
    out.reserve(n - idx.size());
    size_t t = 0;
    for (int v = 1; v <= n; ++v) {
        if (t < idx.size() && idx[t] == v) {
            ++t;
        } else {
            out.push_back(v);
        }
    }
    return out;
}

// nu = i^(n-p) * (-1)^(p(p-1)/2 + (n-p)p + n(n-1)/2) * sgn(Ic,I) * sgn(Jc,J)
struct UnitParts {
    int ipow;  // exponent of i, mod 4
    int sign;  // +-1
};

UnitParts unit_parts(int n, int p, const IndexPair& pair) {
    std::vector<int> ic = complement_of(pair.I, n);
    std::vector<int> jc = complement_of(pair.J, n);
    long e = static_cast<long>(p) * (p - 1) / 2 + static_cast<long>(n - p) * p +
             static_cast<long>(n) * (n - 1) / 2;
    int sign = (e % 2 == 0 ? 1 : -1) * shuffle_sign(ic, pair.I) * shuffle_sign(jc, pair.J);
    return {(n - p) % 4, sign};
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

std::complex<double> test_form_unit(int n, int p, const IndexPair& pair) {
    UnitParts u = unit_parts(n, p, pair);
    static const std::complex<double> ipows[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ipows[u.ipow] * static_cast<double>(u.sign);
}

GaussianRational test_form_unit_exact(int n, int p, const IndexPair& pair) {
    UnitParts u = unit_parts(n, p, pair);
    GaussianRational r(1);
    for (int t = 0; t < u.ipow; ++t) r *= GaussianRational::i();
    if (u.sign < 0) r = -r;
    return r;
}

std::complex<double> det_complex(const CMatrix& h, const std::vector<int>& rows,
                                 const std::vector<int>& cols) {
    size_t k = rows.size();
    if (k == 0) return 1.0;
    if (k == 1) return h[rows[0]][cols[0]];
    if (k == 2)
        return h[rows[0]][cols[0]] * h[rows[1]][cols[1]] -
               h[rows[0]][cols[1]] * h[rows[1]][cols[0]];
    std::complex<double> acc = 0.0;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        std::complex<double> term = h[rows[0]][cols[j]] * det_complex(h, sub_rows, sub_cols);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

namespace {

GaussianRational det_exact(const GQMatrix& h, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    size_t k = rows.size();
    if (k == 0) return GaussianRational(1);
    if (k == 1) return h[rows[0]][cols[0]];
    GaussianRational acc;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        GaussianRational term = h[rows[0]][cols[j]] * det_exact(h, sub_rows, sub_cols);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

std::vector<int> complement_zero_based(const std::vector<int>& idx, int n) {
    std::vector<int> out;
    size_t t = 0;
    for (int v = 1; v <= n; ++v) {
        if (t < idx.size() && idx[t] == v) {
            ++t;
        } else {
            out.push_back(v - 1);
        }
    }
    return out;
}

void check_pair_shape(int n, int p, const IndexPair& pair) {
    if (p < 1 || p > n) throw Error("p out of range");
    if (static_cast<int>(pair.I.size()) != n - p || static_cast<int>(pair.J.size()) != n - p)
        throw DimensionMismatch("index pair size must be n - p");
}

}  // namespace

std::complex<double> wedge_coefficient(const CMatrix& h, int p, const IndexPair& pair) {
    int n = static_cast<int>(h.size());
    check_pair_shape(n, p, pair);
    std::vector<int> rows = complement_zero_based(pair.I, n);
    std::vector<int> cols = complement_zero_based(pair.J, n);
    return factorial(p) * det_complex(h, rows, cols);
}

GaussianRational wedge_coefficient_exact(const GQMatrix& h, int p, const IndexPair& pair) {
    int n = static_cast<int>(h.size());
    check_pair_shape(n, p, pair);
    std::vector<int> rows = complement_zero_based(pair.I, n);
    std::vector<int> cols = complement_zero_based(pair.J, n);
    GaussianRational f(1);
    for (int t = 2; t <= p; ++t) f *= GaussianRational(t);
    return f * det_exact(h, rows, cols);
}

double mass_coefficient(const CMatrix& h, int p) {
    int n = static_cast<int>(h.size());
    if (p < 0 || p > n) throw Error("p out of range");
    double acc = 0.0;
    std::vector<int> idx(p);
    if (p > 0) {
        for (int i = 0; i < p; ++i) idx[i] = i;
        for (;;) {
            acc += det_complex(h, idx, idx).real();
            int i = p - 1;
            while (i >= 0 && idx[i] == n - p + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
        }
    } else {
        acc = 1.0;
    }
    return factorial(p) * factorial(n - p) * acc;
}

bool cauchy_schwarz_audit(const CMatrix& h, int p, double tol) {
    int n = static_cast<int>(h.size());
    if (p < 1 || p > n - 1) throw Error("p out of range");
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = h[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    double scale = std::max(1.0, m.norm());
    if (es.eigenvalues().minCoeff() < -1e-10 * scale)
        throw Error("cauchy_schwarz_audit: matrix is not positive semidefinite");

    auto subs = subsets_of(n, n - p);
    std::vector<double> diag(subs.size());
    for (size_t a = 0; a < subs.size(); ++a) {
        IndexPair pr{subs[a], subs[a]};
        diag[a] = std::max(0.0, wedge_coefficient(h, p, pr).real());
    }
    for (size_t a = 0; a < subs.size(); ++a) {
        for (size_t b = 0; b < subs.size(); ++b) {
            IndexPair pr{subs[a], subs[b]};
            double off = std::abs(wedge_coefficient(h, p, pr));
            if (off > std::sqrt(diag[a] * diag[b]) + tol) return false;
        }
    }
    return true;
}

}  // namespace folcalc
