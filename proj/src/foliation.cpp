#include "folcalc/foliation.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace folcalc {

Foliation Foliation::empty_foliation(int n) {
    Foliation f;
    f.n = n;
    f.module = PolyModule::zero(n, n);
    f.rank = 0;
    f.sing_ideal = PolyIdeal::make(n, {});
    return f;
}

bool is_involutive(const PolyModule& m, const Budget& budget) {
    if (m.is_zero_module()) return true;
    PolyModule sat = saturate(m, budget);
    PolyModule g = groebner_module(m, budget);
    const auto& basis = *g.gb;
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            VectorField b = lie_bracket(VectorField{basis[i]}, VectorField{basis[j]});
            if (!member(b.v, sat, budget)) return false;
        }
    }
    return true;
}

Foliation make_foliation(PolyModule m, const Budget& budget) {
    Foliation f;
    f.n = m.ambient;
    f.module = groebner_module(m, budget);
    PolyMatrix gm = PolyMatrix::from_columns(f.n, *f.module.gb, f.module.nvars);
    f.rank = generic_rank(gm);
    f.module.rank_cache = f.rank;
    f.sing_ideal = minors_ideal(gm, f.rank);
    return f;
}

Foliation involutive_closure(const PolyModule& m, const Budget& budget, ClosureStats* stats) {
    if (m.is_zero_module()) throw Error("involutive_closure of the zero module");
    PolyModule h = saturate(m, budget);
    int rank = generic_rank(h, budget);
    int iterations = 0;
    for (;;) {
        ++iterations;
        if (iterations > m.ambient + 1)
            throw Error("involutive_closure failed to stabilize");  // unreachable by rank growth
        const auto& basis = *h.gb;
        std::vector<PolyVec> new_gens;
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = i + 1; j < basis.size(); ++j) {
                VectorField b = lie_bracket(VectorField{basis[i]}, VectorField{basis[j]});
                if (b.v.is_zero()) continue;
                if (!member(b.v, h, budget)) new_gens.push_back(b.v);
            }
        }
        if (new_gens.empty()) break;
        PolyModule enlarged =
            module_sum(h, PolyModule::make(m.ambient, m.nvars, std::move(new_gens)));
        PolyModule next = saturate(enlarged, budget);
        int next_rank = generic_rank(next, budget);
        if (next_rank <= rank)
            throw Error("involutive_closure: rank did not grow across an enlarging step");
        h = std::move(next);
        rank = next_rank;
    }
    if (stats) stats->iterations = iterations;
    return make_foliation(std::move(h), budget);
}

Foliation foliation_union(const Foliation& f, const Foliation& g, const Budget& budget,
                          ClosureStats* stats) {
    if (f.n != g.n) throw DimensionMismatch("union: ambient dimension");
    if (f.empty()) return g;
    if (g.empty()) return f;
    return involutive_closure(module_sum(f.module, g.module), budget, stats);
}

IntersectionResult intersection_foliation(const Foliation& f, const Foliation& g,
                                          const Budget& budget) {
    if (f.n != g.n) throw DimensionMismatch("intersection: ambient dimension");
    PolyModule inter = module_intersect(f.module, g.module, budget);
    inter = groebner_module(inter, budget);
    IntersectionResult r;
    r.saturated = module_equal(inter, saturate(inter, budget), budget);
    r.module = std::move(inter);
    return r;
}

PolyIdeal singular_locus(const Foliation& f) { return f.sing_ideal; }

int foliation_rank(const Foliation& f) { return f.rank; }

PolyMatrix jacobian(const RationalMap& f) {
    int m = static_cast<int>(f.comps.size());
    PolyMatrix j = PolyMatrix::zero(m, f.n, f.n);
    for (int i = 0; i < m; ++i)
        for (int v = 0; v < f.n; ++v) j.at(i, v) = differentiate(f.comps[i], v);
    return j;
}

Foliation induced_foliation(const RationalMap& f, const Budget& budget) {
    if (f.comps.empty()) throw Error("induced_foliation: map has no components");
    PolyMatrix j = jacobian(f);
    bool all_zero = true;
    for (const auto& e : j.entries) all_zero = all_zero && e.is_zero();
    if (all_zero) throw Error("induced_foliation: constant map");
    PolyModule kernel = syzygy(j, budget);
    kernel.ambient = f.n;
    kernel.nvars = f.n;
    if (kernel.is_zero_module()) return Foliation::empty_foliation(f.n);
    PolyModule sat = saturate(kernel, budget);
    if (!is_involutive(sat, budget))
        throw Error("induced_foliation: kernel not involutive");  // cannot happen for Jacobians
    return make_foliation(std::move(sat), budget);
}

std::vector<std::vector<std::complex<double>>> tangent_frame_at(
    const Foliation& f, const std::vector<std::complex<double>>& point) {
    if (static_cast<int>(point.size()) != f.n)
        throw DimensionMismatch("tangent_frame_at: point dimension");
    if (f.empty()) return {};
    const auto& basis = *f.module.gb;
    Eigen::MatrixXcd gz(f.n, static_cast<int>(basis.size()));
    double row_norm = 0.0;
    for (int j = 0; j < gz.cols(); ++j) {
        for (int i = 0; i < f.n; ++i) {
            std::complex<double> v = eval_poly(basis[j].c[i], point);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw Error("tangent_frame_at: evaluation overflow");
            gz(i, j) = v;
        }
    }
    row_norm = std::max(1.0, gz.norm());

    // Nonsingularity means some singular-ideal generator is nonzero at the
    // point; the tolerance is relative to the evaluated generator scale.
    double scale = std::pow(row_norm, std::max(1, f.rank));
    bool singular = true;
    for (const MultiPoly& g : f.sing_ideal.gens) {
        std::complex<double> v = eval_poly(g, point);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("tangent_frame_at: evaluation overflow");
        if (std::abs(v) >= 1e-10 * scale) {
            singular = false;
            break;
        }
    }
    if (singular) throw Error("tangent_frame_at: point lies in the singular locus");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(gz);
    qr.setThreshold(1e-10);
    if (qr.rank() != f.rank)
        throw Error("tangent_frame_at: evaluated span has unexpected dimension");
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(f.n, f.rank);
    std::vector<std::vector<std::complex<double>>> out(f.rank,
                                                       std::vector<std::complex<double>>(f.n));
    for (int j = 0; j < f.rank; ++j)
        for (int i = 0; i < f.n; ++i) out[j][i] = q(i, j);
    return out;
}

}  // namespace folcalc
