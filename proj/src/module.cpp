#include "folcalc/module.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace folcalc {

// ---- PolyVec ------------------------------------------------------------

PolyVec PolyVec::zero(int ambient, int nvars) {
    PolyVec v;
    v.c.assign(ambient, MultiPoly::zero(nvars));
    return v;
}

PolyVec PolyVec::unit(int ambient, int nvars, int comp) {
    PolyVec v = zero(ambient, nvars);
    v.c[comp] = MultiPoly::constant(nvars, GaussianRational(1));
    return v;
}

bool PolyVec::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const MultiPoly& p) { return p.is_zero(); });
}

bool operator==(const PolyVec& a, const PolyVec& b) { return a.c == b.c; }

PolyVec operator+(const PolyVec& a, const PolyVec& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("vector ambient rank");
    PolyVec r = a;
    for (int i = 0; i < r.ambient(); ++i) r.c[i] = r.c[i] + b.c[i];
    return r;
}

PolyVec operator-(const PolyVec& a, const PolyVec& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("vector ambient rank");
    PolyVec r = a;
    for (int i = 0; i < r.ambient(); ++i) r.c[i] = r.c[i] - b.c[i];
    return r;
}

PolyVec mono_scale(const PolyVec& v, const Monomial& m, const GaussianRational& c) {
    PolyVec r = v;
    for (auto& p : r.c) p = mono_scale(p, m, c);
    return r;
}

PolyVec poly_scale(const PolyVec& v, const MultiPoly& f) {
    PolyVec r = v;
    for (auto& p : r.c) p = p * f;
    return r;
}

// ---- PolyMatrix -----------------------------------------------------------

PolyMatrix PolyMatrix::zero(int rows, int cols, int nvars) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.nv = nvars;
    m.entries.assign(static_cast<size_t>(rows) * cols, MultiPoly::zero(nvars));
    return m;
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m = zero(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = MultiPoly::constant(nvars, GaussianRational(1));
    return m;
}

PolyMatrix PolyMatrix::from_columns(int rows, std::span<const PolyVec> cols, int nvars) {
    PolyMatrix m = zero(rows, static_cast<int>(cols.size()), nvars);
    for (int j = 0; j < m.cols; ++j) {
        if (cols[j].ambient() != rows) throw DimensionMismatch("column height");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j].c[i];
    }
    return m;
}

PolyVec PolyMatrix::column(int c) const {
    PolyVec v;
    v.c.reserve(rows);
    for (int i = 0; i < rows; ++i) v.c.push_back(at(i, c));
    return v;
}

// ---- PolyModule -----------------------------------------------------------

PolyModule PolyModule::make(int ambient, int nvars, std::vector<PolyVec> gens) {
    PolyModule m;
    m.ambient = ambient;
    m.nvars = nvars;
    for (auto& g : gens) {
        if (g.ambient() != ambient) throw DimensionMismatch("generator ambient rank");
        if (!g.is_zero()) m.gens.push_back(std::move(g));
    }
    return m;
}

PolyModule PolyModule::free_module(int ambient, int nvars) {
    std::vector<PolyVec> gens;
    for (int i = 0; i < ambient; ++i) gens.push_back(PolyVec::unit(ambient, nvars, i));
    return make(ambient, nvars, std::move(gens));
}

PolyMatrix PolyModule::generator_matrix() const {
    return PolyMatrix::from_columns(ambient, gens, nvars);
}

// ---- leading terms / order -------------------------------------------------

ModLT leading_term(const PolyVec& v) {
    for (int i = 0; i < v.ambient(); ++i) {
        if (!v.c[i].is_zero()) return ModLT{i, v.c[i].leading().first};
    }
    return ModLT{};
}

int cmp_modlt(const ModLT& a, const ModLT& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;  // lower component wins
    return cmp_degrevlex(a.m, b.m);
}

// ---- Groebner engine -------------------------------------------------------

namespace {

struct GBState {
    const Budget& budget;
    long long steps = 0;
    const char* context;

    void step(int degree_hint = 0) {
        if (++steps > budget.max_steps)
            throw BudgetExceeded(context, "step limit " + std::to_string(budget.max_steps));
        if (degree_hint > budget.max_degree)
            throw BudgetExceeded(context,
                                 "term degree " + std::to_string(degree_hint) + " exceeds limit " +
                                     std::to_string(budget.max_degree));
    }
};

PolyVec make_monic(PolyVec v) {
    ModLT lt = leading_term(v);
    if (lt.comp < 0) return v;
    GaussianRational lc = v.c[lt.comp].leading().second;
    if (lc.is_one()) return v;
    GaussianRational inv = GaussianRational(1) / lc;
    for (auto& p : v.c) p = scale(p, inv);
    return v;
}

// Full normal form: every term of the result is irreducible by the basis.
PolyVec normal_form_impl(PolyVec v, std::span<const PolyVec> basis, GBState& st) {
    if (!v.ambient()) return v;
    int nvars = v.c[0].nvars;
    PolyVec out = PolyVec::zero(v.ambient(), nvars);
    while (true) {
        ModLT lt = leading_term(v);
        if (lt.comp < 0) break;
        st.step(lt.m.degree());
        bool reduced = false;
        for (const PolyVec& g : basis) {
            ModLT lg = leading_term(g);
            if (lg.comp != lt.comp || !mono_divides(lg.m, lt.m)) continue;
            GaussianRational c = v.c[lt.comp].leading().second / g.c[lg.comp].leading().second;
            v = v - mono_scale(g, mono_div(lt.m, lg.m), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the leading term to the remainder and continue below it.
            GaussianRational c = v.c[lt.comp].leading().second;
            MultiPoly t = MultiPoly::term(nvars, lt.m, c);
            out.c[lt.comp] = out.c[lt.comp] + t;
            v.c[lt.comp] = v.c[lt.comp] - t;
        }
    }
    return out;
}

struct Pair {
    int i, j;
    int deg;  // lcm degree, for the selection order
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

PolyVec normal_form(const PolyVec& v, std::span<const PolyVec> basis, const Budget& budget) {
    GBState st{budget, 0, "normal_form"};
    return normal_form_impl(v, basis, st);
}

std::vector<PolyVec> compute_reduced_basis(std::span<const PolyVec> gens, const Budget& budget) {
    GBState st{budget, 0, "groebner_module"};
    std::vector<PolyVec> basis;
    for (const PolyVec& g : gens) {
        if (!g.is_zero()) basis.push_back(make_monic(g));
    }
    std::set<Pair> queue;
    auto push_pairs = [&](int jnew) {
        ModLT lj = leading_term(basis[jnew]);
        for (int i = 0; i < jnew; ++i) {
            ModLT li = leading_term(basis[i]);
            if (li.comp != lj.comp) continue;
            queue.insert(Pair{i, jnew, mono_lcm(li.m, lj.m).degree()});
        }
    };
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        st.step(pr.deg);
        const PolyVec& f = basis[pr.i];
        const PolyVec& g = basis[pr.j];
        ModLT lf = leading_term(f), lg = leading_term(g);
        Monomial l = mono_lcm(lf.m, lg.m);
        PolyVec s = mono_scale(f, mono_div(l, lf.m), GaussianRational(1)) -
                    mono_scale(g, mono_div(l, lg.m), GaussianRational(1));
        PolyVec r = normal_form_impl(std::move(s), basis, st);
        if (!r.is_zero()) {
            basis.push_back(make_monic(std::move(r)));
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<PolyVec> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        ModLT li = leading_term(basis[i]);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            ModLT lj = leading_term(basis[j]);
            if (lj.comp != li.comp || !mono_divides(lj.m, li.m)) continue;
            if (lj.m == li.m && j > i) continue;  // keep the earlier of equal leads
            redundant = true;
            break;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Tail-reduce each element against the others.
    std::vector<PolyVec> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<PolyVec> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(make_monic(normal_form_impl(minimal[i], others, st)));
    }
    std::erase_if(reduced, [](const PolyVec& v) { return v.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [](const PolyVec& a, const PolyVec& b) {
        return cmp_modlt(leading_term(a), leading_term(b)) > 0;
    });
    return reduced;
}

PolyModule groebner_module(const PolyModule& m, const Budget& budget) {
    PolyModule r = m;
    if (!r.gb) r.gb = compute_reduced_basis(r.gens, budget);
    return r;
}

const std::vector<PolyVec>& groebner_basis(PolyModule& m, const Budget& budget) {
    if (!m.gb) m.gb = compute_reduced_basis(m.gens, budget);
    return *m.gb;
}

bool member(const PolyVec& v, const PolyModule& m, const Budget& budget) {
    if (v.ambient() != m.ambient) throw DimensionMismatch("member: ambient rank");
    if (v.is_zero()) return true;
    PolyModule g = groebner_module(m, budget);
    return normal_form(v, *g.gb, budget).is_zero();
}

bool module_equal(const PolyModule& a, const PolyModule& b, const Budget& budget) {
    if (a.ambient != b.ambient) throw DimensionMismatch("module_equal: ambient rank");
    PolyModule ga = groebner_module(a, budget);
    PolyModule gb = groebner_module(b, budget);
    return *ga.gb == *gb.gb;
}

PolyModule module_sum(const PolyModule& a, const PolyModule& b) {
    if (a.ambient != b.ambient) throw DimensionMismatch("module_sum: ambient rank");
    std::vector<PolyVec> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return PolyModule::make(a.ambient, a.nvars, std::move(gens));
}

// ---- syzygies --------------------------------------------------------------

PolyModule syzygy(const PolyMatrix& a, const Budget& budget) {
    int m = a.rows, s = a.cols;
    int nvars = a.nvars();
    if (s == 0) return PolyModule::zero(0, nvars);
    // Augment each column with a unit in a trailing tracking block; the
    // tracking block is dominated by the leading block in the module order,
    // so basis elements vanishing on the leading block read off the kernel.
    std::vector<PolyVec> aug;
    for (int j = 0; j < s; ++j) {
        PolyVec v = PolyVec::zero(m + s, nvars);
        for (int i = 0; i < m; ++i) v.c[i] = a.at(i, j);
        v.c[m + j] = MultiPoly::constant(nvars, GaussianRational(1));
        aug.push_back(std::move(v));
    }
    std::vector<PolyVec> basis = compute_reduced_basis(aug, budget);
    std::vector<PolyVec> kernel;
    for (const PolyVec& g : basis) {
        bool lead_zero = true;
        for (int i = 0; i < m && lead_zero; ++i) lead_zero = g.c[i].is_zero();
        if (!lead_zero) continue;
        PolyVec k;
        k.c.assign(g.c.begin() + m, g.c.end());
        kernel.push_back(std::move(k));
    }
    return PolyModule::make(s, nvars, std::move(kernel));
}

PolyModule module_intersect(const PolyModule& a, const PolyModule& b, const Budget& budget) {
    if (a.ambient != b.ambient) throw DimensionMismatch("module_intersect: ambient rank");
    if (a.is_zero_module() || b.is_zero_module()) return PolyModule::zero(a.ambient, a.nvars);
    int s1 = static_cast<int>(a.gens.size());
    int s2 = static_cast<int>(b.gens.size());
    PolyMatrix joint = PolyMatrix::zero(a.ambient, s1 + s2, a.nvars);
    for (int j = 0; j < s1; ++j)
        for (int i = 0; i < a.ambient; ++i) joint.at(i, j) = a.gens[j].c[i];
    for (int j = 0; j < s2; ++j)
        for (int i = 0; i < a.ambient; ++i) joint.at(i, s1 + j) = b.gens[j].c[i];
    PolyModule syz = syzygy(joint, budget);
    // A relation f|a-part combines the a-generators into an element that the
    // b-generators also span.
    std::vector<PolyVec> gens;
    for (const PolyVec& rel : syz.gens) {
        PolyVec w = PolyVec::zero(a.ambient, a.nvars);
        for (int j = 0; j < s1; ++j) w = w + poly_scale(a.gens[j], rel.c[j]);
        if (!w.is_zero()) gens.push_back(std::move(w));
    }
    return PolyModule::make(a.ambient, a.nvars, std::move(gens));
}

// ---- rank / determinants ----------------------------------------------------

int generic_rank(const PolyMatrix& a) {
    if (a.rows == 0 || a.cols == 0) return 0;
    PolyMatrix b = a;
    int nvars = b.nvars();
    MultiPoly prev = MultiPoly::constant(nvars, GaussianRational(1));
    int r = 0;
    int maxr = std::min(b.rows, b.cols);
    while (r < maxr) {
        int pi = -1, pj = -1;
        for (int i = r; i < b.rows && pi < 0; ++i)
            for (int j = r; j < b.cols; ++j)
                if (!b.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r)
            for (int j = 0; j < b.cols; ++j) std::swap(b.at(r, j), b.at(pi, j));
        if (pj != r)
            for (int i = 0; i < b.rows; ++i) std::swap(b.at(i, r), b.at(i, pj));
        for (int i = r + 1; i < b.rows; ++i) {
            for (int j = r + 1; j < b.cols; ++j) {
                MultiPoly num = b.at(r, r) * b.at(i, j) - b.at(i, r) * b.at(r, j);
                b.at(i, j) = divexact(num, prev);
            }
            b.at(i, r) = MultiPoly::zero(nvars);
        }
        prev = b.at(r, r);
        ++r;
    }
    return r;
}

int generic_rank(PolyModule& m, const Budget& budget) {
    if (!m.rank_cache) {
        (void)budget;
        m.rank_cache = generic_rank(m.generator_matrix());
    }
    return *m.rank_cache;
}

namespace {

MultiPoly det_recursive(const PolyMatrix& a, std::vector<int>& rows, std::vector<int>& cols) {
    size_t k = rows.size();
    int nvars = a.nvars();
    if (k == 0) return MultiPoly::constant(nvars, GaussianRational(1));
    if (k == 1) return a.at(rows[0], cols[0]);
    MultiPoly acc = MultiPoly::zero(nvars);
    int r0 = rows[0];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < k; ++j) {
        const MultiPoly& e = a.at(r0, cols[j]);
        if (e.is_zero()) continue;
        std::vector<int> sub_cols;
        sub_cols.reserve(k - 1);
        for (size_t t = 0; t < k; ++t)
            if (t != j) sub_cols.push_back(cols[t]);
        MultiPoly minor = det_recursive(a, sub_rows, sub_cols);
        MultiPoly term = e * minor;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

MultiPoly poly_det(const PolyMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatch("determinant of non-square matrix");
    std::vector<int> rows(a.rows), cols(a.cols);
    for (int i = 0; i < a.rows; ++i) rows[i] = i;
    for (int j = 0; j < a.cols; ++j) cols[j] = j;
    return det_recursive(a, rows, cols);
}

// ---- ideals ----------------------------------------------------------------

PolyIdeal PolyIdeal::make(int nvars, std::vector<MultiPoly> gens) {
    PolyIdeal ideal;
    ideal.nvars = nvars;
    for (auto& g : gens)
        if (!g.is_zero()) ideal.gens.push_back(std::move(g));
    return ideal;
}

namespace {

std::vector<PolyVec> ideal_as_module(const std::vector<MultiPoly>& gens) {
    std::vector<PolyVec> v;
    for (const MultiPoly& g : gens) {
        PolyVec w;
        w.c = {g};
        v.push_back(std::move(w));
    }
    return v;
}

}  // namespace

const std::vector<MultiPoly>& ideal_basis(PolyIdeal& ideal, const Budget& budget) {
    if (!ideal.gb) {
        auto basis = compute_reduced_basis(ideal_as_module(ideal.gens), budget);
        std::vector<MultiPoly> polys;
        for (auto& v : basis) polys.push_back(std::move(v.c[0]));
        ideal.gb = std::move(polys);
    }
    return *ideal.gb;
}

bool ideal_member(const MultiPoly& p, PolyIdeal& ideal, const Budget& budget) {
    const auto& basis = ideal_basis(ideal, budget);
    PolyVec v;
    v.c = {p};
    return normal_form(v, ideal_as_module(basis), budget).is_zero();
}

bool PolyIdeal::is_unit(const Budget& budget) const {
    PolyIdeal copy = *this;
    const auto& basis = ideal_basis(copy, budget);
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

PolyIdeal minors_ideal(const PolyMatrix& a, int r) {
    if (r < 0 || r > std::min(a.rows, a.cols)) throw Error("minor size out of range");
    int nvars = a.nvars();
    std::vector<MultiPoly> minors;
    if (r == 0) {
        minors.push_back(MultiPoly::constant(nvars, GaussianRational(1)));
        return PolyIdeal::make(nvars, std::move(minors));
    }
    for_each_subset(a.rows, r, [&](const std::vector<int>& rows) {
        for_each_subset(a.cols, r, [&](const std::vector<int>& cols) {
            std::vector<int> rr = rows, cc = cols;
            MultiPoly d = det_recursive(a, rr, cc);
            if (!d.is_zero()) minors.push_back(std::move(d));
        });
    });
    return PolyIdeal::make(nvars, std::move(minors));
}

// ---- saturation --------------------------------------------------------------

PolyModule saturate(const PolyModule& m, const Budget& budget) {
    int n = m.ambient;
    if (m.is_zero_module()) return PolyModule::zero(n, m.nvars);
    PolyModule g = groebner_module(m, budget);
    PolyMatrix gm = PolyMatrix::from_columns(n, *g.gb, m.nvars);
    int r = generic_rank(gm);
    if (r == 0) return PolyModule::zero(n, m.nvars);
    if (r == n) {
        PolyModule f = PolyModule::free_module(n, m.nvars);
        return groebner_module(f, budget);
    }
    // Linear conditions on a new column v: adjoining v to G must keep all
    // (r+1)-minors zero.  Expanding each such minor along the v column gives
    // one row of cofactor coefficients per (row-set, column-set) choice.
    std::vector<PolyVec> rows;
    for_each_subset(n, r + 1, [&](const std::vector<int>& rset) {
        for_each_subset(gm.cols, r, [&](const std::vector<int>& cset) {
            PolyVec row = PolyVec::zero(n, m.nvars);
            bool nonzero = false;
            std::vector<int> cc = cset;
            for (int t = 0; t <= r; ++t) {
                std::vector<int> sub_rows;
                sub_rows.reserve(r);
                for (int u = 0; u <= r; ++u)
                    if (u != t) sub_rows.push_back(rset[u]);
                MultiPoly cof = det_recursive(gm, sub_rows, cc);
                if ((t + r) % 2 != 0) cof = -cof;
                if (!cof.is_zero()) nonzero = true;
                row.c[rset[t]] = row.c[rset[t]] + cof;
            }
            if (nonzero) rows.push_back(std::move(row));
        });
    });
    // Deduplicate identical condition rows.
    std::vector<PolyVec> unique_rows;
    for (auto& row : rows) {
        bool dup = false;
        for (const auto& u : unique_rows)
            if (u == row) {
                dup = true;
                break;
            }
        if (!dup) unique_rows.push_back(std::move(row));
    }
    PolyMatrix cond = PolyMatrix::zero(static_cast<int>(unique_rows.size()), n, m.nvars);
    for (int i = 0; i < cond.rows; ++i)
        for (int j = 0; j < n; ++j) cond.at(i, j) = unique_rows[i].c[j];
    PolyModule sat = syzygy(cond, budget);
    sat.ambient = n;
    sat.nvars = m.nvars;
    return groebner_module(sat, budget);
}

}  // namespace folcalc
