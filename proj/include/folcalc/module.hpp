#ifndef FOLCALC_MODULE_HPP
#define FOLCALC_MODULE_HPP

#include <optional>
#include <span>
#include <vector>

#include "folcalc/errors.hpp"
#include "folcalc/poly.hpp"

namespace folcalc {

// Column vector of polynomials; element of the free module R^ambient.
struct PolyVec {
    std::vector<MultiPoly> c;

    static PolyVec zero(int ambient, int nvars);
    static PolyVec unit(int ambient, int nvars, int comp);
    int ambient() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
};

bool operator==(const PolyVec& a, const PolyVec& b);
PolyVec operator+(const PolyVec& a, const PolyVec& b);
PolyVec operator-(const PolyVec& a, const PolyVec& b);
PolyVec mono_scale(const PolyVec& v, const Monomial& m, const GaussianRational& c);
PolyVec poly_scale(const PolyVec& v, const MultiPoly& f);

struct PolyMatrix {
    int rows = 0, cols = 0;
    int nv = 0;  // ring size, kept explicitly so empty matrices stay typed
    std::vector<MultiPoly> entries;  // row-major

    static PolyMatrix zero(int rows, int cols, int nvars);
    static PolyMatrix identity(int n, int nvars);
    static PolyMatrix from_columns(int rows, std::span<const PolyVec> cols, int nvars);
    MultiPoly& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
    const MultiPoly& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    PolyVec column(int c) const;
    int nvars() const { return nv; }
};

// Finitely generated submodule of R^ambient with a lazily computed reduced
// Groebner basis under the fixed position-over-term degrevlex order.  The
// reduced basis is unique, so basis equality decides module equality.
struct PolyModule {
    int ambient = 0;
    int nvars = 0;
    std::vector<PolyVec> gens;
    std::optional<std::vector<PolyVec>> gb;
    std::optional<int> rank_cache;

    static PolyModule make(int ambient, int nvars, std::vector<PolyVec> gens);
    static PolyModule zero(int ambient, int nvars) { return make(ambient, nvars, {}); }
    static PolyModule free_module(int ambient, int nvars);
    bool is_zero_module() const { return gens.empty(); }
    PolyMatrix generator_matrix() const;
};

// Module leading term: position dominates (lower component index is larger),
// ties broken by degrevlex.
struct ModLT {
    int comp = -1;
    Monomial m;
};
ModLT leading_term(const PolyVec& v);
int cmp_modlt(const ModLT& a, const ModLT& b);

// Reduced Groebner basis of the generators (computed once, cached on the
// returned module).  The generated module is unchanged.
PolyModule groebner_module(const PolyModule& m, const Budget& budget = default_budget());
const std::vector<PolyVec>& groebner_basis(PolyModule& m, const Budget& budget = default_budget());
std::vector<PolyVec> compute_reduced_basis(std::span<const PolyVec> gens, const Budget& budget);

PolyVec normal_form(const PolyVec& v, std::span<const PolyVec> basis, const Budget& budget);

bool member(const PolyVec& v, const PolyModule& m, const Budget& budget = default_budget());
bool module_equal(const PolyModule& a, const PolyModule& b, const Budget& budget = default_budget());
PolyModule module_sum(const PolyModule& a, const PolyModule& b);
PolyModule module_intersect(const PolyModule& a, const PolyModule& b,
                            const Budget& budget = default_budget());

// All polynomial columns v with A v = 0, via the standard elimination
// computation on generators augmented with unit tracking components.
PolyModule syzygy(const PolyMatrix& a, const Budget& budget = default_budget());

// Rank over the fraction field by fraction-free (Bareiss) elimination;
// deterministic, no randomization.
int generic_rank(const PolyMatrix& a);
int generic_rank(PolyModule& m, const Budget& budget = default_budget());

MultiPoly poly_det(const PolyMatrix& a);

struct PolyIdeal {
    int nvars = 0;
    std::vector<MultiPoly> gens;
    std::optional<std::vector<MultiPoly>> gb;

    static PolyIdeal make(int nvars, std::vector<MultiPoly> gens);
    bool is_unit(const Budget& budget = default_budget()) const;
};
const std::vector<MultiPoly>& ideal_basis(PolyIdeal& ideal, const Budget& budget = default_budget());
bool ideal_member(const MultiPoly& p, PolyIdeal& ideal, const Budget& budget = default_budget());

// Ideal generated by all r x r minors of A.
PolyIdeal minors_ideal(const PolyMatrix& a, int r);

// Saturation inside R^ambient: all v whose adjunction to the generator
// matrix G keeps every (r+1) x (r+1) minor identically zero, r = generic
// rank of G.  Contains the module, preserves the generic rank, idempotent.
PolyModule saturate(const PolyModule& m, const Budget& budget = default_budget());

}  // namespace folcalc

#endif
