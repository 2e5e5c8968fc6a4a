#ifndef FOLCALC_FOLIATION_HPP
#define FOLCALC_FOLIATION_HPP

#include <complex>
#include <vector>

#include "folcalc/vectorfield.hpp"

namespace folcalc {

// Saturated involutive submodule of the tangent module, with its generic
// rank and the ideal cutting out the rank-drop locus.
struct Foliation {
    int n = 0;
    PolyModule module;  // saturated, involutive, reduced basis attached
    int rank = 0;
    PolyIdeal sing_ideal;

    bool empty() const { return rank == 0; }
    static Foliation empty_foliation(int n);
};

struct RationalMap {
    int n = 0;
    std::vector<MultiPoly> comps;
};

bool is_involutive(const PolyModule& m, const Budget& budget = default_budget());

struct ClosureStats {
    int iterations = 0;
};

// Fixpoint of H -> saturate(H + pairwise brackets of its basis), starting
// from saturate(M).  Each pass that changes anything strictly increases the
// generic rank, so at most n passes run.
Foliation involutive_closure(const PolyModule& m, const Budget& budget = default_budget(),
                             ClosureStats* stats = nullptr);

// Smallest saturated involutive module containing both.
Foliation foliation_union(const Foliation& f, const Foliation& g,
                          const Budget& budget = default_budget(),
                          ClosureStats* stats = nullptr);

struct IntersectionResult {
    PolyModule module;  // returned as computed, possibly unsaturated
    bool saturated = false;
};
IntersectionResult intersection_foliation(const Foliation& f, const Foliation& g,
                                          const Budget& budget = default_budget());

PolyIdeal singular_locus(const Foliation& f);
int foliation_rank(const Foliation& f);

// Kernel of the Jacobian, saturated; involutivity is checked, not assumed.
Foliation induced_foliation(const RationalMap& f, const Budget& budget = default_budget());

PolyMatrix jacobian(const RationalMap& f);

// Wraps a saturated involutive module: computes the generic rank and the
// minor ideal of its basis matrix.  Callers establish the two invariants.
Foliation make_foliation(PolyModule m, const Budget& budget = default_budget());

// Orthonormal basis of the evaluated tangent span at a nonsingular point;
// column count equals the rank.
std::vector<std::vector<std::complex<double>>> tangent_frame_at(
    const Foliation& f, const std::vector<std::complex<double>>& point);

}  // namespace folcalc

#endif
