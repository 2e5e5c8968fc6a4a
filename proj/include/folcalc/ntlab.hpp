#ifndef FOLCALC_NTLAB_HPP
#define FOLCALC_NTLAB_HPP

#include <optional>
#include <string>

#include "folcalc/field.hpp"
#include "folcalc/testform.hpp"
#include "folcalc/wedge.hpp"

namespace folcalc {

inline constexpr const char* kVerdictPositive = "consistent with numerical triviality";
inline constexpr const char* kVerdictNegative = "inconsistent with numerical triviality";
inline constexpr const char* kVerdictNote =
    "one-sided evidence for the supplied epsilon family; not a proof";

struct NTOptions {
    double r_max = 0.6;    // required decay factor between consecutive epsilons
    double floor = 1e-12;  // values at or below count as vanished
    bool parallel = true;
};

// Midpoint-rule quadrature of |wedge_coefficient(H_eps(z), p, pair)| over
// the chart grid; deterministic cell order and pairwise summation.
double nt_integral(const HermitianField& field, const Chart& chart, int p, const IndexPair& pair,
                   double eps, const NTOptions& opts = {});

struct NTSeries {
    int p = 0;
    IndexPair pair;
    std::vector<double> values;  // one per epsilon, in schedule order
    std::vector<double> ratios;  // values[i+1]/values[i]; NaN below the floor
    bool decays = false;
};

struct NTReport {
    int n = 0, k = 0;
    std::vector<double> epsilons;
    std::vector<NTSeries> series;
    std::vector<long long> psd_violations;  // per epsilon: samples with H + eps*Id not psd
    bool verdict = false;
    std::string verdict_text;
    std::string note = kVerdictNote;
    NTOptions opts;
};

// Tabulates every basis test pair for every 1 <= p <= n-1 across the
// field's epsilon schedule and applies the decay rule.
NTReport nt_report(const HermitianField& field, const Chart& chart, int n, int k,
                   const NTOptions& opts = {});

// Minimum over grid samples of the smallest eigenvalue of the transverse
// (n-k) x (n-k) lower-right block, minus a one-grid-cell variation margin;
// absent when not positive.
std::optional<double> transversality_check(const HermitianField& field, const Chart& chart, int k,
                                           double eps, const NTOptions& opts = {});

// True when the off-transverse entries vanish to tol and the transverse
// block entries are constant along leaf directions to tol.
bool pullback_check(const HermitianField& field, const Chart& chart, int k, double eps, double tol,
                    const NTOptions& opts = {});

// Quadrature of |mass_coefficient|: total p-mass against the background form.
double mass_integral(const HermitianField& field, const Chart& chart, int p, double eps,
                     const NTOptions& opts = {});

// Largest p in 1..n whose mass series fails the decay rule; 0 if all decay.
int nu_proxy(const HermitianField& field, const Chart& chart, const NTOptions& opts = {});

bool series_decays(const std::vector<double>& values, const NTOptions& opts);

}  // namespace folcalc

#endif
