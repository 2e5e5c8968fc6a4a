#include <doctest.h>

#include <cmath>

#include "folcalc/ntlab.hpp"

using namespace folcalc;

namespace {

// diag(eps, 1/(1+|z2|^2)^2 + eps) on C^2: the transverse block is the
// curvature profile of a projective-line pullback, the leaf block is pure
// regularization.
HermitianField fs_field() {
    HermitianField f = HermitianField::make(2);
    f.set_entry(0, 0, parse_expression("eps", 2));
    f.set_entry(1, 1, parse_expression("1/(1+abs2(z2))^2 + eps", 2));
    f.epsilons = {0.1, 0.05, 0.025};
    return f;
}

Chart fs_chart(int grid) {
    Chart c;
    c.n = 2;
    c.center = {0, 0, 0, 0};
    c.half_width = 1.0;
    c.grid = grid;
    c.k = 1;
    return c;
}

}  // namespace

TEST_CASE("expression evaluation examples") {
    auto e1 = parse_expression("1/(1+abs2(z2))^2", 2);
    std::vector<std::complex<double>> z = {{0, 0}, {1, 0}};
    CHECK(eval_expression(*e1, z, 0.0).real() == doctest::Approx(0.25));

    auto e2 = parse_expression("eps", 2);
    CHECK(eval_expression(*e2, z, 0.05).real() == doctest::Approx(0.05));

    auto e3 = parse_expression("conj(z1)", 2);
    std::vector<std::complex<double>> zi = {{0, 1}, {0, 0}};
    CHECK(eval_expression(*e3, zi, 0.0).imag() == doctest::Approx(-1.0));

    auto bad = parse_expression("1/z1", 2);
    std::vector<std::complex<double>> z0 = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(eval_expression(*bad, z0, 0.0), EvalError);
}

TEST_CASE("nt integral closed-form fixture") {
    HermitianField f = fs_field();
    Chart c = fs_chart(8);
    // integrand is identically eps for the pair ({2},{2}); the box has
    // volume 16
    double v = nt_integral(f, c, 1, {{2}, {2}}, 0.1);
    CHECK(v == doctest::Approx(1.6).epsilon(1e-12));
    CHECK(nt_integral(f, c, 1, {{1}, {2}}, 0.1) == doctest::Approx(0.0));

    HermitianField zero = HermitianField::make(2);
    zero.epsilons = {0.1};
    CHECK(nt_integral(zero, c, 1, {{2}, {2}}, 0.1) == doctest::Approx(0.0));
}

TEST_CASE("quadrature consistency under grid doubling") {
    HermitianField f = fs_field();
    // the transverse pair ({1},{1}) integrates the smooth profile
    double v8 = nt_integral(f, fs_chart(8), 1, {{1}, {1}}, 0.1);
    double v16 = nt_integral(f, fs_chart(16), 1, {{1}, {1}}, 0.1);
    CHECK(std::abs(v16 - v8) / v16 < 0.01);
    // piecewise-constant integrand is reproduced exactly
    CHECK(nt_integral(f, fs_chart(8), 1, {{2}, {2}}, 0.1) ==
          doctest::Approx(nt_integral(f, fs_chart(16), 1, {{2}, {2}}, 0.1)).epsilon(1e-13));
}

TEST_CASE("nt report on the pullback fixture is positive and halves") {
    NTReport rep = nt_report(fs_field(), fs_chart(16), 2, 1);
    CHECK(rep.verdict);
    CHECK(rep.verdict_text == kVerdictPositive);
    REQUIRE(rep.series.size() == 3);
    for (const auto& s : rep.series) {
        REQUIRE(s.values.size() == 3);
        for (size_t t = 0; t + 1 < s.values.size(); ++t) {
            if (s.values[t] > 1e-12)
                CHECK(s.values[t + 1] / s.values[t] == doctest::Approx(0.5).epsilon(1e-6));
        }
    }
    for (long long v : rep.psd_violations) CHECK(v == 0);
}

TEST_CASE("transverse mass forces a negative verdict") {
    HermitianField f = fs_field();
    f.set_entry(0, 0, parse_expression("1", 2));
    NTReport rep = nt_report(f, fs_chart(16), 2, 1);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.verdict_text == kVerdictNegative);
    // the pair ({2},{2}) sees the constant transverse mass 16
    bool found = false;
    for (const auto& s : rep.series) {
        if (s.pair.I == std::vector<int>{2} && s.pair.J == std::vector<int>{2}) {
            found = true;
            CHECK_FALSE(s.decays);
            for (double v : s.values) CHECK(v == doctest::Approx(16.0).epsilon(1e-9));
        }
    }
    CHECK(found);
}

TEST_CASE("k = n tabulates every pair") {
    HermitianField f = fs_field();
    NTReport rep = nt_report(f, fs_chart(8), 2, 2);
    // all four pairs of size 1 appear for p = 1
    CHECK(rep.series.size() == 4);
    // the transverse profile does not decay, so the degenerate candidate
    // fails
    CHECK_FALSE(rep.verdict);
}

TEST_CASE("transversality check") {
    HermitianField f = fs_field();
    auto delta = transversality_check(f, fs_chart(16), 1, 0.1);
    REQUIRE(delta.has_value());
    // block value g(z2)+eps stays above 1/9 + eps on the box; the coarse
    // grid costs a one-cell margin
    CHECK(*delta >= 0.05);
    CHECK(*delta <= 1.0 / 9.0 + 0.1 + 1e-9);

    HermitianField zero = HermitianField::make(2);
    zero.epsilons = {0.1};
    CHECK_FALSE(transversality_check(zero, fs_chart(8), 1, 0.1).has_value());

    HermitianField id = HermitianField::make(2);
    id.set_entry(0, 0, parse_expression("1", 2));
    id.set_entry(1, 1, parse_expression("1", 2));
    id.epsilons = {0.1};
    auto d1 = transversality_check(id, fs_chart(8), 1, 0.0);
    REQUIRE(d1.has_value());
    CHECK(*d1 == doctest::Approx(1.0));
}

TEST_CASE("pullback check") {
    // eps = 0 part of the fixture: diag(0, g(z2)) is a transverse pullback
    HermitianField f = fs_field();
    CHECK(pullback_check(f, fs_chart(8), 1, 0.0, 1e-9));

    // an off-block perturbation breaks it
    HermitianField g = fs_field();
    g.set_entry(0, 1, parse_expression("1/100", 2));
    CHECK_FALSE(pullback_check(g, fs_chart(8), 1, 0.0, 1e-6));

    // leaf-direction variation in the block breaks it
    HermitianField h = HermitianField::make(2);
    h.set_entry(1, 1, parse_expression("abs2(z1)", 2));
    h.epsilons = {0.1};
    CHECK_FALSE(pullback_check(h, fs_chart(8), 1, 0.0, 1e-6));

    // k = 0 leaves nothing to vary along: every entry sits in the
    // transverse block and each fiber slice is a single sample
    HermitianField c = HermitianField::make(2);
    c.set_entry(0, 0, parse_expression("1", 2));
    c.epsilons = {0.1};
    CHECK(pullback_check(c, fs_chart(8), 0, 0.0, 1e-9));
    // k = n demands the whole field vanish: the base is a point
    CHECK_FALSE(pullback_check(c, fs_chart(8), 2, 0.0, 1e-9));
    HermitianField zero = HermitianField::make(2);
    zero.epsilons = {0.1};
    CHECK(pullback_check(zero, fs_chart(8), 2, 0.0, 1e-9));
}

TEST_CASE("a fixed current is handled through a constant-in-eps field") {
    // With no eps term the integrals must sit at zero outright for a
    // positive verdict; the transverse profile alone fails.
    HermitianField fixed = HermitianField::make(2);
    fixed.set_entry(1, 1, parse_expression("1/(1+abs2(z2))^2", 2));
    fixed.epsilons = {0.1, 0.05, 0.025};
    NTReport rep = nt_report(fixed, fs_chart(8), 2, 1);
    CHECK(rep.verdict);  // every leaf-pair integrand vanishes identically
    for (const auto& s : rep.series)
        for (double v : s.values) CHECK(v <= 1e-12);

    HermitianField mass = HermitianField::make(2);
    mass.set_entry(0, 0, parse_expression("1/(1+abs2(z1))^2", 2));
    mass.epsilons = {0.1, 0.05, 0.025};
    NTReport rep2 = nt_report(mass, fs_chart(8), 2, 1);
    CHECK_FALSE(rep2.verdict);
}

TEST_CASE("mass series and the nu proxy") {
    HermitianField f = fs_field();
    Chart c = fs_chart(8);
    // p = 1 mass keeps the transverse profile: no decay
    std::vector<double> m1, m2;
    for (double e : f.epsilons) {
        m1.push_back(mass_integral(f, c, 1, e));
        m2.push_back(mass_integral(f, c, 2, e));
    }
    NTOptions opts;
    CHECK_FALSE(series_decays(m1, opts));
    CHECK(series_decays(m2, opts));
    CHECK(nu_proxy(f, c) == 1);
}

TEST_CASE("singular samples abort instead of being skipped") {
    HermitianField f = HermitianField::make(1);
    f.set_entry(0, 0, parse_expression("1/abs2(z1)", 1));
    f.epsilons = {0.1};
    Chart c;
    c.n = 1;
    // grid 2 with this center places a cell midpoint exactly on the pole
    c.center = {0.05, 0.05};
    c.half_width = 0.1;
    c.grid = 2;
    c.k = 0;
    CHECK_THROWS_AS(nt_integral(f, c, 1, {{}, {}}, 0.1), Error);
}
