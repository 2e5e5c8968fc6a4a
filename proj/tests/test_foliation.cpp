#include <doctest.h>

#include <cmath>

#include "folcalc/foliation.hpp"
#include "support/test_util.hpp"

using namespace folcalc;
using namespace folcalc::testing;

namespace {

VectorField vfield(const std::string& s, int n) { return parse_vector_field(s, n); }

Foliation closure_of(const std::vector<std::string>& gens, int n, ClosureStats* stats = nullptr) {
    return involutive_closure(module_of(gens, n), default_budget(), stats);
}

}  // namespace

TEST_CASE("lie bracket examples") {
    CHECK(print_vector_field(lie_bracket(vfield("d1", 2), vfield("z1*d2", 2))) == "d2");
    VectorField x = vfield("z1*d1 + z2^2*d2", 2);
    CHECK(lie_bracket(x, x).v.is_zero());
    CHECK(print_vector_field(lie_bracket(vfield("d1", 3), vfield("d2 + z1*d3", 3))) == "d3");
    CHECK_THROWS_AS(lie_bracket(vfield("d1", 2), vfield("d1", 3)), DimensionMismatch);
}

TEST_CASE("lie bracket antisymmetry and jacobi identity on random fields") {
    Rng rng(6174);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 2;
        VectorField x{random_vec(rng, n, n, 2, 2)};
        VectorField y{random_vec(rng, n, n, 2, 2)};
        VectorField z{random_vec(rng, n, n, 2, 2)};
        CHECK((lie_bracket(x, y).v + lie_bracket(y, x).v).is_zero());
        PolyVec jacobi = lie_bracket(x, lie_bracket(y, z)).v +
                         lie_bracket(y, lie_bracket(z, x)).v +
                         lie_bracket(z, lie_bracket(x, y)).v;
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("involutivity examples") {
    CHECK(is_involutive(module_of({"d1", "d3"}, 3)));
    CHECK_FALSE(is_involutive(module_of({"d1", "d2 + z1*d3"}, 3)));
    // rank-1 modules are involutive after saturation
    CHECK(is_involutive(module_of({"z1*d1 + z2*d2"}, 2)));
    CHECK(is_involutive(module_of({"z1^2*d1 + z1*z2*d2"}, 2)));
}

TEST_CASE("involutive closure completes a bracket-generating frame") {
    ClosureStats stats;
    Foliation f = closure_of({"d1", "d2 + z1*d3"}, 3, &stats);
    CHECK(f.rank == 3);
    CHECK(module_equal(f.module, PolyModule::free_module(3, 3)));
    CHECK(stats.iterations <= 3);
}

TEST_CASE("involutive closure is the identity on involutive saturated modules") {
    ClosureStats stats;
    Foliation f = closure_of({"d1", "d3"}, 3, &stats);
    CHECK(stats.iterations == 1);
    CHECK(module_equal(f.module, module_of({"d1", "d3"}, 3)));
}

TEST_CASE("vertical leaves joined with twisted horizontals") {
    ClosureStats stats;
    Foliation f = closure_of({"d3", "d1 + z2*d3"}, 3, &stats);
    CHECK(f.rank == 2);
    CHECK(module_equal(f.module, module_of({"d1", "d3"}, 3)));
    CHECK(stats.iterations <= 3);
}

TEST_CASE("union examples") {
    Foliation f = closure_of({"d3"}, 3);
    Foliation g = closure_of({"d1 + z2*d3"}, 3);
    Foliation u = foliation_union(f, g);
    CHECK(u.rank == 2);
    CHECK(module_equal(u.module, module_of({"d1", "d3"}, 3)));

    // idempotence
    Foliation uu = foliation_union(u, u);
    CHECK(module_equal(uu.module, u.module));

    // commutativity
    Foliation vu = foliation_union(g, f);
    CHECK(module_equal(vu.module, u.module));

    // monotonicity
    for (const PolyVec& gen : f.module.gens) CHECK(member(gen, u.module));
    for (const PolyVec& gen : g.module.gens) CHECK(member(gen, u.module));

    // maps z2 and z1 on C^2 join to the full tangent module
    Foliation pf = induced_foliation(RationalMap{2, {parse_poly("z2", 2)}});
    Foliation pg = induced_foliation(RationalMap{2, {parse_poly("z1", 2)}});
    Foliation pu = foliation_union(pf, pg);
    CHECK(module_equal(pu.module, PolyModule::free_module(2, 2)));
}

TEST_CASE("intersection examples") {
    Foliation a = closure_of({"d1", "d2"}, 3);
    Foliation b = closure_of({"d2", "d3"}, 3);
    IntersectionResult i = intersection_foliation(a, b);
    CHECK(module_equal(i.module, module_of({"d2"}, 3)));
    CHECK(i.saturated);

    IntersectionResult self = intersection_foliation(a, a);
    CHECK(module_equal(self.module, a.module));

    Foliation c = closure_of({"d1"}, 2);
    Foliation d = closure_of({"d2"}, 2);
    CHECK(intersection_foliation(c, d).module.is_zero_module());
}

TEST_CASE("singular locus examples") {
    Foliation radial = closure_of({"z1*d1 + z2*d2"}, 2);
    PolyIdeal s = singular_locus(radial);
    PolyIdeal expected = PolyIdeal::make(2, {parse_poly("z1", 2), parse_poly("z2", 2)});
    CHECK(ideal_basis(s) == ideal_basis(expected));
    // codimension >= 2: generators have unit gcd
    MultiPoly g = s.gens[0];
    for (size_t t = 1; t < s.gens.size(); ++t) g = poly_gcd(g, s.gens[t]);
    CHECK(g.is_constant());

    Foliation full = closure_of({"d1", "d2"}, 2);
    CHECK(singular_locus(full).is_unit());
    CHECK(singular_locus(closure_of({"d1"}, 2)).is_unit());
}

TEST_CASE("foliation rank examples") {
    CHECK(closure_of({"z1*d1 + z2*d2"}, 2).rank == 1);
    CHECK(closure_of({"d1", "d2", "d3"}, 3).rank == 3);
    CHECK(closure_of({"d1", "z1*d1"}, 2).rank == 1);
}

TEST_CASE("induced foliation examples") {
    Foliation proj = induced_foliation(RationalMap{2, {parse_poly("z2", 2)}});
    CHECK(module_equal(proj.module, module_of({"d1"}, 2)));

    Foliation hyper = induced_foliation(RationalMap{2, {parse_poly("z1*z2", 2)}});
    CHECK(module_equal(hyper.module, module_of({"z1*d1 - z2*d2"}, 2)));
    CHECK(hyper.rank == 1);

    Foliation none = induced_foliation(RationalMap{2, {parse_poly("z1", 2), parse_poly("z2", 2)}});
    CHECK(none.empty());

    CHECK_THROWS_AS(induced_foliation(RationalMap{2, {parse_poly("3", 2)}}), Error);
}

TEST_CASE("induced foliations across a map corpus are involutive") {
    std::vector<std::vector<std::string>> corpus = {
        {"z2"},            // projection on C^2
        {"z1*z2"},         // hyperbolas
        {"z1^2 + z2^2"},   // circles
        {"z1 + z2"},       // lines
    };
    for (const auto& comps : corpus) {
        RationalMap f{2, {}};
        for (const auto& c : comps) f.comps.push_back(parse_poly(c, 2));
        Foliation fol = induced_foliation(f);
        CHECK(is_involutive(fol.module));
        CHECK(module_equal(saturate(fol.module), fol.module));
    }
    std::vector<std::vector<std::string>> corpus3 = {
        {"z3"}, {"z2", "z3"}, {"z1*z2*z3"}, {"z1 + z2 + z3", "z3"},
    };
    for (const auto& comps : corpus3) {
        RationalMap f{3, {}};
        for (const auto& c : comps) f.comps.push_back(parse_poly(c, 3));
        Foliation fol = induced_foliation(f);
        CHECK(is_involutive(fol.module));
        CHECK(module_equal(saturate(fol.module), fol.module));
    }
}

TEST_CASE("tangent frame evaluation") {
    Foliation radial = closure_of({"z1*d1 + z2*d2"}, 2);
    auto frame = tangent_frame_at(radial, {{1.0, 0.0}, {0.0, 0.0}});
    REQUIRE(frame.size() == 1);
    CHECK(std::abs(std::abs(frame[0][0]) - 1.0) < 1e-12);
    CHECK(std::abs(frame[0][1]) < 1e-12);

    // the singular point is rejected
    CHECK_THROWS_AS(tangent_frame_at(radial, {{0.0, 0.0}, {0.0, 0.0}}), Error);

    Foliation axis = closure_of({"d1"}, 3);
    auto f2 = tangent_frame_at(axis, {{0.3, 0.1}, {2.0, 0.0}, {0.0, -1.0}});
    REQUIRE(f2.size() == 1);
    CHECK(std::abs(std::abs(f2[0][0]) - 1.0) < 1e-12);

    Foliation hyper = induced_foliation(RationalMap{2, {parse_poly("z1*z2", 2)}});
    auto f3 = tangent_frame_at(hyper, {{1.0, 0.0}, {1.0, 0.0}});
    REQUIRE(f3.size() == 1);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs(f3[0][0]) - inv_sqrt2) < 1e-12);
    CHECK(std::abs(std::abs(f3[0][1]) - inv_sqrt2) < 1e-12);
}
