#include <doctest.h>

#include "folcalc/module.hpp"
#include "support/test_util.hpp"

using namespace folcalc;
using namespace folcalc::testing;

TEST_CASE("saturation examples") {
    // <(0, z1)> in ambient rank 2 saturates to <(0, 1)>
    PolyModule a = module_of({"z1*d2"}, 2);
    CHECK(module_equal(saturate(a), module_of({"d2"}, 2)));

    // the radial field is already saturated
    PolyModule radial = module_of({"z1*d1 + z2*d2"}, 2);
    CHECK(module_equal(saturate(radial), radial));

    PolyModule free3 = PolyModule::free_module(3, 3);
    CHECK(module_equal(saturate(free3), free3));

    CHECK(saturate(PolyModule::zero(2, 2)).is_zero_module());
}

TEST_CASE("saturation contract on randomized instances") {
    Rng rng(90210);
    int trials = 0;
    while (trials < 1000) {
        int n = 1 + trials % 3;
        std::vector<PolyVec> gens;
        int count = 1 + trials % 2;
        for (int t = 0; t < count; ++t) gens.push_back(random_vec(rng, n, n, 2, 2));
        PolyModule m = PolyModule::make(n, n, gens);
        if (m.is_zero_module()) continue;
        ++trials;

        PolyModule sat = saturate(m);

        // containment
        for (const PolyVec& g : m.gens) CHECK(member(g, sat));
        // rank preservation
        CHECK(generic_rank(m.generator_matrix()) == generic_rank(sat.generator_matrix()));
        // idempotence
        CHECK(module_equal(saturate(sat), sat));
        // every saturation generator stays in the fraction-field span
        int r = generic_rank(m.generator_matrix());
        for (const PolyVec& g : sat.gens) {
            std::vector<PolyVec> cols = m.gens;
            cols.push_back(g);
            PolyMatrix joint = PolyMatrix::from_columns(n, cols, n);
            CHECK(generic_rank(joint) == r);
        }
        // torsion-freeness of the quotient, contrapositive: multiplying a
        // column outside the saturation by a nonzero polynomial cannot land
        // inside.  Random degree<=4 data.
        MultiPoly f = random_nonzero_poly(rng, n, 4, 3);
        PolyVec v = random_vec(rng, n, n, 2, 2);
        if (!member(v, sat)) {
            CHECK_FALSE(member(poly_scale(v, f), sat));
        } else {
            CHECK(member(poly_scale(v, f), sat));
        }
    }
}

TEST_CASE("saturation strictly enlarges torsion quotients") {
    // f * v in M for v outside M forces v into the saturation.
    PolyModule m = module_of({"z1*z2*d1"}, 2);
    PolyModule sat = saturate(m);
    CHECK(member(vf("d1", 2), sat));
    CHECK(module_equal(sat, module_of({"d1"}, 2)));
}
