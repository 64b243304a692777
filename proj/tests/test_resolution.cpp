#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsemi/duality.hpp"
#include "gsemi/pathmatrix.hpp"
#include "gsemi/resolution.hpp"
#include "gsemi/syzygy.hpp"
#include "oracles.hpp"

using namespace gsemi;

TEST_CASE("bivector syzygies of the worked example") {
    NumericalSemigroup g(5, 7);
    LeanSet lean = normalize(g, {0, 9, 6, 8}).lean;
    auto bivectors = bivector_syzygies(lean);
    REQUIRE(bivectors.size() == 4);
    std::vector<Int> degrees;
    for (const Bivector& f : bivectors) degrees.push_back(f.degree);
    CHECK(degrees == std::vector<Int>{15, 13, 16, 14});

    for (const Bivector& f : bivectors) {
        CHECK(lean.gens[f.pos_a] + f.exp_a == f.degree);
        CHECK(lean.gens[f.pos_b] + f.exp_b == f.degree);
        CHECK(g.contains(f.exp_a));
        CHECK(g.contains(f.exp_b));
    }

    CHECK_THROWS_AS(bivector_syzygies(normalize(g, {0}).lean), std::invalid_argument);
}

TEST_CASE("bivector degrees equal J positionally, alpha+beta <= 16") {
    for (auto [a, b] : oracles::coprime_pairs(16)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            if (lean.size() < 2) continue;
            auto bivectors = bivector_syzygies(lean);
            auto j = syzygy_generators(lean).J;
            REQUIRE(bivectors.size() == j.size());
            for (std::size_t k = 0; k < j.size(); ++k) {
                CHECK(bivectors[k].degree == j[k]);
            }
        }
    }
}

TEST_CASE("resolution degree tables") {
    NumericalSemigroup g57(5, 7);
    ResolutionDegrees r = resolution_degrees(normalize(g57, {0, 9, 6, 8}).lean, 4);
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0] == std::vector<Int>{0, 8, 6, 9});
    CHECK(r.steps[1] == std::vector<Int>{15, 13, 16, 14});
    CHECK(r.steps[2] == std::vector<Int>{20, 28, 26, 29});
    CHECK(r.steps[3] == std::vector<Int>{35, 33, 36, 34});

    NumericalSemigroup g23(2, 3);
    ResolutionDegrees r2 = resolution_degrees(normalize(g23, {0, 1}).lean, 3);
    REQUIRE(r2.steps.size() == 3);
    CHECK(r2.steps[0] == std::vector<Int>{0, 1});
    CHECK(r2.steps[1] == std::vector<Int>{4, 3});
    CHECK(r2.steps[2] == std::vector<Int>{2, 3});

    // Free class: single step.
    ResolutionDegrees r3 = resolution_degrees(normalize(g57, {0}).lean, 1);
    REQUIRE(r3.steps.size() == 1);
    CHECK(r3.steps[0] == std::vector<Int>{0});
}

TEST_CASE("two-periodicity with shift a_1*alpha and constant size") {
    for (const LeanSet& lean : enumerate_classes(NumericalSemigroup(5, 7))) {
        if (lean.size() < 2) continue;
        ResolutionDegrees r = resolution_degrees(lean, 6);
        const Int shift = lean.coords[0].a * 5;
        for (std::size_t s = 0; s + 2 < r.steps.size(); ++s) {
            REQUIRE(r.steps[s].size() == lean.size());
            for (std::size_t k = 0; k < r.steps[s].size(); ++k) {
                CHECK(r.steps[s + 2][k] - r.steps[s][k] == shift);
            }
        }
    }
}

TEST_CASE("hat semimodule of the worked example") {
    NumericalSemigroup g57(5, 7);
    Normalized hat = hat_semimodule(normalize(g57, {0, 9, 6, 8}).lean);
    CHECK(hat.shift == -1);
    std::vector<Int> sorted = hat.lean.gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{0, 1, 2, 3});

    NumericalSemigroup g23(2, 3);
    Normalized hat2 = hat_semimodule(normalize(g23, {0, 1}).lean);
    CHECK(hat2.shift == 0);
    CHECK(hat2.lean.gens == std::vector<Int>{0, 1});
}

TEST_CASE("dual of the hat semimodule is the class shifted by a_1*alpha") {
    NumericalSemigroup g(5, 7);
    for (const LeanSet& lean : enumerate_classes(g)) {
        if (lean.size() < 2) continue;
        Normalized hat = hat_semimodule(lean);
        Normalized hat_dual = dual_oracle(hat.lean);
        // hat semimodule = hat.lean + hat.shift; dual shifts oppositely.
        const Int set_shift = hat_dual.shift - hat.shift;
        const Int a1_alpha = lean.coords[0].a * 5;
        CHECK(hat_dual.lean == lean);
        CHECK(set_shift == a1_alpha);
    }
}
