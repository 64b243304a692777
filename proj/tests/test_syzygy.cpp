#include <doctest.h>

#include <algorithm>
#include <map>

#include "gsemi/duality.hpp"
#include "gsemi/syzygy.hpp"
#include "oracles.hpp"

using namespace gsemi;

TEST_CASE("syzygy generator formulas") {
    NumericalSemigroup g57(5, 7);
    FundamentalCouple fc = syzygy_generators(normalize(g57, {0, 9, 6, 8}).lean);
    CHECK(fc.J == std::vector<Int>{15, 13, 16, 14});

    NumericalSemigroup g23(2, 3);
    CHECK(syzygy_generators(normalize(g23, {0, 1}).lean).J == std::vector<Int>{4, 3});

    CHECK_THROWS_AS(syzygy_generators(normalize(g57, {0}).lean), std::invalid_argument);
}

TEST_CASE("J corresponds to the dual raw generators via x -> alpha*beta - x") {
    for (auto [a, b] : oracles::coprime_pairs(14)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            if (lean.size() < 2) continue;
            FundamentalCouple fc = syzygy_generators(lean);
            DualResult d = dual(lean);
            REQUIRE(fc.J.size() == d.raw_generators.size());
            std::vector<Int> mapped;
            for (Int j : fc.J) mapped.push_back(a * b - j);
            CHECK(mapped == d.raw_generators);
        }
    }
}

TEST_CASE("syzygy oracle examples") {
    NumericalSemigroup g57(5, 7);
    Normalized o = syzygy_oracle(normalize(g57, {0, 9, 6, 8}).lean);
    std::vector<Int> sorted = o.lean.gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{0, 1, 2, 3});
    CHECK(o.shift == 13);

    NumericalSemigroup g23(2, 3);
    Normalized o2 = syzygy_oracle(normalize(g23, {0, 1}).lean);
    CHECK(o2.lean.gens == std::vector<Int>{0, 1});
    CHECK(o2.shift == 3);
}

TEST_CASE("oracle equals normalized J on every class, alpha+beta <= 16") {
    for (auto [a, b] : oracles::coprime_pairs(16)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            if (lean.size() < 2) continue;
            Normalized from_j = normalize(g, syzygy_generators(lean).J);
            Normalized from_set = syzygy_oracle(lean);
            CHECK(from_j.lean == from_set.lean);
            CHECK(from_j.shift == from_set.shift);
        }
    }
}

TEST_CASE("matrix shift rule") {
    CHECK(syzygy_matrix({{2, 1, 1, 1}, {1, 2, 1, 3}}) ==
          PathMatrix{{1, 1, 1, 2}, {1, 2, 1, 3}});
    CHECK(syzygy_matrix({{5}, {7}}) == PathMatrix{{5}, {7}});

    NumericalSemigroup g57(5, 7);
    MatrixDecode d = matrix_to_lean(g57, syzygy_matrix({{2, 1, 1, 1}, {1, 2, 1, 3}}));
    std::vector<Int> sorted = d.lean.gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{0, 1, 2, 3});

    // Inverse rule really inverts.
    PathMatrix m{{2, 1, 1, 1}, {1, 2, 1, 3}};
    CHECK(syzygy_matrix_inverse(syzygy_matrix(m)) == m);
}

TEST_CASE("matrix rule agrees with the set definition") {
    for (auto [a, b] : oracles::coprime_pairs(13)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            if (lean.size() < 2) continue;
            MatrixDecode d = matrix_to_lean(g, syzygy_matrix(lean_to_matrix(lean)));
            CHECK(d.lean == syzygy_oracle(lean).lean);
        }
    }
}

TEST_CASE("dual matrix rule") {
    CHECK(dual_matrix({{2, 1, 1, 1}, {1, 2, 1, 3}}) ==
          PathMatrix{{1, 1, 1, 2}, {1, 2, 1, 3}});
    CHECK(dual_matrix({{5}, {7}}) == PathMatrix{{5}, {7}});

    // Involution up to rotation, and agreement with the generator-formula dual.
    for (const LeanSet& lean : enumerate_classes(NumericalSemigroup(4, 5))) {
        PathMatrix m = lean_to_matrix(lean);
        CHECK(matrix_equiv(dual_matrix(dual_matrix(m)), m));
        MatrixDecode d = matrix_to_lean(lean.gamma, dual_matrix(m));
        CHECK(d.lean == dual(lean).cls);
    }
}

TEST_CASE("dihedral relations") {
    CHECK(dihedral_check(NumericalSemigroup(5, 7), 4).all_pass());
    CHECK(dihedral_check(NumericalSemigroup(4, 5), 3).all_pass());
    CHECK_THROWS_AS(dihedral_check(NumericalSemigroup(4, 5), 2), std::invalid_argument);

    // Syz^4 returns the worked example's class.
    NumericalSemigroup g57(5, 7);
    LeanSet lean = normalize(g57, {0, 9, 6, 8}).lean;
    PathMatrix m = lean_to_matrix(lean);
    for (int k = 0; k < 4; ++k) m = syzygy_matrix(m);
    CHECK(matrix_to_lean(g57, m).lean == lean);
}

TEST_CASE("syzygy iteration is periodic with period dividing the size") {
    // The period can be a proper divisor: every 3-generator class of <3,4>
    // has top row (1,1,1), which the shift fixes outright.
    for (auto [a, b] : oracles::coprime_pairs(13)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            const std::size_t size = lean.size();
            PathMatrix m0 = lean_to_matrix(lean);
            PathMatrix m = m0;
            std::size_t period = 0;
            for (std::size_t k = 1; k <= size; ++k) {
                m = syzygy_matrix(m);
                if (matrix_equiv(m, m0)) {
                    period = k;
                    break;
                }
            }
            REQUIRE(period > 0);
            CHECK(size % period == 0);
        }
    }

    // The worked example attains the full period.
    NumericalSemigroup g57(5, 7);
    PathMatrix m0 = lean_to_matrix(normalize(g57, {0, 9, 6, 8}).lean);
    PathMatrix m = m0;
    for (std::size_t k = 1; k <= 3; ++k) {
        m = syzygy_matrix(m);
        CHECK_FALSE(matrix_equiv(m, m0));
    }
    CHECK(matrix_equiv(syzygy_matrix(m), m0));
}

TEST_CASE("syzygy coincides with the dual on classes with at most 2 generators") {
    for (auto [a, b] : oracles::coprime_pairs(13)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            if (lean.size() > 2) continue;
            PathMatrix m = lean_to_matrix(lean);
            CHECK(matrix_equiv(syzygy_matrix(m), dual_matrix(m)));
        }
    }
}
