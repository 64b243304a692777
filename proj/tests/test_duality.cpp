#include <doctest.h>

#include <algorithm>
#include <set>

#include "gsemi/duality.hpp"
#include "gsemi/pathmatrix.hpp"
#include "oracles.hpp"

using namespace gsemi;

TEST_CASE("dual worked examples") {
    NumericalSemigroup g57(5, 7);

    DualResult trivial = dual(normalize(g57, {0}).lean);
    CHECK(trivial.raw_generators == std::vector<Int>{0});
    CHECK(trivial.cls.gens == std::vector<Int>{0});
    CHECK(trivial.shift == 0);

    DualResult d = dual(normalize(g57, {0, 9, 6, 8}).lean);
    CHECK(d.raw_generators == std::vector<Int>{20, 22, 19, 21});
    CHECK(d.shift == 19);
    std::vector<Int> sorted = d.cls.gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{0, 1, 2, 3});

    NumericalSemigroup g23(2, 3);
    DualResult d23 = dual(normalize(g23, {0, 1}).lean);
    CHECK(d23.raw_generators == std::vector<Int>{2, 3});
    CHECK(d23.cls.gens == std::vector<Int>{0, 1});
    CHECK(d23.shift == 2);
}

TEST_CASE("dual rejects non-canonical input") {
    NumericalSemigroup g(5, 7);
    LeanSet bogus{g, {0, 5}, {GapCoord{1, 1}}};
    CHECK_THROWS_AS(dual(bogus), std::invalid_argument);
}

TEST_CASE("dual oracle examples") {
    NumericalSemigroup g57(5, 7);
    Normalized o = dual_oracle(normalize(g57, {0}).lean);
    CHECK(o.lean.gens == std::vector<Int>{0});

    Normalized o2 = dual_oracle(normalize(g57, {0, 9, 6, 8}).lean);
    std::vector<Int> sorted = o2.lean.gens;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<Int>{0, 1, 2, 3});
    CHECK(o2.shift == 19);

    NumericalSemigroup g23(2, 3);
    Normalized o3 = dual_oracle(normalize(g23, {0, 1}).lean);
    CHECK(o3.lean.gens == std::vector<Int>{0, 1});
}

TEST_CASE("formula equals oracle on every class, alpha+beta <= 16") {
    for (auto [a, b] : oracles::coprime_pairs(16)) {
        NumericalSemigroup g(a, b);
        for (const LeanSet& lean : enumerate_classes(g)) {
            DualResult d = dual(lean);
            CHECK(static_cast<std::size_t>(d.raw_generators.size()) == lean.size());
            Normalized o = dual_oracle(lean);
            CHECK(d.cls == o.lean);
            CHECK(d.shift == o.shift);
        }
    }
}

TEST_CASE("double dual identity") {
    NumericalSemigroup g57(5, 7);
    CHECK(dual_dual_check(normalize(g57, {0}).lean));
    CHECK(dual_dual_check(normalize(g57, {0, 9, 6, 8}).lean));

    for (const LeanSet& lean : enumerate_classes(NumericalSemigroup(4, 5))) {
        CHECK(dual_dual_check(lean));
    }
}

namespace {

// Window comparison of the dual semimodule of a shifted class.
std::set<Int> dual_window(Int alpha, Int beta, const std::vector<Int>& gens, Int lo, Int hi) {
    std::set<Int> out;
    for (Int c = lo; c <= hi; ++c) {
        bool ok = true;
        for (Int i : gens) {
            if (!oracles::contains(alpha, beta, c + i)) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(c);
    }
    return out;
}

} // namespace

TEST_CASE("dual of a shifted class is the shifted dual") {
    NumericalSemigroup g(4, 7);
    LeanSet lean = normalize(g, {0, 5, 6}).lean;
    const Int lo = -60;
    const Int hi = 60;
    auto base = dual_window(4, 7, lean.gens, lo - 5, hi + 5);
    for (Int d = -5; d <= 5; ++d) {
        std::vector<Int> shifted = lean.gens;
        for (Int& x : shifted) x += d;
        auto dual_shifted = dual_window(4, 7, shifted, lo, hi);
        std::set<Int> expect;
        for (Int x : base) {
            if (x - d >= lo && x - d <= hi) expect.insert(x - d);
        }
        CHECK(dual_shifted == expect);
    }
}

TEST_CASE("dual of a union is the intersection of duals") {
    NumericalSemigroup g(5, 7);
    LeanSet d1 = normalize(g, {0, 9, 6, 8}).lean;
    LeanSet d2 = normalize(g, {0, 4}).lean;
    const Int lo = -35;
    const Int hi = 70;

    std::vector<Int> joint = d1.gens;
    joint.insert(joint.end(), d2.gens.begin(), d2.gens.end());
    auto lhs = dual_window(5, 7, joint, lo, hi);

    auto w1 = dual_window(5, 7, d1.gens, lo, hi);
    auto w2 = dual_window(5, 7, d2.gens, lo, hi);
    std::set<Int> rhs;
    std::set_intersection(w1.begin(), w1.end(), w2.begin(), w2.end(),
                          std::inserter(rhs, rhs.begin()));
    CHECK(lhs == rhs);
}
