#pragma once

#include <vector>

#include "gsemi/pathmatrix.hpp"

namespace gsemi {

/// A lean set together with the (unnormalized) degrees J of its syzygy
/// generators; {alpha*beta - j : j in J} is the raw dual generator list.
struct FundamentalCouple {
    LeanSet I;
    std::vector<Int> J;
};

// Closed-form J = [(beta-a_1)*alpha, alpha*beta - a_{k+1}*alpha - b_k*beta
// (k=1..n-1), (alpha-b_n)*beta]. Requires n >= 1.
FundamentalCouple syzygy_generators(const LeanSet& lean);

// Set definition: union over generator pairs i != i' of (Gamma+i) n (Gamma+i'),
// computed by bounded scan and normalized. Requires at least 2 generators.
Normalized syzygy_oracle(const LeanSet& lean);

// Matrix rule: top row cyclically shifted left by one, bottom row unchanged.
PathMatrix syzygy_matrix(const PathMatrix& m);

// Inverse rule: top row shifted right by one.
PathMatrix syzygy_matrix_inverse(const PathMatrix& m);

// Matrix rule for the dual: top row reversed, bottom row reversed with the
// last entry kept in place.
PathMatrix dual_matrix(const PathMatrix& m);

/// Per-class verdicts for the dihedral relations on classes with a fixed
/// generator count m: Syz^m = id, dual^2 = id, dual.Syz.dual = Syz^{-1}.
struct DihedralReport {
    struct Entry {
        LeanSet lean;
        bool syz_order_ok = false;
        bool dual_involution_ok = false;
        bool conjugation_ok = false;

        bool pass() const { return syz_order_ok && dual_involution_ok && conjugation_ok; }
    };

    std::vector<Entry> entries;

    bool all_pass() const;
};

// Requires m >= 3.
DihedralReport dihedral_check(const NumericalSemigroup& gamma, std::size_t m);

} // namespace gsemi
