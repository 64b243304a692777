#pragma once

#include <optional>
#include <vector>

#include "gsemi/common.hpp"

namespace gsemi {

// Coordinates of a gap: gap = alpha*beta - a*alpha - b*beta with a,b >= 1.
struct GapCoord {
    Int a = 0;
    Int b = 0;

    friend bool operator==(const GapCoord&, const GapCoord&) = default;
};

/// The numerical semigroup <alpha,beta> = {r*alpha + s*beta : r,s >= 0}
/// with 2 <= alpha < beta and gcd(alpha,beta) = 1.
class NumericalSemigroup {
public:
    NumericalSemigroup(Int alpha, Int beta);

    Int alpha() const { return alpha_; }
    Int beta() const { return beta_; }

    // Largest gap; every integer above it belongs to the semigroup.
    Int frobenius() const { return alpha_ * beta_ - alpha_ - beta_; }
    Int conductor() const { return frobenius() + 1; }

    // Membership by the gap-coordinate criterion, O(alpha); never scans subsets.
    bool contains(Int ell) const;

    // The unique (a,b) with ell = alpha*beta - a*alpha - b*beta, a,b >= 1,
    // or nullopt when ell is a member.
    std::optional<GapCoord> gap_coords(Int ell) const;

    Int decode_gap(GapCoord g) const {
        return alpha_ * beta_ - g.a * alpha_ - g.b * beta_;
    }

    // All gaps in ascending order; size is (alpha-1)(beta-1)/2.
    std::vector<Int> gaps() const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    Int alpha_;
    Int beta_;
};

// Strict partial order on gaps: g1 <_L g2 iff a1 > a2 and b1 < b2.
// Returns true/false when the pair is strictly comparable, nullopt otherwise.
std::optional<bool> lgap_less(GapCoord g1, GapCoord g2);

} // namespace gsemi
