#pragma once

#include <vector>

#include "gsemi/semigroup.hpp"

namespace gsemi {

/// Canonical representative of a semimodule isomorphism class: the minimal
/// generator set shifted so that its least element is 0, stored in ascending
/// <_L order (equivalently descending coordinate a). gens[0] is always 0 and
/// coords[k] are the (a,b) coordinates of gens[k+1].
struct LeanSet {
    NumericalSemigroup gamma;
    std::vector<Int> gens;
    std::vector<GapCoord> coords;

    std::size_t size() const { return gens.size(); }

    friend bool operator==(const LeanSet& l, const LeanSet& r) {
        return l.gamma == r.gamma && l.gens == r.gens;
    }
};

struct Normalized {
    LeanSet lean;
    Int shift = 0;
};

// Minimal canonical generators of the semimodule generated by `generators`,
// plus the shift (= minimum of that semimodule). Duplicates are ignored.
Normalized normalize(const NumericalSemigroup& gamma, std::vector<Int> generators);

// True when gens are already a canonical lean set (min 0, minimal,
// ascending <_L) with matching coords.
bool is_canonical(const LeanSet& lean);

// Membership in the generated semimodule: x in i + Gamma for some generator i.
bool member(const LeanSet& lean, Int x);

// Hom_Gamma(Delta + shift1, Delta' + shift2) as a canonical class plus shift.
// Computed by a bounded window scan; beyond the conductor every translate works.
Normalized hom(const LeanSet& d1, Int shift1, const LeanSet& d2, Int shift2);

bool is_isomorphic(const LeanSet& d1, const LeanSet& d2);

} // namespace gsemi
