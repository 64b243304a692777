#include "gsemi/semimodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsemi {

Normalized normalize(const NumericalSemigroup& gamma, std::vector<Int> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("a semimodule needs at least one generator");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    const Int shift = generators.front();
    for (Int& g : generators) g -= shift;

    // x is redundant iff x - y lies in Gamma for some other generator y.
    std::vector<Int> kept;
    for (Int x : generators) {
        bool redundant = false;
        for (Int y : generators) {
            if (y < x && gamma.contains(x - y)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(x);
    }

    std::vector<GapCoord> coords;
    for (std::size_t k = 1; k < kept.size(); ++k) {
        auto c = gamma.gap_coords(kept[k]);
        if (!c) {
            throw internal_consistency_error("nonzero minimal generator is not a gap");
        }
        coords.push_back(*c);
    }

    // Ascending <_L order = strictly descending a.
    std::vector<std::size_t> order(coords.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return coords[l].a > coords[r].a; });

    LeanSet lean{gamma, {0}, {}};
    for (std::size_t k : order) {
        lean.gens.push_back(kept[k + 1]);
        lean.coords.push_back(coords[k]);
    }
    for (std::size_t k = 1; k < lean.coords.size(); ++k) {
        if (lean.coords[k - 1].a <= lean.coords[k].a ||
            lean.coords[k - 1].b >= lean.coords[k].b) {
            throw internal_consistency_error("minimal generators do not form a <_L chain");
        }
    }
    return {lean, shift};
}

bool is_canonical(const LeanSet& lean) {
    if (lean.gens.empty() || lean.gens.front() != 0) return false;
    if (lean.coords.size() + 1 != lean.gens.size()) return false;
    for (std::size_t k = 0; k < lean.coords.size(); ++k) {
        if (lean.gamma.decode_gap(lean.coords[k]) != lean.gens[k + 1]) return false;
        if (lean.coords[k].a < 1 || lean.coords[k].b < 1) return false;
    }
    try {
        Normalized n = normalize(lean.gamma, lean.gens);
        return n.shift == 0 && n.lean.gens == lean.gens;
    } catch (const std::exception&) {
        return false;
    }
}

bool member(const LeanSet& lean, Int x) {
    for (Int i : lean.gens) {
        if (lean.gamma.contains(x - i)) return true;
    }
    return false;
}

Normalized hom(const LeanSet& d1, Int shift1, const LeanSet& d2, Int shift2) {
    if (!(d1.gamma == d2.gamma)) {
        throw std::invalid_argument("hom requires semimodules over the same semigroup");
    }
    const NumericalSemigroup& gamma = d1.gamma;
    const Int max_gen = d1.gens.back() > d1.gens.front()
                            ? *std::max_element(d1.gens.begin(), d1.gens.end())
                            : d1.gens.front();
    // Past the conductor every translate maps into Gamma, hence into d2; the
    // extra alpha*beta guarantees a full run of consecutive members so that
    // normalization sees a complete generating set.
    const Int hi = gamma.conductor() + gamma.alpha() * gamma.beta();
    std::vector<Int> candidates;
    for (Int c = -max_gen; c <= hi; ++c) {
        bool ok = true;
        for (Int g : d1.gens) {
            if (!member(d2, c + g)) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(c);
    }
    Normalized result = normalize(gamma, candidates);
    result.shift += shift2 - shift1;
    return result;
}

bool is_isomorphic(const LeanSet& d1, const LeanSet& d2) {
    return d1 == d2;
}

} // namespace gsemi
