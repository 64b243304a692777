#pragma once

#include <vector>

#include "gsemi/semimodule.hpp"

namespace gsemi {

/// First-syzygy generator supported in exactly two positions of the lean set,
/// with monomial exponents of equal total degree:
/// gens[pos_a] + exp_a = gens[pos_b] + exp_b = degree.
struct Bivector {
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    Int exp_a = 0;
    Int exp_b = 0;
    Int degree = 0;
};

// The n+1 bivectors generating the first syzygy; their degree list equals
// syzygy_generators(lean).J positionally. Requires n >= 1.
std::vector<Bivector> bivector_syzygies(const LeanSet& lean);

/// Generator degrees of the free modules in the minimal graded resolution,
/// one multiset per homological step. After the first two steps the degrees
/// repeat with period 2 shifted by a_1*alpha.
struct ResolutionDegrees {
    std::vector<std::vector<Int>> steps;
};

// steps[0] = I, steps[1] = J, steps[s] = steps[s-2] + a_1*alpha.
// For the free class {0} the resolution is the single step {0}.
ResolutionDegrees resolution_degrees(const LeanSet& lean, std::size_t num_steps);

// The kernel semimodule of the second resolution map, generated by
// {0, b_k*beta - (a_1 - a_{k+1})*alpha (k=1..n-1), b_n*beta - a_1*alpha};
// its dual is the original class shifted by a_1*alpha. Requires n >= 1.
Normalized hat_semimodule(const LeanSet& lean);

} // namespace gsemi
