#pragma once

#include <vector>

#include "gsemi/semimodule.hpp"

namespace gsemi {

/// Dual of a semimodule class: the closed-form generator list
/// [a_1*alpha, a_{k+1}*alpha + b_k*beta (k=1..n-1), b_n*beta]
/// together with its normalization.
struct DualResult {
    std::vector<Int> raw_generators;
    LeanSet cls;
    Int shift = 0;
};

// Closed-form dual of a canonical lean set. For {0} returns raw [0], class {0}.
// Throws std::invalid_argument on non-canonical input.
DualResult dual(const LeanSet& lean);

// Ground-truth dual by bounded scan of all c with c + Delta contained in Gamma.
Normalized dual_oracle(const LeanSet& lean);

// Generators {0} and i-hat_k of the once-shifted dual (dual minus a_1*alpha),
// the intermediate set appearing in the double-dual identity.
std::vector<Int> dual_shifted_generators(const LeanSet& lean);

// Applies the closed-form dual twice and checks the class returns to `lean`;
// also checks the intermediate class against dual_shifted_generators.
bool dual_dual_check(const LeanSet& lean);

} // namespace gsemi
