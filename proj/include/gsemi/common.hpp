#pragma once

#include <cstdint>
#include <stdexcept>

namespace gsemi {

using Int = long long;

// Thrown when a structural claim the library relies on fails at runtime
// (e.g. a matrix decodes under zero or several rotations).
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Binomial coefficient; returns 0 for k < 0 or k > n.
Int binomial(Int n, Int k);

} // namespace gsemi
