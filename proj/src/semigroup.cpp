#include "gsemi/semigroup.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace gsemi {

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

NumericalSemigroup::NumericalSemigroup(Int alpha, Int beta)
    : alpha_(alpha), beta_(beta) {
    if (alpha < 2 || alpha >= beta) {
        throw std::invalid_argument("numerical semigroup requires 2 <= alpha < beta");
    }
    if (std::gcd(alpha, beta) != 1) {
        throw std::invalid_argument("semigroup generators must be coprime");
    }
    // Leave headroom for window arithmetic up to a few multiples of alpha*beta.
    if (alpha > std::numeric_limits<Int>::max() / beta / 8) {
        throw std::invalid_argument("alpha*beta exceeds the supported machine range");
    }
}

bool NumericalSemigroup::contains(Int ell) const {
    if (ell < 0) return false;
    // ell is a gap iff ell = alpha*beta - a*alpha - b*beta with a,b >= 1,
    // i.e. alpha*beta - ell - b*beta is a positive multiple of alpha for some b.
    for (Int b = 1; b < alpha_; ++b) {
        const Int rest = alpha_ * beta_ - ell - b * beta_;
        if (rest >= alpha_ && rest % alpha_ == 0) return false;
    }
    return true;
}

std::optional<GapCoord> NumericalSemigroup::gap_coords(Int ell) const {
    if (ell >= 0) {
        for (Int b = 1; b < alpha_; ++b) {
            const Int rest = alpha_ * beta_ - ell - b * beta_;
            if (rest >= alpha_ && rest % alpha_ == 0) {
                return GapCoord{rest / alpha_, b};
            }
        }
    }
    return std::nullopt;
}

std::vector<Int> NumericalSemigroup::gaps() const {
    std::vector<Int> result;
    result.reserve(static_cast<std::size_t>((alpha_ - 1) * (beta_ - 1) / 2));
    for (Int ell = 1; ell <= frobenius(); ++ell) {
        if (!contains(ell)) result.push_back(ell);
    }
    return result;
}

std::optional<bool> lgap_less(GapCoord g1, GapCoord g2) {
    if (g1.a > g2.a && g1.b < g2.b) return true;
    if (g2.a > g1.a && g2.b < g1.b) return false;
    return std::nullopt;
}

} // namespace gsemi
