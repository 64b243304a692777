#include "gsemi/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsemi {

DualResult dual(const LeanSet& lean) {
    if (!is_canonical(lean)) {
        throw std::invalid_argument("dual requires a canonical lean set");
    }
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const std::size_t n = lean.coords.size();

    std::vector<Int> raw;
    if (n == 0) {
        raw.push_back(0);
    } else {
        raw.push_back(lean.coords[0].a * alpha);
        for (std::size_t k = 1; k < n; ++k) {
            raw.push_back(lean.coords[k].a * alpha + lean.coords[k - 1].b * beta);
        }
        raw.push_back(lean.coords[n - 1].b * beta);
    }

    Normalized nm = normalize(lean.gamma, raw);
    return {std::move(raw), std::move(nm.lean), nm.shift};
}

Normalized dual_oracle(const LeanSet& lean) {
    const NumericalSemigroup& gamma = lean.gamma;
    const Int max_gen = *std::max_element(lean.gens.begin(), lean.gens.end());
    // For c >= alpha*beta every c + i exceeds the Frobenius number, so the
    // window [alpha*beta, 2*alpha*beta] is a solid run of members.
    const Int hi = 2 * gamma.alpha() * gamma.beta();
    std::vector<Int> candidates;
    for (Int c = -max_gen; c <= hi; ++c) {
        bool ok = true;
        for (Int i : lean.gens) {
            if (!gamma.contains(c + i)) {
                ok = false;
                break;
            }
        }
        if (ok) candidates.push_back(c);
    }
    return normalize(gamma, candidates);
}

std::vector<Int> dual_shifted_generators(const LeanSet& lean) {
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const std::size_t n = lean.coords.size();
    std::vector<Int> gens{0};
    if (n == 0) return gens;

    const Int a1 = lean.coords[0].a;
    // i-hat_1 uses b_n; i-hat_k (k >= 2) uses a_{n-k+2} and b_{n-k+1}.
    gens.push_back(alpha * beta - a1 * alpha - (alpha - lean.coords[n - 1].b) * beta);
    for (std::size_t k = 2; k <= n; ++k) {
        const Int a = lean.coords[n - k + 1].a;
        const Int b = lean.coords[n - k].b;
        gens.push_back(alpha * beta - (a1 - a) * alpha - (alpha - b) * beta);
    }
    return gens;
}

bool dual_dual_check(const LeanSet& lean) {
    DualResult first = dual(lean);

    // The intermediate class must match the i-hat generating set, which
    // generates the dual shifted down by a_1*alpha.
    Normalized hat = normalize(lean.gamma, dual_shifted_generators(lean));
    if (!(hat.lean == first.cls)) return false;
    if (!lean.coords.empty()) {
        const Int a1_alpha = lean.coords[0].a * lean.gamma.alpha();
        if (hat.shift != first.shift - a1_alpha) return false;
    }

    DualResult second = dual(first.cls);
    // (Delta*)* = Delta exactly: the second shift cancels the first.
    return second.cls == lean && second.shift == first.shift;
}

} // namespace gsemi
