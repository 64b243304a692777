#include "gsemi/resolution.hpp"

#include <stdexcept>

#include "gsemi/syzygy.hpp"

namespace gsemi {

std::vector<Bivector> bivector_syzygies(const LeanSet& lean) {
    if (!is_canonical(lean)) {
        throw std::invalid_argument("bivector_syzygies requires a canonical lean set");
    }
    const std::size_t n = lean.coords.size();
    if (n == 0) {
        throw std::invalid_argument("the free class {0} has no bivector syzygies");
    }
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    auto a = [&](std::size_t k) { return lean.coords[k - 1].a; };
    auto b = [&](std::size_t k) { return lean.coords[k - 1].b; };

    std::vector<Bivector> result;
    result.push_back({0, 1, (beta - a(1)) * alpha, b(1) * beta,
                      (beta - a(1)) * alpha});
    for (std::size_t k = 1; k < n; ++k) {
        const Int ea = (a(k) - a(k + 1)) * alpha;
        const Int eb = (b(k + 1) - b(k)) * beta;
        result.push_back({k, k + 1, ea, eb, lean.gens[k] + ea});
    }
    result.push_back({0, n, (alpha - b(n)) * beta, a(n) * alpha,
                      (alpha - b(n)) * beta});

    for (const Bivector& f : result) {
        if (lean.gens[f.pos_a] + f.exp_a != f.degree ||
            lean.gens[f.pos_b] + f.exp_b != f.degree) {
            throw internal_consistency_error("bivector degree bookkeeping mismatch");
        }
    }
    return result;
}

ResolutionDegrees resolution_degrees(const LeanSet& lean, std::size_t num_steps) {
    if (num_steps == 0) {
        throw std::invalid_argument("resolution needs at least one step");
    }
    ResolutionDegrees res;
    if (lean.coords.empty()) {
        // Free module: the resolution stops immediately.
        res.steps.push_back({0});
        return res;
    }
    res.steps.push_back(lean.gens);
    if (num_steps > 1) {
        res.steps.push_back(syzygy_generators(lean).J);
    }
    const Int shift = lean.coords[0].a * lean.gamma.alpha();
    while (res.steps.size() < num_steps) {
        std::vector<Int> next = res.steps[res.steps.size() - 2];
        for (Int& d : next) d += shift;
        res.steps.push_back(std::move(next));
    }
    return res;
}

Normalized hat_semimodule(const LeanSet& lean) {
    if (!is_canonical(lean)) {
        throw std::invalid_argument("hat_semimodule requires a canonical lean set");
    }
    const std::size_t n = lean.coords.size();
    if (n == 0) {
        throw std::invalid_argument("hat_semimodule is defined for at least 2 generators");
    }
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const Int a1 = lean.coords[0].a;

    std::vector<Int> gens{0};
    for (std::size_t k = 1; k < n; ++k) {
        gens.push_back(lean.coords[k - 1].b * beta - (a1 - lean.coords[k].a) * alpha);
    }
    gens.push_back(lean.coords[n - 1].b * beta - a1 * alpha);
    return normalize(lean.gamma, gens);
}

} // namespace gsemi
