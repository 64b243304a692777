#include "gsemi/syzygy.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsemi {

FundamentalCouple syzygy_generators(const LeanSet& lean) {
    if (!is_canonical(lean)) {
        throw std::invalid_argument("syzygy_generators requires a canonical lean set");
    }
    const std::size_t n = lean.coords.size();
    if (n == 0) {
        throw std::invalid_argument("syzygy generators are defined for at least 2 generators");
    }
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();

    std::vector<Int> j;
    j.push_back((beta - lean.coords[0].a) * alpha);
    for (std::size_t k = 1; k < n; ++k) {
        j.push_back(alpha * beta - lean.coords[k].a * alpha - lean.coords[k - 1].b * beta);
    }
    j.push_back((alpha - lean.coords[n - 1].b) * beta);
    return {lean, std::move(j)};
}

Normalized syzygy_oracle(const LeanSet& lean) {
    if (lean.gens.size() < 2) {
        throw std::invalid_argument("syzygy_oracle requires at least 2 generators");
    }
    const NumericalSemigroup& gamma = lean.gamma;
    const Int max_gen = *std::max_element(lean.gens.begin(), lean.gens.end());
    // Beyond max_gen + frobenius every integer lies in all translates, so the
    // window ends with a solid run long enough for normalization.
    const Int hi = max_gen + 2 * gamma.alpha() * gamma.beta();
    std::vector<Int> candidates;
    for (Int x = 0; x <= hi; ++x) {
        int presentations = 0;
        for (Int i : lean.gens) {
            if (gamma.contains(x - i) && ++presentations >= 2) break;
        }
        if (presentations >= 2) candidates.push_back(x);
    }
    return normalize(gamma, candidates);
}

PathMatrix syzygy_matrix(const PathMatrix& m) {
    PathMatrix out = m;
    if (out.top.size() > 1) {
        std::rotate(out.top.begin(), out.top.begin() + 1, out.top.end());
    }
    return out;
}

PathMatrix syzygy_matrix_inverse(const PathMatrix& m) {
    PathMatrix out = m;
    if (out.top.size() > 1) {
        std::rotate(out.top.begin(), out.top.end() - 1, out.top.end());
    }
    return out;
}

PathMatrix dual_matrix(const PathMatrix& m) {
    const std::size_t c = m.columns();
    PathMatrix out;
    out.top.assign(m.top.rbegin(), m.top.rend());
    // Bottom row reversed except the last entry, which stays in place.
    for (std::size_t i = 0; i + 1 < c; ++i) {
        out.bottom.push_back(m.bottom[c - 2 - i]);
    }
    out.bottom.push_back(m.bottom[c - 1]);
    return out;
}

bool DihedralReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.pass(); });
}

DihedralReport dihedral_check(const NumericalSemigroup& gamma, std::size_t m) {
    if (m < 3) {
        throw std::invalid_argument("dihedral relations are checked for m >= 3 generators");
    }
    DihedralReport report;
    for_each_class(gamma, [&](const LeanSet& lean) {
        if (lean.size() != m) return;
        const PathMatrix mat = lean_to_matrix(lean);

        PathMatrix syz_m = mat;
        for (std::size_t k = 0; k < m; ++k) syz_m = syzygy_matrix(syz_m);

        DihedralReport::Entry entry{lean, false, false, false};
        entry.syz_order_ok = matrix_equiv(syz_m, mat);
        entry.dual_involution_ok = matrix_equiv(dual_matrix(dual_matrix(mat)), mat);
        entry.conjugation_ok = matrix_equiv(dual_matrix(syzygy_matrix(dual_matrix(mat))),
                                            syzygy_matrix_inverse(mat));
        report.entries.push_back(std::move(entry));
    });
    return report;
}

} // namespace gsemi
