#include "gsemi/pathmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsemi {

namespace {

// Builds the canonical lean set from ES-turning points listed in path order
// (a increasing); reversal puts the coords into ascending <_L order.
LeanSet lean_from_turns(const NumericalSemigroup& gamma, std::vector<GapCoord> turns) {
    std::reverse(turns.begin(), turns.end());
    LeanSet lean{gamma, {0}, {}};
    for (const GapCoord& c : turns) {
        const Int gap = gamma.decode_gap(c);
        if (gap < 1) {
            throw internal_consistency_error("turning point decodes to a non-gap");
        }
        lean.gens.push_back(gap);
        lean.coords.push_back(c);
    }
    return lean;
}

void require_canonical(const LeanSet& lean, const char* what) {
    if (!is_canonical(lean)) {
        throw std::invalid_argument(std::string(what) + " requires a canonical lean set");
    }
}

} // namespace

PathMatrix lean_to_matrix(const LeanSet& lean) {
    require_canonical(lean, "lean_to_matrix");
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const std::size_t n = lean.coords.size();
    if (n == 0) return {{alpha}, {beta}};

    PathMatrix m;
    m.top.push_back(alpha - lean.coords[n - 1].b);
    for (std::size_t k = n - 1; k >= 1; --k) {
        m.top.push_back(lean.coords[k].b - lean.coords[k - 1].b);
    }
    m.top.push_back(lean.coords[0].b);

    m.bottom.push_back(lean.coords[n - 1].a);
    for (std::size_t k = n - 1; k >= 1; --k) {
        m.bottom.push_back(lean.coords[k - 1].a - lean.coords[k].a);
    }
    m.bottom.push_back(beta - lean.coords[0].a);
    return m;
}

PathMatrix rotate(const PathMatrix& m, std::size_t k) {
    const std::size_t c = m.columns();
    PathMatrix out;
    out.top.reserve(c);
    out.bottom.reserve(c);
    for (std::size_t i = 0; i < c; ++i) {
        out.top.push_back(m.top[(i + k) % c]);
        out.bottom.push_back(m.bottom[(i + k) % c]);
    }
    return out;
}

bool matrix_equiv(const PathMatrix& m1, const PathMatrix& m2) {
    if (m1.columns() != m2.columns() || m1.bottom.size() != m2.bottom.size()) return false;
    for (std::size_t k = 0; k < m1.columns(); ++k) {
        if (rotate(m1, k) == m2) return true;
    }
    return false;
}

MatrixDecode matrix_to_lean(const NumericalSemigroup& gamma, const PathMatrix& m) {
    const std::size_t c = m.columns();
    if (c == 0 || m.bottom.size() != c) {
        throw std::invalid_argument("matrix rows must be nonempty and of equal length");
    }
    for (std::size_t i = 0; i < c; ++i) {
        if (m.top[i] < 1 || m.bottom[i] < 1) {
            throw std::invalid_argument("matrix entries must be positive");
        }
    }
    if (std::accumulate(m.top.begin(), m.top.end(), Int{0}) != gamma.alpha() ||
        std::accumulate(m.bottom.begin(), m.bottom.end(), Int{0}) != gamma.beta()) {
        throw std::invalid_argument("matrix row sums must equal alpha resp. beta");
    }

    std::optional<MatrixDecode> found;
    for (std::size_t r = 0; r < c; ++r) {
        const PathMatrix rot = rotate(m, r);
        const std::size_t n = c - 1;
        // a_k = x_0 + ... + x_{n-k}, b_k = y_{n-k+1} + ... + y_n.
        std::vector<GapCoord> coords(n);
        Int a = 0;
        for (std::size_t k = n; k >= 1; --k) {
            a += rot.bottom[n - k];
            coords[k - 1].a = a;
        }
        Int b = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            b += rot.top[n - k + 1];
            coords[k - 1].b = b;
        }
        bool valid = true;
        for (const GapCoord& cd : coords) {
            if (gamma.decode_gap(cd) < 1) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        if (found) {
            throw internal_consistency_error("matrix decodes under more than one rotation");
        }
        // Coords were built in path order already ascending <_L (k = 1..n).
        LeanSet lean{gamma, {0}, {}};
        for (const GapCoord& cd : coords) {
            lean.gens.push_back(gamma.decode_gap(cd));
            lean.coords.push_back(cd);
        }
        found = MatrixDecode{std::move(lean), r};
    }
    if (!found) {
        throw internal_consistency_error("matrix decodes under no rotation");
    }
    return *found;
}

LatticePath lean_to_path(const LeanSet& lean) {
    const PathMatrix m = lean_to_matrix(lean);
    LatticePath path{lean.gamma, {}};
    for (std::size_t i = 0; i < m.columns(); ++i) {
        path.steps.insert(path.steps.end(), static_cast<std::size_t>(m.top[i]), Step::Down);
        path.steps.insert(path.steps.end(), static_cast<std::size_t>(m.bottom[i]), Step::Right);
    }
    return path;
}

LeanSet path_to_lean(const LatticePath& path) {
    const NumericalSemigroup& gamma = path.gamma;
    const Int alpha = gamma.alpha();
    const Int beta = gamma.beta();
    if (static_cast<Int>(path.steps.size()) != alpha + beta) {
        throw std::invalid_argument("path must have alpha + beta steps");
    }
    Int x = 0;
    Int y = alpha;
    std::vector<GapCoord> turns;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (path.steps[i] == Step::Down) {
            if (y == 0) throw std::invalid_argument("path leaves the grid");
            if (i > 0 && path.steps[i - 1] == Step::Right) {
                turns.push_back({x, y});
            }
            --y;
        } else {
            ++x;
        }
        if (alpha * x + beta * y > alpha * beta) {
            throw std::invalid_argument("path crosses the diagonal");
        }
    }
    if (x != beta || y != 0) {
        throw std::invalid_argument("path must end at (beta, 0)");
    }
    return lean_from_turns(gamma, std::move(turns));
}

namespace {

void dfs_paths(const NumericalSemigroup& gamma, Int x, Int y, bool last_right,
               std::vector<GapCoord>& turns,
               const std::function<void(const LeanSet&)>& fn) {
    const Int alpha = gamma.alpha();
    const Int beta = gamma.beta();
    if (x == beta && y == 0) {
        fn(lean_from_turns(gamma, turns));
        return;
    }
    if (y > 0) {
        if (last_right) {
            turns.push_back({x, y});
            dfs_paths(gamma, x, y - 1, false, turns, fn);
            turns.pop_back();
        } else {
            dfs_paths(gamma, x, y - 1, false, turns, fn);
        }
    }
    if (x < beta && alpha * (x + 1) + beta * y <= alpha * beta) {
        dfs_paths(gamma, x + 1, y, true, turns, fn);
    }
}

} // namespace

void for_each_class(const NumericalSemigroup& gamma,
                    const std::function<void(const LeanSet&)>& fn) {
    std::vector<GapCoord> turns;
    dfs_paths(gamma, 0, gamma.alpha(), false, turns, fn);
}

std::vector<LeanSet> enumerate_classes(const NumericalSemigroup& gamma) {
    std::vector<LeanSet> classes;
    for_each_class(gamma, [&](const LeanSet& lean) { classes.push_back(lean); });
    return classes;
}

Int class_count(const NumericalSemigroup& gamma) {
    return binomial(gamma.alpha() + gamma.beta(), gamma.alpha()) /
           (gamma.alpha() + gamma.beta());
}

std::string render_path_ascii(const LeanSet& lean) {
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const std::size_t rows = static_cast<std::size_t>(2 * alpha + 1);
    const std::size_t cols = static_cast<std::size_t>(2 * beta + 1);
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    for (Int y = 0; y <= alpha; ++y) {
        for (Int x = 0; x <= beta; ++x) {
            grid[static_cast<std::size_t>(2 * (alpha - y))][static_cast<std::size_t>(2 * x)] = '.';
        }
    }

    const LatticePath path = lean_to_path(lean);
    Int x = 0;
    Int y = alpha;
    auto row = [&](Int yy) { return static_cast<std::size_t>(2 * (alpha - yy)); };
    auto col = [&](Int xx) { return static_cast<std::size_t>(2 * xx); };
    grid[row(y)][col(x)] = 'o';
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (path.steps[i] == Step::Down) {
            if (i > 0 && path.steps[i - 1] == Step::Right) grid[row(y)][col(x)] = '*';
            grid[row(y) + 1][col(x)] = '|';
            --y;
        } else {
            grid[row(y)][col(x) + 1] = '-';
            ++x;
        }
    }
    grid[row(0)][col(beta)] = 'o';

    std::ostringstream out;
    for (const std::string& line : grid) out << line << '\n';
    return out.str();
}

std::string render_path_svg(const LeanSet& lean) {
    const Int alpha = lean.gamma.alpha();
    const Int beta = lean.gamma.beta();
    const Int unit = 24;
    const Int margin = 12;
    auto px = [&](Int x) { return margin + x * unit; };
    auto py = [&](Int y) { return margin + (alpha - y) * unit; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
        << px(beta) + margin << "\" height=\"" << py(0) + margin << "\">\n";
    for (Int y = 0; y <= alpha; ++y) {
        for (Int x = 0; x <= beta; ++x) {
            out << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
                << "\" r=\"1.5\" fill=\"#999\"/>\n";
        }
    }
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(alpha) << "\" x2=\"" << px(beta)
        << "\" y2=\"" << py(0) << "\" stroke=\"#c33\" stroke-dasharray=\"4 3\"/>\n";

    const LatticePath path = lean_to_path(lean);
    Int x = 0;
    Int y = alpha;
    out << "  <polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\""
        << px(x) << ',' << py(y);
    for (Step s : path.steps) {
        if (s == Step::Down) --y; else ++x;
        out << ' ' << px(x) << ',' << py(y);
    }
    out << "\"/>\n";
    for (const GapCoord& c : lean.coords) {
        out << "  <circle cx=\"" << px(c.a) << "\" cy=\"" << py(c.b)
            << "\" r=\"4\" fill=\"#000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace gsemi
