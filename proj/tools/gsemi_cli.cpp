// Command-line front end: gaps, lean, dual, syzygy, matrix, path, resolution,
// census, orbit. Payload goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 2 invalid input, 3 internal consistency failure,
// 4 census mismatch.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsemi/duality.hpp"
#include "gsemi/pathmatrix.hpp"
#include "gsemi/resolution.hpp"
#include "gsemi/selfdual.hpp"
#include "gsemi/semigroup.hpp"
#include "gsemi/semimodule.hpp"
#include "gsemi/syzygy.hpp"

using json = nlohmann::json;
using namespace gsemi;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitCensusMismatch = 4;

struct Options {
    std::string format = "text";
    bool check = false;
    Int max_sum = 0;
    bool all_pairs = false;
    std::size_t steps = 4;
    std::string svg_file;
};

json semigroup_json(const NumericalSemigroup& g) {
    return {{"alpha", g.alpha()}, {"beta", g.beta()}};
}

json lean_json(const LeanSet& lean) {
    json coords = json::array();
    for (const GapCoord& c : lean.coords) coords.push_back({c.a, c.b});
    return {{"semigroup", semigroup_json(lean.gamma)},
            {"lean", lean.gens},
            {"coords", coords}};
}

std::string join(const std::vector<Int>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string lean_text(const LeanSet& lean) {
    return "(" + join(lean.gens, " ") + ")";
}

void emit(const Options& opt, const json& payload,
          const std::function<void()>& text_writer,
          const std::function<void()>& tsv_writer) {
    if (opt.format == "json") {
        std::cout << payload.dump(2) << '\n';
    } else if (opt.format == "tsv") {
        tsv_writer();
    } else {
        text_writer();
    }
}

Normalized parse_semimodule(Int alpha, Int beta, const std::vector<Int>& gens) {
    NumericalSemigroup gamma(alpha, beta);
    return normalize(gamma, gens);
}

int cmd_gaps(const Options& opt, Int alpha, Int beta) {
    NumericalSemigroup gamma(alpha, beta);
    json rows = json::array();
    for (Int gap : gamma.gaps()) {
        GapCoord c = *gamma.gap_coords(gap);
        rows.push_back({{"gap", gap}, {"a", c.a}, {"b", c.b}});
    }
    json payload = {{"semigroup", semigroup_json(gamma)}, {"gaps", rows}};
    emit(opt, payload,
         [&] {
             for (const auto& r : rows) {
                 std::cout << r["gap"].get<Int>() << " (a=" << r["a"].get<Int>()
                           << ",b=" << r["b"].get<Int>() << ")\n";
             }
         },
         [&] {
             std::cout << "gap\ta\tb\n";
             for (const auto& r : rows) {
                 std::cout << r["gap"].get<Int>() << '\t' << r["a"].get<Int>() << '\t'
                           << r["b"].get<Int>() << '\n';
             }
         });
    return 0;
}

int cmd_lean(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    json payload = lean_json(n.lean);
    payload["input"] = gens;
    payload["shift"] = n.shift;
    emit(opt, payload,
         [&] {
             std::cout << "lean " << lean_text(n.lean) << " shift " << n.shift << '\n';
         },
         [&] {
             std::cout << "lean\tshift\n" << join(n.lean.gens, ",") << '\t' << n.shift << '\n';
         });
    return 0;
}

int cmd_dual(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    DualResult d = dual(n.lean);
    json payload = lean_json(n.lean);
    payload["input_shift"] = n.shift;
    payload["dual_raw"] = d.raw_generators;
    payload["dual_class"] = d.cls.gens;
    payload["dual_shift"] = d.shift;
    bool agree = true;
    if (opt.check) {
        Normalized oracle = dual_oracle(n.lean);
        agree = oracle.lean == d.cls && oracle.shift == d.shift;
        payload["check"] = {{"oracle_class", oracle.lean.gens},
                            {"oracle_shift", oracle.shift},
                            {"agree", agree}};
    }
    emit(opt, payload,
         [&] {
             std::cout << "lean " << lean_text(n.lean) << " shift " << n.shift << '\n'
                       << "dual raw [" << join(d.raw_generators, " ") << "]\n"
                       << "dual class " << lean_text(d.cls) << " shift " << d.shift << '\n';
             if (opt.check) {
                 std::cout << "formula == oracle: " << (agree ? "true" : "false") << '\n';
             }
         },
         [&] {
             std::cout << "dual_raw\tdual_class\tdual_shift\n"
                       << join(d.raw_generators, ",") << '\t' << join(d.cls.gens, ",") << '\t'
                       << d.shift << '\n';
         });
    if (opt.check && !agree) {
        throw internal_consistency_error("closed-form dual disagrees with the oracle");
    }
    return 0;
}

int cmd_syzygy(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    json payload = lean_json(n.lean);
    payload["input_shift"] = n.shift;
    if (n.lean.size() < 2) {
        // Single generator: the syzygy via the matrix rule is the class itself.
        payload["J"] = json::array();
        payload["syzygy_class"] = n.lean.gens;
        payload["syzygy_shift"] = 0;
        emit(opt, payload,
             [&] { std::cout << "syzygy class " << lean_text(n.lean) << " shift 0\n"; },
             [&] { std::cout << "J\tclass\tshift\n\t" << join(n.lean.gens, ",") << "\t0\n"; });
        return 0;
    }
    FundamentalCouple fc = syzygy_generators(n.lean);
    Normalized cls = normalize(n.lean.gamma, fc.J);
    payload["J"] = fc.J;
    payload["syzygy_class"] = cls.lean.gens;
    payload["syzygy_shift"] = cls.shift;
    bool agree = true;
    if (opt.check) {
        Normalized oracle = syzygy_oracle(n.lean);
        agree = oracle.lean == cls.lean && oracle.shift == cls.shift;
        payload["check"] = {{"oracle_class", oracle.lean.gens},
                            {"oracle_shift", oracle.shift},
                            {"agree", agree}};
    }
    emit(opt, payload,
         [&] {
             std::cout << "J [" << join(fc.J, " ") << "]\n"
                       << "syzygy class " << lean_text(cls.lean) << " shift " << cls.shift
                       << '\n';
             if (opt.check) {
                 std::cout << "formula == oracle: " << (agree ? "true" : "false") << '\n';
             }
         },
         [&] {
             std::cout << "J\tclass\tshift\n"
                       << join(fc.J, ",") << '\t' << join(cls.lean.gens, ",") << '\t'
                       << cls.shift << '\n';
         });
    if (opt.check && !agree) {
        throw internal_consistency_error("closed-form syzygy disagrees with the oracle");
    }
    return 0;
}

int cmd_matrix(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    PathMatrix m = lean_to_matrix(n.lean);
    json payload = lean_json(n.lean);
    payload["matrix"] = {{"top", m.top}, {"bottom", m.bottom}};
    emit(opt, payload,
         [&] {
             std::cout << "( " << join(m.top, " ") << " )\n( " << join(m.bottom, " ")
                       << " )\n";
         },
         [&] {
             std::cout << "row\tentries\ntop\t" << join(m.top, ",") << "\nbottom\t"
                       << join(m.bottom, ",") << '\n';
         });
    return 0;
}

int cmd_path(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    LatticePath path = lean_to_path(n.lean);
    std::string steps;
    for (Step s : path.steps) steps += (s == Step::Down ? 'D' : 'R');
    json turning = json::array();
    for (const GapCoord& c : n.lean.coords) turning.push_back({c.a, c.b});
    json payload = lean_json(n.lean);
    payload["steps"] = steps;
    payload["turning_points"] = turning;
    if (!opt.svg_file.empty()) {
        std::ofstream out(opt.svg_file);
        if (!out) throw std::invalid_argument("cannot open SVG output file");
        out << render_path_svg(n.lean);
    }
    emit(opt, payload, [&] { std::cout << render_path_ascii(n.lean); },
         [&] { std::cout << "steps\n" << steps << '\n'; });
    return 0;
}

int cmd_resolution(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    ResolutionDegrees res = resolution_degrees(n.lean, opt.steps);
    json payload = lean_json(n.lean);
    payload["steps"] = res.steps;
    emit(opt, payload,
         [&] {
             for (std::size_t s = 0; s < res.steps.size(); ++s) {
                 std::cout << "F" << s << " {" << join(res.steps[s], " ") << "}\n";
             }
         },
         [&] {
             std::cout << "step\tdegrees\n";
             for (std::size_t s = 0; s < res.steps.size(); ++s) {
                 std::cout << s << '\t' << join(res.steps[s], ",") << '\n';
             }
         });
    return 0;
}

int cmd_census(const Options& opt, Int alpha, Int beta) {
    std::vector<CensusTable> tables;
    if (opt.all_pairs) {
        for (Int a = 2; a <= opt.max_sum - 2; ++a) {
            for (Int b = a + 1; a + b <= opt.max_sum; ++b) {
                if (std::gcd(a, b) != 1) continue;
                tables.push_back(census(NumericalSemigroup(a, b)));
            }
        }
    } else {
        tables.push_back(census(NumericalSemigroup(alpha, beta)));
    }

    bool all_ok = true;
    json payload = json::array();
    for (const CensusTable& t : tables) {
        all_ok = all_ok && t.ok();
        json rows = json::array();
        for (const CensusRow& r : t.rows) {
            rows.push_back({{"generator_count", r.generator_count},
                            {"observed", r.observed},
                            {"expected", r.expected}});
        }
        payload.push_back({{"semigroup", {{"alpha", t.alpha}, {"beta", t.beta}}},
                           {"rows", rows},
                           {"total_observed", t.total_observed},
                           {"total_expected", t.total_expected},
                           {"ok", t.ok()}});
    }
    emit(opt, payload,
         [&] {
             for (const CensusTable& t : tables) {
                 std::cout << "<" << t.alpha << "," << t.beta << "> selfdual census\n";
                 for (const CensusRow& r : t.rows) {
                     std::cout << "  " << r.generator_count << " gens: observed "
                               << r.observed << " expected " << r.expected << '\n';
                 }
                 std::cout << "  total " << t.total_observed << " expected "
                           << t.total_expected << (t.ok() ? "  OK" : "  MISMATCH") << '\n';
             }
         },
         [&] {
             std::cout << "alpha\tbeta\tgenerator_count\tobserved\texpected\n";
             for (const CensusTable& t : tables) {
                 for (const CensusRow& r : t.rows) {
                     std::cout << t.alpha << '\t' << t.beta << '\t' << r.generator_count
                               << '\t' << r.observed << '\t' << r.expected << '\n';
                 }
             }
         });
    return all_ok ? 0 : kExitCensusMismatch;
}

int cmd_orbit(const Options& opt, Int alpha, Int beta, const std::vector<Int>& gens) {
    Normalized n = parse_semimodule(alpha, beta, gens);
    PathMatrix start = lean_to_matrix(n.lean);
    std::vector<PathMatrix> orbit;
    std::vector<std::string> labels;
    auto add = [&](PathMatrix m, std::string label) {
        for (const PathMatrix& seen : orbit) {
            if (matrix_equiv(seen, m)) return;
        }
        orbit.push_back(std::move(m));
        labels.push_back(std::move(label));
    };
    PathMatrix current = start;
    for (std::size_t k = 0; k < start.columns(); ++k) {
        add(current, "syz^" + std::to_string(k));
        add(dual_matrix(current), "dual syz^" + std::to_string(k));
        current = syzygy_matrix(current);
    }

    json payload = lean_json(n.lean);
    json entries = json::array();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        MatrixDecode d = matrix_to_lean(n.lean.gamma, orbit[i]);
        entries.push_back({{"op", labels[i]},
                           {"lean", d.lean.gens},
                           {"matrix", {{"top", orbit[i].top}, {"bottom", orbit[i].bottom}}}});
    }
    payload["orbit"] = entries;
    emit(opt, payload,
         [&] {
             for (const auto& e : entries) {
                 std::cout << e["op"].get<std::string>() << ": (";
                 bool first = true;
                 for (const auto& g : e["lean"]) {
                     if (!first) std::cout << ' ';
                     std::cout << g.get<Int>();
                     first = false;
                 }
                 std::cout << ")\n";
             }
             std::cout << "orbit size " << entries.size() << '\n';
         },
         [&] {
             std::cout << "op\tlean\n";
             for (const auto& e : entries) {
                 std::string l;
                 for (const auto& g : e["lean"]) {
                     if (!l.empty()) l += ',';
                     l += std::to_string(g.get<Int>());
                 }
                 std::cout << e["op"].get<std::string>() << '\t' << l << '\n';
             }
         });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations with semimodules over two-generated numerical semigroups"};
    app.require_subcommand(1);

    Options opt;
    Int alpha = 0;
    Int beta = 0;
    std::vector<Int> gens;

    auto add_common = [&](CLI::App* sub, bool with_gens) {
        sub->add_option("--format", opt.format)
            ->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_option("alpha", alpha)->required();
        sub->add_option("beta", beta)->required();
        if (with_gens) sub->add_option("gens", gens)->required()->expected(-1);
    };

    auto* gaps_cmd = app.add_subcommand("gaps", "list the gaps with (a,b) coordinates");
    add_common(gaps_cmd, false);

    auto* lean_cmd = app.add_subcommand("lean", "normalize a generator set");
    add_common(lean_cmd, true);

    auto* dual_cmd = app.add_subcommand("dual", "dual class via the generator formula");
    add_common(dual_cmd, true);
    dual_cmd->add_flag("--check", opt.check, "cross-check against the brute-force oracle");

    auto* syz_cmd = app.add_subcommand("syzygy", "syzygy degrees and class");
    add_common(syz_cmd, true);
    syz_cmd->add_flag("--check", opt.check, "cross-check against the set-definition oracle");

    auto* matrix_cmd = app.add_subcommand("matrix", "two-row matrix of the class");
    add_common(matrix_cmd, true);

    auto* path_cmd = app.add_subcommand("path", "lattice path rendering");
    add_common(path_cmd, true);
    path_cmd->add_option("--svg", opt.svg_file, "write an SVG rendering to FILE");

    auto* res_cmd = app.add_subcommand("resolution", "graded resolution degree table");
    add_common(res_cmd, true);
    res_cmd->add_option("--steps", opt.steps, "number of homological steps");

    auto* census_cmd = app.add_subcommand("census", "selfdual census vs closed forms");
    census_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    census_cmd->add_flag("--all", opt.all_pairs, "all coprime pairs with alpha+beta <= N");
    census_cmd->add_option("--max-sum", opt.max_sum, "bound for --all");
    census_cmd->add_option("alpha", alpha);
    census_cmd->add_option("beta", beta);

    auto* orbit_cmd = app.add_subcommand("orbit", "dihedral orbit of the class");
    add_common(orbit_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidInput;
    }

    try {
        if (gaps_cmd->parsed()) return cmd_gaps(opt, alpha, beta);
        if (lean_cmd->parsed()) return cmd_lean(opt, alpha, beta, gens);
        if (dual_cmd->parsed()) return cmd_dual(opt, alpha, beta, gens);
        if (syz_cmd->parsed()) return cmd_syzygy(opt, alpha, beta, gens);
        if (matrix_cmd->parsed()) return cmd_matrix(opt, alpha, beta, gens);
        if (path_cmd->parsed()) return cmd_path(opt, alpha, beta, gens);
        if (res_cmd->parsed()) return cmd_resolution(opt, alpha, beta, gens);
        if (census_cmd->parsed()) {
            if (opt.all_pairs && opt.max_sum < 5) {
                throw std::invalid_argument("census --all requires --max-sum N with N >= 5");
            }
            if (!opt.all_pairs && (alpha == 0 || beta == 0)) {
                throw std::invalid_argument("census requires alpha and beta (or --all)");
            }
            return cmd_census(opt, alpha, beta);
        }
        if (orbit_cmd->parsed()) return cmd_orbit(opt, alpha, beta, gens);
    } catch (const internal_consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
