// Batch front end: check, solve and verify piecewise linear vector
// optimization problems stored as JSON files.
//
// Exit codes: 0 ok, 1 parse error, 2 structural failure, 3 weak-frontier
// method disagreement, 4 verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pwlvo/io.hpp"
#include "pwlvo/oracle.hpp"
#include "pwlvo/pwl.hpp"
#include "pwlvo/solver.hpp"

namespace {

using namespace pwlvo;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitStructural = 2;
constexpr int kExitMethodDisagreement = 3;
constexpr int kExitVerifyMismatch = 4;

std::string render_expr(const RatVec& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const bool first = out.empty();
        const Rat mag = abs(coeffs[i]);
        out += first ? (coeffs[i] < 0 ? "-" : "") : (coeffs[i] < 0 ? " - " : " + ");
        if (mag != 1) out += rat_to_string(mag) + "*";
        out += "t" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string render_row(const LinConstraint& c) {
    const char* rel = c.rel == Rel::EQ ? " = " : (c.rel == Rel::LE ? " <= " : " < ");
    return render_expr(c.coeffs) + rel + rat_to_string(c.rhs);
}

std::string render_piece(const SemiClosedPolyhedron& p) {
    std::string out = "{";
    bool first = true;
    for (const LinConstraint& c : p.all_rows()) {
        if (!first) out += ", ";
        out += render_row(c);
        first = false;
    }
    return out + "}";
}

void print_region(std::ostream& os, const std::string& name, const Region& r) {
    os << name << ": " << r.pieces.size() << " piece(s)\n";
    for (std::size_t i = 0; i < r.pieces.size(); ++i)
        os << "  [" << i << "] " << render_piece(r.pieces[i]) << "\n";
}

RatVec parse_point_list(const std::string& text, char sep) {
    RatVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(parse_rat(item));
    return out;
}

GridSpec parse_grid_flags(const std::string& grid_text, const std::string& steps_text) {
    GridSpec g;
    std::stringstream ss(grid_text);
    std::string axis;
    while (std::getline(ss, axis, ';')) {
        const RatVec pair = parse_point_list(axis, ',');
        if (pair.size() != 2) throw parse_error("grid axes are 'lo,hi' pairs");
        g.box.emplace_back(pair[0], pair[1]);
    }
    std::stringstream st(steps_text);
    std::string step;
    while (std::getline(st, step, ',')) {
        const long v = std::stol(step);
        if (v <= 0) throw parse_error("steps must be positive");
        g.steps.push_back(static_cast<std::size_t>(v));
    }
    if (g.box.size() != g.steps.size()) throw parse_error("grid and steps lengths differ");
    return g;
}

int run_check(const std::string& path, bool quiet) {
    const io::ProblemFile file = io::load_problem_file(path);
    const Problem& p = file.problem;

    const CoverCheck cover = validate_cover(p.f);
    if (!cover.ok) {
        std::cout << "cover: FAILED, witness outside every piece: "
                  << render_expr(cover.gap_witness) << " = (";
        for (std::size_t i = 0; i < cover.gap_witness.size(); ++i)
            std::cout << (i ? ", " : "") << rat_to_string(cover.gap_witness[i]);
        std::cout << ")\n";
        return kExitStructural;
    }
    const ConsistencyCheck consistency = validate_consistency(p.f);
    if (!consistency.ok) {
        std::cout << "consistency: FAILED, pieces " << consistency.piece_k << " and "
                  << consistency.piece_l << " disagree at (";
        for (std::size_t i = 0; i < consistency.witness.size(); ++i)
            std::cout << (i ? ", " : "") << rat_to_string(consistency.witness[i]);
        std::cout << ")\n";
        return kExitStructural;
    }

    if (!quiet) {
        std::cout << "cover: ok\nconsistency: ok\n";
        std::cout << "pieces: " << p.f.pieces.size() << ", source dim " << p.f.source_dim
                  << ", image dim " << p.f.image_dim << "\n";
        std::cout << "cone rows: " << p.cone.rows.size() << ", lineality dim "
                  << p.cone.lineality_space.dim() << ", interior "
                  << (interior_nonempty(p.cone) ? "nonempty" : "empty") << "\n";
    }
    try {
        const KFunctionCheck k = is_k_function(p.f, p.feasible, p.cone);
        std::cout << "K-function: " << (k.yes ? "yes" : "no") << "\n";
    } catch (const empty_feasible_error&) {
        std::cout << "K-function: yes (empty feasible set)\n";
    }
    return kExitOk;
}

int run_solve(const std::string& path, const std::string& method_name,
              const std::string& format, const std::string& out_path, bool quiet, bool stats) {
    const io::ProblemFile file = io::load_problem_file(path);
    const Problem& p = file.problem;

    const CoverCheck cover = validate_cover(p.f);
    if (!cover.ok) {
        std::cerr << "error: piece domains do not cover the source space\n";
        return kExitStructural;
    }
    const ConsistencyCheck consistency = validate_consistency(p.f);
    if (!consistency.ok) {
        std::cerr << "error: piece maps disagree on an overlap\n";
        return kExitStructural;
    }

    const WeakMethod method = method_name == "generic" ? WeakMethod::Generic
                              : method_name == "both"  ? WeakMethod::Both
                                                       : WeakMethod::Paper;
    const SolveReport report = solve(p, method);
    const io::json doc = io::report_json(report);

    std::ostringstream rendered;
    if (format == "json") {
        rendered << doc.dump(2) << "\n";
    } else {
        rendered << "convex: " << (report.convex ? "yes" : "no") << "\n";
        print_region(rendered, "sol", report.sol);
        rendered << "sol closed: " << (report.sol_closed ? "yes" : "no (strict rows survive)")
                 << "\n";
        rendered << "sol connected: " << (report.sol_connectivity.connected ? "yes" : "no")
                 << (report.sol_connectivity.certified ? "" : " (not certified)") << ", "
                 << report.sol_connectivity.components.size() << " component(s)\n";
        if (report.wsol.has_value()) {
            print_region(rendered, "wsol", *report.wsol);
            rendered << "wsol connected: "
                     << (report.wsol_connectivity.connected ? "yes" : "no") << ", "
                     << report.wsol_connectivity.components.size() << " component(s)\n";
        } else {
            rendered << "wsol: omitted (" << report.wsol_omitted_reason << ")\n";
        }
        if (stats) {
            rendered << "stats: " << report.stats.lp_count << " LP solves, "
                     << report.stats.image_piece_count << " image piece(s)\n";
        }
    }

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return kExitParse;
        }
        out << rendered.str();
        if (!quiet) std::cout << "report written to " << out_path << "\n";
    } else {
        std::cout << rendered.str();
    }
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& grid_text,
               const std::string& steps_text, bool quiet, bool corrupt) {
    const io::ProblemFile file = io::load_problem_file(path);
    const Problem& p = file.problem;

    GridSpec grid;
    if (!grid_text.empty()) {
        grid = parse_grid_flags(grid_text, steps_text);
    } else if (file.grid.has_value()) {
        grid = *file.grid;
    } else {
        std::cerr << "error: no grid given (use --grid/--steps or a 'grid' entry)\n";
        return kExitParse;
    }
    if (grid.box.size() != p.f.source_dim) {
        std::cerr << "error: grid dimension mismatch\n";
        return kExitParse;
    }

    SolveReport report = solve(p);
    if (corrupt) {
        // negative-control hook: claim every feasible point is efficient
        report.sol = Region::single(SemiClosedPolyhedron::whole(p.f.source_dim));
    }

    const CrosscheckResult res = grid_crosscheck(p, report, grid);
    if (!quiet || !res.mismatches.empty())
        std::cout << "checked " << res.checked << " feasible grid point(s), "
                  << res.mismatches.size() << " mismatch(es)\n";
    if (!res.mismatches.empty()) {
        std::cout << io::crosscheck_json(res).dump(2) << "\n";
        return kExitVerifyMismatch;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for piecewise linear vector optimization problems"};
    app.require_subcommand(1);

    std::string path, method = "paper", format = "text", out_path, grid_text, steps_text;
    bool quiet = false, stats = false, corrupt = false;

    CLI::App* check = app.add_subcommand("check", "validate a problem file");
    check->add_option("file", path, "problem JSON file")->required();
    check->add_flag("--quiet", quiet, "print only the K-function verdict");

    CLI::App* solve_cmd = app.add_subcommand("solve", "compute the solution decompositions");
    solve_cmd->add_option("file", path, "problem JSON file")->required();
    solve_cmd->add_option("--method", method, "weak frontier route")
        ->check(CLI::IsMember({"paper", "generic", "both"}));
    solve_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    solve_cmd->add_option("--out", out_path, "write the report to a file");
    solve_cmd->add_flag("--quiet", quiet, "suppress progress chatter");
    solve_cmd->add_flag("--stats", stats, "include solver statistics");

    CLI::App* verify = app.add_subcommand("verify", "cross-check the solver against the oracle");
    verify->add_option("file", path, "problem JSON file")->required();
    verify->add_option("--grid", grid_text, "per-axis bounds 'lo,hi;lo,hi'");
    verify->add_option("--steps", steps_text, "per-axis step counts 'n,m'");
    verify->add_flag("--quiet", quiet, "print only failures");
    verify->add_flag("--corrupt-sol", corrupt, "testing hook: corrupt the decomposition first");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(path, quiet);
        if (solve_cmd->parsed()) return run_solve(path, method, format, out_path, quiet, stats);
        if (verify->parsed()) return run_verify(path, grid_text, steps_text, quiet, corrupt);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cone_error& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const method_disagreement_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMethodDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    }
    return kExitOk;
}
