// Acceptance suite: runs every acceptance criterion end to end against the
// shipped fixture files and randomized instances, printing one line per
// criterion. All comparisons are exact; the runtime bounds are checked with a
// wall clock.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "pwlvo/io.hpp"
#include "pwlvo/oracle.hpp"
#include "pwlvo/solver.hpp"
#include "support/fixtures.hpp"
#include "support/helpers.hpp"
#include "support/random_instances.hpp"

using namespace pwlvo;
using namespace pwlvo::testing;

namespace {

int g_failures = 0;

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << "\n";
    if (!pass) ++g_failures;
}

struct LoadedFixtures {
    Problem a, b;
    GridSpec grid_a, grid_b;
};

LoadedFixtures load(const std::string& fixture_dir) {
    const io::ProblemFile fa = io::load_problem_file(fixture_dir + "/fixture_a.json");
    const io::ProblemFile fb = io::load_problem_file(fixture_dir + "/fixture_b.json");
    if (!fa.grid || !fb.grid) throw parse_error("fixture files must carry verification grids");
    return {fa.problem, fb.problem, *fa.grid, *fb.grid};
}

void criterion_1(const LoadedFixtures& fx) {
    const auto start = std::chrono::steady_clock::now();
    const SolveReport report_a = solve(fx.a);
    const double elapsed = seconds_since(start);
    bool ok = report_a.wsol.has_value();
    ok = ok && decomposition_equal(report_a.sol, fixture_a_sol());
    ok = ok && decomposition_equal(*report_a.wsol, fixture_a_wsol());
    ok = ok && elapsed < 5.0;
    report(1, ok,
           "convex fixture solution sets match the worked example (" +
               std::to_string(elapsed) + " s)");
}

void criterion_2(const LoadedFixtures& fx) {
    const auto start = std::chrono::steady_clock::now();
    const SolveReport report_b = solve(fx.b);
    const double elapsed = seconds_since(start);
    bool ok = report_b.wsol.has_value();
    ok = ok && decomposition_equal(report_b.sol, fixture_b_sol());
    ok = ok && decomposition_equal(*report_b.wsol, fixture_b_wsol());
    ok = ok && !report_b.sol_closed;                      // a strict row survives
    ok = ok && !report_b.sol_connectivity.connected;      // disconnected
    ok = ok && !report_b.wsol_connectivity.connected;
    ok = ok && report_b.wsol_connectivity.components.size() == 2;
    ok = ok && elapsed < 5.0;
    report(2, ok,
           "nonconvex fixture is disconnected and non-closed as expected (" +
               std::to_string(elapsed) + " s)");
}

void criterion_3(const LoadedFixtures& fx) {
    const auto start_a = std::chrono::steady_clock::now();
    const bool verdict_a = is_k_function(fx.a.f, fx.a.feasible, fx.a.cone).yes;
    const double elapsed_a = seconds_since(start_a);
    const auto start_b = std::chrono::steady_clock::now();
    const bool verdict_b = is_k_function(fx.b.f, fx.b.feasible, fx.b.cone).yes;
    const double elapsed_b = seconds_since(start_b);
    const bool ok = verdict_a && !verdict_b && elapsed_a < 1.0 && elapsed_b < 1.0;
    report(3, ok,
           "K-function verdicts: fixture A yes, fixture B no (" + std::to_string(elapsed_a) +
               " s / " + std::to_string(elapsed_b) + " s)");
}

void criterion_4(const LoadedFixtures& fx) {
    const RatVec u = vecq({"-5/4", "1"});
    const SolveReport report_a = solve(fx.a);
    bool ok = is_weakly_efficient(u, fx.a) && !is_efficient(u, fx.a);
    ok = ok && report_a.wsol.has_value() && region_contains(*report_a.wsol, u);
    ok = ok && !region_contains(report_a.sol, u);
    report(4, ok, "the point (-5/4, 1) is weakly efficient but not efficient in both routes");
}

void criterion_5(const LoadedFixtures& fx) {
    const auto start = std::chrono::steady_clock::now();
    const CrosscheckResult ra = grid_crosscheck(fx.a, solve(fx.a), fx.grid_a);
    const CrosscheckResult rb = grid_crosscheck(fx.b, solve(fx.b), fx.grid_b);
    const double elapsed = seconds_since(start);
    const bool ok = ra.mismatches.empty() && rb.mismatches.empty() && ra.checked > 0 &&
                    rb.checked > 0 && elapsed < 60.0;
    report(5, ok,
           "oracle cross-validation clean on both fixtures, " +
               std::to_string(ra.checked + rb.checked) + " points (" + std::to_string(elapsed) +
               " s)");
}

void criterion_6() {
    std::mt19937_64 rng(20250809);
    int solved = 0, skipped = 0;
    int failures = 0;
    std::string first_failure;
    for (int it = 0; it < 50; ++it) {
        const Problem p = random_problem(rng);
        try {
            const SolveReport full = solve(p, WeakMethod::Paper);

            // (a) the efficient solution set sits inside the weak one
            if (full.wsol.has_value()) {
                for (const SemiClosedPolyhedron& piece : full.sol.pieces) {
                    if (!region_covers(*full.wsol, piece).covered) {
                        ++failures;
                        first_failure = "sol not inside wsol at instance " + std::to_string(it);
                        break;
                    }
                }
            }

            const std::vector<VPolyhedron> ms = image_pieces(p);
            bool any = false;
            for (const VPolyhedron& m : ms) any = any || !m.is_empty();
            if (!any) {
                ++skipped;
                continue;
            }

            // (b) frontiers nest in image space
            const FrontierDecomposition eff = efficient_frontier(ms, p.cone);
            const FrontierDecomposition weak = weak_frontier_paper(ms, p.cone);
            for (const SemiClosedPolyhedron& piece : eff.image_pieces.pieces) {
                if (!region_covers(weak.image_pieces, piece).covered) {
                    ++failures;
                    first_failure = "frontier not inside weak frontier at instance " +
                                    std::to_string(it);
                    break;
                }
            }

            // (c) quotient reduction keeps the efficient solution set
            const SolveReport reduced = solve(quotient_reduce(p), WeakMethod::Paper);
            if (!decomposition_equal(full.sol, reduced.sol)) {
                ++failures;
                first_failure = "quotient reduction changed sol at instance " + std::to_string(it);
            }

            // (d) the two weak-frontier routes agree
            const Region generic = weak_frontier_generic(ms, p.cone);
            if (!decomposition_equal(weak.image_pieces, generic)) {
                ++failures;
                first_failure = "weak routes disagree at instance " + std::to_string(it);
            }

            // (e) convex problems have closed, connected solution sets
            if (full.convex) {
                if (!full.sol_closed || !full.sol_connectivity.connected) {
                    ++failures;
                    first_failure = "convex instance " + std::to_string(it) +
                                    " lost closedness or connectivity";
                }
                if (full.wsol.has_value() && !full.wsol_connectivity.connected) {
                    ++failures;
                    first_failure = "convex instance " + std::to_string(it) +
                                    " has a disconnected weak set";
                }
            }
            ++solved;
        } catch (const std::exception& e) {
            ++failures;
            first_failure = std::string("exception at instance ") + std::to_string(it) + ": " +
                            e.what();
        }
        if (failures > 0) break;
    }
    const bool ok = failures == 0 && solved >= 40;
    report(6, ok,
           "randomized property suite over 50 instances (" + std::to_string(solved) +
               " solved, " + std::to_string(skipped) + " empty-image)" +
               (failures ? ": " + first_failure : ""));
}

void criterion_7() {
    std::mt19937_64 rng(424242);
    int failures = 0;
    const std::vector<OrderingCone> cones = {
        build_cone(2, {vec({1, 0}), vec({0, 1})}),
        build_cone(2, {vec({2, 0})}),
        build_cone(3, {vec({1, 0, 0}), vec({0, 3, 0}), vec({1, 1, 0})}),
        build_cone(3, {vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0})}),
    };
    for (const OrderingCone& K : cones) {
        // translation invariance on 100 sampled pairs per cone
        std::vector<RatVec> ws, ks;
        for (int it = 0; it < 100; ++it) {
            RatVec w(K.dim), k(K.dim);
            for (Rat& x : w) x = small_rat(rng);
            for (Rat& x : k) x = small_rat(rng, -3, 0);
            ws.push_back(std::move(w));
            if (in_cone(K, k)) ks.push_back(std::move(k));
        }
        if (!translation_invariance_check(K, ws, ks)) ++failures;

        const Region pieces = k_minus_l_pieces(K);
        for (const RatVec& y : grid_points(K.dim, -2, 2, K.dim == 2 ? 6 : 4)) {
            if (region_contains(pieces, y) != in_k_minus_l(K, y)) ++failures;
            if (quotient_check(K, y) != in_k_minus_l(K, y)) ++failures;
            if (in_int(K, y) && !in_k_minus_l(K, y)) ++failures;
        }
    }
    report(7, failures == 0,
           "cone algebra: translation invariance, strict-piece decomposition, quotient test" +
               (failures ? std::string(" (") + std::to_string(failures) + " failures)" : ""));
}

void criterion_8() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> dims(1, 3);
    std::uniform_int_distribution<int> nrows(1, 6);
    std::uniform_int_distribution<int> relpick(0, 5);
    int failures = 0;

    for (int it = 0; it < 50; ++it) {
        const std::size_t n = static_cast<std::size_t>(dims(rng));
        HPolyhedron P;
        P.dim = n;
        const int k = nrows(rng);
        for (int i = 0; i < k; ++i) {
            LinConstraint c;
            c.coeffs.resize(n);
            for (Rat& x : c.coeffs) x = entry(rng);
            c.rhs = entry(rng);
            c.rel = relpick(rng) == 0 ? Rel::EQ : Rel::LE;
            if (c.rel == Rel::EQ)
                P.equalities.push_back(std::move(c));
            else
                P.inequalities.push_back(std::move(c));
        }
        const HPolyhedron back = to_halfspaces(to_generators(P));
        if (!inclusion_check(P, back) || !inclusion_check(back, P)) ++failures;
    }

    for (int it = 0; it < 50; ++it) {
        HPolyhedron A = box(2, 2), B = box(2, 1);
        A.inequalities.push_back({{Rat(entry(rng)), Rat(entry(rng))}, Rat(entry(rng) + 2), Rel::LE});
        B.inequalities.push_back({{Rat(entry(rng)), Rat(entry(rng))}, Rat(entry(rng) + 2), Rel::LE});
        const VPolyhedron VA = to_generators(A), VB = to_generators(B);
        if (VA.is_empty() || VB.is_empty()) continue;
        const HPolyhedron SH = to_halfspaces(minkowski_sum(VA, VB));
        for (const RatVec& pa : VA.points)
            for (const RatVec& pb : VB.points)
                if (!contains(SH, add(pa, pb))) ++failures;
        if (!contains(SH, add(relint_point(VA), relint_point(VB)))) ++failures;
    }
    report(8, failures == 0,
           "polyhedron round trips and Minkowski membership on random systems" +
               (failures ? std::string(" (") + std::to_string(failures) + " failures)" : ""));
}

}  // namespace

int main(int argc, char** argv) {
    const std::string fixture_dir = argc > 1 ? argv[1] : "fixtures";
    LoadedFixtures fx;
    try {
        fx = load(fixture_dir);
    } catch (const std::exception& e) {
        std::cerr << "cannot load fixtures from '" << fixture_dir << "': " << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    criterion_1(fx);
    criterion_2(fx);
    criterion_3(fx);
    criterion_4(fx);
    criterion_5(fx);
    criterion_6();
    criterion_7();
    criterion_8();

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << seconds_since(start) << " s total";
    if (g_failures) std::cout << ", " << g_failures << " criterion(s) failed";
    std::cout << ")\n";
    return g_failures == 0 ? 0 : 1;
}
