// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "radial/continuation.hpp"
#include "radial/estimates.hpp"
#include "radial/shooting.hpp"

using namespace radial;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const char* id, bool pass, const std::string& what, const std::string& detail) {
    if (!pass) ++failures;
    std::printf("[%s] %-3s %s: %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

const Nonlinearity g25 = Nonlinearity::piecewise_power(2.0, 5.0);

RadialProblem make(double lambda, const SourceTerm& f = SourceTerm::zero()) { return {1, lambda, f, g25}; }

struct Run {
    double lambda;
    std::string source;
    SolutionSet set;
    std::vector<ClassificationReport> reports;
};

Run solve_run(double lambda, const SourceTerm& f, const std::string& name) {
    Run r{lambda, name, solve_all(make(lambda, f)), {}};
    for (const auto& sol : r.set.solutions) r.reports.push_back(classify(sol.profile));
    return r;
}

bool zeros_stable(const SolutionProfile& prof, const ClassificationReport& rep) {
    ClassifySettings fine;
    fine.grid_points = 8192;
    const auto f = classify(prof, fine);
    if (f.k != rep.k || f.zeros.size() != rep.zeros.size()) return false;
    for (std::size_t i = 0; i < f.zeros.size(); ++i)
        if (std::abs(f.zeros[i].tau - rep.zeros[i].tau) > 1e-8) return false;
    return true;
}

// Remark 1 relations on one profile; returns the worst violation (<= 0 is fine).
double remark1_violation(const SolutionProfile& prof, const ClassificationReport& rep) {
    const auto& pb = prof.problem();
    double worst = -INFINITY;
    for (const auto& b : rep.maxima)
        if (b.u >= 0.0)
            worst = std::max(worst, pb.nonlinearity().inverse_plus(pb.lambda() + pb.source().value(b.t)) - b.u - 1e-6);
    for (const auto& a : rep.minima)
        if (a.u > 0.0)
            worst = std::max(worst, a.u - pb.nonlinearity().inverse_plus(pb.lambda() + pb.source().value(a.t)) - 1e-6);
    return worst;
}

}  // namespace

int main() {
    std::printf("acceptance: p = 2, q = 5, n = 1 unless stated\n\n");

    // 1. integrator exactness
    {
        const auto t0 = Clock::now();
        const RadialProblem p(3, 6.0, SourceTerm::zero(), Nonlinearity::zero());
        double err = 0.0;
        for (double s0 : {-1.0, 0.0, 1.0, 2.5}) err = std::max(err, std::abs(integrate(s0, p).terminal() - (s0 + 1.0)));
        const double sec = seconds_since(t0);
        report("1", err <= 1e-8 && sec < 1.0, "integrator exactness",
               fmt("max terminal error %.2e <= 1e-8, %.3f s < 1 s", err, sec));
    }

    // 2. condition verification
    {
        const auto t0 = Clock::now();
        const auto a = verify_conditions(g25);
        const auto b = verify_conditions(Nonlinearity::piecewise_power(3.0, 3.0));
        const double sec = seconds_since(t0);
        report("2", a.verdict && !b.ratio_condition && sec < 1.0, "condition verification",
               fmt("(2,5) verdict %s, (3,3) ratio_condition %s, %.3f s < 1 s", a.verdict ? "true" : "false",
                   b.ratio_condition ? "true" : "false", sec));
    }

    // 3. solution finding at lambda = 100
    std::vector<std::pair<SolutionProfile, ClassificationReport>> all;  // every computed solution
    {
        const auto t0 = Clock::now();
        const auto p = make(100.0);
        const auto set = solve_all(p, -150.0, 10.0, 2000);
        const double sec = seconds_since(t0);
        oracle::Model m;
        m.lambda = 100.0;
        const auto ref = oracle::solutions(m, -150.0, 10.0);
        bool match = ref.size() == set.solutions.size();
        double worst_miss = 0.0, worst_res = 0.0, worst_ds = 0.0;
        for (std::size_t i = 0; i < set.solutions.size(); ++i) {
            const auto& sol = set.solutions[i];
            worst_miss = std::max(worst_miss, std::abs(sol.boundary_miss()));
            worst_res = std::max(worst_res, residual_norm(sol.profile));
            if (match) worst_ds = std::max(worst_ds, std::abs(sol.s() - ref[i]));
            all.emplace_back(sol.profile, classify(sol.profile));
        }
        const bool tight = worst_miss <= 1e-9;
        const bool residual = worst_res <= 1e-5;
        match = match && worst_ds <= 1e-6;
        const bool count = set.solutions.size() >= 2;
        std::string found;
        for (const auto& sol : set.solutions) found += fmt(" %.12f (%s)", sol.s(), classify(sol.profile).class_label.c_str());
        report("3", count && tight && residual && match && sec < 60.0, "solution finding at lambda = 100",
               fmt("%zu admissible solution(s) [need >= 2]:%s; |u(1)| %.1e <= 1e-9; residual %.1e <= 1e-5; "
                   "oracle count %zu, max |ds| %.1e <= 1e-6; %.2f s < 60 s",
                   set.solutions.size(), found.c_str(), worst_miss, worst_res, ref.size(), worst_ds, sec));
    }

    // runs shared by criteria 4 to 9
    std::vector<Run> runs;
    for (double lambda : {50.0, 100.0, 200.0, 400.0}) {
        runs.push_back(solve_run(lambda, SourceTerm::zero(), "f=0"));
        runs.push_back(solve_run(lambda, SourceTerm::cosine({0.0, 0.5}), "f=0.5cos(pi t)"));
    }
    std::vector<Run> nodal;
    for (double lambda : {450.0, 500.0, 600.0, 800.0}) {
        nodal.push_back(solve_run(lambda, SourceTerm::zero(), "f=0"));
        nodal.push_back(solve_run(lambda, SourceTerm::cosine({0.0, 0.5}), "f=0.5cos(pi t)"));
    }
    for (const auto* group : {&runs, &nodal})
        for (const auto& r : *group)
            for (std::size_t i = 0; i < r.set.solutions.size(); ++i) all.emplace_back(r.set.solutions[i].profile, r.reports[i]);

    const auto sweep_t0 = Clock::now();
    const auto sweep_result = sweep(make(50.0), 50.0, 400.0, 16);
    const double sweep_sec = seconds_since(sweep_t0);
    std::vector<std::pair<SolutionProfile, ClassificationReport>> swept;
    for (const auto& set : sweep_result.sets)
        for (const auto& sol : set.solutions) swept.emplace_back(sol.profile, classify(sol.profile));

    // 4. classification parity
    {
        int checked = 0, odd = 0, degenerate = 0, unstable = 0;
        auto check = [&](const SolutionProfile& prof, const ClassificationReport& rep) {
            ++checked;
            if (rep.k % 2 != 0) ++odd;
            if (rep.degenerate || std::any_of(rep.zeros.begin(), rep.zeros.end(), [](const ZeroRecord& z) { return !z.simple; }))
                ++degenerate;
            if (!zeros_stable(prof, rep)) ++unstable;
        };
        const auto crit3 = solve_all(make(100.0), -150.0, 10.0, 2000);
        for (const auto& sol : crit3.solutions) check(sol.profile, classify(sol.profile));
        for (const auto& [prof, rep] : swept) check(prof, rep);
        int checked_nodal = 0, odd_nodal = 0, bad_nodal = 0;
        for (const auto& r : nodal)
            for (std::size_t i = 0; i < r.reports.size(); ++i) {
                ++checked_nodal;
                if (r.reports[i].k % 2) ++odd_nodal;
                if (r.reports[i].degenerate || !zeros_stable(r.set.solutions[i].profile, r.reports[i])) ++bad_nodal;
            }
        report("4", odd == 0 && degenerate == 0 && unstable == 0 && checked > 0, "classification parity",
               fmt("%d solutions (lambda = 100 and sweep [50,400]): %d odd k, %d non-simple, %d unstable under grid "
                   "doubling; also %d sign-changing-range solutions at lambda 450..800: %d odd, %d degenerate/unstable",
                   checked, odd, degenerate, unstable, checked_nodal, odd_nodal, bad_nodal));
    }

    // 5. a priori bounds
    {
        int entries = 0, failed = 0;
        double min_margin = INFINITY;
        for (const auto& r : runs)
            for (std::size_t i = 0; i < r.reports.size(); ++i)
                for (const auto& e : check_extrema_bounds(r.reports[i], r.set.solutions[i].profile.problem())) {
                    ++entries;
                    if (!e.pass || !(e.margin > 0.0)) ++failed;
                    min_margin = std::min(min_margin, e.margin);
                }
        std::size_t sols = 0;
        for (const auto& r : runs) sols += r.set.solutions.size();
        report("5", failed == 0 && entries > 0, "a priori extrema bounds",
               fmt("%d entries over %zu solutions at lambda in {50,100,200,400} x {f=0, f=0.5cos(pi t)}, %d failed, "
                   "smallest margin %.4g > 0",
                   entries, sols, failed, min_margin));
    }

    // 6, 7. derivative bound and Sturm gap at the largest zero
    auto lemma2 = [](const std::vector<Run>& group, int& sign_changing, int& failed, bool& monotone,
                     std::string& margins) {
        std::map<double, double> margin_by_lambda;  // smallest margin over solutions and sources
        for (const auto& r : group)
            for (std::size_t i = 0; i < r.reports.size(); ++i) {
                if (r.reports[i].k == 0) continue;
                ++sign_changing;
                const auto entries = check_zero_derivative_bounds(r.reports[i], r.set.solutions[i].profile.problem());
                const auto& largest = entries.front();
                if (!largest.pass) ++failed;
                auto [it, fresh] = margin_by_lambda.emplace(r.lambda, largest.margin);
                if (!fresh) it->second = std::min(it->second, largest.margin);
            }
        monotone = true;
        double prev = -INFINITY;
        for (const auto& [lam, m] : margin_by_lambda) {
            monotone = monotone && m >= prev;
            prev = m;
            margins += fmt(" %g:%.4g", lam, m);
        }
    };
    auto sturm = [](const std::vector<Run>& group, int& applicable, int& failed, double& worst_ratio) {
        for (const auto& r : group)
            for (std::size_t i = 0; i < r.reports.size(); ++i) {
                const auto e = check_sturm_gap(r.reports[i], r.set.solutions[i].profile);
                if (!e.applicable) continue;
                ++applicable;
                if (!e.pass) ++failed;
                worst_ratio = std::max(worst_ratio, e.lhs / e.rhs);
            }
    };
    {
        int sc = 0, failed = 0;
        bool monotone = true;
        std::string margins;
        lemma2(runs, sc, failed, monotone, margins);
        report("6", failed == 0 && monotone, "derivative bound at the largest zero",
               sc == 0 ? std::string("vacuous: no sign-changing solution exists at lambda in {50,100,200,400} "
                                     "(every solution is Z0); see 6b")
                       : fmt("%d sign-changing solutions, %d failed, margins by lambda:%s", sc, failed, margins.c_str()));
        int sc_b = 0, failed_b = 0;
        bool monotone_b = true;
        std::string margins_b;
        lemma2(nodal, sc_b, failed_b, monotone_b, margins_b);
        report("6b", sc_b > 0 && failed_b == 0 && monotone_b, "derivative bound, supplementary lambda 450..800",
               fmt("%d sign-changing solutions, %d failed, smallest margin by lambda (non-decreasing: %s):%s", sc_b,
                   failed_b, monotone_b ? "yes" : "no", margins_b.c_str()));
    }
    {
        int applicable = 0, failed = 0;
        double ratio = 0.0;
        sturm(runs, applicable, failed, ratio);
        report("7", failed == 0, "Sturm gap",
               applicable == 0 ? std::string("vacuous: no level crossing after a zero of phi at lambda in "
                                             "{50,100,200,400}; see 7b")
                               : fmt("%d applicable, %d failed, max gap/bound %.3f", applicable, failed, ratio));
        int applicable_b = 0, failed_b = 0;
        double ratio_b = 0.0;
        sturm(nodal, applicable_b, failed_b, ratio_b);
        report("7b", applicable_b > 0 && failed_b == 0, "Sturm gap, supplementary lambda 450..800",
               fmt("%d applicable, %d failed, max gap/bound %.3f < 1", applicable_b, failed_b, ratio_b));
    }

    // 8. auxiliary inequalities
    {
        int eq8 = 0, eq8_failed = 0;
        double eq8_ratio = 0.0;
        for (const auto* group : {&runs, &nodal})
            for (const auto& r : *group) {
                if (r.source == "f=0") continue;
                for (const auto& sol : r.set.solutions) {
                    const auto e = check_auxiliary_inequalities(sol.profile, sol.profile.problem())[1];
                    ++eq8;
                    if (!e.pass) ++eq8_failed;
                    eq8_ratio = std::max(eq8_ratio, e.lhs / e.rhs);
                }
            }
        const auto p = make(100.0);
        const double lhs = mean_value_integral(p, 0.0, 1.0);
        const double ref = oracle::integral([](double u) { return u * u - 100.0; }, 10.0, std::sqrt(101.0));
        const double rhs = mean_value_bound(p, 0.0, 1.0);
        const auto gamma = inverse_ratio_gamma(g25, 1.0, 4.0);
        const bool ok = eq8 > 0 && eq8_failed == 0 && std::abs(lhs - ref) <= 1e-9 && lhs <= rhs &&
                        std::abs(gamma.gamma - 2.0) <= 1e-3;
        report("8", ok, "auxiliary inequalities",
               fmt("parts bound on %d cosine-source solutions, %d failed, max lhs/rhs %.2e; mean-value lhs %.12f vs "
                   "Gauss-Kronrod %.12f (|d| %.1e <= 1e-9) <= rhs %.6f; gamma %.6f = 2 +- 0.001",
                   eq8, eq8_failed, eq8_ratio, lhs, ref, std::abs(lhs - ref), rhs, gamma.gamma));
    }

    // 9. Remark 1 sign structure
    {
        int checked = 0, failed = 0;
        for (const auto* group : {&all, &swept})
            for (const auto& [prof, rep] : *group) {
                ++checked;
                if (remark1_violation(prof, rep) > 0.0) ++failed;
            }
        report("9", failed == 0 && checked > 0, "sign structure at extrema",
               fmt("%d solutions, %d violations beyond 1e-6", checked, failed));
    }

    // 10. sweep stability
    {
        int changes = 0;
        for (const auto& t : detect_transitions(sweep_result.branches))
            if (t.kind == TransitionKind::ClassChange) ++changes;
        int alive = 0;
        for (const auto& b : sweep_result.branches)
            if (b.status == BranchStatus::Alive) ++alive;
        report("10", changes == 0 && sweep_sec < 600.0, "sweep stability",
               fmt("lambda in [50,400], 16 geometric steps: %zu branch(es), %d alive, %d class changes, %.1f s < 600 s",
                   sweep_result.branches.size(), alive, changes, sweep_sec));
    }

    std::printf("\n%d criterion line(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
