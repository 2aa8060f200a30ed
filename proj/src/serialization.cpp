#include "radial/serialization.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace radial {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json to_json(const ConditionReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) samples.push_back({{"expression", s.expression}, {"x", s.x}, {"value", s.value}});
    return {{"superlinear_pos", r.superlinear_pos}, {"superlinear_neg", r.superlinear_neg},
            {"ratio_condition", r.ratio_condition}, {"shape_ok", r.shape_ok},
            {"verdict", r.verdict},                 {"ratio_exponent", r.ratio_exponent},
            {"samples", samples}};
}

Json to_json(const Nonlinearity& nl) {
    Json j{{"kind", to_string(nl.kind())}, {"A", nl.threshold()}};
    if (nl.kind() == NonlinearityKind::PiecewisePower) {
        j["p"] = nl.p();
        j["q"] = nl.q();
    }
    if (nl.kind() == NonlinearityKind::Custom) j["name"] = nl.name();
    return j;
}

Json to_json(const SourceTerm& f) { return {{"kind", to_string(f.kind())}, {"coefficients", f.coefficients()}}; }

Json to_json(const RadialProblem& p) {
    return {{"n", p.dimension()},
            {"lambda", p.lambda()},
            {"M", p.source_norm()},
            {"source", to_json(p.source())},
            {"nonlinearity", to_json(p.nonlinearity())}};
}

Json to_json(const IntegrationStats& s) {
    return {{"steps", s.steps}, {"rejected", s.rejected}, {"rhs_evaluations", s.rhs_evaluations},
            {"atol", s.atol},   {"rtol", s.rtol},         {"t_start", s.t_start}};
}

Json to_json(const SolutionProfile& p, bool with_data) {
    Json j{{"s0", p.s0()}, {"u1", p.terminal()}, {"nodes", p.size()}, {"integrator", to_json(p.stats())}};
    if (with_data) {
        j["t"] = p.grid();
        j["u"] = p.u();
        j["du"] = p.du();
        j["ddu"] = p.ddu();
    }
    return j;
}

SolutionProfile profile_from_json(const Json& j, const RadialProblem& problem) {
    IntegrationStats stats;
    if (j.contains("integrator")) {
        const auto& s = j.at("integrator");
        stats.steps = s.at("steps").get<std::size_t>();
        stats.rejected = s.at("rejected").get<std::size_t>();
        stats.rhs_evaluations = s.at("rhs_evaluations").get<std::size_t>();
        stats.atol = s.at("atol").get<double>();
        stats.rtol = s.at("rtol").get<double>();
        stats.t_start = s.at("t_start").get<double>();
    }
    return {problem,
            j.at("s0").get<double>(),
            j.at("t").get<std::vector<double>>(),
            j.at("u").get<std::vector<double>>(),
            j.at("du").get<std::vector<double>>(),
            j.at("ddu").get<std::vector<double>>(),
            stats};
}

Json to_json(const SolutionSet& set, bool with_profiles) {
    Json sols = Json::array();
    for (const auto& s : set.solutions) {
        Json e{{"s", s.s()},
               {"u1", s.boundary_miss()},
               {"bracket", {s.bracket.lo, s.bracket.hi}},
               {"bisection_steps", s.bisection_steps},
               {"resolution_limited", s.resolution_limited},
               {"residual", residual_norm(s.profile)}};
        if (with_profiles) e["profile"] = to_json(s.profile);
        sols.push_back(std::move(e));
    }
    Json brackets = Json::array();
    for (const auto& b : set.brackets) brackets.push_back({b.lo, b.hi});
    return {{"solutions", sols},
            {"brackets", brackets},
            {"scan", {{"s_lo", set.s_lo}, {"s_hi", set.s_hi}, {"n_scan", set.n_scan}}},
            {"inadmissible", set.inadmissible},
            {"unresolved", set.unresolved}};
}

Json to_json(const ClassificationReport& r) {
    Json zeros = Json::array();
    for (const auto& z : r.zeros)
        zeros.push_back({{"tau", z.tau},
                         {"phi", z.phi_value},
                         {"phi_slope", z.phi_slope},
                         {"u_slope", z.u_slope},
                         {"simple", z.simple},
                         {"tangential", z.tangential},
                         {"among_k_largest", z.among_k_largest}});
    auto points = [](const std::vector<CriticalPoint>& v) {
        Json a = Json::array();
        for (const auto& p : v) a.push_back({{"t", p.t}, {"u", p.u}});
        return a;
    };
    Json j{{"lambda", r.lambda},          {"class", r.class_label},      {"k", r.k},
           {"degenerate", r.degenerate}, {"zeros", zeros},               {"maxima", points(r.maxima)},
           {"minima", points(r.minima)}};
    j["eta"] = r.eta ? Json(*r.eta) : Json(nullptr);
    return j;
}

namespace {

std::string to_string(BoundSense s) {
    switch (s) {
        case BoundSense::Below: return "<";
        case BoundSense::BelowOrEqual: return "<=";
        case BoundSense::Above: return ">";
    }
    return "?";
}

}  // namespace

Json to_json(const BoundsReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json inputs = Json::object();
        for (const auto& [k, v] : e.inputs) inputs[k] = v;
        entries.push_back({{"name", e.name},
                           {"source", e.source},
                           {"sense", to_string(e.sense)},
                           {"lhs", e.lhs},
                           {"rhs", e.rhs},
                           {"margin", e.margin},
                           {"pass", e.pass},
                           {"applicable", e.applicable},
                           {"at", e.at},
                           {"note", e.note},
                           {"inputs", inputs}});
    }
    return {{"lambda", r.lambda}, {"M", r.source_norm}, {"all_pass", r.all_pass()}, {"entries", entries}};
}

Json to_json(const std::vector<Branch>& branches) {
    Json out = Json::array();
    for (const auto& b : branches) {
        Json pts = Json::array();
        for (const auto& p : b.points)
            pts.push_back({{"lambda", p.lambda},
                           {"s", p.s},
                           {"class", p.class_label},
                           {"k", p.k},
                           {"u_max", p.u_max},
                           {"u_min", p.u_min},
                           {"u1", p.boundary_miss},
                           {"resolution_limited", p.resolution_limited}});
        Json j{{"id", b.id}, {"status", to_string(b.status)}, {"points", pts}};
        j["lambda_before_birth"] = b.lambda_before_birth ? Json(*b.lambda_before_birth) : Json(nullptr);
        j["lambda_lost"] = b.lambda_lost ? Json(*b.lambda_lost) : Json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const std::vector<Transition>& transitions) {
    Json out = Json::array();
    for (const auto& t : transitions)
        out.push_back({{"lambda_lo", t.lambda_lo},
                       {"lambda_hi", t.lambda_hi},
                       {"branch", t.branch},
                       {"kind", to_string(t.kind)},
                       {"description", t.description}});
    return out;
}

void write_profile_csv(std::ostream& os, const SolutionProfile& p) {
    os << "t,u,du\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << format_double(p.grid()[i]) << ',' << format_double(p.u()[i]) << ',' << format_double(p.du()[i]) << '\n';
}

SolutionProfile read_profile_csv(std::istream& is, const RadialProblem& problem) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("profile csv: empty input");
    if (line.rfind("t,u,du", 0) != 0) throw std::runtime_error("profile csv: expected header 't,u,du'");
    std::vector<double> t, u, du;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        double values[3];
        for (double& v : values) {
            if (!std::getline(row, cell, ','))
                throw std::runtime_error("profile csv: line " + std::to_string(lineno) + " has fewer than 3 columns");
            char* end = nullptr;
            v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw std::runtime_error("profile csv: line " + std::to_string(lineno) + " is not numeric");
        }
        t.push_back(values[0]);
        u.push_back(values[1]);
        du.push_back(values[2]);
    }
    return SolutionProfile::from_samples(problem, std::move(t), std::move(u), std::move(du));
}

void write_zeros_csv(std::ostream& os, const ClassificationReport& r) {
    os << "tau,phi_slope,u_slope,simple,tangential,among_k_largest\n";
    for (const auto& z : r.zeros)
        os << format_double(z.tau) << ',' << format_double(z.phi_slope) << ',' << format_double(z.u_slope) << ','
           << z.simple << ',' << z.tangential << ',' << z.among_k_largest << '\n';
}

void write_critical_points_csv(std::ostream& os, const ClassificationReport& r) {
    os << "type,t,u\n";
    for (const auto& p : r.maxima) os << "max," << format_double(p.t) << ',' << format_double(p.u) << '\n';
    for (const auto& p : r.minima) os << "min," << format_double(p.t) << ',' << format_double(p.u) << '\n';
}

void write_branches_csv(std::ostream& os, const std::vector<Branch>& branches) {
    os << "branch,lambda,s,k,class,u0,u_max,u_min,status\n";
    for (const auto& b : branches)
        for (const auto& p : b.points)
            os << b.id << ',' << format_double(p.lambda) << ',' << format_double(p.s) << ',' << p.k << ','
               << p.class_label << ',' << format_double(p.s) << ',' << format_double(p.u_max) << ','
               << format_double(p.u_min) << ',' << to_string(b.status) << '\n';
}

std::string bounds_table(const BoundsReport& r) {
    std::ostringstream os;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %16s %16s %16s  %s\n", "name", "lhs", "rhs", "margin", "pass");
    os << buf;
    for (const auto& e : r.entries) {
        if (!e.applicable) {
            std::snprintf(buf, sizeof buf, "%-20s %16s %16s %16s  %s\n", e.name.c_str(), "-", "-", "-", "n/a");
        } else {
            std::snprintf(buf, sizeof buf, "%-20s %16.9g %16.9g %16.9g  %s\n", e.name.c_str(), e.lhs, e.rhs, e.margin,
                          e.pass ? "yes" : "NO");
        }
        os << buf;
    }
    return os.str();
}

}  // namespace radial
