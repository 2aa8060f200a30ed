#include "radial/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "radial/errors.hpp"

namespace radial {

std::vector<std::pair<std::string, std::vector<std::string>>> config_schema() {
    return {
        {"nonlinearity", {"kind", "p", "q", "A"}},
        {"source", {"kind", "coefficients"}},
        {"problem", {"n", "lambda", "lambda_lo", "lambda_hi", "steps"}},
        {"solver",
         {"atol", "rtol", "t_start", "overflow_guard", "max_step", "n_scan", "s_lo", "s_hi", "boundary_tol",
          "sweep_scan", "warm_scan", "threads"}},
        {"bounds", {"B", "delta", "m1", "m2", "a", "b", "lambda_min"}},
        {"output", {"directory", "formats"}},
    };
}

namespace {

struct RawValue {
    std::string text;
    bool is_list = false;
    std::vector<std::string> items;
    int line = 0;
};

std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
        return s.substr(1, s.size() - 2);
    return s;
}

using RawConfig = std::map<std::string, RawValue>;  // "section.key" -> value

RawConfig tokenize(const std::string& text) {
    const auto schema = config_schema();
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header", line, lineno);
            section = trim(line.substr(1, line.size() - 2));
            const bool known = std::any_of(schema.begin(), schema.end(), [&](const auto& s) { return s.first == section; });
            if (!known)
                throw ConfigError("line " + std::to_string(lineno) + ": unknown section '" + section + "'", section,
                                  lineno);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'", section, lineno);
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside of any section", section, lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string path = section + "." + key;
        const auto& keys = std::find_if(schema.begin(), schema.end(), [&](const auto& s) { return s.first == section; })->second;
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "' in [" + section + "]",
                              path, lineno);
        if (raw.count(path))
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + path + "'", path, lineno);
        if (value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": missing value for '" + path + "'", path, lineno);
        RawValue rv;
        rv.line = lineno;
        rv.text = value;
        if (value.front() == '[') {
            if (value.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": unterminated list for '" + path + "'", path,
                                  lineno);
            rv.is_list = true;
            std::istringstream items(value.substr(1, value.size() - 2));
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) rv.items.push_back(unquote(item));
            }
        } else {
            rv.text = unquote(value);
        }
        raw.emplace(path, std::move(rv));
    }
    return raw;
}

class Reader {
public:
    explicit Reader(const RawConfig& raw) : raw_(raw) {}

    void number(const std::string& path, double& out) const {
        if (const auto* v = find(path)) out = parse_number(path, v->text, v->line);
    }
    void number(const std::string& path, std::optional<double>& out) const {
        if (const auto* v = find(path)) out = parse_number(path, v->text, v->line);
    }
    void integer(const std::string& path, int& out) const {
        if (const auto* v = find(path)) {
            const double d = parse_number(path, v->text, v->line);
            if (d != std::floor(d) || std::abs(d) > 1e9)
                throw ConfigError(where(v->line) + path + " must be an integer", path, v->line);
            out = static_cast<int>(d);
        }
    }
    void string(const std::string& path, std::string& out) const {
        if (const auto* v = find(path)) {
            if (v->is_list) throw ConfigError(where(v->line) + path + " must be a scalar", path, v->line);
            out = v->text;
        }
    }
    void numbers(const std::string& path, std::vector<double>& out) const {
        if (const auto* v = find(path)) {
            out.clear();
            if (!v->is_list) {
                out.push_back(parse_number(path, v->text, v->line));
                return;
            }
            for (const auto& item : v->items) out.push_back(parse_number(path, item, v->line));
        }
    }
    void strings(const std::string& path, std::vector<std::string>& out) const {
        if (const auto* v = find(path)) out = v->is_list ? v->items : std::vector<std::string>{v->text};
    }

private:
    static std::string where(int line) { return "line " + std::to_string(line) + ": "; }

    const RawValue* find(const std::string& path) const {
        auto it = raw_.find(path);
        return it == raw_.end() ? nullptr : &it->second;
    }

    static double parse_number(const std::string& path, const std::string& text, int line) {
        char* end = nullptr;
        const double d = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || !std::isfinite(d))
            throw ConfigError(where(line) + path + ": '" + text + "' is not a finite number", path, line);
        return d;
    }

    const RawConfig& raw_;
};

void require(bool ok, const std::string& path, const std::string& message) {
    if (!ok) throw ConfigError("invalid " + path + ": " + message, path);
}

void validate(const RunConfig& c) {
    const auto& nl = c.nonlinearity;
    require(nl.kind == "power" || nl.kind == "zero", "nonlinearity.kind", "must be 'power' or 'zero'");
    if (nl.kind == "power") {
        require(nl.p > 1.0, "nonlinearity.p", "p must exceed 1");
        require(nl.q > 1.0, "nonlinearity.q", "q must exceed 1");
    }
    require(nl.A > 0.0, "nonlinearity.A", "A must be positive");

    const auto& src = c.source;
    require(src.kind == "zero" || src.kind == "polynomial" || src.kind == "cosine", "source.kind",
            "must be 'zero', 'polynomial' or 'cosine'");
    require(src.kind == "zero" || !src.coefficients.empty(), "source.coefficients",
            "required for polynomial and cosine sources");

    const auto& pb = c.problem;
    require(pb.n >= 1, "problem.n", "n must be at least 1");
    require(pb.lambda > 0.0, "problem.lambda", "lambda must be positive");
    require(pb.lambda_lo > 0.0, "problem.lambda_lo", "lambda_lo must be positive");
    require(pb.lambda_hi >= pb.lambda_lo, "problem.lambda_hi", "lambda_hi must not be below lambda_lo");
    require(pb.steps >= 2, "problem.steps", "steps must be at least 2");

    const auto& s = c.solver;
    require(s.atol > 0.0, "solver.atol", "atol must be positive");
    require(s.rtol > 0.0, "solver.rtol", "rtol must be positive");
    require(s.t_start > 0.0 && s.t_start < 1e-2, "solver.t_start", "t_start must lie in (0, 1e-2)");
    require(s.overflow_guard > 1.0, "solver.overflow_guard", "overflow_guard must exceed 1");
    require(s.max_step > 0.0 && s.max_step <= 1.0, "solver.max_step", "max_step must lie in (0, 1]");
    require(s.n_scan >= 100, "solver.n_scan", "n_scan must be at least 100");
    require(s.s_lo.has_value() == s.s_hi.has_value(), "solver.s_lo", "s_lo and s_hi must be given together");
    if (s.s_lo) require(*s.s_lo < *s.s_hi, "solver.s_hi", "s_lo must be below s_hi");
    require(nl.kind != "zero" || s.s_lo.has_value(), "solver.s_lo",
            "an explicit scan window is required for the zero nonlinearity");
    require(s.boundary_tol > 0.0, "solver.boundary_tol", "boundary_tol must be positive");
    require(s.sweep_scan >= 10, "solver.sweep_scan", "sweep_scan must be at least 10");
    require(s.warm_scan >= 10, "solver.warm_scan", "warm_scan must be at least 10");
    require(s.threads >= 1, "solver.threads", "threads must be at least 1");

    const auto& b = c.bounds;
    require(!b.B || *b.B > 0.0, "bounds.B", "B must be positive");
    require(!b.delta || *b.delta >= 0.0, "bounds.delta", "delta must be non-negative");
    require(b.m1 < b.m2, "bounds.m2", "m1 must be below m2");
    require(b.a > 0.0 && b.a < b.b, "bounds.b", "need 0 < a < b");
    require(b.lambda_min > 0.0, "bounds.lambda_min", "lambda_min must be positive");

    for (const auto& f : c.output.formats)
        require(f == "json" || f == "csv", "output.formats", "unknown format '" + f + "'");
    require(!c.output.directory.empty(), "output.directory", "must not be empty");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    const auto raw = tokenize(text);
    const Reader r(raw);
    RunConfig c;
    r.string("nonlinearity.kind", c.nonlinearity.kind);
    r.number("nonlinearity.p", c.nonlinearity.p);
    r.number("nonlinearity.q", c.nonlinearity.q);
    r.number("nonlinearity.A", c.nonlinearity.A);
    r.string("source.kind", c.source.kind);
    r.numbers("source.coefficients", c.source.coefficients);
    r.integer("problem.n", c.problem.n);
    r.number("problem.lambda", c.problem.lambda);
    r.number("problem.lambda_lo", c.problem.lambda_lo);
    r.number("problem.lambda_hi", c.problem.lambda_hi);
    r.integer("problem.steps", c.problem.steps);
    r.number("solver.atol", c.solver.atol);
    r.number("solver.rtol", c.solver.rtol);
    r.number("solver.t_start", c.solver.t_start);
    r.number("solver.overflow_guard", c.solver.overflow_guard);
    r.number("solver.max_step", c.solver.max_step);
    r.integer("solver.n_scan", c.solver.n_scan);
    r.number("solver.s_lo", c.solver.s_lo);
    r.number("solver.s_hi", c.solver.s_hi);
    r.number("solver.boundary_tol", c.solver.boundary_tol);
    r.integer("solver.sweep_scan", c.solver.sweep_scan);
    r.integer("solver.warm_scan", c.solver.warm_scan);
    r.integer("solver.threads", c.solver.threads);
    r.number("bounds.B", c.bounds.B);
    r.number("bounds.delta", c.bounds.delta);
    r.number("bounds.m1", c.bounds.m1);
    r.number("bounds.m2", c.bounds.m2);
    r.number("bounds.a", c.bounds.a);
    r.number("bounds.b", c.bounds.b);
    r.number("bounds.lambda_min", c.bounds.lambda_min);
    r.string("output.directory", c.output.directory);
    r.strings("output.formats", c.output.formats);
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open configuration file '" + path + "'", "");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

Nonlinearity RunConfig::make_nonlinearity() const {
    if (nonlinearity.kind == "zero") return Nonlinearity::zero();
    return Nonlinearity::piecewise_power(nonlinearity.p, nonlinearity.q, nonlinearity.A);
}

SourceTerm RunConfig::make_source() const { return {source_kind_from_string(source.kind), source.coefficients}; }

RadialProblem RunConfig::make_problem() const { return make_problem(problem.lambda); }

RadialProblem RunConfig::make_problem(double lambda) const {
    return {problem.n, lambda, make_source(), make_nonlinearity()};
}

ShootingSettings RunConfig::shooting_settings() const {
    ShootingSettings s;
    s.integrator.atol = solver.atol;
    s.integrator.rtol = solver.rtol;
    s.integrator.t_start = solver.t_start;
    s.integrator.overflow_guard = solver.overflow_guard;
    s.integrator.max_step = solver.max_step;
    s.boundary_tol = solver.boundary_tol;
    s.threads = static_cast<unsigned>(solver.threads);
    return s;
}

SweepSettings RunConfig::sweep_settings() const {
    SweepSettings s;
    s.shooting = shooting_settings();
    s.coarse_scan = solver.sweep_scan;
    s.warm_scan = solver.warm_scan;
    return s;
}

BoundsSettings RunConfig::bounds_settings() const {
    BoundsSettings s;
    if (bounds.B) s.B = *bounds.B;
    if (bounds.delta) s.delta = *bounds.delta;
    s.aux.m1 = bounds.m1;
    s.aux.m2 = bounds.m2;
    s.aux.a = bounds.a;
    s.aux.b = bounds.b;
    return s;
}

bool RunConfig::wants(const std::string& format) const {
    return std::find(output.formats.begin(), output.formats.end(), format) != output.formats.end();
}

Json RunConfig::to_json() const {
    auto opt = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
    return {
        {"nonlinearity", {{"kind", nonlinearity.kind}, {"p", nonlinearity.p}, {"q", nonlinearity.q}, {"A", nonlinearity.A}}},
        {"source", {{"kind", source.kind}, {"coefficients", source.coefficients}}},
        {"problem",
         {{"n", problem.n},
          {"lambda", problem.lambda},
          {"lambda_lo", problem.lambda_lo},
          {"lambda_hi", problem.lambda_hi},
          {"steps", problem.steps}}},
        {"solver",
         {{"atol", solver.atol},
          {"rtol", solver.rtol},
          {"t_start", solver.t_start},
          {"overflow_guard", solver.overflow_guard},
          {"max_step", solver.max_step},
          {"n_scan", solver.n_scan},
          {"s_lo", opt(solver.s_lo)},
          {"s_hi", opt(solver.s_hi)},
          {"boundary_tol", solver.boundary_tol},
          {"sweep_scan", solver.sweep_scan},
          {"warm_scan", solver.warm_scan},
          {"threads", solver.threads}}},
        {"bounds",
         {{"B", opt(bounds.B)},
          {"delta", opt(bounds.delta)},
          {"m1", bounds.m1},
          {"m2", bounds.m2},
          {"a", bounds.a},
          {"b", bounds.b},
          {"lambda_min", bounds.lambda_min}}},
        {"output", {{"directory", output.directory}, {"formats", output.formats}}},
    };
}

}  // namespace radial
