#include "gnch/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "gnch/errors.hpp"
#include "gnch/experiments.hpp"

namespace gnch {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_key(const std::string& origin, int line, const std::string& msg) {
    fail(ErrorCode::CONFIG_INVALID, origin + ":" + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& origin, int line, const std::string& key,
                 const std::string& v) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        bad_key(origin, line, "key '" + key + "' expects a real number, got '" + v + "'");
    }
}

long to_int(const std::string& origin, int line, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        bad_key(origin, line, "key '" + key + "' expects an integer, got '" + v + "'");
    }
}

bool to_bool(const std::string& origin, int line, const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "off" || v == "no") return false;
    bad_key(origin, line, "key '" + key + "' expects a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& origin, int line, const std::string& key,
                            const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) bad_key(origin, line, "key '" + key + "' has an empty list entry");
        out.push_back(to_double(origin, line, key, item));
    }
    if (out.empty()) bad_key(origin, line, "key '" + key + "' expects a nonempty list");
    return out;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    ExperimentConfig cfg;
    std::set<std::string> seen;

    std::stringstream ss(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            bad_key(origin, lineno, "expected key=value, got '" + trim(raw) + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) bad_key(origin, lineno, "empty key");
        if (val.empty()) bad_key(origin, lineno, "key '" + key + "' has an empty value");
        if (!seen.insert(key).second) bad_key(origin, lineno, "duplicate key '" + key + "'");
        cfg.echo.emplace_back(key, val);

        if (key == "experiment") {
            cfg.experiment = val;
        } else if (key == "params.mu") {
            cfg.params.mu = to_double(origin, lineno, key, val);
        } else if (key == "params.eps") {
            cfg.params.eps = to_double(origin, lineno, key, val);
            if (cfg.params.eps < 0.0 || cfg.params.eps > 1.0)
                bad_key(origin, lineno, "params.eps must lie in [0, 1]");
        } else if (key == "params.delta") {
            cfg.params.delta = to_double(origin, lineno, key, val);
        } else if (key == "params.gamma") {
            cfg.params.gamma = to_double(origin, lineno, key, val);
        } else if (key == "params.bo_inv") {
            cfg.params.bo_inv = to_double(origin, lineno, key, val);
        } else if (key == "bounds.mu_max") {
            cfg.bounds.mu_max = to_double(origin, lineno, key, val);
        } else if (key == "bounds.M") {
            cfg.bounds.M = to_double(origin, lineno, key, val);
        } else if (key == "bounds.delta_min") {
            cfg.bounds.delta_min = to_double(origin, lineno, key, val);
        } else if (key == "bounds.delta_max") {
            cfg.bounds.delta_max = to_double(origin, lineno, key, val);
        } else if (key == "bounds.bo_min_inv") {
            cfg.bounds.bo_min_inv = to_double(origin, lineno, key, val);
        } else if (key == "bounds.nu0") {
            cfg.bounds.nu0 = to_double(origin, lineno, key, val);
        } else if (key == "cl.theta") {
            cfg.cl.theta = to_double(origin, lineno, key, val);
        } else if (key == "cl.lambda") {
            cfg.cl.lambda = to_double(origin, lineno, key, val);
        } else if (key == "grid.L") {
            cfg.L = to_double(origin, lineno, key, val);
        } else if (key == "grid.n") {
            const long n = to_int(origin, lineno, key, val);
            if (n < 4) bad_key(origin, lineno, "grid.n must be at least 4");
            cfg.n = static_cast<std::size_t>(n);
        } else if (key == "step.dt") {
            cfg.step.dt = to_double(origin, lineno, key, val);
        } else if (key == "step.t_end") {
            cfg.step.t_end = to_double(origin, lineno, key, val);
        } else if (key == "step.cfl") {
            cfg.step.cfl = to_double(origin, lineno, key, val);
        } else if (key == "step.sample_every") {
            cfg.step.sample_every = static_cast<int>(to_int(origin, lineno, key, val));
        } else if (key == "init.profile") {
            cfg.init.profile = val;
        } else if (key == "init.amplitude") {
            cfg.init.amplitude = to_double(origin, lineno, key, val);
        } else if (key == "init.width") {
            cfg.init.width = to_double(origin, lineno, key, val);
        } else if (key == "init.center") {
            cfg.init.center = to_double(origin, lineno, key, val);
        } else if (key == "init.mode") {
            cfg.init.mode = static_cast<int>(to_int(origin, lineno, key, val));
        } else if (key == "sweep.mu") {
            cfg.sweep.mu = to_list(origin, lineno, key, val);
        } else if (key == "sweep.eps") {
            cfg.sweep.eps = to_list(origin, lineno, key, val);
        } else if (key == "sweep.dt") {
            cfg.sweep.dt = to_list(origin, lineno, key, val);
        } else if (key == "sweep.eps_from_mu") {
            cfg.sweep.eps_from_mu = to_bool(origin, lineno, key, val);
        } else if (key == "run.out_dir") {
            cfg.run.out_dir = (val == "none") ? "" : val;
        } else if (key == "run.dealias") {
            cfg.run.dealias = to_bool(origin, lineno, key, val);
        } else if (key == "run.force") {
            cfg.run.force = to_bool(origin, lineno, key, val);
        } else if (key == "run.plots") {
            cfg.run.plots = to_bool(origin, lineno, key, val);
        } else if (key == "run.seed") {
            const long s = to_int(origin, lineno, key, val);
            if (s < 0) bad_key(origin, lineno, "run.seed must be nonnegative");
            cfg.run.seed = static_cast<std::uint32_t>(s);
        } else if (key == "run.s") {
            cfg.run.s = to_double(origin, lineno, key, val);
        } else if (key == "solver.tol") {
            cfg.solver.tol = to_double(origin, lineno, key, val);
        } else if (key == "solver.max_iter") {
            cfg.solver.max_iter = static_cast<int>(to_int(origin, lineno, key, val));
        } else if (key == "twin.pert_amplitude") {
            cfg.twin_pert_amplitude = to_double(origin, lineno, key, val);
        } else if (key == "twin.pert_mode") {
            cfg.twin_pert_mode = static_cast<int>(to_int(origin, lineno, key, val));
        } else if (key.rfind("threshold.", 0) == 0) {
            const std::string name = key.substr(10);
            if (name.empty()) bad_key(origin, lineno, "threshold key has no name");
            cfg.thresholds[name] = to_double(origin, lineno, key, val);
        } else {
            bad_key(origin, lineno, "unknown key '" + key + "'");
        }
    }

    if (cfg.experiment.empty())
        fail(ErrorCode::CONFIG_INVALID, origin + ": missing required key 'experiment'");

    if (cfg.init.width <= 0.0) cfg.init.width = cfg.L / 10.0;
    if (cfg.init.center < 0.0) cfg.init.center = cfg.L / 2.0;
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::CONFIG_INVALID, "cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::vector<RegimeParams> sweep_points(const ExperimentConfig& cfg) {
    if (!cfg.sweep.mu.empty() && !cfg.sweep.eps.empty())
        fail(ErrorCode::CONFIG_INVALID, "sweep.mu and sweep.eps cannot both be set");

    std::vector<RegimeParams> pts;
    if (!cfg.sweep.mu.empty()) {
        for (double mu : cfg.sweep.mu) {
            RegimeParams p = cfg.params;
            p.mu = mu;
            if (cfg.sweep.eps_from_mu) p.eps = std::sqrt(mu);
            pts.push_back(p);
        }
    } else if (!cfg.sweep.eps.empty()) {
        for (double eps : cfg.sweep.eps) {
            RegimeParams p = cfg.params;
            p.eps = eps;
            pts.push_back(p);
        }
    } else {
        RegimeParams p = cfg.params;
        if (cfg.sweep.eps_from_mu) p.eps = std::sqrt(p.mu);
        pts.push_back(p);
    }
    return pts;
}

void validate_config(const ExperimentConfig& cfg) {
    if (!experiment_exists(cfg.experiment))
        fail(ErrorCode::CONFIG_INVALID, "unknown experiment '" + cfg.experiment + "'");
    if (cfg.n < 4 || cfg.n % 2 != 0)
        fail(ErrorCode::CONFIG_INVALID, "grid.n must be even and at least 4");
    if (!(cfg.L > 0.0)) fail(ErrorCode::CONFIG_INVALID, "grid.L must be positive");
    if (!(cfg.step.dt > 0.0)) fail(ErrorCode::CONFIG_INVALID, "step.dt must be positive");
    if (cfg.step.t_end < 0.0) fail(ErrorCode::CONFIG_INVALID, "step.t_end must be nonnegative");
    if (!(cfg.step.cfl > 0.0)) fail(ErrorCode::CONFIG_INVALID, "step.cfl must be positive");
    if (cfg.step.sample_every < 1)
        fail(ErrorCode::CONFIG_INVALID, "step.sample_every must be at least 1");
    if (cfg.init.profile != "gaussian" && cfg.init.profile != "sech2" &&
        cfg.init.profile != "cosine-mode")
        fail(ErrorCode::CONFIG_INVALID, "unknown init.profile '" + cfg.init.profile + "'");
    if (!std::isfinite(cfg.init.amplitude))
        fail(ErrorCode::CONFIG_INVALID, "init.amplitude must be finite");
    if (cfg.init.mode < 0 || static_cast<std::size_t>(cfg.init.mode) > cfg.n / 2)
        fail(ErrorCode::CONFIG_INVALID, "init.mode outside the resolved range");
    if (!(cfg.solver.tol > 0.0)) fail(ErrorCode::CONFIG_INVALID, "solver.tol must be positive");
    if (cfg.solver.max_iter < 1)
        fail(ErrorCode::CONFIG_INVALID, "solver.max_iter must be at least 1");
    if (!(cfg.twin_pert_amplitude > 0.0))
        fail(ErrorCode::CONFIG_INVALID, "twin.pert_amplitude must be positive");
    if (cfg.twin_pert_mode < 0 || static_cast<std::size_t>(cfg.twin_pert_mode) > cfg.n / 2)
        fail(ErrorCode::CONFIG_INVALID, "twin.pert_mode outside the resolved range");

    const ExperimentInfo* info = nullptr;
    for (const auto& e : experiment_registry())
        if (e.name == cfg.experiment) info = &e;
    for (const auto& [name, value] : cfg.thresholds) {
        (void)value;
        bool known = false;
        for (const auto& t : info->thresholds) known = known || (t == name);
        if (!known)
            fail(ErrorCode::CONFIG_INVALID, "experiment '" + cfg.experiment +
                                                "' does not use threshold." + name);
    }
    for (const auto& t : info->thresholds)
        if (cfg.thresholds.find(t) == cfg.thresholds.end())
            fail(ErrorCode::CONFIG_INVALID,
                 "experiment '" + cfg.experiment + "' requires threshold." + t);

    for (const RegimeParams& p : sweep_points(cfg)) {
        if (p.eps < 0.0 || p.eps > 1.0)
            fail(ErrorCode::CONFIG_INVALID, "swept eps value outside [0, 1]");
        derive_constants(p);  // NU_NONPOSITIVE surfaces here
        if (cfg.experiment == "gn-vs-cl") derive_cl_constants(p, cfg.cl);
        const RegimeReport rep = check_regime(p, cfg.bounds);
        if (!(rep.in_SW && rep.in_CH) && !cfg.run.force)
            fail(ErrorCode::REGIME_VIOLATION,
                 "parameters mu=" + std::to_string(p.mu) + " eps=" + std::to_string(p.eps) +
                     " fall outside the validated regime (use run.force=true to override)");
    }
}

}  // namespace gnch
