#include "config.hpp"

#include <fstream>

namespace ssrr::cli {

namespace {

using nlohmann::json;

double number(const json& j, const std::string& field) {
    if (!j.is_number()) throw ConfigError("config: " + field + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& field, int min) {
    if (!j.is_number_integer() || j.get<long long>() < min) {
        throw ConfigError("config: " + field + " must be an integer >= " + std::to_string(min));
    }
    return j.get<int>();
}

Vec2 vec2(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("config: " + field + " must be an array of 2 numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const json* member(const json& j, const char* key) {
    const auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw ConfigError("config: unknown field " + where + key);
    }
}

void range3(const json& j, const std::string& field, double& lo, double& hi, int& n) {
    if (!j.is_array() || j.size() != 3) throw ConfigError("config: " + field + " must be [lo, hi, count]");
    lo = number(j[0], field + "[0]");
    hi = number(j[1], field + "[1]");
    n = integer(j[2], field + "[2]", 1);
}

}  // namespace

double RunConfig::require_gamma() const {
    if (!gamma) throw ConfigError("config: missing field gamma");
    return *gamma;
}

UpstreamData RunConfig::require_upstream() const {
    const double g = require_gamma();
    if (!rho) throw ConfigError("config: missing field upstream.rho");
    if (!v) throw ConfigError("config: missing field upstream.v");
    const UpstreamData state(GasModel(g), *rho, *v);
    if (incident_normal) {
        if (norm(*incident_normal) == 0.0) throw ConfigError("config: incident.normal must be nonzero");
        return state_behind_incident(state, incident_xi.value_or(Vec2{0.0, 0.0}), *incident_normal);
    }
    return state;
}

ReflectionConfig RunConfig::require_reflection() const {
    if (!xi_r) throw ConfigError("config: missing field xi_r");
    if (!wall_dir) throw ConfigError("config: missing field wall_dir");
    if (norm(*wall_dir) == 0.0) throw ConfigError("config: wall_dir must be nonzero");
    return make_reflection_config(require_upstream(), *xi_r, *wall_dir, scenario);
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    check_keys(j, "", {"gamma", "scenario", "upstream", "xi_r", "wall_dir", "incident", "polar", "certify", "sweep",
                       "diagnose"});
    RunConfig c;
    if (const json* g = member(j, "gamma")) {
        c.gamma = number(*g, "gamma");
        if (!(*c.gamma >= 1.0 && *c.gamma <= 4.0)) throw ConfigError("config: gamma must lie in [1, 4]");
    }
    if (const json* s = member(j, "scenario")) {
        if (*s == "classical_rr") c.scenario = Scenario::classical_rr;
        else if (*s == "supersonic_wedge") c.scenario = Scenario::supersonic_wedge;
        else throw ConfigError("config: scenario must be \"classical_rr\" or \"supersonic_wedge\"");
    }
    if (const json* u = member(j, "upstream")) {
        if (!u->is_object()) throw ConfigError("config: upstream must be an object");
        check_keys(*u, "upstream.", {"rho", "v"});
        if (const json* r = member(*u, "rho")) {
            c.rho = number(*r, "upstream.rho");
            if (!(*c.rho > 0.0)) throw ConfigError("config: upstream.rho must be positive");
        }
        if (const json* v = member(*u, "v")) c.v = vec2(*v, "upstream.v");
    }
    if (const json* x = member(j, "xi_r")) c.xi_r = vec2(*x, "xi_r");
    if (const json* w = member(j, "wall_dir")) c.wall_dir = vec2(*w, "wall_dir");
    if (const json* inc = member(j, "incident")) {
        if (!inc->is_object()) throw ConfigError("config: incident must be an object");
        check_keys(*inc, "incident.", {"xi", "normal"});
        if (const json* x = member(*inc, "xi")) c.incident_xi = vec2(*x, "incident.xi");
        const json* n = member(*inc, "normal");
        if (!n) throw ConfigError("config: missing field incident.normal");
        c.incident_normal = vec2(*n, "incident.normal");
    }
    if (const json* p = member(j, "polar")) {
        check_keys(*p, "polar.", {"samples", "xi"});
        if (const json* s = member(*p, "samples")) c.samples = integer(*s, "polar.samples", 2);
        if (const json* x = member(*p, "xi")) c.polar_xi = vec2(*x, "polar.xi");
    }
    if (const json* cf = member(j, "certify")) {
        check_keys(*cf, "certify.", {"epsilon", "beta", "grid", "force_weak", "root"});
        if (const json* e = member(*cf, "epsilon")) c.epsilon = number(*e, "certify.epsilon");
        if (const json* b = member(*cf, "beta")) {
            if (b->is_string()) c.beta = parse_beta(b->get<std::string>());
            else c.beta = number(*b, "certify.beta");
        }
        if (const json* g = member(*cf, "grid")) {
            if (!g->is_array() || g->size() != 2) throw ConfigError("config: certify.grid must be [n_r, n_phi]");
            c.n_r = integer((*g)[0], "certify.grid[0]", 64);
            c.n_phi = integer((*g)[1], "certify.grid[1]", 64);
        }
        if (const json* f = member(*cf, "force_weak")) {
            if (!f->is_boolean()) throw ConfigError("config: certify.force_weak must be a boolean");
            c.force_weak = f->get<bool>();
        }
        if (const json* r = member(*cf, "root")) {
            if (!r->is_string()) throw ConfigError("config: certify.root must be \"strong\" or \"weak\"");
            c.root = parse_root(r->get<std::string>());
        }
    }
    if (const json* sw = member(j, "sweep")) {
        check_keys(*sw, "sweep.", {"tau_deg", "mach", "samples"});
        if (const json* t = member(*sw, "tau_deg")) range3(*t, "sweep.tau_deg", c.sweep.tau_lo, c.sweep.tau_hi, c.sweep.n_tau);
        if (const json* m = member(*sw, "mach")) {
            range3(*m, "sweep.mach", c.sweep.mach_lo, c.sweep.mach_hi, c.sweep.n_mach);
            if (!(c.sweep.mach_lo > 1.0 && c.sweep.mach_hi > 1.0)) throw ConfigError("config: sweep.mach values must exceed 1");
        }
        if (const json* s = member(*sw, "samples")) c.samples = integer(*s, "sweep.samples", 2);
    }
    if (const json* d = member(j, "diagnose")) {
        check_keys(*d, "diagnose.", {"field", "tol_s", "wall_factor"});
        if (const json* f = member(*d, "field")) {
            if (!f->is_string()) throw ConfigError("config: diagnose.field must be a string");
            c.field = f->get<std::string>();
        }
        if (const json* t = member(*d, "tol_s")) c.diagnose.tol_s = number(*t, "diagnose.tol_s");
        if (const json* w = member(*d, "wall_factor")) c.diagnose.wall_factor = number(*w, "diagnose.wall_factor");
    }
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path + ": " + e.what());
    }
    return parse_config(j);
}

std::optional<double> parse_beta(const std::string& text) {
    if (text == "auto") return std::nullopt;
    double b = 0.0;
    try {
        std::size_t used = 0;
        b = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw ConfigError("beta must be \"auto\" or a number, got '" + text + "'");
    }
    if (!(b > 0.0 && b < 1.0)) throw ConfigError("beta must lie in (0, 1)");
    return b;
}

ShockTypeLabel parse_root(const std::string& text) {
    if (text == "strong") return ShockTypeLabel::strong;
    if (text == "weak") return ShockTypeLabel::weak;
    throw ConfigError("root must be \"strong\" or \"weak\", got '" + text + "'");
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw std::invalid_argument(text);
        std::size_t u1 = 0, u2 = 0;
        const int n = std::stoi(text.substr(0, x), &u1);
        const int m = std::stoi(text.substr(x + 1), &u2);
        if (u1 != x || u2 != text.size() - x - 1 || n < 1 || m < 1) throw std::invalid_argument(text);
        return {n, m};
    } catch (const std::exception&) {
        throw ConfigError("grid must be NxM with positive integers, got '" + text + "'");
    }
}

}  // namespace ssrr::cli
