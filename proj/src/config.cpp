#include "plasmawave/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pw {

std::size_t RunConfig::diag_stride() const {
    const double r = diag_every / dt;
    const double k = std::round(r);
    if (k < 1.0 || std::abs(r - k) > 1e-9 * k) throw config_error("diag_every must be a positive multiple of dt");
    return static_cast<std::size_t>(k);
}

std::size_t RunConfig::total_steps() const {
    const double r = t_final / dt;
    const double k = std::round(r);
    if (k < 1.0 || std::abs(r - k) > 1e-9 * k) throw config_error("t_final must be a positive multiple of dt");
    return static_cast<std::size_t>(k);
}

bool label_is_safe(const std::string& label) {
    if (label.empty() || label == "." || label == "..") return false;
    for (char c : label)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
    return true;
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// accepts plain numbers and "<number>pi"
double parse_double(const std::string& key, const std::string& v) {
    std::string s = v;
    double factor = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        factor = M_PI;
        s = trim(s.substr(0, s.size() - 2));
        if (s.empty()) s = "1";
    }
    std::size_t used = 0;
    double d = 0.0;
    try {
        d = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || !std::isfinite(d)) throw config_error("key '" + key + "': not a number: " + v);
    return d * factor;
}

long parse_long(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    long d = 0;
    try {
        d = std::stol(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw config_error("key '" + key + "': not an integer: " + v);
    return d;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw config_error("key '" + key + "': expected true or false, got " + v);
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(parse_double(key, trim(cell)));
    return out;
}

std::string list_text(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + g17(v[i]);
    return s;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> m = {
        {"num_points", [](auto& c, auto& k, auto& v) {
             const long n = parse_long(k, v);
             if (n <= 0) throw config_error("key 'num_points': must be positive");
             c.run.num_points = static_cast<std::size_t>(n);
         }},
        {"box_length", [](auto& c, auto& k, auto& v) { c.run.box_length = parse_double(k, v); }},
        {"profile", [](auto& c, auto&, auto& v) { c.run.profile.family = v; }},
        {"eps0", [](auto& c, auto& k, auto& v) { c.run.profile.eps0 = parse_double(k, v); }},
        {"sigma", [](auto& c, auto& k, auto& v) { c.run.profile.sigma = parse_double(k, v); }},
        {"k0", [](auto& c, auto& k, auto& v) { c.run.profile.k0 = parse_double(k, v); }},
        {"dt", [](auto& c, auto& k, auto& v) { c.run.dt = parse_double(k, v); }},
        {"t_final", [](auto& c, auto& k, auto& v) { c.run.t_final = parse_double(k, v); }},
        {"formulation", [](auto& c, auto& k, auto& v) {
             try {
                 c.run.formulation = parse_formulation(v);
             } catch (const Error&) {
                 throw config_error("key '" + k + "': unknown formulation " + v);
             }
         }},
        {"electric_field_on", [](auto& c, auto& k, auto& v) { c.run.electric_field_on = parse_bool(k, v); }},
        {"diag_every", [](auto& c, auto& k, auto& v) { c.run.diag_every = parse_double(k, v); }},
        {"n_sob", [](auto& c, auto& k, auto& v) { c.run.n_sob = static_cast<int>(parse_long(k, v)); }},
        {"n1_sob", [](auto& c, auto& k, auto& v) { c.run.n1_sob = static_cast<int>(parse_long(k, v)); }},
        {"p0", [](auto& c, auto& k, auto& v) { c.run.p0 = parse_double(k, v); }},
        {"allow_wraparound", [](auto& c, auto& k, auto& v) { c.run.allow_wraparound = parse_bool(k, v); }},
        {"normal_form_diagnostics",
         [](auto& c, auto& k, auto& v) { c.run.normal_form_diagnostics = parse_bool(k, v); }},
        {"checkpoint_at", [](auto& c, auto& k, auto& v) { c.run.checkpoint_at = parse_double(k, v); }},
        {"label", [](auto& c, auto&, auto& v) { c.label = v; }},
        {"output_dir", [](auto& c, auto&, auto& v) { c.output_dir = v; }},
        {"seed", [](auto& c, auto& k, auto& v) {
             const long s = parse_long(k, v);
             if (s < 0) throw config_error("key 'seed': must be non-negative");
             c.seed = static_cast<std::uint64_t>(s);
         }},
        {"suite", [](auto& c, auto&, auto& v) { c.suite = v; }},
        {"sweep_eps0", [](auto& c, auto& k, auto& v) { c.sweep_eps0 = parse_list(k, v); }},
        {"sweep_k0", [](auto& c, auto& k, auto& v) { c.sweep_k0 = parse_list(k, v); }},
        {"sweep_sigma", [](auto& c, auto& k, auto& v) { c.sweep_sigma = parse_list(k, v); }},
    };
    return m;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig c;
    std::stringstream ss(text);
    std::string line;
    std::map<std::string, int> seen;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw config_error("unknown key '" + key + "'");
        if (seen[key]++) throw config_error("duplicate key '" + key + "'");
        it->second(c, key, value);
    }
    validate(c);
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_text(const ExperimentConfig& c) {
    const RunConfig& r = c.run;
    std::ostringstream os;
    os << "label = " << c.label << "\n"
       << "output_dir = " << c.output_dir << "\n"
       << "seed = " << c.seed << "\n"
       << "suite = " << c.suite << "\n"
       << "num_points = " << r.num_points << "\n"
       << "box_length = " << g17(r.box_length) << "\n"
       << "profile = " << r.profile.family << "\n"
       << "eps0 = " << g17(r.profile.eps0) << "\n"
       << "sigma = " << g17(r.profile.sigma) << "\n"
       << "k0 = " << g17(r.profile.k0) << "\n"
       << "dt = " << g17(r.dt) << "\n"
       << "t_final = " << g17(r.t_final) << "\n"
       << "formulation = " << formulation_name(r.formulation) << "\n"
       << "electric_field_on = " << (r.electric_field_on ? "true" : "false") << "\n"
       << "diag_every = " << g17(r.diag_every) << "\n"
       << "n_sob = " << r.n_sob << "\n"
       << "n1_sob = " << r.n1_sob << "\n"
       << "p0 = " << g17(r.p0) << "\n"
       << "allow_wraparound = " << (r.allow_wraparound ? "true" : "false") << "\n"
       << "normal_form_diagnostics = " << (r.normal_form_diagnostics ? "true" : "false") << "\n"
       << "checkpoint_at = " << g17(r.checkpoint_at) << "\n";
    if (!c.sweep_eps0.empty()) os << "sweep_eps0 = " << list_text(c.sweep_eps0) << "\n";
    if (!c.sweep_k0.empty()) os << "sweep_k0 = " << list_text(c.sweep_k0) << "\n";
    if (!c.sweep_sigma.empty()) os << "sweep_sigma = " << list_text(c.sweep_sigma) << "\n";
    return os.str();
}

void validate(const RunConfig& r) {
    GridSpec g(r.num_points, r.box_length);  // throws on a bad grid
    if (r.profile.family != "packet" && r.profile.family != "mode" && r.profile.family != "zero")
        throw config_error("key 'profile': expected packet, mode or zero");
    if (!(r.profile.eps0 >= 0.0)) throw config_error("key 'eps0': must be >= 0");
    if (!(r.profile.sigma > 0.0)) throw config_error("key 'sigma': must be > 0");
    if (!(r.dt > 0.0)) throw config_error("key 'dt': must be > 0");
    if (r.dt > cfl_limit(g))
        throw config_error("key 'dt': " + g17(r.dt) + " exceeds the CFL limit 0.5*dx = " + g17(cfl_limit(g)));
    if (!(r.t_final > 0.0)) throw config_error("key 't_final': must be > 0");
    if (!(r.diag_every > 0.0)) throw config_error("key 'diag_every': must be > 0");
    r.total_steps();
    r.diag_stride();
    if (r.n_sob < 1) throw config_error("key 'n_sob': must be >= 1");
    if (r.n1_sob < 4) throw config_error("key 'n1_sob': must be >= 4");
    if (r.p0 < 0.0) throw config_error("key 'p0': must be >= 0");
    if (r.checkpoint_at < 0.0 || r.checkpoint_at > r.t_final)
        throw config_error("key 'checkpoint_at': must lie in [0, t_final]");
    if (!r.electric_field_on && r.formulation != Formulation::nv && r.formulation != Formulation::ev)
        throw config_error("key 'electric_field_on': pure Euler runs need formulation nv or ev");
}

void validate(const ExperimentConfig& c) {
    if (!label_is_safe(c.label)) throw config_error("key 'label': not filesystem safe: " + c.label);
    if (c.output_dir.empty()) throw config_error("key 'output_dir': empty");
    const std::string s = c.suite;
    if (s != "symbols" && s != "identities" && s != "scattering" && s != "appendix" && s != "all")
        throw config_error("key 'suite': expected symbols, identities, scattering, appendix or all");
    for (const auto* v : {&c.sweep_eps0, &c.sweep_k0, &c.sweep_sigma})
        for (double x : *v)
            if (!(x >= 0.0)) throw config_error("sweep values must be non-negative");
    validate(c.run);
}

}  // namespace pw
