#include "nselab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

namespace nselab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

const std::vector<std::pair<ExperimentKind, std::string>> kExperimentNames = {
    {ExperimentKind::verify, "verify"},       {ExperimentKind::nonuniq, "nonuniq"},
    {ExperimentKind::blowup, "blowup"},       {ExperimentKind::taylor, "taylor"},
    {ExperimentKind::dns_compare, "dns-compare"}, {ExperimentKind::gauge, "gauge"},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const ConfigEntry& e, const std::string& msg) {
    std::ostringstream os;
    if (e.line > 0)
        os << "line " << e.line << ": ";
    else
        os << "option --" << e.key << ": ";
    os << msg;
    throw ConfigError(os.str());
}

double parse_double(const ConfigEntry& e) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(e, "expected a number, got '" + e.value + "'");
    }
}

int parse_int(const ConfigEntry& e) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(e.value, &pos);
        if (pos != e.value.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(e, "expected an integer, got '" + e.value + "'");
    }
}

bool parse_bool(const ConfigEntry& e) {
    if (e.value == "true" || e.value == "1" || e.value == "on") return true;
    if (e.value == "false" || e.value == "0" || e.value == "off") return false;
    fail(e, "expected true/false, got '" + e.value + "'");
}

std::vector<double> parse_list(const ConfigEntry& e) {
    std::vector<double> out;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail(e, "empty element in list '" + e.value + "'");
        ConfigEntry sub{e.key, item, e.line};
        out.push_back(parse_double(sub));
    }
    if (out.empty()) fail(e, "expected a comma-separated list");
    return out;
}

Vec3 parse_vec3(const ConfigEntry& e) {
    const std::vector<double> v = parse_list(e);
    if (v.size() != 3) fail(e, "expected exactly 3 comma-separated values");
    return {v[0], v[1], v[2]};
}

Vec3 alpha_from_wavevector(const ConfigEntry& e) {
    const Vec3 k = parse_vec3(e);
    for (double kj : k)
        if (kj == 0.0) fail(e, "wavevector components must be nonzero");
    return {1.0 / (two_pi * k[0]), 1.0 / (two_pi * k[1]), 1.0 / (two_pi * k[2])};
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto& [k, name] : kExperimentNames)
        if (k == kind) return name;
    return "?";
}

std::optional<ExperimentKind> parse_experiment(const std::string& name) {
    for (const auto& [k, n] : kExperimentNames)
        if (n == name) return k;
    return std::nullopt;
}

ConfigFile parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    ConfigFile file;
    file.path = path;
    std::string line;
    int line_no = 0;
    std::vector<ConfigEntry>* target = &file.global;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                throw ConfigError(path + ": line " + std::to_string(line_no) +
                                  ": unterminated section header");
            const std::string name = trim(text.substr(1, text.size() - 2));
            if (!parse_experiment(name))
                throw ConfigError(path + ": line " + std::to_string(line_no) +
                                  ": unknown experiment section [" + name + "]");
            target = &file.sections[name];
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ": line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        ConfigEntry entry{trim(text.substr(0, eq)), trim(text.substr(eq + 1)), line_no};
        if (entry.key.empty())
            throw ConfigError(path + ": line " + std::to_string(line_no) + ": empty key");
        if (entry.key == "experiment" && target == &file.global) {
            if (!parse_experiment(entry.value))
                throw ConfigError(path + ": line " + std::to_string(line_no) +
                                  ": unknown experiment '" + entry.value + "'");
            file.experiment = entry.value;
            continue;
        }
        target->push_back(std::move(entry));
    }
    return file;
}

TimeProfile ExperimentConfig::make_profile() const {
    if (profile == "zero" || profile.empty()) return TimeProfile::zero();
    if (profile == "quadratic") return TimeProfile::quadratic(c);
    if (profile == "blowup") return TimeProfile::rational_blowup(c, a);
    if (profile == "polynomial") {
        if (poly_coeffs.empty())
            throw ConfigError("polynomial profile requires the 'poly' coefficient list");
        return TimeProfile::polynomial(poly_coeffs);
    }
    throw ConfigError("unknown profile '" + profile + "'");
}

SolutionFamily ExperimentConfig::make_family() const {
    SolutionFamily fam = [&]() -> SolutionFamily {
        if (family == "trig-triple") return TrigTripleSolution{nu, make_profile()};
        if (family == "plane-wave") {
            PlaneWaveSolution s = canonical_plane_wave(nu, make_profile());
            s.b = b;
            if (alpha) s.alpha = *alpha;
            return s;
        }
        if (family == "fourier-series") {
            FourierSeriesSolution s = canonical_fourier_series(nu);
            s.b = b;
            if (alpha) s.alpha = *alpha;
            if (!fourier_sin.empty() || !fourier_cos.empty()) {
                const std::size_t n = std::max(fourier_sin.size(), fourier_cos.size());
                s.coeffs.assign(n, {0.0, 0.0});
                for (std::size_t i = 0; i < fourier_sin.size(); ++i) s.coeffs[i][0] = fourier_sin[i];
                for (std::size_t i = 0; i < fourier_cos.size(); ++i) s.coeffs[i][1] = fourier_cos[i];
            }
            return s;
        }
        if (family == "two-wave") {
            TwoWaveSolution s = canonical_two_wave(nu);
            if (b1) s.b[0] = *b1;
            if (b2) s.b[1] = *b2;
            if (alpha1) s.alpha[0] = *alpha1;
            if (alpha2) s.alpha[1] = *alpha2;
            return s;
        }
        throw ConfigError("unknown family '" + family + "'");
    }();

    const ValidationReport rep = validate_params(fam);
    if (!rep.passed) {
        std::ostringstream os;
        os << "family parameters fail validation:";
        for (const auto& item : rep.items)
            if (!item.pass)
                os << " [" << item.name << " residual " << item.residual << " > " << item.tolerance
                   << "]";
        throw ConfigError(os.str());
    }
    return fam;
}

namespace {

std::vector<double> default_times(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::blowup:
            return {0.0, 0.1, 0.25, 0.4, 0.49};
        case ExperimentKind::dns_compare:
            return {0.0, 0.05, 0.1, 0.15, 0.2};
        default:
            return {0.0, 0.1, 0.25, 0.5};
    }
}

void apply_entries(ExperimentConfig& cfg, const std::vector<ConfigEntry>& entries) {
    using Handler = std::function<void(ExperimentConfig&, const ConfigEntry&)>;
    static const std::map<std::string, Handler> handlers = {
        {"family", [](auto& c, const auto& e) { c.family = e.value; }},
        {"profile", [](auto& c, const auto& e) { c.profile = e.value; }},
        {"c", [](auto& c, const auto& e) { c.c = parse_double(e); }},
        {"a", [](auto& c, const auto& e) { c.a = parse_double(e); }},
        {"poly", [](auto& c, const auto& e) { c.poly_coeffs = parse_list(e); }},
        {"nu", [](auto& c, const auto& e) { c.nu = parse_double(e); }},
        {"grid", [](auto& c, const auto& e) { c.grid_n = parse_int(e); }},
        {"times", [](auto& c, const auto& e) { c.times = parse_list(e); }},
        {"mode", [](auto& c, const auto& e) { c.mode = e.value; }},
        {"points", [](auto& c, const auto& e) { c.points = parse_int(e); }},
        {"t", [](auto& c, const auto& e) { c.t_check = parse_double(e); }},
        {"dt", [](auto& c, const auto& e) { c.dt = parse_double(e); }},
        {"t-end", [](auto& c, const auto& e) { c.t_end = parse_double(e); }},
        {"order", [](auto& c, const auto& e) { c.taylor_order = parse_int(e); }},
        {"t-eval", [](auto& c, const auto& e) { c.t_eval = parse_double(e); }},
        {"threshold", [](auto& c, const auto& e) { c.threshold = parse_double(e); }},
        {"b", [](auto& c, const auto& e) { c.b = parse_vec3(e); }},
        {"alpha", [](auto& c, const auto& e) { c.alpha = parse_vec3(e); }},
        {"wavevector", [](auto& c, const auto& e) { c.alpha = alpha_from_wavevector(e); }},
        {"b1", [](auto& c, const auto& e) { c.b1 = parse_vec3(e); }},
        {"b2", [](auto& c, const auto& e) { c.b2 = parse_vec3(e); }},
        {"alpha1", [](auto& c, const auto& e) { c.alpha1 = parse_vec3(e); }},
        {"alpha2", [](auto& c, const auto& e) { c.alpha2 = parse_vec3(e); }},
        {"wavevector1", [](auto& c, const auto& e) { c.alpha1 = alpha_from_wavevector(e); }},
        {"wavevector2", [](auto& c, const auto& e) { c.alpha2 = alpha_from_wavevector(e); }},
        {"fourier-sin", [](auto& c, const auto& e) { c.fourier_sin = parse_list(e); }},
        {"fourier-cos", [](auto& c, const auto& e) { c.fourier_cos = parse_list(e); }},
        {"out-dir", [](auto& c, const auto& e) { c.out_dir = e.value; }},
        {"snapshot", [](auto& c, const auto& e) { c.snapshot = parse_bool(e); }},
    };

    for (const auto& entry : entries) {
        const auto it = handlers.find(entry.key);
        if (it == handlers.end()) fail(entry, "unknown key '" + entry.key + "'");
        it->second(cfg, entry);
    }
}

void validate_config(ExperimentConfig& cfg) {
    if (cfg.profile.empty()) {
        switch (cfg.experiment) {
            case ExperimentKind::blowup:
                cfg.profile = "blowup";
                break;
            case ExperimentKind::gauge:
                cfg.profile = "quadratic";
                break;
            default:
                cfg.profile = "zero";
                break;
        }
    }
    if (cfg.times.empty()) cfg.times = default_times(cfg.experiment);

    if (cfg.grid_n < 8 || cfg.grid_n % 2 != 0)
        throw ConfigError("grid must be an even integer >= 8");
    if (!(cfg.nu > 0.0)) throw ConfigError("nu must be positive");
    if (cfg.points < 1) throw ConfigError("points must be >= 1");
    if (cfg.taylor_order < 0) throw ConfigError("order must be >= 0");
    if (cfg.mode != "auto" && cfg.mode != "grid" && cfg.mode != "pointwise")
        throw ConfigError("mode must be auto, grid or pointwise");

    const SolutionFamily fam = cfg.make_family();  // validates parameters and profile
    const bool commensurate = grid_commensurate(fam, cfg.grid());

    if (cfg.experiment == ExperimentKind::verify) {
        if (cfg.mode == "grid" && !commensurate)
            throw ConfigError("family is not grid-commensurate; use mode = pointwise");
        if (cfg.mode == "auto") cfg.mode = commensurate ? "grid" : "pointwise";
    } else if (!commensurate) {
        throw ConfigError("experiment '" + to_string(cfg.experiment) +
                          "' requires a grid-commensurate family");
    }

    if (const auto bt = blowup_time(fam)) {
        for (double t : cfg.times)
            if (t >= *bt)
                throw ConfigError("sample time " + std::to_string(t) +
                                  " is at or past the blow-up time " + std::to_string(*bt));
    }
    for (double t : cfg.times)
        if (t < 0.0) throw ConfigError("sample times must be nonnegative");

    if (cfg.experiment == ExperimentKind::taylor && cfg.profile != "zero") {
        // The recursion produces the periodic-pressure branch; comparisons
        // only make sense against a profile-free family.
        throw ConfigError("the taylor experiment requires the zero profile");
    }
    if (cfg.experiment == ExperimentKind::dns_compare) {
        if (cfg.profile != "zero" && cfg.profile != "quadratic")
            throw ConfigError("dns-compare supports the zero and quadratic profiles only");
    }
}

}  // namespace

ExperimentConfig build_config(ExperimentKind kind, const ConfigFile* file,
                              const std::vector<ConfigEntry>& overrides) {
    ExperimentConfig cfg;
    cfg.experiment = kind;
    if (file) {
        if (file->experiment && *parse_experiment(*file->experiment) != kind)
            throw ConfigError(file->path + ": config file is for experiment '" +
                              *file->experiment + "', not '" + to_string(kind) + "'");
        try {
            apply_entries(cfg, file->global);
            const auto it = file->sections.find(to_string(kind));
            if (it != file->sections.end()) apply_entries(cfg, it->second);
        } catch (const ConfigError& e) {
            throw ConfigError(file->path + ": " + e.what());
        }
    }
    apply_entries(cfg, overrides);
    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    const ConfigFile file = parse_config_file(path);
    if (!file.experiment)
        throw ConfigError(path + ": missing 'experiment =' key");
    return build_config(*parse_experiment(*file.experiment), &file, {});
}

nlohmann::json config_echo(const ExperimentConfig& cfg) {
    nlohmann::json j{{"experiment", to_string(cfg.experiment)},
                     {"family", cfg.family},
                     {"profile", cfg.profile},
                     {"nu", cfg.nu},
                     {"grid", cfg.grid_n},
                     {"times", cfg.times},
                     {"out_dir", cfg.out_dir},
                     {"snapshot", cfg.snapshot}};
    if (cfg.profile == "quadratic" || cfg.profile == "blowup") j["c"] = cfg.c;
    if (cfg.profile == "blowup") j["a"] = cfg.a;
    if (cfg.profile == "polynomial") j["poly"] = cfg.poly_coeffs;
    switch (cfg.experiment) {
        case ExperimentKind::verify:
            j["mode"] = cfg.mode;
            j["points"] = cfg.points;
            break;
        case ExperimentKind::nonuniq:
            j["t"] = cfg.t_check;
            break;
        case ExperimentKind::blowup:
            j["threshold"] = cfg.threshold;
            break;
        case ExperimentKind::taylor:
            j["order"] = cfg.taylor_order;
            j["t_eval"] = cfg.t_eval;
            break;
        case ExperimentKind::dns_compare:
            j["dt"] = cfg.dt;
            j["t_end"] = cfg.t_end;
            break;
        case ExperimentKind::gauge:
            break;
    }
    if (cfg.family == "plane-wave" || cfg.family == "fourier-series") {
        j["b"] = cfg.b;
        if (cfg.alpha) j["alpha"] = *cfg.alpha;
    }
    return j;
}

}  // namespace nselab
