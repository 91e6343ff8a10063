#include "dscqed/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace dscqed {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kKinds = {
    "wavepacket_roundtrip", "revival_probability", "wigner_snapshots",
    "pulse_switch",         "coupling_sweep",      "parity_check",
};

json fig5_pulses() {
    return json::array({
        json{{"A", kPi}, {"omega", 0.01}, {"tau", 0.1}, {"t_c", 4.0 * kPi}},
        json{{"A", kPi}, {"omega", 0.01}, {"tau", 0.1}, {"t_c", 6.0 * kPi}},
    });
}

// Missing-key defaults per scenario kind, everything in units of omega_c.
json kind_defaults(const std::string& kind) {
    json d{{"omega_c", 1.0}, {"kappa", 0.0},     {"gamma", 0.0},
           {"n_max", 40},    {"initial", "plus0"}, {"pulses", json::array()}};
    if (kind == "wavepacket_roundtrip" || kind == "revival_probability") {
        d["omega_q"] = 0.0;
        d["g1"] = d["g2"] = 1.0;
        d["t_end"] = 4.0 * kPi;
    } else if (kind == "wigner_snapshots") {
        d["omega_q"] = 0.2;
        d["g1"] = d["g2"] = 1.0;
        d["t_end"] = 4.0 * kPi;
        d["snapshot_times"] = {0.0, kPi, 2.0 * kPi, 4.0 * kPi};
    } else if (kind == "pulse_switch" || kind == "coupling_sweep") {
        d["omega_q"] = 0.01;
        d["g1"] = d["g2"] = 0.5;
        d["kappa"] = d["gamma"] = 0.005;
        d["t_end"] = 10.0 * kPi;
        d["pulses"] = fig5_pulses();
        if (kind == "coupling_sweep") d["g_values"] = {0.3, 0.5, 0.7};
    } else if (kind == "parity_check") {
        d["omega_q"] = 0.01;
        d["g1"] = d["g2"] = 0.5;
        d["t_end"] = 4.0 * kPi;
    }
    return d;
}

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ValidationError("config key '" + key + "': " + what);
}

void check_keys(const json& object, const std::set<std::string>& known,
                const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        if (!known.contains(key))
            throw ValidationError("unknown config key '" +
                                  (where.empty() ? key : where + "." + key) + "'");
    }
}

double as_number(const json& j, const std::string& key) {
    if (!j.is_number()) fail(key, "expects a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& key) {
    if (!j.is_number_integer()) fail(key, "expects an integer");
    return j.get<int>();
}

bool as_bool(const json& j, const std::string& key) {
    if (!j.is_boolean()) fail(key, "expects a boolean");
    return j.get<bool>();
}

std::string as_string(const json& j, const std::string& key) {
    if (!j.is_string()) fail(key, "expects a string");
    return j.get<std::string>();
}

std::vector<double> as_number_list(const json& j, const std::string& key) {
    if (!j.is_array()) fail(key, "expects an array of numbers");
    std::vector<double> values;
    for (const auto& item : j) {
        if (!item.is_number()) fail(key, "expects an array of numbers");
        values.push_back(item.get<double>());
    }
    return values;
}

RunConfig config_from_json(json doc) {
    if (!doc.is_object()) throw ValidationError("config document must be a JSON object");

    static const std::set<std::string> root_keys = {
        "kind",       "initial",     "initial_amplitudes",
        "omega_c",    "omega_q",     "g1",
        "g2",         "kappa",       "gamma",
        "n_max",      "t_end",       "pulses",
        "numeric",    "output_dir",  "pulse_exponent_convention",
        "snapshot_times", "g_values", "wigner_extent",
        "wigner_points"};
    check_keys(doc, root_keys, "");

    RunConfig cfg;
    cfg.kind = doc.contains("kind") ? as_string(doc["kind"], "kind") : "revival_probability";
    if (std::find(kKinds.begin(), kKinds.end(), cfg.kind) == kKinds.end()) {
        std::string names;
        for (const auto& k : kKinds) names += (names.empty() ? "" : ", ") + k;
        fail("kind", "unknown scenario kind '" + cfg.kind + "'; expected one of " + names);
    }

    // Fill the gaps with the figure defaults of the selected kind.
    for (const auto& [key, value] : kind_defaults(cfg.kind).items())
        if (!doc.contains(key)) doc[key] = value;

    cfg.initial = as_string(doc["initial"], "initial");
    cfg.omega_c = as_number(doc["omega_c"], "omega_c");
    cfg.omega_q = as_number(doc["omega_q"], "omega_q");
    cfg.g1 = as_number(doc["g1"], "g1");
    cfg.g2 = as_number(doc["g2"], "g2");
    cfg.kappa = as_number(doc["kappa"], "kappa");
    cfg.gamma = as_number(doc["gamma"], "gamma");
    cfg.n_max = as_int(doc["n_max"], "n_max");
    cfg.t_end = as_number(doc["t_end"], "t_end");

    if (!(cfg.omega_c > 0.0)) fail("omega_c", "must be > 0");
    if (cfg.omega_q < 0.0) fail("omega_q", "must be >= 0");
    if (cfg.g1 < 0.0) fail("g1", "must be >= 0");
    if (cfg.g2 < 0.0) fail("g2", "must be >= 0");
    if (cfg.kappa < 0.0) fail("kappa", "must be >= 0");
    if (cfg.gamma < 0.0) fail("gamma", "must be >= 0");
    if (cfg.n_max < 1) fail("n_max", "must be >= 1");
    if (!(cfg.t_end > 0.0)) fail("t_end", "must be > 0");

    if (doc.contains("initial_amplitudes")) {
        const json& amps = doc["initial_amplitudes"];
        if (!amps.is_array()) fail("initial_amplitudes", "expects an array of [re, im] pairs");
        for (const auto& pair : amps) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                fail("initial_amplitudes", "expects an array of [re, im] pairs");
            cfg.initial_amplitudes.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
    }
    if (cfg.initial == "custom" && cfg.initial_amplitudes.empty())
        fail("initial", "custom state needs a nonempty initial_amplitudes list");

    const json& pulses = doc["pulses"];
    if (!pulses.is_array()) fail("pulses", "expects an array of pulse objects");
    double min_tau = 0.0;
    for (std::size_t i = 0; i < pulses.size(); ++i) {
        const json& p = pulses[i];
        const std::string where = "pulses[" + std::to_string(i) + "]";
        if (!p.is_object()) fail(where, "expects an object {A, omega, tau, t_c}");
        check_keys(p, {"A", "omega", "tau", "t_c"}, where);
        PulseConfig pc;
        pc.amplitude = p.contains("A") ? as_number(p["A"], where + ".A") : kPi;
        pc.omega = p.contains("omega") ? as_number(p["omega"], where + ".omega") : 0.0;
        pc.tau = p.contains("tau") ? as_number(p["tau"], where + ".tau") : 0.1;
        if (!p.contains("t_c")) fail(where + ".t_c", "is required");
        pc.t_c = as_number(p["t_c"], where + ".t_c");
        if (!(pc.tau > 0.0)) fail(where + ".tau", "must be > 0");
        if (pc.t_c < 0.0) fail(where + ".t_c", "must be >= 0");
        min_tau = (i == 0) ? pc.tau : std::min(min_tau, pc.tau);
        cfg.pulses.push_back(pc);
    }

    if (doc.contains("numeric")) {
        const json& num = doc["numeric"];
        if (!num.is_object()) fail("numeric", "expects an object");
        check_keys(num,
                   {"dt_base", "dt_pulse", "record_stride", "tol_refine", "verify_steps",
                    "store_states"},
                   "numeric");
        if (num.contains("dt_base"))
            cfg.numeric.dt_base = as_number(num["dt_base"], "numeric.dt_base");
        if (num.contains("dt_pulse"))
            cfg.numeric.dt_pulse = as_number(num["dt_pulse"], "numeric.dt_pulse");
        if (num.contains("record_stride"))
            cfg.numeric.record_stride = as_int(num["record_stride"], "numeric.record_stride");
        if (num.contains("tol_refine"))
            cfg.numeric.tol_refine = as_number(num["tol_refine"], "numeric.tol_refine");
        if (num.contains("verify_steps"))
            cfg.numeric.verify_steps = as_bool(num["verify_steps"], "numeric.verify_steps");
        if (num.contains("store_states"))
            cfg.numeric.store_states = as_bool(num["store_states"], "numeric.store_states");
    }
    if (cfg.kind == "wigner_snapshots") cfg.numeric.store_states = true;

    // Make the auto step sizes concrete so the echoed config is standalone.
    if (cfg.numeric.dt_base == 0.0) cfg.numeric.dt_base = 2.0 * kPi / 200.0;
    if (cfg.numeric.dt_pulse == 0.0)
        cfg.numeric.dt_pulse =
            cfg.pulses.empty() ? cfg.numeric.dt_base
                               : std::min(cfg.numeric.dt_base, min_tau / 50.0);
    if (!(cfg.numeric.dt_base > 0.0)) fail("numeric.dt_base", "must be > 0");
    if (!(cfg.numeric.dt_pulse > 0.0)) fail("numeric.dt_pulse", "must be > 0");
    if (cfg.numeric.dt_pulse > cfg.numeric.dt_base)
        fail("numeric.dt_pulse", "must be <= numeric.dt_base");
    if (cfg.numeric.record_stride < 1) fail("numeric.record_stride", "must be >= 1");
    if (!(cfg.numeric.tol_refine > 0.0)) fail("numeric.tol_refine", "must be > 0");

    if (doc.contains("output_dir")) cfg.output_dir = as_string(doc["output_dir"], "output_dir");
    if (doc.contains("pulse_exponent_convention"))
        cfg.pulse_exponent_convention =
            as_string(doc["pulse_exponent_convention"], "pulse_exponent_convention");
    if (cfg.pulse_exponent_convention != "divide" &&
        cfg.pulse_exponent_convention != "multiply-as-printed")
        fail("pulse_exponent_convention", "expects 'divide' or 'multiply-as-printed'");

    if (doc.contains("snapshot_times"))
        cfg.snapshot_times = as_number_list(doc["snapshot_times"], "snapshot_times");
    for (double t : cfg.snapshot_times)
        if (t < 0.0 || t > cfg.t_end)
            fail("snapshot_times", "every time must lie in [0, t_end]");
    if (cfg.kind == "wigner_snapshots" && cfg.snapshot_times.empty())
        fail("snapshot_times", "wigner_snapshots needs a nonempty snapshot time list");

    if (doc.contains("g_values")) cfg.g_values = as_number_list(doc["g_values"], "g_values");
    if (cfg.kind == "coupling_sweep") {
        if (cfg.g_values.empty()) fail("g_values", "coupling_sweep needs a nonempty list");
        for (double g : cfg.g_values)
            if (!(g > 0.0)) fail("g_values", "every coupling must be > 0");
    }

    if (doc.contains("wigner_extent"))
        cfg.wigner_extent = as_number(doc["wigner_extent"], "wigner_extent");
    if (!(cfg.wigner_extent > 0.0)) fail("wigner_extent", "must be > 0");
    if (doc.contains("wigner_points"))
        cfg.wigner_points = as_int(doc["wigner_points"], "wigner_points");
    if (cfg.wigner_points < 2) fail("wigner_points", "must be >= 2");

    return cfg;
}

json parse_document(const std::string& text) {
    if (text.empty()) return json::object();
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("config document is not valid JSON");
    return doc;
}

void apply_set_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ValidationError("--set expects KEY=VALUE, got '" + assignment + "'");
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;  // unquoted strings like plus0

    json* node = &doc;
    std::size_t begin = 0;
    while (true) {
        const std::size_t dot = path.find('.', begin);
        const std::string part = path.substr(begin, dot - begin);
        if (part.empty())
            throw ValidationError("--set has an empty path segment in '" + path + "'");
        if (dot == std::string::npos) {
            (*node)[part] = value;
            break;
        }
        node = &(*node)[part];
        begin = dot + 1;
    }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    return config_from_json(parse_document(text));
}

RunConfig parse_config_with_overrides(const std::string& text,
                                      const std::vector<std::string>& overrides,
                                      const std::string& kind_pin) {
    json doc = parse_document(text);
    if (!doc.is_object()) throw ValidationError("config document must be a JSON object");
    if (!kind_pin.empty()) {
        if (doc.contains("kind") && doc["kind"] != kind_pin)
            throw ValidationError("this subcommand fixes kind=" + kind_pin +
                                  " but the config sets kind=" +
                                  doc["kind"].dump());
        doc["kind"] = kind_pin;
    }
    for (const std::string& assignment : overrides) apply_set_override(doc, assignment);
    return config_from_json(doc);
}

std::string config_to_json(const RunConfig& cfg) {
    json doc;
    doc["kind"] = cfg.kind;
    doc["initial"] = cfg.initial;
    if (!cfg.initial_amplitudes.empty()) {
        json amps = json::array();
        for (const auto& [re, im] : cfg.initial_amplitudes)
            amps.push_back(json::array({re, im}));
        doc["initial_amplitudes"] = amps;
    }
    doc["omega_c"] = cfg.omega_c;
    doc["omega_q"] = cfg.omega_q;
    doc["g1"] = cfg.g1;
    doc["g2"] = cfg.g2;
    doc["kappa"] = cfg.kappa;
    doc["gamma"] = cfg.gamma;
    doc["n_max"] = cfg.n_max;
    doc["t_end"] = cfg.t_end;
    json pulses = json::array();
    for (const PulseConfig& p : cfg.pulses)
        pulses.push_back(json{{"A", p.amplitude}, {"omega", p.omega}, {"tau", p.tau},
                              {"t_c", p.t_c}});
    doc["pulses"] = pulses;
    doc["numeric"] = json{{"dt_base", cfg.numeric.dt_base},
                          {"dt_pulse", cfg.numeric.dt_pulse},
                          {"record_stride", cfg.numeric.record_stride},
                          {"tol_refine", cfg.numeric.tol_refine},
                          {"verify_steps", cfg.numeric.verify_steps},
                          {"store_states", cfg.numeric.store_states}};
    doc["output_dir"] = cfg.output_dir;
    doc["pulse_exponent_convention"] = cfg.pulse_exponent_convention;
    if (!cfg.snapshot_times.empty()) doc["snapshot_times"] = cfg.snapshot_times;
    if (!cfg.g_values.empty()) doc["g_values"] = cfg.g_values;
    doc["wigner_extent"] = cfg.wigner_extent;
    doc["wigner_points"] = cfg.wigner_points;
    return doc.dump();
}

const std::vector<std::string>& known_scenario_kinds() { return kKinds; }

}  // namespace dscqed
