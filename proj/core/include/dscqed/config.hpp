#pragma once
// Run configuration: a flat JSON document (one nesting level for "numeric"
// and the pulse list). Unknown keys are rejected; missing keys resolve to the
// defaults of the selected scenario kind. All rates are given in units of
// omega_c, all times in units of 1/omega_c.

#include <array>
#include <string>
#include <vector>

#include "dscqed/errors.hpp"

namespace dscqed {

struct NumericConfig {
    double dt_base = 0.0;   // 0 = auto: T/200 with T = 2 pi / omega_c
    double dt_pulse = 0.0;  // 0 = auto: min(tau)/50, or dt_base without pulses
    int record_stride = 1;
    double tol_refine = 1e-8;
    bool verify_steps = false;
    bool store_states = false;

    friend bool operator==(const NumericConfig&, const NumericConfig&) = default;
};

struct PulseConfig {
    double amplitude = 0.0;  // key "A"
    double omega = 0.0;
    double tau = 0.1;
    double t_c = 0.0;

    friend bool operator==(const PulseConfig&, const PulseConfig&) = default;
};

struct RunConfig {
    std::string kind = "revival_probability";
    std::string initial = "plus0";
    std::vector<std::array<double, 2>> initial_amplitudes;  // custom states only

    double omega_c = 1.0;
    double omega_q = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;

    int n_max = 40;
    double t_end = 0.0;
    std::vector<PulseConfig> pulses;
    NumericConfig numeric;

    std::string output_dir = "out";
    std::string pulse_exponent_convention = "divide";  // or "multiply-as-printed"

    // kind-specific extras
    std::vector<double> snapshot_times;  // wigner_snapshots
    std::vector<double> g_values;        // coupling_sweep
    double wigner_extent = 5.0;
    int wigner_points = 161;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and fully resolves a configuration document: kind defaults are
/// substituted for missing keys, auto step sizes are made concrete, and every
/// constraint is checked. Errors name the offending key.
RunConfig parse_config(const std::string& text);

/// Same, with `key.path=value` overrides applied to the document first (values
/// are parsed as JSON where possible, otherwise taken as strings) and an
/// optional subcommand-pinned kind.
RunConfig parse_config_with_overrides(const std::string& text,
                                      const std::vector<std::string>& overrides,
                                      const std::string& kind_pin = "");

/// Compact deterministic JSON round trip:
/// parse_config(config_to_json(cfg)) == cfg.
std::string config_to_json(const RunConfig& config);

const std::vector<std::string>& known_scenario_kinds();

}  // namespace dscqed
