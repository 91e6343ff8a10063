#pragma once
// System Hamiltonians and the Gaussian control-pulse drive.
//
// H0   = omega_c a^dag a + 2 omega_q |f><f| + omega_q |e><e|
//        + g1 (a^dag + a)(|e><g| + |g><e|) + g2 (a^dag + a)(|f><e| + |e><f|)
// Hd   = Omega(t) (|f><e| + |e><f|), Omega real
// Heff = H0 - i (kappa/2) a^dag a - i (gamma/2)(|f><f| + |e><e|)   [+ Hd(t)]
//
// No rotating-wave approximation anywhere: the counter-rotating products are
// kept by construction.

#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dscqed/hilbert.hpp"

namespace dscqed {

/// All rates share one time unit; configuration files quote them in units of
/// omega_c and the config layer rescales before anything reaches this module.
struct SystemParams {
    double omega_c = 1.0;
    double omega_q = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double kappa = 0.0;
    double gamma = 0.0;

    void validate() const;

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// A Gaussian envelope is cut off at +-6 sigma; beyond that the drive is
/// treated as exactly zero (relative size below 1.6e-8 of the peak).
inline constexpr double kPulseWindowSigmas = 6.0;

enum class PulseExponentConvention {
    Divide,             // exp[-(t-t_c)^2 / (2 tau^2)], the normalized Gaussian
    MultiplyAsPrinted,  // exp[-(t-t_c)^2 * (2 tau^2)], selectable for comparison
};

/// One cosine-carrier Gaussian pulse
///   Omega(t) = area * cos(omega t) * G(t - t_center) / (tau sqrt(2 pi)).
/// With the Divide convention the integrated envelope is
/// area * cos(omega t_center) * exp(-omega^2 tau^2 / 2).
struct PulseSpec {
    double area = std::numbers::pi;
    double omega = 0.0;
    double tau = 0.1;
    double t_center = 0.0;
    PulseExponentConvention exponent_convention = PulseExponentConvention::Divide;

    void validate() const;
    double window_begin() const { return t_center - kPulseWindowSigmas * tau; }
    double window_end() const { return t_center + kPulseWindowSigmas * tau; }
};

double pulse_envelope(const PulseSpec& pulse, double t);

/// Pulses ordered by arrival time. Overlapping +-6 sigma windows are legal
/// (envelopes add) but reported as warnings.
class PulseSchedule {
  public:
    PulseSchedule() = default;
    explicit PulseSchedule(std::vector<PulseSpec> pulses);

    const std::vector<PulseSpec>& pulses() const { return pulses_; }
    const std::vector<std::string>& warnings() const { return warnings_; }
    bool empty() const { return pulses_.empty(); }

    /// Sum of all pulse envelopes; exactly zero outside every window.
    double envelope(double t) const;
    bool in_window(double t) const;

    /// Union of the pulse windows clipped to [t_begin, t_end], merged and
    /// sorted; empty intersections are dropped.
    std::vector<std::pair<double, double>> merged_windows(double t_begin,
                                                          double t_end) const;

  private:
    std::vector<PulseSpec> pulses_;
    std::vector<std::string> warnings_;
};

OperatorMatrix build_h0(const SystemParams& params, const HilbertSpace& space);

OperatorMatrix build_hd(const PulseSchedule& schedule, double t,
                        const HilbertSpace& space);

/// Time-independent part of the lossy Hamiltonian; the drive is added per
/// step by hamiltonian_at. Non-Hermitian whenever kappa > 0 or gamma > 0.
OperatorMatrix build_heff(const SystemParams& params, const HilbertSpace& space);

/// base + Hd(t); returns base untouched when t is outside every pulse window.
OperatorMatrix hamiltonian_at(const OperatorMatrix& base,
                              const PulseSchedule& schedule, double t);

/// The drive coupling pattern (|f><e| + |e><f|) tensored with the photon
/// identity; Hd(t) = envelope(t) * drive_coupling.
Matrix drive_coupling(const HilbertSpace& space);

}  // namespace dscqed
