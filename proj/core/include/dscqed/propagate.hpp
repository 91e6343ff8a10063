#pragma once
// Time evolution under a piecewise-constant-plus-pulse-window Hamiltonian.
//
// Outside pulse windows the generator is constant, so the state advances by
// a reused exact step operator exp(-i H dt). Inside a window [t_c - 6 tau,
// t_c + 6 tau] the exponential midpoint rule is used:
//     psi <- exp(-i H(t + dt/2) dt) psi,   dt = dt_pulse,
// which is second order with local error O(dt^3 ||dH/dt||). Probabilities are
// reported from the raw (possibly decaying) state; nothing is renormalized.

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dscqed/hilbert.hpp"
#include "dscqed/model.hpp"

namespace dscqed {

/// A sample whose top two Fock shells carry more than this total probability
/// aborts the run: the truncated ladder can no longer hold the wavepacket.
inline constexpr double kFockLeakThreshold = 1e-8;

struct PropagationOptions {
    double dt_base = 2.0 * std::numbers::pi / 200.0;
    double dt_pulse = 0.002;
    int record_stride = 1;
    double tol_refine = 1e-8;
    bool verify_steps = false;  // rerun with halved steps and compare
    bool store_states = false;

    void validate() const;

    friend bool operator==(const PropagationOptions&, const PropagationOptions&) = default;
};

/// Extra states whose squared overlap with psi(t) is recorded per sample.
struct ReferenceState {
    std::string name;
    StateVector state;
};

struct TrajectoryRecord {
    std::vector<double> times;
    std::vector<double> norm2;
    std::vector<double> parity_even;
    std::vector<double> parity_odd;
    std::vector<double> mean_photon;
    std::vector<Eigen::VectorXd> photon;  // P_n per sample, length n_max + 1
    std::vector<std::pair<std::string, std::vector<double>>> overlaps;
    std::vector<StateVector> states;      // filled only when store_states

    std::size_t samples() const { return times.size(); }
    const std::vector<double>& overlap_series(std::string_view name) const;
    std::size_t nearest_sample(double t) const;
};

/// exp(-i h dt) psi for general (also non-Hermitian) h, evaluated as a scaled
/// truncated Taylor series applied to the vector: the generator is split into
/// s substeps with one-norm <= 1 each, where the series remainder after 30
/// terms is below 1e-32.
StateVector expm_apply(const OperatorMatrix& h, double dt, const StateVector& psi);

/// Full step operator exp(-i h dt) via Pade scaling-and-squaring; used once
/// per constant segment and then reapplied per step.
Matrix expm_step_operator(const Matrix& h, double dt);

TrajectoryRecord propagate(const OperatorMatrix& base, const PulseSchedule& schedule,
                           const StateVector& psi0, double t_end,
                           const PropagationOptions& opts,
                           std::span<const ReferenceState> references = {});

/// Largest absolute difference between any recorded observable of two runs
/// sampled on the same grid.
double max_observable_deviation(const TrajectoryRecord& lhs, const TrajectoryRecord& rhs);

struct RefinementReport {
    TrajectoryRecord record;   // the run at the requested resolution
    double max_deviation = 0;  // against the run with every step halved
};

/// Runs the trajectory twice on the identical segment layout, the second time
/// with every step halved and the recording stride doubled so both runs sample
/// the same instants, and reports the largest observable change.
RefinementReport propagate_with_refinement_check(const OperatorMatrix& base,
                                                 const PulseSchedule& schedule,
                                                 const StateVector& psi0, double t_end,
                                                 const PropagationOptions& opts,
                                                 std::span<const ReferenceState> references = {});

}  // namespace dscqed
