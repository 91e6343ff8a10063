#include "dscqed/model.hpp"

#include <algorithm>
#include <cmath>

namespace dscqed {

void SystemParams::validate() const {
    if (!(omega_c > 0.0))
        throw ValidationError("omega_c must be > 0, got " + std::to_string(omega_c));
    if (omega_q < 0.0)
        throw ValidationError("omega_q must be >= 0, got " + std::to_string(omega_q));
    if (g1 < 0.0 || g2 < 0.0)
        throw ValidationError("couplings g1, g2 must be >= 0");
    if (kappa < 0.0 || gamma < 0.0)
        throw ValidationError("decay rates kappa, gamma must be >= 0");
}

void PulseSpec::validate() const {
    if (!(tau > 0.0))
        throw ValidationError("pulse tau must be > 0, got " + std::to_string(tau));
    if (t_center < 0.0)
        throw ValidationError("pulse t_c must be >= 0, got " + std::to_string(t_center));
    if (!std::isfinite(area) || !std::isfinite(omega))
        throw ValidationError("pulse area and omega must be finite");
}

double pulse_envelope(const PulseSpec& pulse, double t) {
    const double dt = t - pulse.t_center;
    const double exponent = pulse.exponent_convention == PulseExponentConvention::Divide
                                ? -dt * dt / (2.0 * pulse.tau * pulse.tau)
                                : -dt * dt * (2.0 * pulse.tau * pulse.tau);
    const double prefactor = pulse.area / (pulse.tau * std::sqrt(2.0 * std::numbers::pi));
    return prefactor * std::cos(pulse.omega * t) * std::exp(exponent);
}

PulseSchedule::PulseSchedule(std::vector<PulseSpec> pulses) : pulses_(std::move(pulses)) {
    for (const PulseSpec& p : pulses_) p.validate();
    std::stable_sort(pulses_.begin(), pulses_.end(),
                     [](const PulseSpec& a, const PulseSpec& b) {
                         return a.t_center < b.t_center;
                     });
    for (std::size_t i = 1; i < pulses_.size(); ++i) {
        if (pulses_[i].window_begin() < pulses_[i - 1].window_end()) {
            warnings_.push_back("pulse windows overlap: pulse at t_c=" +
                                std::to_string(pulses_[i - 1].t_center) +
                                " and pulse at t_c=" + std::to_string(pulses_[i].t_center) +
                                "; envelopes add within the overlap");
        }
    }
}

double PulseSchedule::envelope(double t) const {
    double sum = 0.0;
    for (const PulseSpec& p : pulses_) {
        if (t >= p.window_begin() && t <= p.window_end()) sum += pulse_envelope(p, t);
    }
    return sum;
}

bool PulseSchedule::in_window(double t) const {
    for (const PulseSpec& p : pulses_) {
        if (t >= p.window_begin() && t <= p.window_end()) return true;
    }
    return false;
}

std::vector<std::pair<double, double>> PulseSchedule::merged_windows(double t_begin,
                                                                     double t_end) const {
    std::vector<std::pair<double, double>> clipped;
    for (const PulseSpec& p : pulses_) {
        const double lo = std::max(p.window_begin(), t_begin);
        const double hi = std::min(p.window_end(), t_end);
        if (hi > lo) clipped.emplace_back(lo, hi);
    }
    std::sort(clipped.begin(), clipped.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& w : clipped) {
        if (!merged.empty() && w.first <= merged.back().second)
            merged.back().second = std::max(merged.back().second, w.second);
        else
            merged.push_back(w);
    }
    return merged;
}

OperatorMatrix build_h0(const SystemParams& params, const HilbertSpace& space) {
    params.validate();
    const OperatorSet ops = build_operators(space);
    OperatorMatrix h{space, Matrix(space.dim(), space.dim())};
    const Matrix x = ops.a_dag + ops.a;
    h.m = params.omega_c * (ops.a_dag * ops.a) + 2.0 * params.omega_q * ops.p_f +
          params.omega_q * ops.p_e +
          params.g1 * (x * (ops.sigma_eg + ops.sigma_eg.adjoint())) +
          params.g2 * (x * (ops.sigma_fe + ops.sigma_fe.adjoint()));
    return h;
}

OperatorMatrix build_hd(const PulseSchedule& schedule, double t, const HilbertSpace& space) {
    OperatorMatrix h{space, Matrix::Zero(space.dim(), space.dim())};
    const double amplitude = schedule.envelope(t);
    if (amplitude != 0.0) h.m = amplitude * drive_coupling(space);
    return h;
}

OperatorMatrix build_heff(const SystemParams& params, const HilbertSpace& space) {
    OperatorMatrix h = build_h0(params, space);
    if (params.kappa == 0.0 && params.gamma == 0.0) return h;
    const Complex half_i(0.0, 0.5);
    for (int n = 0; n <= space.n_max; ++n) {
        for (EmitterLevel level : {EmitterLevel::G, EmitterLevel::E, EmitterLevel::F}) {
            const int i = index_of(space, level, n);
            double rate = params.kappa * n;
            if (level != EmitterLevel::G) rate += params.gamma;
            h.m(i, i) -= half_i * rate;
        }
    }
    return h;
}

OperatorMatrix hamiltonian_at(const OperatorMatrix& base, const PulseSchedule& schedule,
                              double t) {
    if (!schedule.in_window(t)) return base;
    OperatorMatrix h = base;
    h.m += schedule.envelope(t) * drive_coupling(base.space);
    return h;
}

Matrix drive_coupling(const HilbertSpace& space) {
    Matrix d = Matrix::Zero(space.dim(), space.dim());
    for (int n = 0; n <= space.n_max; ++n) {
        const int e = index_of(space, EmitterLevel::E, n);
        const int f = index_of(space, EmitterLevel::F, n);
        d(f, e) = 1.0;
        d(e, f) = 1.0;
    }
    return d;
}

}  // namespace dscqed
