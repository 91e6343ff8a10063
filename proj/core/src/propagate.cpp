#include "dscqed/propagate.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>

#include "dscqed/symmetry.hpp"

namespace dscqed {

void PropagationOptions::validate() const {
    if (!(dt_base > 0.0) || !(dt_pulse > 0.0))
        throw ValidationError("dt_base and dt_pulse must be > 0");
    if (dt_pulse > dt_base)
        throw ValidationError("dt_pulse must be <= dt_base (got dt_pulse=" +
                              std::to_string(dt_pulse) + ", dt_base=" +
                              std::to_string(dt_base) + ")");
    if (record_stride < 1)
        throw ValidationError("record_stride must be >= 1");
    if (!(tol_refine > 0.0))
        throw ValidationError("tol_refine must be > 0");
}

const std::vector<double>& TrajectoryRecord::overlap_series(std::string_view name) const {
    for (const auto& [key, series] : overlaps) {
        if (key == name) return series;
    }
    throw ValidationError("no overlap series named '" + std::string(name) + "'");
}

std::size_t TrajectoryRecord::nearest_sample(double t) const {
    if (times.empty()) throw ValidationError("trajectory has no samples");
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return 0;
    if (it == times.end()) return times.size() - 1;
    const std::size_t hi = static_cast<std::size_t>(it - times.begin());
    return (*it - t < t - times[hi - 1]) ? hi : hi - 1;
}

namespace {

// exp(a) v by truncated Taylor series with one-norm scaling. With ||a/s||_1
// <= 1 the term ratio beats 1/k, so the tail after k_max = 30 terms is below
// 1/30! ~ 3.8e-33 relative to the partial sum.
Vector taylor_expm_multiply(const Matrix& a, Vector v) {
    constexpr int k_max = 30;
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    if (!std::isfinite(norm1)) throw NumericError("expm_apply: non-finite generator");
    const int s = std::max(1, static_cast<int>(std::ceil(norm1)));
    const Matrix b = a / static_cast<double>(s);
    for (int substep = 0; substep < s; ++substep) {
        Vector term = v;
        Vector acc = v;
        int quiet = 0;
        for (int k = 1; k <= k_max; ++k) {
            term = (b * term) / static_cast<double>(k);
            acc += term;
            if (term.cwiseAbs().maxCoeff() <=
                std::numeric_limits<double>::epsilon() * acc.cwiseAbs().maxCoeff()) {
                if (++quiet == 2) break;
            } else {
                quiet = 0;
            }
        }
        v = std::move(acc);
    }
    return v;
}

struct Segment {
    double t0 = 0.0;
    double t1 = 0.0;
    int n_steps = 0;
    bool window = false;
};

std::vector<Segment> build_segments(const PulseSchedule& schedule, double t_end,
                                    const PropagationOptions& opts) {
    const auto steps_for = [](double length, double dt) {
        return std::max(1, static_cast<int>(std::ceil(length / dt - 1e-12)));
    };
    std::vector<Segment> plan;
    double cursor = 0.0;
    for (const auto& [w0, w1] : schedule.merged_windows(0.0, t_end)) {
        if (w0 > cursor + 1e-15)
            plan.push_back({cursor, w0, steps_for(w0 - cursor, opts.dt_base), false});
        plan.push_back({w0, w1, steps_for(w1 - w0, opts.dt_pulse), true});
        cursor = w1;
    }
    if (t_end > cursor + 1e-15)
        plan.push_back({cursor, t_end, steps_for(t_end - cursor, opts.dt_base), false});
    return plan;
}

class Recorder {
  public:
    Recorder(const HilbertSpace& space, std::span<const ReferenceState> references,
             bool store_states)
        : space_(space), references_(references), store_states_(store_states) {
        parity_sign_.resize(space.dim());
        for (int i = 0; i < space.dim(); ++i) {
            const auto [level, n] = basis_at(space, i);
            parity_sign_[i] = parity_of_basis(level, n);
        }
        for (const ReferenceState& ref : references_) {
            if (ref.state.space != space)
                throw ValidationError("reference state '" + ref.name +
                                      "' lives on a different space");
            record_.overlaps.emplace_back(ref.name, std::vector<double>{});
        }
    }

    void sample(double t, const StateVector& psi) {
        record_.times.push_back(t);
        record_.norm2.push_back(psi.norm2());

        Eigen::VectorXd probs = Eigen::VectorXd::Zero(space_.n_max + 1);
        double even = 0.0, odd = 0.0, mean = 0.0;
        for (int i = 0; i < space_.dim(); ++i) {
            const double p = std::norm(psi.amp(i));
            const int n = i / 3;
            probs(n) += p;
            mean += n * p;
            (parity_sign_[i] > 0 ? even : odd) += p;
        }
        const double top_leak = probs(space_.n_max) + probs(space_.n_max - 1);
        if (top_leak > kFockLeakThreshold)
            throw TruncationError(
                "Fock truncation exceeded at t=" + std::to_string(t) +
                    ": top two shells carry " + std::to_string(top_leak) +
                    " probability (> 1e-8); rerun with n_max larger than " +
                    std::to_string(space_.n_max),
                t, space_.n_max);

        record_.parity_even.push_back(even);
        record_.parity_odd.push_back(odd);
        record_.mean_photon.push_back(mean);
        record_.photon.push_back(std::move(probs));
        for (std::size_t r = 0; r < references_.size(); ++r) {
            const Complex inner = references_[r].state.amp.dot(psi.amp);
            record_.overlaps[r].second.push_back(std::norm(inner));
        }
        if (store_states_) record_.states.push_back(psi);
    }

    TrajectoryRecord take() { return std::move(record_); }

  private:
    HilbertSpace space_;
    std::span<const ReferenceState> references_;
    bool store_states_;
    std::vector<int> parity_sign_;
    TrajectoryRecord record_;
};

TrajectoryRecord run_plan(const std::vector<Segment>& plan, const OperatorMatrix& base,
                          const PulseSchedule& schedule, const StateVector& psi0,
                          const PropagationOptions& opts,
                          std::span<const ReferenceState> references) {
    const Complex minus_i(0.0, -1.0);
    const Matrix drive = schedule.empty() ? Matrix() : drive_coupling(base.space);

    Recorder recorder(base.space, references, opts.store_states);
    StateVector psi = psi0;
    recorder.sample(0.0, psi);

    Matrix h_mid(base.space.dim(), base.space.dim());
    for (const Segment& seg : plan) {
        const double dt = (seg.t1 - seg.t0) / seg.n_steps;
        Matrix step;
        if (!seg.window) step = expm_step_operator(base.m, dt);
        for (int k = 1; k <= seg.n_steps; ++k) {
            if (seg.window) {
                const double t_mid = seg.t0 + (k - 0.5) * dt;
                h_mid = base.m;
                h_mid += schedule.envelope(t_mid) * drive;
                psi.amp = taylor_expm_multiply(minus_i * dt * h_mid, std::move(psi.amp));
            } else {
                psi.amp = step * psi.amp;
            }
            const bool at_boundary = (k == seg.n_steps);
            if (at_boundary || k % opts.record_stride == 0)
                recorder.sample(at_boundary ? seg.t1 : seg.t0 + k * dt, psi);
        }
    }
    return recorder.take();
}

}  // namespace

StateVector expm_apply(const OperatorMatrix& h, double dt, const StateVector& psi) {
    if (h.space != psi.space)
        throw ValidationError("expm_apply: operator and state live on different spaces");
    if (!(dt > 0.0)) throw ValidationError("expm_apply: dt must be > 0");
    if (!h.m.allFinite() || !psi.amp.allFinite())
        throw NumericError("expm_apply: non-finite entries in operator or state");
    const Complex minus_i(0.0, -1.0);
    return {psi.space, taylor_expm_multiply(minus_i * dt * h.m, psi.amp)};
}

Matrix expm_step_operator(const Matrix& h, double dt) {
    if (!h.allFinite()) throw NumericError("expm_step_operator: non-finite Hamiltonian");
    const Complex minus_i(0.0, -1.0);
    return (minus_i * dt * h).exp();
}

TrajectoryRecord propagate(const OperatorMatrix& base, const PulseSchedule& schedule,
                           const StateVector& psi0, double t_end,
                           const PropagationOptions& opts,
                           std::span<const ReferenceState> references) {
    if (opts.verify_steps) {
        RefinementReport report =
            propagate_with_refinement_check(base, schedule, psi0, t_end, opts, references);
        if (report.max_deviation > opts.tol_refine)
            throw ConvergenceError(
                "step refinement failed: halving dt changed a recorded observable by " +
                std::to_string(report.max_deviation) + " (tol_refine=" +
                std::to_string(opts.tol_refine) + "); reduce dt_base/dt_pulse");
        return std::move(report.record);
    }

    opts.validate();
    if (!(t_end > 0.0)) throw ValidationError("t_end must be > 0");
    if (base.space != psi0.space)
        throw ValidationError("propagate: operator and state live on different spaces");
    if (std::abs(psi0.norm2() - 1.0) > 1e-9)
        throw ValidationError("propagate: initial state is not normalized (norm2=" +
                              std::to_string(psi0.norm2()) + ")");
    if (!base.m.allFinite() || !psi0.amp.allFinite())
        throw NumericError("propagate: non-finite entries in operator or state");

    return run_plan(build_segments(schedule, t_end, opts), base, schedule, psi0, opts,
                    references);
}

double max_observable_deviation(const TrajectoryRecord& lhs, const TrajectoryRecord& rhs) {
    if (lhs.samples() != rhs.samples() || lhs.overlaps.size() != rhs.overlaps.size())
        throw ValidationError("trajectories were sampled differently");
    const auto series_dev = [](const std::vector<double>& a, const std::vector<double>& b) {
        double dev = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            dev = std::max(dev, std::abs(a[i] - b[i]));
        return dev;
    };
    double dev = series_dev(lhs.norm2, rhs.norm2);
    dev = std::max(dev, series_dev(lhs.parity_even, rhs.parity_even));
    dev = std::max(dev, series_dev(lhs.parity_odd, rhs.parity_odd));
    dev = std::max(dev, series_dev(lhs.mean_photon, rhs.mean_photon));
    for (std::size_t i = 0; i < lhs.photon.size(); ++i)
        dev = std::max(dev, (lhs.photon[i] - rhs.photon[i]).cwiseAbs().maxCoeff());
    for (std::size_t k = 0; k < lhs.overlaps.size(); ++k)
        dev = std::max(dev, series_dev(lhs.overlaps[k].second, rhs.overlaps[k].second));
    return dev;
}

RefinementReport propagate_with_refinement_check(const OperatorMatrix& base,
                                                 const PulseSchedule& schedule,
                                                 const StateVector& psi0, double t_end,
                                                 const PropagationOptions& opts,
                                                 std::span<const ReferenceState> references) {
    PropagationOptions base_opts = opts;
    base_opts.verify_steps = false;
    base_opts.validate();
    if (!(t_end > 0.0)) throw ValidationError("t_end must be > 0");
    if (base.space != psi0.space)
        throw ValidationError("propagate: operator and state live on different spaces");
    if (std::abs(psi0.norm2() - 1.0) > 1e-9)
        throw ValidationError("propagate: initial state is not normalized");

    const std::vector<Segment> plan = build_segments(schedule, t_end, base_opts);
    std::vector<Segment> halved = plan;
    for (Segment& seg : halved) seg.n_steps *= 2;
    PropagationOptions halved_opts = base_opts;
    halved_opts.record_stride *= 2;
    halved_opts.store_states = false;

    RefinementReport report;
    report.record = run_plan(plan, base, schedule, psi0, base_opts, references);
    const TrajectoryRecord fine =
        run_plan(halved, base, schedule, psi0, halved_opts, references);
    report.max_deviation = max_observable_deviation(report.record, fine);
    return report;
}

}  // namespace dscqed
