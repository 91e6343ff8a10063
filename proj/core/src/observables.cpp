#include "dscqed/observables.hpp"

#include <cmath>
#include <numbers>

namespace dscqed {

PhotonDistribution photon_distribution(const StateVector& psi) {
    PhotonDistribution dist;
    dist.probs = Eigen::VectorXd::Zero(psi.space.n_max + 1);
    for (int i = 0; i < psi.space.dim(); ++i) dist.probs(i / 3) += std::norm(psi.amp(i));
    return dist;
}

double mean_photon_number(const PhotonDistribution& dist) {
    double mean = 0.0;
    for (int n = 0; n < dist.probs.size(); ++n) mean += n * dist.probs(n);
    return mean;
}

double overlap_probability(const StateVector& psi, const StateVector& phi) {
    if (psi.space != phi.space)
        throw ValidationError("overlap_probability: states live on different spaces");
    return std::norm(psi.amp.dot(phi.amp));
}

CavityDensity reduced_cavity_density(const StateVector& psi) {
    const int n_photon = psi.space.n_max + 1;
    CavityDensity density;
    density.rho = Eigen::MatrixXcd::Zero(n_photon, n_photon);
    for (int m = 0; m < n_photon; ++m) {
        for (int n = 0; n < n_photon; ++n) {
            Complex sum = 0.0;
            for (int l = 0; l < 3; ++l)
                sum += psi.amp(3 * m + l) * std::conj(psi.amp(3 * n + l));
            density.rho(m, n) = sum;
        }
    }
    return density;
}

Eigen::VectorXd wigner_axis(double extent, int points) {
    if (!(extent > 0.0)) throw ValidationError("wigner extent must be > 0");
    if (points < 2) throw ValidationError("wigner axis needs at least 2 points");
    return Eigen::VectorXd::LinSpaced(points, -extent, extent);
}

namespace {

// L_k^(d)(z) for k = 0..k_max, d = 0..d_max, upward in k:
//   k L_k = (2k - 1 + d - z) L_(k-1) - (k - 1 + d) L_(k-2).
Eigen::MatrixXd laguerre_table(int k_max, int d_max, double z) {
    Eigen::MatrixXd lag(k_max + 1, d_max + 1);
    for (int d = 0; d <= d_max; ++d) {
        lag(0, d) = 1.0;
        if (k_max >= 1) lag(1, d) = 1.0 + d - z;
        for (int k = 2; k <= k_max; ++k)
            lag(k, d) = ((2.0 * k - 1.0 + d - z) * lag(k - 1, d) -
                         (k - 1.0 + d) * lag(k - 2, d)) /
                        k;
    }
    return lag;
}

}  // namespace

Complex wigner_value(const CavityDensity& density, double x, double y) {
    const int n_photon = static_cast<int>(density.rho.rows());
    const int n_top = n_photon - 1;

    const Complex alpha(x / std::numbers::sqrt2, y / std::numbers::sqrt2);
    const Complex beta = 2.0 * alpha;
    const double z = std::norm(beta);
    const double abs_beta = std::sqrt(z);

    const Eigen::MatrixXd lag = laguerre_table(n_top, n_top, z);

    // Unit phases u^d and (-conj(u))^d of the displacement argument.
    const Complex u = abs_beta > 0.0 ? beta / abs_beta : Complex(1.0, 0.0);
    std::vector<Complex> phase_up(n_photon), phase_dn(n_photon);
    phase_up[0] = phase_dn[0] = 1.0;
    for (int d = 1; d <= n_top; ++d) {
        phase_up[d] = phase_up[d - 1] * u;
        phase_dn[d] = phase_dn[d - 1] * (-std::conj(u));
    }

    std::vector<double> half_log_fact(n_photon, 0.0);
    for (int k = 1; k <= n_top; ++k) half_log_fact[k] = 0.5 * std::lgamma(k + 1.0);

    // W = (1/pi) sum_{m,n} rho[m,n] (-1)^m <n|D(beta)|m>.
    Complex sum = 0.0;
    for (int m = 0; m <= n_top; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        for (int n = 0; n <= n_top; ++n) {
            const int lo = std::min(m, n);
            const int d = std::abs(n - m);
            if (d > 0 && abs_beta == 0.0) continue;
            const double magnitude =
                std::exp(half_log_fact[lo] - half_log_fact[std::max(m, n)] - 0.5 * z +
                         d * (d > 0 ? std::log(abs_beta) : 0.0));
            const Complex phase = (n >= m) ? phase_up[d] : phase_dn[d];
            sum += density.rho(m, n) * sign * magnitude * phase * lag(lo, d);
        }
    }
    return sum / std::numbers::pi;
}

WignerGrid wigner(const CavityDensity& density, const Eigen::VectorXd& xs,
                  const Eigen::VectorXd& ys) {
    if (xs.size() == 0 || ys.size() == 0)
        throw ValidationError("wigner grids must be nonempty");
    for (int i = 1; i < xs.size(); ++i)
        if (!(xs(i) > xs(i - 1))) throw ValidationError("wigner x grid must be ascending");
    for (int i = 1; i < ys.size(); ++i)
        if (!(ys(i) > ys(i - 1))) throw ValidationError("wigner y grid must be ascending");

    WignerGrid grid;
    grid.xs = xs;
    grid.ys = ys;
    grid.w.resize(ys.size(), xs.size());
    for (int iy = 0; iy < ys.size(); ++iy)
        for (int ix = 0; ix < xs.size(); ++ix)
            grid.w(iy, ix) = wigner_value(density, xs(ix), ys(iy)).real();
    return grid;
}

}  // namespace dscqed
