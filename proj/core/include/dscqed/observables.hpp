#pragma once
// Photon statistics, overlaps, the reduced cavity state, and its Wigner
// function over the quadratures x = (a^dag + a)/sqrt2, y = (i a^dag - i a)/sqrt2.

#include <Eigen/Dense>

#include "dscqed/hilbert.hpp"

namespace dscqed {

struct PhotonDistribution {
    Eigen::VectorXd probs;  // P_n, n = 0..n_max; sums to the state's norm2
};

PhotonDistribution photon_distribution(const StateVector& psi);

double mean_photon_number(const PhotonDistribution& dist);

/// |<psi|phi>|^2, conjugate-linear in the first argument.
double overlap_probability(const StateVector& psi, const StateVector& phi);

/// Cavity density matrix with the emitter traced out:
/// rho[m,n] = sum_level amp(level,m) * conj(amp(level,n)).
struct CavityDensity {
    Eigen::MatrixXcd rho;
};

CavityDensity reduced_cavity_density(const StateVector& psi);

struct WignerGrid {
    Eigen::VectorXd xs;
    Eigen::VectorXd ys;
    Eigen::MatrixXd w;  // w(iy, ix) = W(xs[ix], ys[iy])
};

/// Symmetric uniform quadrature axis [-extent, extent] with `points` nodes.
Eigen::VectorXd wigner_axis(double extent, int points);

/// W at a single phase-space point, before discarding the (cancelling)
/// imaginary part:
///   W(x, y) = (1/pi) Tr[rho D(2 alpha) Pi],  alpha = (x + i y)/sqrt2,
/// with displacement matrix elements in generalized-Laguerre closed form,
///   <n|D(b)|m> = sqrt(m!/n!) b^(n-m) e^(-|b|^2/2) L_m^(n-m)(|b|^2), n >= m,
/// evaluated by upward recurrence; prefactors are combined in log space so
/// large n and |b| cannot overflow. Vacuum gives 1/pi at the origin and the
/// grid integral recovers Tr[rho].
Complex wigner_value(const CavityDensity& density, double x, double y);

WignerGrid wigner(const CavityDensity& density, const Eigen::VectorXd& xs,
                  const Eigen::VectorXd& ys);

}  // namespace dscqed
