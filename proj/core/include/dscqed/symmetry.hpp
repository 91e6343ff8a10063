#pragma once
// Z2 parity of the joint system and the dark-state diagnostics.
//
// Pi = (|f><f| - |e><e| + |g><g|) (-1)^(a^dag a) commutes with H0 and
// anticommutes with the drive, so undriven dynamics stay inside one parity
// chain. Parity is read off the index map, never exponentiated.

#include <complex>

#include "dscqed/hilbert.hpp"

namespace dscqed {

/// (-1)^(n + w) with w(G)=0, w(E)=1, w(F)=2; returns +1 or -1.
int parity_of_basis(EmitterLevel level, int n);

/// Probability mass on the even (+1) and odd (-1) chains; they always add up
/// to the squared norm of the state.
struct ParityWeights {
    double even = 0.0;
    double odd = 0.0;
};

OperatorMatrix parity_operator(const HilbertSpace& space);

ParityWeights parity_weights(const StateVector& state);

/// Matrix element <bra_level, bra_n | h0 | ket>. For ket = (|g n> - |f n>)/sqrt2
/// and bra = |e n+1> this is (g1 - g2) sqrt(n+1) / sqrt2: the antisymmetric
/// combination decouples exactly when g1 == g2.
Complex effective_coupling(EmitterLevel bra_level, int bra_n, const StateVector& ket,
                           const OperatorMatrix& h0);

}  // namespace dscqed
