#include "dscqed/symmetry.hpp"

namespace dscqed {

int parity_of_basis(EmitterLevel level, int n) {
    if (n < 0) throw ValidationError("photon number must be >= 0");
    static constexpr int weight[3] = {0, 1, 2};
    return ((n + weight[level_rank(level)]) % 2 == 0) ? +1 : -1;
}

OperatorMatrix parity_operator(const HilbertSpace& space) {
    OperatorMatrix pi{space, Matrix::Zero(space.dim(), space.dim())};
    for (int i = 0; i < space.dim(); ++i) {
        const auto [level, n] = basis_at(space, i);
        pi.m(i, i) = static_cast<double>(parity_of_basis(level, n));
    }
    return pi;
}

ParityWeights parity_weights(const StateVector& state) {
    ParityWeights w;
    for (int i = 0; i < state.space.dim(); ++i) {
        const auto [level, n] = basis_at(state.space, i);
        const double p = std::norm(state.amp(i));
        if (parity_of_basis(level, n) > 0)
            w.even += p;
        else
            w.odd += p;
    }
    return w;
}

Complex effective_coupling(EmitterLevel bra_level, int bra_n, const StateVector& ket,
                           const OperatorMatrix& h0) {
    if (ket.space != h0.space)
        throw ValidationError("effective_coupling: state and operator live on "
                              "different spaces");
    const int row = index_of(h0.space, bra_level, bra_n);
    return (h0.m.row(row) * ket.amp).value();
}

}  // namespace dscqed
