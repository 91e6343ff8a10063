#include "dscqed/hilbert.hpp"

#include <cmath>
#include <numbers>

namespace dscqed {

char level_symbol(EmitterLevel level) {
    switch (level) {
        case EmitterLevel::G: return 'g';
        case EmitterLevel::E: return 'e';
        case EmitterLevel::F: return 'f';
    }
    throw ValidationError("invalid EmitterLevel value");
}

EmitterLevel level_from_symbol(char symbol) {
    switch (symbol) {
        case 'g': case 'G': return EmitterLevel::G;
        case 'e': case 'E': return EmitterLevel::E;
        case 'f': case 'F': return EmitterLevel::F;
        default:
            throw ValidationError(std::string("unknown emitter level '") + symbol +
                                  "', expected one of g, e, f");
    }
}

int index_of(const HilbertSpace& space, EmitterLevel level, int n) {
    if (n < 0 || n > space.n_max)
        throw ValidationError("photon number n=" + std::to_string(n) +
                              " outside [0, n_max=" + std::to_string(space.n_max) + "]");
    return 3 * n + level_rank(level);
}

std::pair<EmitterLevel, int> basis_at(const HilbertSpace& space, int index) {
    if (index < 0 || index >= space.dim())
        throw ValidationError("basis index " + std::to_string(index) +
                              " outside [0, " + std::to_string(space.dim()) + ")");
    return {static_cast<EmitterLevel>(index % 3), index / 3};
}

OperatorSet build_operators(const HilbertSpace& space) {
    const int dim = space.dim();
    OperatorSet ops;
    ops.space = space;
    ops.a = Matrix::Zero(dim, dim);
    ops.p_g = Matrix::Zero(dim, dim);
    ops.p_e = Matrix::Zero(dim, dim);
    ops.p_f = Matrix::Zero(dim, dim);
    ops.sigma_eg = Matrix::Zero(dim, dim);
    ops.sigma_fe = Matrix::Zero(dim, dim);

    for (int n = 0; n <= space.n_max; ++n) {
        for (EmitterLevel level : {EmitterLevel::G, EmitterLevel::E, EmitterLevel::F}) {
            const int col = index_of(space, level, n);
            if (n >= 1) {
                // <level, n-1| a |level, n> = sqrt(n)
                ops.a(index_of(space, level, n - 1), col) = std::sqrt(double(n));
            }
        }
        ops.p_g(index_of(space, EmitterLevel::G, n), index_of(space, EmitterLevel::G, n)) = 1.0;
        ops.p_e(index_of(space, EmitterLevel::E, n), index_of(space, EmitterLevel::E, n)) = 1.0;
        ops.p_f(index_of(space, EmitterLevel::F, n), index_of(space, EmitterLevel::F, n)) = 1.0;
        ops.sigma_eg(index_of(space, EmitterLevel::E, n), index_of(space, EmitterLevel::G, n)) = 1.0;
        ops.sigma_fe(index_of(space, EmitterLevel::F, n), index_of(space, EmitterLevel::E, n)) = 1.0;
    }
    ops.a_dag = ops.a.adjoint();
    return ops;
}

std::string NamedState::label() const {
    switch (kind) {
        case Kind::Plus0: return "plus0";
        case Kind::Plus1: return "plus1";
        case Kind::Plus2: return "plus2";
        case Kind::Minus0: return "minus0";
        case Kind::Antisym0: return "antisym0";
        case Kind::Basis:
            return std::string("basis:") + level_symbol(level) + ":" + std::to_string(n);
        case Kind::Custom: return "custom";
    }
    return "?";
}

NamedState parse_named_state(const std::string& text) {
    NamedState state;
    if (text == "plus0") { state.kind = NamedState::Kind::Plus0; return state; }
    if (text == "plus1") { state.kind = NamedState::Kind::Plus1; return state; }
    if (text == "plus2") { state.kind = NamedState::Kind::Plus2; return state; }
    if (text == "minus0") { state.kind = NamedState::Kind::Minus0; return state; }
    if (text == "antisym0") { state.kind = NamedState::Kind::Antisym0; return state; }
    if (text == "custom") { state.kind = NamedState::Kind::Custom; return state; }
    if (text.rfind("basis:", 0) == 0) {
        const std::string rest = text.substr(6);
        const auto colon = rest.find(':');
        if (colon != 1 || rest.size() < 3)
            throw ValidationError("malformed basis state '" + text +
                                  "', expected basis:<g|e|f>:<n>");
        state.kind = NamedState::Kind::Basis;
        state.level = level_from_symbol(rest[0]);
        try {
            size_t used = 0;
            state.n = std::stoi(rest.substr(2), &used);
            if (used != rest.size() - 2) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ValidationError("malformed photon number in basis state '" + text + "'");
        }
        if (state.n < 0)
            throw ValidationError("basis state photon number must be >= 0 in '" + text + "'");
        return state;
    }
    throw ValidationError("unknown named state '" + text +
                          "'; expected plus0, plus1, plus2, minus0, antisym0, "
                          "basis:<g|e|f>:<n> or custom");
}

StateVector make_named_state(const HilbertSpace& space, const NamedState& name) {
    StateVector psi{space, Vector::Zero(space.dim())};
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    using Kind = NamedState::Kind;
    switch (name.kind) {
        case Kind::Plus0:
            psi.amp(index_of(space, EmitterLevel::G, 0)) = inv_sqrt2;
            psi.amp(index_of(space, EmitterLevel::F, 0)) = inv_sqrt2;
            return psi;
        case Kind::Antisym0:
            psi.amp(index_of(space, EmitterLevel::G, 0)) = inv_sqrt2;
            psi.amp(index_of(space, EmitterLevel::F, 0)) = -inv_sqrt2;
            return psi;
        case Kind::Minus0:
            psi.amp(index_of(space, EmitterLevel::E, 0)) = 1.0;
            return psi;
        case Kind::Plus1:
            psi.amp(index_of(space, EmitterLevel::E, 1)) = 1.0;
            return psi;
        case Kind::Plus2:
            if (space.n_max < 2)
                throw ValidationError("plus2 needs n_max >= 2, space has n_max=" +
                                      std::to_string(space.n_max));
            psi.amp(index_of(space, EmitterLevel::G, 2)) = inv_sqrt2;
            psi.amp(index_of(space, EmitterLevel::F, 2)) = inv_sqrt2;
            return psi;
        case Kind::Basis:
            psi.amp(index_of(space, name.level, name.n)) = 1.0;
            return psi;
        case Kind::Custom: {
            if (static_cast<int>(name.amplitudes.size()) != space.dim())
                throw ValidationError("custom state has " +
                                      std::to_string(name.amplitudes.size()) +
                                      " amplitudes, space dimension is " +
                                      std::to_string(space.dim()));
            for (int i = 0; i < space.dim(); ++i) psi.amp(i) = name.amplitudes[i];
            const double norm = psi.amp.norm();
            if (!(norm > 0.0))
                throw ValidationError("custom state has zero norm");
            psi.amp /= norm;
            return psi;
        }
    }
    throw ValidationError("invalid NamedState kind");
}

StateVector make_named_state(const HilbertSpace& space, const std::string& name) {
    return make_named_state(space, parse_named_state(name));
}

}  // namespace dscqed
