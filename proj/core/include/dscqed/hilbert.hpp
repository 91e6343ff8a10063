#pragma once
// Truncated joint Hilbert space of a three-level ladder emitter and a single
// bosonic mode: basis indexing, elementary operators, and named states.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "dscqed/errors.hpp"

namespace dscqed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ladder levels |g> < |e> < |f>; only g<->e and e<->f couple to the mode.
enum class EmitterLevel : int { G = 0, E = 1, F = 2 };

constexpr int level_rank(EmitterLevel level) { return static_cast<int>(level); }

char level_symbol(EmitterLevel level);
EmitterLevel level_from_symbol(char symbol);

/// Fock space truncated at n_max photons, tensored with the three levels.
/// The basis index is 3*n + rank(level), so each Fock shell holds the three
/// emitter levels contiguously and the photon ladder stays block-tridiagonal.
struct HilbertSpace {
    int n_max = 40;

    HilbertSpace() = default;
    explicit HilbertSpace(int n_max_in) : n_max(n_max_in) {
        if (n_max < 1)
            throw ValidationError("HilbertSpace: n_max must be >= 1, got " +
                                  std::to_string(n_max));
    }

    int dim() const { return 3 * (n_max + 1); }

    friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;
};

int index_of(const HilbertSpace& space, EmitterLevel level, int n);

/// Inverse of index_of.
std::pair<EmitterLevel, int> basis_at(const HilbertSpace& space, int index);

struct StateVector {
    HilbertSpace space;
    Vector amp;

    double norm2() const { return amp.squaredNorm(); }
};

struct OperatorMatrix {
    HilbertSpace space;
    Matrix m;
};

/// Elementary operators on the joint space. a acts on the mode (emitter
/// identity implied); p_g/p_e/p_f are emitter projectors; sigma_eg = |e><g|,
/// sigma_fe = |f><e|, both tensored with the photon identity.
struct OperatorSet {
    HilbertSpace space;
    Matrix a;
    Matrix a_dag;
    Matrix p_g;
    Matrix p_e;
    Matrix p_f;
    Matrix sigma_eg;
    Matrix sigma_fe;
};

OperatorSet build_operators(const HilbertSpace& space);

/// Initial-state menu. The symmetric/antisymmetric pairs live in the n-photon
/// shell: plus0 = (|g0>+|f0>)/sqrt2, antisym0 = (|g0>-|f0>)/sqrt2,
/// minus0 = |e0>, plus1 = |e1>, plus2 = (|g2>+|f2>)/sqrt2.
struct NamedState {
    enum class Kind { Plus0, Plus1, Plus2, Minus0, Antisym0, Basis, Custom };

    Kind kind = Kind::Plus0;
    EmitterLevel level = EmitterLevel::G;      // Basis only
    int n = 0;                                 // Basis only
    std::vector<Complex> amplitudes;           // Custom only

    std::string label() const;
};

/// Accepts "plus0", "plus1", "plus2", "minus0", "antisym0", "basis:<g|e|f>:<n>"
/// or "custom" (amplitudes supplied separately).
NamedState parse_named_state(const std::string& text);

StateVector make_named_state(const HilbertSpace& space, const NamedState& name);
StateVector make_named_state(const HilbertSpace& space, const std::string& name);

}  // namespace dscqed
