#pragma once

#include "grover/circuit.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace grover {

/// Register width cap: 2^24 complex doubles is about 256 MB of amplitudes.
inline constexpr int max_state_qubits = 24;

/// An n-qubit register as a dense vector of 2^n complex amplitudes.
/// Index i encodes the basis state |q_{n-1}...q_0> with qubit 0 the least
/// significant bit of i.
template <class Scalar = double>
struct BasicState {
    using Complex = std::complex<Scalar>;
    using Vector = Eigen::Vector<Complex, Eigen::Dynamic>;

    int n = 0;
    Vector amplitudes;
};

using State = BasicState<double>;

namespace detail {

inline void check_qubit_count(int n) {
    if (n < 1 || n > max_state_qubits)
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(max_state_qubits) + "], got " +
                                    std::to_string(n));
}

template <class Scalar>
void check_qubit_index(const BasicState<Scalar>& state, int qubit) {
    if (qubit < 0 || qubit >= state.n)
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.n) + " qubits");
}

}  // namespace detail

/// Equal superposition of all basis states, 1/sqrt(2^n) each.
template <class Scalar = double>
BasicState<Scalar> uniform_state(int n) {
    detail::check_qubit_count(n);
    BasicState<Scalar> state;
    state.n = n;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Scalar amp = Scalar{1} / std::sqrt(static_cast<Scalar>(dim));
    state.amplitudes.setConstant(dim, std::complex<Scalar>{amp, Scalar{0}});
    return state;
}

/// Computational basis state |index>.
template <class Scalar = double>
BasicState<Scalar> basis_state(int n, std::uint64_t index) {
    detail::check_qubit_count(n);
    if (index >= (std::uint64_t{1} << n))
        throw std::out_of_range("basis index out of range");
    BasicState<Scalar> state;
    state.n = n;
    state.amplitudes.setZero(Eigen::Index{1} << n);
    state.amplitudes[static_cast<Eigen::Index>(index)] = std::complex<Scalar>{1, 0};
    return state;
}

/// Hadamard on one qubit: for each index pair (i, i + 2^qubit) with the bit
/// clear in i, amplitudes (a, b) become ((a+b)/sqrt2, (a-b)/sqrt2).
template <class Scalar>
void apply_hadamard(BasicState<Scalar>& state, int qubit) {
    detail::check_qubit_index(state, qubit);
    const Eigen::Index half = Eigen::Index{1} << qubit;
    const Eigen::Index dim = state.amplitudes.size();
    const Scalar inv_sqrt2 = Scalar{1} / std::sqrt(Scalar{2});
    for (Eigen::Index base = 0; base < dim; base += 2 * half) {
        for (Eigen::Index low = base; low < base + half; ++low) {
            const auto a = state.amplitudes[low];
            const auto b = state.amplitudes[low + half];
            state.amplitudes[low] = (a + b) * inv_sqrt2;
            state.amplitudes[low + half] = (a - b) * inv_sqrt2;
        }
    }
}

/// Pauli X on one qubit: swaps amplitudes at i and i XOR 2^qubit.
template <class Scalar>
void apply_x(BasicState<Scalar>& state, int qubit) {
    detail::check_qubit_index(state, qubit);
    const Eigen::Index half = Eigen::Index{1} << qubit;
    const Eigen::Index dim = state.amplitudes.size();
    for (Eigen::Index base = 0; base < dim; base += 2 * half)
        for (Eigen::Index low = base; low < base + half; ++low)
            std::swap(state.amplitudes[low], state.amplitudes[low + half]);
}

/// (n-1)-controlled Z: negates the amplitude of |1...1>. At n = 1 this is a
/// plain Z gate.
template <class Scalar>
void apply_mcz(BasicState<Scalar>& state) {
    state.amplitudes[state.amplitudes.size() - 1] = -state.amplitudes[state.amplitudes.size() - 1];
}

/// Applies gates in list order. The circuit must match the register width.
template <class Scalar>
void apply_circuit(BasicState<Scalar>& state, const Circuit& circuit) {
    if (circuit.n != state.n)
        throw std::invalid_argument("circuit is for " + std::to_string(circuit.n) +
                                    " qubits, state has " + std::to_string(state.n));
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
        case GateKind::hadamard:
            apply_hadamard(state, gate.qubit);
            break;
        case GateKind::pauli_x:
            apply_x(state, gate.qubit);
            break;
        case GateKind::multi_controlled_z:
            apply_mcz(state);
            break;
        }
    }
}

/// Total probability of measuring any of the given basis states.
template <class Scalar>
Scalar success_probability_of(const BasicState<Scalar>& state,
                              std::span<const std::uint64_t> targets) {
    const auto dim = static_cast<std::uint64_t>(state.amplitudes.size());
    Scalar total{0};
    for (std::uint64_t t : targets) {
        if (t >= dim)
            throw std::out_of_range("target index " + std::to_string(t) + " out of range");
        total += std::norm(state.amplitudes[static_cast<Eigen::Index>(t)]);
    }
    return total;
}

/// |sum of |a_i|^2 - 1|, the deviation from unit norm.
template <class Scalar>
Scalar norm_error(const BasicState<Scalar>& state) {
    return std::abs(state.amplitudes.squaredNorm() - Scalar{1});
}

}  // namespace grover
