#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace grover {

/// Largest qubit count for which dense 2^n x 2^n unitaries may be built.
inline constexpr int max_dense_qubits = 10;

enum class GateKind { hadamard, pauli_x, multi_controlled_z };

/// One gate in a circuit. `qubit` is ignored for multi_controlled_z, which
/// acts on all qubits of the register (flips the sign of |1...1>).
struct Gate {
    GateKind kind = GateKind::hadamard;
    int qubit = 0;

    static Gate hadamard(int qubit) { return {GateKind::hadamard, qubit}; }
    static Gate pauli_x(int qubit) { return {GateKind::pauli_x, qubit}; }
    static Gate multi_controlled_z() { return {GateKind::multi_controlled_z, 0}; }

    bool operator==(const Gate&) const = default;
};

/// A flat, strictly sequential gate list. gates[0] is applied first.
struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
};

/// A search problem: database of size 2^n with a non-empty set of marked
/// basis states. Targets are stored sorted ascending with no duplicates.
class SearchSpec {
public:
    SearchSpec(int n, std::vector<std::uint64_t> targets);

    int qubit_count() const { return n_; }
    std::uint64_t database_size() const { return std::uint64_t{1} << n_; }
    std::uint64_t target_count() const { return targets_.size(); }
    const std::vector<std::uint64_t>& targets() const { return targets_; }
    bool is_target(std::uint64_t index) const;

private:
    int n_;
    std::vector<std::uint64_t> targets_;
};

// Circuit builders. The single-target oracle conjugates a multi-controlled Z
// with X gates on every qubit whose target bit is 0; the multi-target oracle
// concatenates single-target oracles in ascending index order. The diffusion
// operator is the same construction for target |0...0> sandwiched between
// Hadamard layers, i.e. the reflection 1 - 2|s><s| about the uniform state.
Circuit build_single_oracle(int n, std::uint64_t target);
Circuit build_oracle(const SearchSpec& spec);
Circuit build_diffusion(int n);

/// Full search circuit: Hadamard preparation layer followed by k repetitions
/// of oracle then diffusion.
Circuit build_grover(const SearchSpec& spec, std::int64_t iterations);

/// Dense unitary of a single gate at register width n.
Eigen::MatrixXcd gate_matrix(int n, const Gate& gate);

/// Dense unitary of the whole circuit (product of gate matrices in
/// application order). Requires n <= max_dense_qubits.
Eigen::MatrixXcd to_matrix(const Circuit& circuit);

/// Stable textual form, one gate per line: "H q<i>" / "X q<i>" / "MCZ".
std::string format_circuit(const Circuit& circuit);

/// Bitstring of an index in ket order: leftmost character is qubit n-1.
std::string to_bitstring(std::uint64_t index, int n);

/// Kronecker product of two dense matrices.
template <class DerivedA, class DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Result out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace grover
