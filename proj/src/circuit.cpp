#include "grover/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace grover {

namespace {

void check_circuit_qubits(int n) {
    if (n < 1 || n > 63)
        throw std::invalid_argument("circuit qubit count must be in [1, 63], got " +
                                    std::to_string(n));
}

void append(Circuit& circuit, const Circuit& tail) {
    circuit.gates.insert(circuit.gates.end(), tail.gates.begin(), tail.gates.end());
}

}  // namespace

SearchSpec::SearchSpec(int n, std::vector<std::uint64_t> targets) : n_(n), targets_(std::move(targets)) {
    check_circuit_qubits(n);
    if (targets_.empty())
        throw std::invalid_argument("target set must not be empty");
    std::sort(targets_.begin(), targets_.end());
    if (std::adjacent_find(targets_.begin(), targets_.end()) != targets_.end())
        throw std::invalid_argument("target set contains duplicates");
    if (targets_.back() >= database_size())
        throw std::out_of_range("target index " + std::to_string(targets_.back()) +
                                " out of range for " + std::to_string(n) + " qubits");
}

bool SearchSpec::is_target(std::uint64_t index) const {
    return std::binary_search(targets_.begin(), targets_.end(), index);
}

Circuit build_single_oracle(int n, std::uint64_t target) {
    check_circuit_qubits(n);
    if (target >= (std::uint64_t{1} << n))
        throw std::out_of_range("oracle target out of range");
    Circuit circuit{n, {}};
    // X on every qubit whose target bit is 0 maps |target> to |1...1>, the
    // MCZ flips its sign, and the same X layer undoes the mapping.
    std::vector<Gate> flips;
    for (int q = 0; q < n; ++q)
        if (((target >> q) & 1) == 0)
            flips.push_back(Gate::pauli_x(q));
    circuit.gates = flips;
    circuit.gates.push_back(Gate::multi_controlled_z());
    circuit.gates.insert(circuit.gates.end(), flips.begin(), flips.end());
    return circuit;
}

Circuit build_oracle(const SearchSpec& spec) {
    Circuit circuit{spec.qubit_count(), {}};
    for (std::uint64_t target : spec.targets())
        append(circuit, build_single_oracle(spec.qubit_count(), target));
    return circuit;
}

Circuit build_diffusion(int n) {
    check_circuit_qubits(n);
    Circuit circuit{n, {}};
    for (int q = 0; q < n; ++q)
        circuit.gates.push_back(Gate::hadamard(q));
    append(circuit, build_single_oracle(n, 0));
    for (int q = 0; q < n; ++q)
        circuit.gates.push_back(Gate::hadamard(q));
    return circuit;
}

Circuit build_grover(const SearchSpec& spec, std::int64_t iterations) {
    if (iterations < 0)
        throw std::invalid_argument("iteration count must be >= 0");
    Circuit circuit{spec.qubit_count(), {}};
    for (int q = 0; q < spec.qubit_count(); ++q)
        circuit.gates.push_back(Gate::hadamard(q));
    const Circuit oracle = build_oracle(spec);
    const Circuit diffusion = build_diffusion(spec.qubit_count());
    for (std::int64_t i = 0; i < iterations; ++i) {
        append(circuit, oracle);
        append(circuit, diffusion);
    }
    return circuit;
}

Eigen::MatrixXcd gate_matrix(int n, const Gate& gate) {
    check_circuit_qubits(n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (gate.kind == GateKind::multi_controlled_z) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
        m(dim - 1, dim - 1) = -1.0;
        return m;
    }
    if (gate.qubit < 0 || gate.qubit >= n)
        throw std::out_of_range("gate qubit out of range");
    Eigen::Matrix2cd single;
    if (gate.kind == GateKind::hadamard) {
        const double s = 1.0 / std::sqrt(2.0);
        single << s, s, s, -s;
    } else {
        single << 0, 1, 1, 0;
    }
    // Qubit 0 is the least significant index bit, so it is the rightmost
    // tensor factor: U = I_{2^(n-1-q)} (x) single (x) I_{2^q}.
    const Eigen::Index left = Eigen::Index{1} << (n - 1 - gate.qubit);
    const Eigen::Index right = Eigen::Index{1} << gate.qubit;
    return kronecker(Eigen::MatrixXcd::Identity(left, left),
                     kronecker(single, Eigen::MatrixXcd::Identity(right, right)));
}

Eigen::MatrixXcd to_matrix(const Circuit& circuit) {
    check_circuit_qubits(circuit.n);
    if (circuit.n > max_dense_qubits)
        throw std::invalid_argument("dense unitary limited to " +
                                    std::to_string(max_dense_qubits) + " qubits, got " +
                                    std::to_string(circuit.n));
    const Eigen::Index dim = Eigen::Index{1} << circuit.n;
    Eigen::MatrixXcd unitary = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Gate& gate : circuit.gates)
        unitary = gate_matrix(circuit.n, gate) * unitary;
    return unitary;
}

std::string format_circuit(const Circuit& circuit) {
    std::string out;
    for (const Gate& gate : circuit.gates) {
        switch (gate.kind) {
        case GateKind::hadamard:
            out += "H q" + std::to_string(gate.qubit);
            break;
        case GateKind::pauli_x:
            out += "X q" + std::to_string(gate.qubit);
            break;
        case GateKind::multi_controlled_z:
            out += "MCZ";
            break;
        }
        out += '\n';
    }
    return out;
}

std::string to_bitstring(std::uint64_t index, int n) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q)
        if ((index >> q) & 1)
            bits[static_cast<std::size_t>(n - 1 - q)] = '1';
    return bits;
}

}  // namespace grover
