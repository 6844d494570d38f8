#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dense_reference.hpp"
#include "grover/circuit.hpp"
#include "grover/planner.hpp"
#include "grover/state.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace grover;
using Complex = std::complex<double>;

namespace {

double max_entry_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

std::vector<Gate> hadamard_layer(int n) {
    std::vector<Gate> gates;
    for (int q = 0; q < n; ++q)
        gates.push_back(Gate::hadamard(q));
    return gates;
}

}  // namespace

TEST_CASE("SearchSpec validates and canonicalizes its target set") {
    const SearchSpec spec(3, {6, 1, 4});
    CHECK(spec.targets() == std::vector<std::uint64_t>{1, 4, 6});
    CHECK(spec.database_size() == 8);
    CHECK(spec.target_count() == 3);
    CHECK(spec.is_target(4));
    CHECK(!spec.is_target(5));

    CHECK_THROWS_AS(SearchSpec(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpec(3, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SearchSpec(3, {8}), std::out_of_range);
}

TEST_CASE("single-target oracle is an X-conjugated MCZ") {
    const Circuit oracle = build_single_oracle(4, 13);  // |1101>: only bit 1 is 0
    const std::vector<Gate> expected{Gate::pauli_x(1), Gate::multi_controlled_z(),
                                     Gate::pauli_x(1)};
    CHECK(oracle.gates == expected);

    // no zero bits: bare MCZ, i.e. a plain Z at n=1
    CHECK(build_single_oracle(1, 1).gates == std::vector<Gate>{Gate::multi_controlled_z()});

    const Circuit zero_oracle = build_single_oracle(2, 0);
    const std::vector<Gate> zero_expected{Gate::pauli_x(0), Gate::pauli_x(1),
                                          Gate::multi_controlled_z(), Gate::pauli_x(0),
                                          Gate::pauli_x(1)};
    CHECK(zero_oracle.gates == zero_expected);
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Identity(4, 4);
    diag(0, 0) = -1.0;
    CHECK(max_entry_deviation(to_matrix(zero_oracle), diag) < 1e-12);

    CHECK_THROWS_AS(build_single_oracle(2, 4), std::out_of_range);
}

TEST_CASE("single-target oracle flips exactly the target basis state") {
    for (std::uint64_t target = 0; target < 8; ++target) {
        const Circuit oracle = build_single_oracle(3, target);
        for (std::uint64_t b = 0; b < 8; ++b) {
            State s = basis_state(3, b);
            apply_circuit(s, oracle);
            const double sign = b == target ? -1.0 : 1.0;
            CHECK(std::abs(s.amplitudes[static_cast<Eigen::Index>(b)] - Complex{sign, 0.0}) <
                  1e-12);
        }
    }
}

TEST_CASE("multi-target oracle is diagonal with -1 at every target") {
    const SearchSpec everything(2, {0, 1, 2, 3});
    CHECK(max_entry_deviation(to_matrix(build_oracle(everything)),
                              -Eigen::MatrixXcd::Identity(4, 4)) < 1e-12);

    const SearchSpec last(2, {3});
    Eigen::MatrixXcd mcz_only = Eigen::MatrixXcd::Identity(4, 4);
    mcz_only(3, 3) = -1.0;
    CHECK(max_entry_deviation(to_matrix(build_oracle(last)), mcz_only) < 1e-12);

    std::mt19937 rng(3);
    const auto nine = testref::random_targets(rng, 4, 9);
    const SearchSpec spec(4, nine);
    CHECK(max_entry_deviation(to_matrix(build_oracle(spec)),
                              testref::reflection_about_targets(4, nine)) < 1e-10);
}

TEST_CASE("oracle concatenation order is ascending regardless of input order") {
    const SearchSpec shuffled(3, {5, 2, 7});
    const SearchSpec sorted(3, {2, 5, 7});
    CHECK(build_oracle(shuffled).gates == build_oracle(sorted).gates);
}

TEST_CASE("diffusion is the reflection about the uniform state") {
    Eigen::MatrixXcd expected1(2, 2);
    expected1 << 0, -1, -1, 0;
    CHECK(max_entry_deviation(to_matrix(build_diffusion(1)), expected1) < 1e-12);

    const Eigen::MatrixXcd d2 = to_matrix(build_diffusion(2));
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 4; ++j)
            CHECK(std::abs(d2(i, j) - Complex{i == j ? 0.5 : -0.5, 0.0}) < 1e-12);

    // reflections square to the identity
    CHECK(max_entry_deviation(d2 * d2, Eigen::MatrixXcd::Identity(4, 4)) < 1e-10);

    // structure: H layer, oracle for |0...0>, H layer
    Circuit expected_structure{3, hadamard_layer(3)};
    const Circuit zero_oracle = build_single_oracle(3, 0);
    expected_structure.gates.insert(expected_structure.gates.end(), zero_oracle.gates.begin(),
                                    zero_oracle.gates.end());
    const auto second_layer = hadamard_layer(3);
    expected_structure.gates.insert(expected_structure.gates.end(), second_layer.begin(),
                                    second_layer.end());
    CHECK(build_diffusion(3).gates == expected_structure.gates);
}

TEST_CASE("diffusion matches the uniform reflection for n up to 6") {
    for (int n = 1; n <= 6; ++n)
        CHECK(max_entry_deviation(to_matrix(build_diffusion(n)),
                                  testref::reflection_about_uniform(n)) < 1e-10);
}

TEST_CASE("oracle matches the target reflection for n up to 6") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::uniform_int_distribution<std::uint64_t> count(1, size);
        for (int trial = 0; trial < 4; ++trial) {
            const auto targets = testref::random_targets(rng, n, count(rng));
            const Eigen::MatrixXcd oracle = to_matrix(build_oracle(SearchSpec(n, targets)));
            CHECK(max_entry_deviation(oracle, testref::reflection_about_targets(n, targets)) <
                  1e-10);
        }
    }
}

TEST_CASE("grover circuit layout and gate count") {
    const SearchSpec spec(4, {13});
    const Circuit k0 = build_grover(spec, 0);
    CHECK(k0.gates == hadamard_layer(4));

    State s = basis_state(4, 0);
    apply_circuit(s, k0);
    CHECK(std::abs(success_probability_of<double>(s, spec.targets()) - 1.0 / 16.0) < 1e-12);

    std::mt19937 rng(13);
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::uniform_int_distribution<std::uint64_t> count(1, size);
        std::uniform_int_distribution<int> reps(0, 4);
        const auto targets = testref::random_targets(rng, n, count(rng));
        const SearchSpec random_spec(n, targets);
        const int k = reps(rng);
        const std::size_t per_iteration = build_oracle(random_spec).gates.size() +
                                          build_diffusion(n).gates.size();
        CHECK(build_grover(random_spec, k).gates.size() ==
              static_cast<std::size_t>(n) + static_cast<std::size_t>(k) * per_iteration);
    }

    CHECK_THROWS_AS(build_grover(spec, -1), std::invalid_argument);
}

TEST_CASE("grover run reaches the tabulated probabilities") {
    // GSA(16,1) at k=3
    const SearchSpec single(4, {13});
    State s = basis_state(4, 0);
    apply_circuit(s, build_grover(single, 3));
    const double p3 = success_probability_of<double>(s, single.targets());
    CHECK(std::abs(p3 - 0.9613189697265625) < 1e-12);
    CHECK(p3 > 0.95);

    // GSA(16,8) at k=1: the half-full database stays at 1/2
    std::mt19937 rng(17);
    const auto eight = testref::random_targets(rng, 4, 8);
    State half = basis_state(4, 0);
    apply_circuit(half, build_grover(SearchSpec(4, eight), 1));
    CHECK(std::abs(success_probability_of<double>(half, eight) - 0.5) < 1e-12);
}

TEST_CASE("to_matrix basics") {
    CHECK(max_entry_deviation(to_matrix(Circuit{3, {}}), Eigen::MatrixXcd::Identity(8, 8)) == 0.0);

    Eigen::MatrixXcd mcz = Eigen::MatrixXcd::Identity(4, 4);
    mcz(3, 3) = -1.0;
    CHECK(max_entry_deviation(to_matrix(Circuit{2, {Gate::multi_controlled_z()}}), mcz) < 1e-15);

    Circuit too_big{max_dense_qubits + 1, {}};
    CHECK_THROWS_AS(to_matrix(too_big), std::invalid_argument);
}

TEST_CASE("circuit unitaries are unitary and reflections square to identity") {
    std::mt19937 rng(19);
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::uniform_int_distribution<std::uint64_t> count(1, size);
        const auto targets = testref::random_targets(rng, n, count(rng));
        const SearchSpec spec(n, targets);

        Circuit doubled = build_oracle(spec);
        const Circuit once = build_oracle(spec);
        doubled.gates.insert(doubled.gates.end(), once.gates.begin(), once.gates.end());
        const Eigen::Index dim = Eigen::Index{1} << n;
        CHECK(max_entry_deviation(to_matrix(doubled), Eigen::MatrixXcd::Identity(dim, dim)) <
              1e-10);

        const Eigen::MatrixXcd u = to_matrix(build_grover(spec, 2));
        CHECK(max_entry_deviation(u.adjoint() * u, Eigen::MatrixXcd::Identity(dim, dim)) < 1e-10);
    }
}

TEST_CASE("state after k iterations follows the rotation model with (-1)^k phase") {
    std::mt19937 rng(29);
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::uniform_int_distribution<std::uint64_t> count(1, size - 1);  // keep |omega_perp> defined
        const auto targets = testref::random_targets(rng, n, count(rng));
        const SearchSpec spec(n, targets);
        const double angle = theta(spec.database_size(), spec.target_count());

        Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size));
        for (std::uint64_t t : targets)
            omega[static_cast<Eigen::Index>(t)] = 1.0;
        omega /= std::sqrt(static_cast<double>(spec.target_count()));
        Eigen::VectorXcd omega_perp =
            Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(size), 1.0) - omega * std::sqrt(static_cast<double>(spec.target_count()));
        omega_perp /= std::sqrt(static_cast<double>(size - spec.target_count()));

        State s = uniform_state(n);
        const Circuit oracle = build_oracle(spec);
        const Circuit diffusion = build_diffusion(n);
        for (int k = 0; k <= 5; ++k) {
            if (k > 0) {
                apply_circuit(s, oracle);
                apply_circuit(s, diffusion);
            }
            const double theta_k = angle * (1 + 2 * k);
            const double phase = k % 2 == 0 ? 1.0 : -1.0;
            const Eigen::VectorXcd expected =
                phase * (std::cos(theta_k) * omega_perp + std::sin(theta_k) * omega);
            CHECK((s.amplitudes - expected).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("target and non-target amplitudes stay mutually uniform") {
    std::mt19937 rng(31);
    const auto targets = testref::random_targets(rng, 5, 11);
    const SearchSpec spec(5, targets);

    State s = uniform_state(5);
    const Circuit oracle = build_oracle(spec);
    const Circuit diffusion = build_diffusion(5);
    for (int k = 1; k <= 6; ++k) {
        apply_circuit(s, oracle);
        apply_circuit(s, diffusion);
        Complex target_amp = s.amplitudes[static_cast<Eigen::Index>(targets.front())];
        for (std::uint64_t i = 0; i < spec.database_size(); ++i) {
            const Complex amp = s.amplitudes[static_cast<Eigen::Index>(i)];
            if (spec.is_target(i))
                CHECK(std::abs(amp - target_amp) < 1e-10);
        }
        Complex other_amp{0, 0};
        bool found_other = false;
        for (std::uint64_t i = 0; i < spec.database_size(); ++i) {
            if (spec.is_target(i))
                continue;
            if (!found_other) {
                other_amp = s.amplitudes[static_cast<Eigen::Index>(i)];
                found_other = true;
            }
            CHECK(std::abs(s.amplitudes[static_cast<Eigen::Index>(i)] - other_amp) < 1e-10);
        }
    }
}

TEST_CASE("format_circuit emits one gate per line") {
    const Circuit circuit = build_grover(SearchSpec(2, {3}), 1);
    CHECK(format_circuit(circuit) ==
          "H q0\n"
          "H q1\n"
          "MCZ\n"
          "H q0\n"
          "H q1\n"
          "X q0\n"
          "X q1\n"
          "MCZ\n"
          "X q0\n"
          "X q1\n"
          "H q0\n"
          "H q1\n");
}

TEST_CASE("to_bitstring uses ket order") {
    CHECK(to_bitstring(13, 4) == "1101");
    CHECK(to_bitstring(2, 2) == "10");
    CHECK(to_bitstring(0, 3) == "000");
    CHECK(to_bitstring(1, 3) == "001");
}
