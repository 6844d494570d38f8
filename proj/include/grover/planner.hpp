#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace grover {

/// Decomposition of the state after k iterations in the span of the target
/// superposition and its orthogonal complement: theta_k = theta * (1 + 2k),
/// with sin^2 the target weight and cos^2 the non-target weight.
struct AnalyticState {
    double theta_k = 0.0;
    double target_weight = 0.0;
    double nontarget_weight = 0.0;
};

/// Analysis of which success probabilities are reachable at all. When theta
/// is a rational multiple of pi, theta = numerator*pi/denominator in lowest
/// terms and the success curve takes only the finitely many values in
/// `achievable_set` (sorted descending); the supremum is then attained. When
/// theta/pi is irrational the curve gets arbitrarily close to 1 but never
/// reaches it.
struct BoundReport {
    bool rational = false;
    int numerator = 0;
    int denominator = 0;
    std::vector<double> achievable_set;
    double supremum = 1.0;
    bool supremum_attained = false;
};

/// Result of optimal-iteration selection against a success threshold delta.
///
/// When `attainable`, k_opt is the smallest iteration count whose success
/// probability meets delta and p_opt is the index of the success-curve
/// maximum it sits next to. When not attainable, k_opt/predicted_success
/// carry the best point found (mirrored in best_k/best_success), p_opt is 0,
/// and `bound` explains the limit.
struct Plan {
    double theta = 0.0;
    double delta = 0.0;
    int p_opt = 0;
    std::int64_t k_opt = 0;
    double predicted_success = 0.0;
    bool attainable = false;
    bool degenerate_half = false;
    std::int64_t best_k = 0;
    double best_success = 0.0;
    std::optional<BoundReport> bound;
};

/// Angle between the uniform superposition and the non-target subspace:
/// arcsin(sqrt(M/N)), in (0, pi/2]. Requires N a power of two >= 2 and
/// 1 <= M <= N.
double theta(std::uint64_t database_size, std::uint64_t target_count);

/// Success probability after k iterations: sin^2(theta * (1 + 2k)).
double success_probability(double theta, std::int64_t iterations);

/// Real-valued location of the p-th maximum of the success curve:
/// (2p+1) * pi/(4 theta) - 1/2. Not rounded.
double peak_iteration(double theta, std::int64_t p);

/// Smallest iteration count reaching success >= delta, found by scanning
/// successive curve maxima p = 0, 1, 2, ... and testing the floor/ceiling
/// integer neighbours of each. delta must lie in (0, 1].
///
/// If theta is a rational multiple of pi and delta exceeds the reachable
/// supremum, the threshold is unattainable and the scan is skipped. The scan
/// is also capped at p = 10^6; thresholds within ~1e-15 of 1 can exceed the
/// cap for irrational theta and come back unattainable with the best point
/// found.
Plan plan(std::uint64_t database_size, std::uint64_t target_count, double delta);

/// Reachability analysis for the given search size. Rationality of theta/pi
/// is decided exactly from (M, N): cos 2*theta = 1 - 2M/N is rational, and by
/// Niven's theorem theta/pi is rational iff cos 2*theta is 0, +-1/2 or +-1,
/// i.e. iff M/N is 1/4, 1/2, 3/4 or 1.
BoundReport achievable_bound(std::uint64_t database_size, std::uint64_t target_count);

/// The textbook asymptotic iteration count round(pi/4 * sqrt(N/M) - 1/2),
/// rounded half away from zero and clamped to >= 0. Kept for comparison; far
/// from the sqrt(M/N) -> 0 regime it can undershoot the threshold badly.
std::int64_t baseline_k(std::uint64_t database_size, std::uint64_t target_count);

/// Rotation-model state after k iterations.
AnalyticState analytic_state(double theta, std::int64_t iterations);

}  // namespace grover
