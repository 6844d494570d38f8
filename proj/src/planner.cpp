#include "grover/planner.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace grover {

namespace {

constexpr double pi = std::numbers::pi;

// Scan cap: for irrational theta the scan terminates for any delta
// meaningfully below 1 long before this, so the cap only catches
// floating-point corner cases such as delta indistinguishable from 1.
constexpr std::int64_t max_peak_index = 1'000'000;

constexpr double dedup_tolerance = 1e-12;

void check_search_size(std::uint64_t database_size, std::uint64_t target_count) {
    if (database_size < 2 || !std::has_single_bit(database_size))
        throw std::domain_error("database size must be a power of two >= 2, got " +
                                std::to_string(database_size));
    if (target_count < 1 || target_count > database_size)
        throw std::domain_error("target count must be in [1, N], got " +
                                std::to_string(target_count));
}

}  // namespace

double theta(std::uint64_t database_size, std::uint64_t target_count) {
    check_search_size(database_size, target_count);
    return std::asin(std::sqrt(static_cast<double>(target_count) /
                               static_cast<double>(database_size)));
}

double success_probability(double theta, std::int64_t iterations) {
    const double s = std::sin(theta * static_cast<double>(1 + 2 * iterations));
    return s * s;
}

double peak_iteration(double theta, std::int64_t p) {
    return static_cast<double>(2 * p + 1) * pi / (4.0 * theta) - 0.5;
}

BoundReport achievable_bound(std::uint64_t database_size, std::uint64_t target_count) {
    const double angle = theta(database_size, target_count);
    BoundReport report;

    // theta = pi/6, pi/4, pi/3, pi/2 are the only rational multiples of pi
    // that arcsin(sqrt(M/N)) can produce; decided by exact integer ratios.
    const std::uint64_t n4 = database_size / 4;
    if (database_size % 4 == 0 && target_count == n4) {
        report.rational = true;
        report.numerator = 1;
        report.denominator = 6;
    } else if (database_size % 2 == 0 && target_count == database_size / 2) {
        report.rational = true;
        report.numerator = 1;
        report.denominator = 4;
    } else if (database_size % 4 == 0 && target_count == 3 * n4) {
        report.rational = true;
        report.numerator = 1;
        report.denominator = 3;
    } else if (target_count == database_size) {
        report.rational = true;
        report.numerator = 1;
        report.denominator = 2;
    }

    if (!report.rational) {
        report.supremum = 1.0;
        report.supremum_attained = false;
        return report;
    }

    // The curve is periodic in k with period b, so k = 0...b-1 covers every
    // reachable value. For the four realizable angles those values are exact
    // quarter-integers ({1/4, 1}, {1/2}, {3/4, 0}, {1}); snap away the last
    // ulp of the sine evaluation so reports carry the exact numbers.
    for (int k = 0; k < report.denominator; ++k) {
        double value = success_probability(angle, k);
        const double quarters = std::round(value * 4.0) / 4.0;
        if (std::abs(value - quarters) < dedup_tolerance)
            value = quarters;
        const bool seen = std::any_of(report.achievable_set.begin(), report.achievable_set.end(),
                                      [&](double v) { return std::abs(v - value) < dedup_tolerance; });
        if (!seen)
            report.achievable_set.push_back(value);
    }
    std::sort(report.achievable_set.begin(), report.achievable_set.end(), std::greater<>());
    report.supremum = report.achievable_set.front();
    report.supremum_attained = true;
    return report;
}

Plan plan(std::uint64_t database_size, std::uint64_t target_count, double delta) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::domain_error("delta must lie in (0, 1], got " + std::to_string(delta));

    Plan result;
    result.theta = theta(database_size, target_count);
    result.delta = delta;

    if (target_count * 2 == database_size) {
        // theta = pi/4 exactly: every iteration count gives probability 1/2.
        result.degenerate_half = true;
        result.k_opt = 0;
        result.best_k = 0;
        result.predicted_success = 0.5;
        result.best_success = 0.5;
        result.attainable = delta <= 0.5;
        if (!result.attainable)
            result.bound = achievable_bound(database_size, target_count);
        return result;
    }

    const BoundReport bound = achievable_bound(database_size, target_count);
    if (bound.rational && delta > bound.supremum) {
        // The finite achievable set tops out below delta; report the best
        // reachable point instead of scanning.
        result.attainable = false;
        result.best_success = bound.supremum;
        for (int k = 0; k < bound.denominator; ++k) {
            if (std::abs(success_probability(result.theta, k) - bound.supremum) < dedup_tolerance) {
                result.best_k = k;
                break;
            }
        }
        result.k_opt = result.best_k;
        result.predicted_success = result.best_success;
        result.bound = bound;
        return result;
    }

    for (std::int64_t p = 0; p <= max_peak_index; ++p) {
        const double peak = peak_iteration(result.theta, p);
        const std::int64_t lower = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(peak)));
        const std::int64_t upper = std::max<std::int64_t>(0, static_cast<std::int64_t>(std::ceil(peak)));
        const double lower_success = success_probability(result.theta, lower);
        const double upper_success = success_probability(result.theta, upper);

        if (lower_success > result.best_success) {
            result.best_success = lower_success;
            result.best_k = lower;
        }
        if (upper_success > result.best_success) {
            result.best_success = upper_success;
            result.best_k = upper;
        }

        if (std::max(lower_success, upper_success) >= delta) {
            result.p_opt = static_cast<int>(p);
            result.k_opt = lower_success >= delta ? lower : upper;
            result.predicted_success = success_probability(result.theta, result.k_opt);
            result.attainable = true;
            result.best_k = result.k_opt;
            result.best_success = result.predicted_success;
            return result;
        }
    }

    result.attainable = false;
    result.k_opt = result.best_k;
    result.predicted_success = result.best_success;
    result.bound = bound;
    return result;
}

std::int64_t baseline_k(std::uint64_t database_size, std::uint64_t target_count) {
    check_search_size(database_size, target_count);
    const double value = pi / 4.0 *
                             std::sqrt(static_cast<double>(database_size) /
                                       static_cast<double>(target_count)) -
                         0.5;
    return std::max<std::int64_t>(0, std::llround(value));
}

AnalyticState analytic_state(double theta, std::int64_t iterations) {
    AnalyticState state;
    state.theta_k = theta * static_cast<double>(1 + 2 * iterations);
    const double s = std::sin(state.theta_k);
    const double c = std::cos(state.theta_k);
    state.target_weight = s * s;
    state.nontarget_weight = c * c;
    return state;
}

}  // namespace grover
