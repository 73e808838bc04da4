#pragma once

#include <cstdint>

#include "sinai/lattice_paths.hpp"

namespace sinai {

// Trials are split into `chunks` fixed slices. Chunk c draws from a
// std::mt19937_64 seeded with chunk_seed(seed, c), so results depend on
// (seed, trials, chunks) only, never on `threads`.
struct SimulationOptions {
    std::uint64_t seed = 0;
    std::int64_t trials = 100000;
    int chunks = 64;
    int threads = 1;
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(trials)
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::int64_t censored = 0;
    std::uint64_t seed = 0;

    double censored_fraction() const { return trials == 0 ? 0.0 : static_cast<double>(censored) / trials; }
    friend bool operator==(const Estimate&, const Estimate&) = default;
};

// SplitMix64 finalizer applied to seed + (chunk + 1) * golden gamma.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

// P(A_1, ..., A_n >= 0) for the simple random walk.
Estimate estimate_sinai_persistence(std::int64_t n, const SimulationOptions& opts);

// p_n = P(A_1..A_4n >= 0 | S_4n = A_4n = 0). Bridges with zero area are drawn
// as uniform size-2n down-time subsets of {0, ..., 4n-1}, rejected until the
// sum is exactly n(4n-1). Throws ResourceGuard when the predicted acceptance
// rate falls below kMinBridgeAcceptance.
inline constexpr double kMinBridgeAcceptance = 1e-6;
inline constexpr std::int64_t kMaxBridgeN = 4096;
double predicted_bridge_acceptance(std::int64_t n);
Estimate estimate_bridge_persistence(std::int64_t n, const SimulationOptions& opts);

// P(A_tau = 0) with tau = inf{t : S_t = 0, A_t <= 0}. Walks still running at
// `horizon` are censored: they count as trials without success, and their
// number is reported. The resulting downward bias is at most
// P(A_tau = 0, tau > horizon).
inline constexpr std::int64_t kDefaultHorizon = 10000;

enum class TauOutcome { ZeroArea, NegativeArea, NotStopped };
// Scans a fixed walk for tau; NotStopped when tau exceeds its length.
TauOutcome tau_outcome(const Walk& w);

Estimate estimate_atau_zero(std::int64_t horizon, const SimulationOptions& opts);

}  // namespace sinai
