#include "sinai/montecarlo.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sinai/errors.hpp"

namespace sinai {

namespace {

struct ChunkTally {
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::int64_t censored = 0;
};

void validate(const SimulationOptions& opts) {
    if (opts.trials < 1) {
        throw InvalidArgument("simulation needs at least one trial");
    }
    if (opts.chunks < 1) {
        throw InvalidArgument("simulation needs at least one chunk");
    }
    if (opts.threads < 1) {
        throw InvalidArgument("simulation needs at least one thread");
    }
}

// Runs body(rng, trials) for every chunk and folds the tallies in chunk order.
template <class Body>
Estimate run_chunks(const SimulationOptions& opts, Body body) {
    validate(opts);
    const auto chunks = static_cast<std::size_t>(opts.chunks);
    std::vector<ChunkTally> tallies(chunks);
    auto work = [&](std::size_t first) {
        for (std::size_t c = first; c < chunks; c += static_cast<std::size_t>(opts.threads)) {
            std::int64_t share = opts.trials / opts.chunks + (static_cast<std::int64_t>(c) < opts.trials % opts.chunks);
            std::mt19937_64 rng(chunk_seed(opts.seed, c));
            tallies[c] = body(rng, share);
            tallies[c].trials = share;
        }
    };
    if (opts.threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < opts.threads; ++t) {
            pool.emplace_back(work, static_cast<std::size_t>(t));
        }
    }
    ChunkTally total;
    for (const auto& t : tallies) {
        total.trials += t.trials;
        total.successes += t.successes;
        total.censored += t.censored;
    }
    Estimate e;
    e.trials = total.trials;
    e.successes = total.successes;
    e.censored = total.censored;
    e.seed = opts.seed;
    const double trials = static_cast<double>(total.trials);
    e.value = static_cast<double>(total.successes) / trials;
    if (total.trials > 1) {
        const double variance = e.value * (1.0 - e.value) * trials / (trials - 1.0);
        e.std_error = std::sqrt(variance / trials);
    }
    return e;
}

// Sum of bit positions inside one byte.
constexpr std::array<std::uint16_t, 256> kBytePositionSum = [] {
    std::array<std::uint16_t, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        for (unsigned i = 0; i < 8; ++i) {
            if ((b >> i) & 1U) {
                t[b] = static_cast<std::uint16_t>(t[b] + i);
            }
        }
    }
    return t;
}();

}  // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t z = seed + (chunk + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Estimate estimate_sinai_persistence(std::int64_t n, const SimulationOptions& opts) {
    if (n < 1) {
        throw InvalidArgument("persistence needs n >= 1");
    }
    return run_chunks(opts, [n](std::mt19937_64& rng, std::int64_t trials) {
        ChunkTally t;
        for (std::int64_t i = 0; i < trials; ++i) {
            std::int64_t height = 0;
            std::int64_t area = 0;
            std::int64_t k = 0;
            bool alive = true;
            while (alive && k < n) {
                std::uint64_t bits = rng();
                const std::int64_t batch = std::min<std::int64_t>(64, n - k);
                for (std::int64_t b = 0; b < batch; ++b, bits >>= 1) {
                    height += static_cast<std::int64_t>(bits & 1U) * 2 - 1;
                    area += height;
                    if (area < 0) {
                        alive = false;
                        break;
                    }
                }
                k += batch;
            }
            t.successes += alive;
        }
        return t;
    });
}

double predicted_bridge_acceptance(std::int64_t n) {
    // The sum of a uniform size-k subset of {0..N-1} has variance
    // k (N - k) (N + 1) / 12; the target is its mean.
    const double big_n = 4.0 * static_cast<double>(n);
    const double k = 2.0 * static_cast<double>(n);
    const double variance = k * (big_n - k) * (big_n + 1.0) / 12.0;
    return 1.0 / std::sqrt(2.0 * M_PI * variance);
}

Estimate estimate_bridge_persistence(std::int64_t n, const SimulationOptions& opts) {
    if (n < 1) {
        throw InvalidArgument("bridge persistence needs n >= 1");
    }
    if (n > kMaxBridgeN || predicted_bridge_acceptance(n) < kMinBridgeAcceptance) {
        throw ResourceGuard("bridge rejection sampler refused: predicted acceptance " +
                            std::to_string(predicted_bridge_acceptance(n)) + " at n = " + std::to_string(n));
    }
    const std::int64_t len = 4 * n;
    const auto words = static_cast<std::size_t>((len + 63) / 64);
    const std::uint64_t last_mask = (len % 64 == 0) ? ~0ULL : ((1ULL << (len % 64)) - 1);
    const std::int64_t target = n * (4 * n - 1);
    const int downs = static_cast<int>(2 * n);

    return run_chunks(opts, [=](std::mt19937_64& rng, std::int64_t trials) {
        ChunkTally t;
        std::vector<std::uint64_t> mask(words);
        for (std::int64_t i = 0; i < trials; ++i) {
            // A uniform 4n-bit word with exactly 2n ones is a uniform subset;
            // keep it only when the down times sum to n(4n-1), i.e. zero area.
            for (;;) {
                int ones = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    mask[w] = rng();
                    if (w + 1 == words) {
                        mask[w] &= last_mask;
                    }
                    ones += std::popcount(mask[w]);
                }
                if (ones != downs) {
                    continue;
                }
                std::int64_t sum = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t word = mask[w];
                    for (int byte = 0; byte < 8 && word != 0; ++byte, word >>= 8) {
                        const auto b = static_cast<unsigned>(word & 0xFF);
                        const std::int64_t base = static_cast<std::int64_t>(w) * 64 + byte * 8;
                        sum += kBytePositionSum[b] + base * std::popcount(b);
                    }
                }
                if (sum == target) {
                    break;
                }
            }
            std::int64_t height = 0;
            std::int64_t area = 0;
            bool ok = true;
            for (std::int64_t k = 0; k < len && ok; ++k) {
                const bool down = (mask[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1U;
                height += down ? -1 : 1;
                area += height;
                ok = area >= 0;
            }
            t.successes += ok;
        }
        return t;
    });
}

TauOutcome tau_outcome(const Walk& w) {
    std::int64_t height = 0;
    std::int64_t area = 0;
    for (Step s : w.steps()) {
        height += static_cast<int>(s);
        area += height;
        if (height == 0 && area <= 0) {
            return area == 0 ? TauOutcome::ZeroArea : TauOutcome::NegativeArea;
        }
    }
    return TauOutcome::NotStopped;
}

Estimate estimate_atau_zero(std::int64_t horizon, const SimulationOptions& opts) {
    if (horizon < 4) {
        throw InvalidArgument("atau needs horizon >= 4");
    }
    return run_chunks(opts, [horizon](std::mt19937_64& rng, std::int64_t trials) {
        ChunkTally t;
        for (std::int64_t i = 0; i < trials; ++i) {
            std::int64_t height = 0;
            std::int64_t area = 0;
            std::int64_t k = 0;
            bool stopped = false;
            while (!stopped && k < horizon) {
                std::uint64_t bits = rng();
                const std::int64_t batch = std::min<std::int64_t>(64, horizon - k);
                std::int64_t b = 0;
                for (; b < batch; ++b, bits >>= 1) {
                    height += static_cast<std::int64_t>(bits & 1U) * 2 - 1;
                    area += height;
                    if (height == 0 && area <= 0) {
                        stopped = true;
                        t.successes += area == 0;
                        ++b;
                        break;
                    }
                }
                k += b;
            }
            t.censored += !stopped;
        }
        return t;
    });
}

}  // namespace sinai
