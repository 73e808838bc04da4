#include "sinai/excursion_counts.hpp"

#include <cstdlib>
#include <string>

#include "sinai/errors.hpp"

namespace sinai {

namespace {

// Walks from height s that take r further steps and end at height 0. The
// lower envelope goes down first, the upper envelope up first; their height
// sums bound the area any such walk can still add.
std::int64_t min_future_sum(std::int64_t s, std::int64_t r) {
    const std::int64_t d = (r + s) / 2;
    const std::int64_t u = (r - s) / 2;
    return d * s - d * (d + 1) / 2 + u * s - u * d + u * (u + 1) / 2;
}

std::int64_t max_future_sum(std::int64_t s, std::int64_t r) {
    const std::int64_t u = (r - s) / 2;
    const std::int64_t d = (r + s) / 2;
    return u * s + u * (u + 1) / 2 + d * (s + u) - d * (d + 1) / 2;
}

// Largest area a walk from 0 can have after k steps when it sits at height s.
std::int64_t max_area_reaching(std::int64_t s, std::int64_t k) {
    const std::int64_t u = (k + s) / 2;
    const std::int64_t d = (k - s) / 2;
    return u * (u + 1) / 2 + d * u - d * (d + 1) / 2;
}

// Cells indexed [height + offset][area].
struct Layer {
    std::int64_t offset = 0;
    std::vector<std::vector<BigCount>> cells;

    explicit Layer(std::int64_t max_height) : offset(max_height), cells(static_cast<std::size_t>(2 * max_height + 1)) {}

    std::vector<BigCount>& at(std::int64_t s) { return cells[static_cast<std::size_t>(s + offset)]; }
};

void guard_dp(int max_n) {
    if (max_n < 0) {
        throw InvalidArgument("DP routes need n >= 0");
    }
    if (max_n > kDpMaxN) {
        throw ResourceGuard("DP route refused: n = " + std::to_string(max_n) + " exceeds the memory guard of " +
                            std::to_string(kDpMaxN));
    }
}

void guard_brute(int n) {
    if (n < 0) {
        throw InvalidArgument("enumeration needs n >= 0");
    }
    if (n > kBruteForceMaxN) {
        throw ResourceGuard("enumeration refused: n = " + std::to_string(n) + " exceeds the brute-force guard of " +
                            std::to_string(kBruteForceMaxN));
    }
}

void zero_area_subsets(int next, int max, int remaining, std::int64_t target, std::vector<int>& chosen, int length,
                       std::vector<Walk>& out) {
    if (remaining == 0) {
        if (target == 0) {
            Walk w = walk_from_down_times(DownTimeSet(chosen, length));
            if (classify(w).sinai_excursion) {
                out.push_back(std::move(w));
            }
        }
        return;
    }
    for (int v = next; v + remaining - 1 <= max; ++v) {
        // Smallest and largest sums still reachable with `remaining` picks from [v, max].
        const std::int64_t lo = static_cast<std::int64_t>(remaining) * v + std::int64_t{remaining} * (remaining - 1) / 2;
        const std::int64_t hi = static_cast<std::int64_t>(remaining) * max - std::int64_t{remaining} * (remaining - 1) / 2;
        if (target < lo) {
            break;
        }
        if (target > hi) {
            continue;
        }
        chosen.push_back(v);
        zero_area_subsets(v + 1, max, remaining - 1, target - v, chosen, length, out);
        chosen.pop_back();
    }
}

std::vector<BigCount> gaussian_binomial(int top, int k) {
    // [top choose k]_q = prod_{i=1..k} (1 - q^{top-k+i}) / (1 - q^i).
    const std::size_t degree = static_cast<std::size_t>(k) * static_cast<std::size_t>(top - k);
    std::vector<BigCount> poly(degree + static_cast<std::size_t>(top) + 1);
    poly[0] = 1;
    std::size_t current = 0;
    for (int i = 1; i <= k; ++i) {
        const auto up = static_cast<std::size_t>(top - k + i);
        for (std::size_t j = current + up; j >= up; --j) {
            poly[j] -= poly[j - up];
            if (j == up) {
                break;
            }
        }
        current += up;
        const auto down = static_cast<std::size_t>(i);
        for (std::size_t j = down; j <= current; ++j) {
            poly[j] += poly[j - down];
        }
        current -= down;
    }
    poly.resize(current + 1);
    return poly;
}

}  // namespace

std::vector<Walk> enumerate_excursions(int n) {
    guard_brute(n);
    std::vector<Walk> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> chosen;
    const std::int64_t target = std::int64_t{n} * (4 * n - 1);
    zero_area_subsets(1, 4 * n - 1, 2 * n, target, chosen, 4 * n, out);
    return out;
}

BigCount phi_bruteforce(int n) {
    return BigCount(static_cast<unsigned long>(enumerate_excursions(n).size()));
}

CountTable phi_dp_table(int max_n) {
    guard_dp(max_n);
    CountTable table{"phi", std::vector<BigCount>(static_cast<std::size_t>(max_n + 1))};
    table.entries[0] = 1;
    const std::int64_t len = 4 * std::int64_t{max_n};
    const std::int64_t max_height = len + 1;

    Layer cur(max_height);
    cur.at(0).assign(1, BigCount(1));
    for (std::int64_t k = 0; k < len; ++k) {
        const std::int64_t r = len - (k + 1);
        Layer next(max_height);
        for (std::int64_t s = -std::min(k + 1, r); s <= std::min(k + 1, r); ++s) {
            if (((s + k + 1) & 1) != 0) {
                continue;
            }
            const std::int64_t cap = std::min(max_area_reaching(s, k + 1), -min_future_sum(s, r));
            if (cap >= 0) {
                next.at(s).resize(static_cast<std::size_t>(cap + 1));
            }
        }
        for (std::int64_t s = -k; s <= k; ++s) {
            auto& row = cur.at(s);
            for (std::size_t a = 0; a < row.size(); ++a) {
                if (sgn(row[a]) == 0) {
                    continue;
                }
                for (std::int64_t step : {-1, 1}) {
                    const std::int64_t s2 = s + step;
                    const std::int64_t a2 = static_cast<std::int64_t>(a) + s2;
                    if (a2 < 0 || std::llabs(s2) > r || a2 < -max_future_sum(s2, r)) {
                        continue;
                    }
                    auto& target = next.at(s2);
                    if (a2 >= static_cast<std::int64_t>(target.size())) {
                        continue;
                    }
                    target[static_cast<std::size_t>(a2)] += row[a];
                }
            }
        }
        cur = std::move(next);
        if ((k + 1) % 4 == 0) {
            auto& origin = cur.at(0);
            table.entries[static_cast<std::size_t>((k + 1) / 4)] = origin.empty() ? BigCount(0) : origin[0];
        }
    }
    return table;
}

BigCount phi_dp(int n) {
    return phi_dp_table(n).entries.back();
}

CountTable phi_recurrence(int max_n) {
    if (max_n < 0) {
        throw InvalidArgument("phi_recurrence needs max_n >= 0");
    }
    const auto xis = xi_table(max_n);
    CountTable table{"phi", std::vector<BigCount>(static_cast<std::size_t>(max_n + 1))};
    table.entries[0] = 1;
    for (std::size_t n = 1; n < table.entries.size(); ++n) {
        BigCount acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += xis[k] * table.entries[n - k];
        }
        BigCount dn = static_cast<unsigned long>(n);
        if (!mpz_divisible_p(acc.get_mpz_t(), dn.get_mpz_t())) {
            throw InternalError("phi_recurrence: n * Phi_n is not divisible by n at n = " + std::to_string(n));
        }
        mpz_divexact(table.entries[n].get_mpz_t(), acc.get_mpz_t(), dn.get_mpz_t());
    }
    return table;
}

CountTable phi_table(int max_n, Route route) {
    switch (route) {
        case Route::Recurrence:
            return phi_recurrence(max_n);
        case Route::DP:
            return phi_dp_table(max_n);
        case Route::Brute: {
            guard_brute(max_n);
            CountTable t{"phi", {}};
            for (int n = 0; n <= max_n; ++n) {
                t.entries.push_back(phi_bruteforce(n));
            }
            return t;
        }
    }
    throw InvalidArgument("unknown route");
}

BigCount zero_area_bridges(int n) {
    guard_dp(n);
    if (n == 0) {
        return 1;
    }
    const auto poly = gaussian_binomial(4 * n, 2 * n);
    // Subset sums are shifted by 0 + 1 + ... + (2n-1) relative to partitions;
    // n(4n-1) - n(2n-1) = 2n^2.
    return poly.at(static_cast<std::size_t>(2 * n * n));
}

CountTable zero_area_bridges_table(int max_n) {
    guard_dp(max_n);
    CountTable t{"zero_area_bridges", {}};
    for (int n = 0; n <= max_n; ++n) {
        t.entries.push_back(zero_area_bridges(n));
    }
    return t;
}

BigCount zero_area_bridges_subset_dp(int n) {
    if (n < 0) {
        throw InvalidArgument("zero_area_bridges_subset_dp needs n >= 0");
    }
    if (n > kSubsetDpMaxN) {
        throw ResourceGuard("subset-sum DP refused: n = " + std::to_string(n) + " exceeds the guard of " +
                            std::to_string(kSubsetDpMaxN));
    }
    const auto picks = static_cast<std::size_t>(2 * n);
    const auto target = static_cast<std::size_t>(n * (4 * n - 1));
    // ways[c][s]: c down times chosen so far with sum s.
    std::vector<std::vector<BigCount>> ways(picks + 1, std::vector<BigCount>(target + 1));
    ways[0][0] = 1;
    for (std::size_t v = 0; v < static_cast<std::size_t>(4 * n); ++v) {
        for (std::size_t c = std::min(picks, v + 1); c >= 1; --c) {
            for (std::size_t s = target; s >= v; --s) {
                ways[c][s] += ways[c - 1][s - v];
                if (s == 0) {
                    break;
                }
            }
        }
    }
    return ways[picks][target];
}

CountTable phi_irreducible(const CountTable& phi) {
    if (phi.entries.empty() || phi.entries[0] != 1) {
        throw InvalidArgument("phi_irreducible needs a table with Phi_0 = 1");
    }
    CountTable out{"phi_irreducible", std::vector<BigCount>(phi.entries.size())};
    out.entries[0] = 0;
    for (std::size_t n = 1; n < phi.entries.size(); ++n) {
        BigCount acc = phi.entries[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= out.entries[k] * phi.entries[n - k];
        }
        out.entries[n] = acc;
    }
    return out;
}

CountTable phi_irreducible(int max_n) {
    return phi_irreducible(phi_recurrence(max_n));
}

BigCount phi_irreducible_bruteforce(int n) {
    unsigned long count = 0;
    for (const Walk& w : enumerate_excursions(n)) {
        if (classify(w).irreducible) {
            ++count;
        }
    }
    return BigCount(count);
}

BigCount phi_marked(int n) {
    unsigned long total = 0;
    for (const Walk& w : enumerate_excursions(n)) {
        if (w.empty()) {
            continue;
        }
        total += irreducible_decomposition(w).front().length() / 4;
    }
    return BigCount(total);
}

CountTable nonnegative_area_bridges_table(int max_n) {
    if (max_n < 0) {
        throw InvalidArgument("nonnegative_area_bridges_table needs max_n >= 0");
    }
    if (max_n > kMeanderMaxN) {
        throw ResourceGuard("meander DP refused: n = " + std::to_string(max_n) + " exceeds the guard of " +
                            std::to_string(kMeanderMaxN));
    }
    const std::int64_t len = 2 * std::int64_t{max_n};
    const std::int64_t max_height = len + 1;

    // A live state (s, a) can still be driven below zero by some continuation
    // of length len - k. Once the area clears -min_future_sum every
    // continuation is safe, and the state is moved to `absorbed[k][s]`.
    std::vector<std::vector<BigCount>> absorbed(static_cast<std::size_t>(len + 1),
                                                std::vector<BigCount>(static_cast<std::size_t>(2 * max_height + 1)));
    CountTable t{"nonnegative_area_bridges", std::vector<BigCount>(static_cast<std::size_t>(max_n + 1))};

    auto live_cap = [&](std::int64_t s, std::int64_t k) {
        return std::min(max_area_reaching(s, k), -min_future_sum(s, len - k) - 1);
    };

    Layer cur(max_height);
    if (len == 0) {
        t.entries[0] = 1;
        return t;
    }
    cur.at(0).assign(static_cast<std::size_t>(std::max<std::int64_t>(live_cap(0, 0), 0) + 1), BigCount(0));
    cur.at(0)[0] = 1;
    t.entries[0] = 1;
    for (std::int64_t k = 0; k < len; ++k) {
        Layer next(max_height);
        for (std::int64_t s = -(k + 1); s <= k + 1; s += 2) {
            const std::int64_t cap = live_cap(s, k + 1);
            if (cap >= 0) {
                next.at(s).resize(static_cast<std::size_t>(cap + 1));
            }
        }
        auto& sink = absorbed[static_cast<std::size_t>(k + 1)];
        for (std::int64_t s = -k; s <= k; ++s) {
            auto& row = cur.at(s);
            for (std::size_t a = 0; a < row.size(); ++a) {
                if (sgn(row[a]) == 0) {
                    continue;
                }
                for (std::int64_t step : {-1, 1}) {
                    const std::int64_t s2 = s + step;
                    const std::int64_t a2 = static_cast<std::int64_t>(a) + s2;
                    if (a2 < 0) {
                        continue;
                    }
                    auto& target = next.at(s2);
                    if (a2 < static_cast<std::int64_t>(target.size())) {
                        target[static_cast<std::size_t>(a2)] += row[a];
                    } else {
                        sink[static_cast<std::size_t>(s2 + max_height)] += row[a];
                    }
                }
            }
        }
        cur = std::move(next);
        if ((k + 1) % 2 == 0) {
            BigCount live = 0;
            for (const auto& c : cur.at(0)) {
                live += c;
            }
            t.entries[static_cast<std::size_t>((k + 1) / 2)] = live;
        }
    }
    // Absorbed walks contribute every continuation back to height 0.
    for (std::int64_t n = 1; n <= max_n; ++n) {
        BigCount extra = 0;
        for (std::int64_t k = 1; k <= 2 * n; ++k) {
            const std::int64_t r = 2 * n - k;
            for (std::int64_t s = -std::min(k, r); s <= std::min(k, r); ++s) {
                const auto& c = absorbed[static_cast<std::size_t>(k)][static_cast<std::size_t>(s + max_height)];
                if (sgn(c) != 0) {
                    extra += c * binomial(r, (r + s) / 2);
                }
            }
        }
        t.entries[static_cast<std::size_t>(n)] += extra;
    }
    return t;
}

SeriesCoefficients sparre_andersen_series(int max_n) {
    if (max_n < 0) {
        throw InvalidArgument("sparre_andersen_series needs max_n >= 0");
    }
    const auto xis = xi_table(max_n);
    std::vector<Rational> inner(static_cast<std::size_t>(max_n + 1));
    for (std::size_t k = 1; k < inner.size(); ++k) {
        mpz_class den = 1;
        den <<= static_cast<mp_bitcnt_t>(4 * k);
        inner[k] = Rational(xis[k], den);
        inner[k].canonicalize();
    }
    // E' = E g' with g_k = xi_k / k gives n E_n = sum_{k=1..n} xi_k E_{n-k}.
    SeriesCoefficients out{std::vector<Rational>(inner.size())};
    out.coefficients[0] = 1;
    for (std::size_t n = 1; n < inner.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            acc += inner[k] * out.coefficients[n - k];
        }
        acc /= static_cast<unsigned long>(n);
        out.coefficients[n] = acc;
    }
    return out;
}

SeriesCoefficients excursion_probabilities(const CountTable& phi) {
    SeriesCoefficients out{std::vector<Rational>(phi.entries.size())};
    for (std::size_t n = 0; n < phi.entries.size(); ++n) {
        mpz_class den = 1;
        den <<= static_cast<mp_bitcnt_t>(4 * n);
        out.coefficients[n] = Rational(phi.entries[n], den);
        out.coefficients[n].canonicalize();
    }
    return out;
}

}  // namespace sinai
