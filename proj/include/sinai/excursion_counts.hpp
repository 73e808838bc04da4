#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sinai/lattice_paths.hpp"
#include "sinai/sterneck.hpp"

namespace sinai {

using Rational = mpq_class;

// Exact counts indexed 0..max_n().
struct CountTable {
    std::string name;
    std::vector<BigCount> entries;

    std::size_t max_n() const { return entries.empty() ? 0 : entries.size() - 1; }
    const BigCount& operator[](std::size_t n) const { return entries.at(n); }
};

struct SeriesCoefficients {
    std::vector<Rational> coefficients;

    std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coefficients.at(n); }
};

enum class Route { Brute, DP, Recurrence };

inline constexpr int kBruteForceMaxN = 7;
inline constexpr int kDpMaxN = 60;
inline constexpr int kMeanderMaxN = 250;
inline constexpr int kSubsetDpMaxN = 30;

// All Sinai excursions of length 4n, in lexicographic order of their down
// times. Bridges with zero area are generated from down-time subsets of
// {1, ..., 4n-1} with exact sum n(4n-1), then filtered by classify().
std::vector<Walk> enumerate_excursions(int n);

// Phi_n by enumeration (n <= kBruteForceMaxN).
BigCount phi_bruteforce(int n);

// Phi_n by a forward DP over (step, height, area >= 0).
BigCount phi_dp(int n);
// Phi_0 .. Phi_max_n from a single DP pass of length 4 * max_n.
CountTable phi_dp_table(int max_n);

// Phi_0 = 1 and n Phi_n = sum_{k=1..n} Xi_k Phi_{n-k}.
CountTable phi_recurrence(int max_n);

CountTable phi_table(int max_n, Route route);

// B_n: bridges of length 4n with total area zero, i.e. size-2n subsets of
// {0, ..., 4n-1} with sum n(4n-1). Counted as the central coefficient of
// the Gaussian binomial [4n choose 2n]_q.
BigCount zero_area_bridges(int n);
CountTable zero_area_bridges_table(int max_n);
// The same count from a plain (chosen count, exact sum) subset-sum DP.
BigCount zero_area_bridges_subset_dp(int n);

// Irreducible counts from Phi(x) (1 - Phi1(x)) = 1.
CountTable phi_irreducible(const CountTable& phi);
CountTable phi_irreducible(int max_n);
// Irreducible excursions counted directly (n <= kBruteForceMaxN).
BigCount phi_irreducible_bruteforce(int n);

// Pairs (B, s) with B an excursion of length 4n and 0 <= s < k, where 4k is
// the length of B's first irreducible part.
BigCount phi_marked(int n);

// Bridges of length 2n with every partial area >= 0 (no terminal area
// condition); index 0..max_n.
CountTable nonnegative_area_bridges_table(int max_n);

// exp(sum_{k>=1} xi_k x^k / k), xi_k = Xi_k / 2^{4k}, to order max_n, from
// the coefficient recurrence of E' = E g'.
SeriesCoefficients sparre_andersen_series(int max_n);

// phi_n = Phi_n / 2^{4n} for every entry of the table.
SeriesCoefficients excursion_probabilities(const CountTable& phi);

}  // namespace sinai
