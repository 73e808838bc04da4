#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace sinai {

using BigCount = mpz_class;

std::uint64_t totient(std::uint64_t n);
int moebius(std::uint64_t n);
// Sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

// Exact C(a, b); zero when b < 0 or b > a.
BigCount binomial(std::int64_t a, std::int64_t b);

// von Sterneck: the number of size-k multisets of {0, ..., modulus-1} whose
// sum is congruent to residue mod modulus,
//
//   (1/modulus) * sum_{d | gcd(k, modulus)} C((modulus+k)/d - 1, k/d)
//                 * mu(d/g) phi(d) / phi(d/g),      g = gcd(d, residue).
BigCount lambda_vs(std::int64_t k, std::int64_t modulus, std::int64_t residue);

// Xi_n: size-2n subsets of {1, ..., 4n-1} summing to 3n mod 4n,
//   Xi_n = (1/(4n)) * sum_{d | 2n} C(4n/d - 1, 2n/d) phi(d).
BigCount xi(std::int64_t n);

// Xi_0 .. Xi_max_n with Xi_0 = 0 as a placeholder.
std::vector<BigCount> xi_table(std::int64_t max_n);

struct SubsetCountQuery {
    // Subsets draw from {1, ..., universe_max}; multisets from {0, ..., universe_max}.
    std::int64_t universe_max = 0;
    std::int64_t size = 0;
    std::int64_t residue = 0;
    std::int64_t modulus = 1;
    bool multiset = false;
};

enum class CountMode { Auto, Exhaustive, DynamicProgramming };

// Independent oracle for lambda_vs and xi. Exhaustive mode walks every
// candidate; DP mode runs a (element, chosen count, residue) table. Auto
// picks exhaustive for small instances. Oversized requests throw
// ResourceGuard.
BigCount brute_count(const SubsetCountQuery& q, CountMode mode = CountMode::Auto);

}  // namespace sinai
