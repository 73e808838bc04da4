#include "sinai/sterneck.hpp"

#include <algorithm>
#include <string>

#include "sinai/errors.hpp"

namespace sinai {

namespace {

// (prime, exponent) pairs by trial division; inputs stay far below 2^32.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) {
        f.emplace_back(n, 1);
    }
    return f;
}

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) {
        throw InvalidArgument(std::string(what) + " is undefined at 0");
    }
}

BigCount exact_quotient(const BigCount& num, std::int64_t den, const char* what) {
    BigCount d = den;
    if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) {
        throw InternalError(std::string(what) + ": closed-form sum is not divisible by " + std::to_string(den));
    }
    BigCount q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    return q;
}

constexpr double kAutoExhaustiveLimit = 2e6;
constexpr double kForcedExhaustiveLimit = 5e7;
constexpr std::int64_t kExhaustiveUniverseLimit = 40;
constexpr double kDpCellLimit = 5e7;

double candidate_count(const SubsetCountQuery& q) {
    // C(M, k) subsets of {1..M}; C(M+k, k) multisets of {0..M}.
    const std::int64_t top = q.multiset ? q.universe_max + q.size : q.universe_max;
    return binomial(top, q.size).get_d();
}

void exhaustive_subsets(std::int64_t next, std::int64_t max, std::int64_t remaining, std::int64_t sum,
                        const SubsetCountQuery& q, std::uint64_t& hits) {
    if (remaining == 0) {
        if (sum % q.modulus == q.residue) {
            ++hits;
        }
        return;
    }
    for (std::int64_t v = next; v + remaining - 1 <= max; ++v) {
        exhaustive_subsets(v + 1, max, remaining - 1, (sum + v) % q.modulus, q, hits);
    }
}

void exhaustive_multisets(std::int64_t next, std::int64_t max, std::int64_t remaining, std::int64_t sum,
                          const SubsetCountQuery& q, std::uint64_t& hits) {
    if (remaining == 0) {
        if (sum % q.modulus == q.residue) {
            ++hits;
        }
        return;
    }
    for (std::int64_t v = next; v <= max; ++v) {
        exhaustive_multisets(v, max, remaining - 1, (sum + v) % q.modulus, q, hits);
    }
}

BigCount dp_count(const SubsetCountQuery& q) {
    const auto k = static_cast<std::size_t>(q.size);
    const auto m = static_cast<std::size_t>(q.modulus);
    if (static_cast<double>(k + 1) * static_cast<double>(m) > kDpCellLimit) {
        throw ResourceGuard("brute_count: DP table of " + std::to_string(k + 1) + " x " + std::to_string(m) +
                            " cells exceeds the memory guard");
    }
    // ways[c * m + r]: choices of c elements so far with sum = r mod m.
    std::vector<BigCount> ways((k + 1) * m);
    ways[0] = 1;
    const std::int64_t lo = q.multiset ? 0 : 1;
    for (std::int64_t v = lo; v <= q.universe_max; ++v) {
        const auto shift = static_cast<std::size_t>(v % q.modulus);
        if (q.multiset) {
            // Unbounded multiplicity: c ascending reuses this element.
            for (std::size_t c = 1; c <= k; ++c) {
                for (std::size_t r = 0; r < m; ++r) {
                    ways[c * m + (r + shift) % m] += ways[(c - 1) * m + r];
                }
            }
        } else {
            for (std::size_t c = k; c >= 1; --c) {
                for (std::size_t r = 0; r < m; ++r) {
                    ways[c * m + (r + shift) % m] += ways[(c - 1) * m + r];
                }
            }
        }
    }
    return ways[k * m + static_cast<std::size_t>(q.residue)];
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t totient(std::uint64_t n) {
    require_positive(n, "totient");
    std::uint64_t result = n;
    for (auto [p, e] : factorize(n)) {
        result = result / p * (p - 1);
    }
    return result;
}

int moebius(std::uint64_t n) {
    require_positive(n, "moebius");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) {
            return 0;
        }
        sign = -sign;
    }
    return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    require_positive(n, "divisors");
    std::vector<std::uint64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t existing = out.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < existing; ++j) {
                out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigCount binomial(std::int64_t a, std::int64_t b) {
    BigCount r = 0;
    if (a < 0 || b < 0 || b > a) {
        return r;
    }
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

BigCount lambda_vs(std::int64_t k, std::int64_t modulus, std::int64_t residue) {
    if (modulus < 1) {
        throw InvalidArgument("lambda_vs needs modulus >= 1");
    }
    if (k < 0) {
        throw InvalidArgument("lambda_vs needs k >= 0");
    }
    if (residue < 0 || residue >= modulus) {
        throw InvalidArgument("lambda_vs needs 0 <= residue < modulus");
    }
    const auto um = static_cast<std::uint64_t>(modulus);
    const std::uint64_t common = gcd(static_cast<std::uint64_t>(k), um);
    BigCount total = 0;
    for (std::uint64_t d : divisors(common)) {
        const std::uint64_t g = gcd(d, static_cast<std::uint64_t>(residue));
        const std::uint64_t reduced = d / g;
        const int mu = moebius(reduced);
        if (mu == 0) {
            continue;
        }
        const std::uint64_t weight = totient(d) / totient(reduced);
        const auto sd = static_cast<std::int64_t>(d);
        BigCount term = binomial((modulus + k) / sd - 1, k / sd);
        term *= static_cast<unsigned long>(weight);
        if (mu > 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    if (total < 0) {
        throw InternalError("lambda_vs: negative closed-form sum");
    }
    return exact_quotient(total, modulus, "lambda_vs");
}

BigCount xi(std::int64_t n) {
    if (n < 1) {
        throw InvalidArgument("xi needs n >= 1");
    }
    BigCount total = 0;
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(2 * n))) {
        const auto sd = static_cast<std::int64_t>(d);
        BigCount term = binomial(4 * n / sd - 1, 2 * n / sd);
        term *= static_cast<unsigned long>(totient(d));
        total += term;
    }
    return exact_quotient(total, 4 * n, "xi");
}

std::vector<BigCount> xi_table(std::int64_t max_n) {
    if (max_n < 0) {
        throw InvalidArgument("xi_table needs max_n >= 0");
    }
    std::vector<BigCount> out(static_cast<std::size_t>(max_n + 1));
    out[0] = 0;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        out[static_cast<std::size_t>(n)] = xi(n);
    }
    return out;
}

BigCount brute_count(const SubsetCountQuery& q, CountMode mode) {
    if (q.modulus < 1 || q.residue < 0 || q.residue >= q.modulus) {
        throw InvalidArgument("brute_count needs modulus >= 1 and 0 <= residue < modulus");
    }
    if (q.size < 0 || q.universe_max < -1) {
        throw InvalidArgument("brute_count needs size >= 0 and universe_max >= -1");
    }
    const double candidates = candidate_count(q);
    if (mode == CountMode::Auto) {
        mode = candidates <= kAutoExhaustiveLimit && q.universe_max <= kExhaustiveUniverseLimit
                   ? CountMode::Exhaustive
                   : CountMode::DynamicProgramming;
    }
    if (mode == CountMode::DynamicProgramming) {
        return dp_count(q);
    }
    if (q.universe_max > kExhaustiveUniverseLimit || candidates > kForcedExhaustiveLimit) {
        throw ResourceGuard("brute_count: exhaustive enumeration of " + std::to_string(candidates) +
                            " candidates over a universe of " + std::to_string(q.universe_max) +
                            " exceeds the guard");
    }
    std::uint64_t hits = 0;
    if (q.multiset) {
        exhaustive_multisets(0, q.universe_max, q.size, 0, q, hits);
    } else {
        exhaustive_subsets(1, q.universe_max, q.size, 0, q, hits);
    }
    return BigCount(static_cast<unsigned long>(hits));
}

}  // namespace sinai
