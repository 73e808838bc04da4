#pragma once

#include <vector>

#include "sinai/big_float.hpp"
#include "sinai/excursion_counts.hpp"

namespace sinai {

inline constexpr int kDefaultDigits = 50;
inline constexpr double kTailSafetyFactor = 1.05;

// lambda = sum_k Xi_k / (k 2^{4k}).
//
// `value.lower` is the partial sum over k <= terms rounded toward -inf, a
// rigorous lower bound since every term is positive. `value.upper` adds a
// tail bound C * (2/3) * terms^{-3/2}, where C is the largest observed
// k^{3/2} xi_k times kTailSafetyFactor. The tail constant is calibrated on
// the computed range, so the upper end is heuristic; `scaled_xi_monotone`
// records whether k^{3/2} xi_k was non-increasing over that range, which
// is what makes the calibration plausible.
struct LambdaEnclosure {
    Enclosure value;
    int terms = 0;
    double tail_constant = 0.0;
    double tail_bound = 0.0;
    bool scaled_xi_monotone = false;
    bool upper_is_heuristic = true;
};

LambdaEnclosure lambda_enclosure(int terms, int digits = kDefaultDigits);

// Gamma(1/4) two ways: MPFR's gamma, and (2 pi)^{3/4} / sqrt(AGM(1, sqrt 2)).
BigFloat gamma_quarter(mpfr_prec_t precision, mpfr_rnd_t rnd = MPFR_RNDN);
BigFloat gamma_quarter_agm(mpfr_prec_t precision);

struct LimitConstants {
    Enclosure excursion;  // lim sqrt(n) p_n          = (1/2) sqrt(pi/6) e^lambda
    Enclosure phi;        // lim n^{5/2} phi_n         = e^lambda / (8 sqrt(2 pi))
    Enclosure local;      // lim n^2 P(S = A = 0)      = sqrt(3) / (4 pi)
    Enclosure meander;    // lim n^{1/4} P(meander)    = e^{lambda/2} sqrt(pi) / Gamma(1/4)
    Enclosure tau;        // P(A_tau = 0)              = 1 - e^{-lambda}
};

// Every field is an outward-rounded function of the lambda enclosure.
LimitConstants limit_constants(const Enclosure& lambda);

struct LevyReport {
    // Entries are indexed by n (index 0 unused).
    std::vector<double> scaled_xi;          // n^{3/2} xi_n
    double scaled_xi_target = 0.0;          // 1 / (8 sqrt(2 pi))
    std::vector<double> nu_ratio;           // nu_n / nu_{n+1}, n < max_n
    std::vector<double> convolution_ratio;  // (q*q)_n / q_n with q = nu / lambda
};

LevyReport levy_checks(int max_n, double lambda);

struct ExactRow {
    int n = 0;
    Rational value;
    double scaled = 0.0;  // value times the normalizing power of n
    double ratio_to_limit = 0.0;
};

// p_n = Phi_n / B_n with scaled = sqrt(n) p_n.
std::vector<ExactRow> exact_pn_table(int max_n, double limit);
// P(A_1..A_2n >= 0 | S_2n = 0) with scaled = n^{1/4} value.
std::vector<ExactRow> exact_meander_table(int max_n, double limit);
// P(S_4n = A_4n = 0) = B_n / 2^{4n} with scaled = n^2 value.
std::vector<ExactRow> local_limit_table(int max_n, double limit);

}  // namespace sinai
