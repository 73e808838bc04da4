#include "sinai/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "sinai/errors.hpp"

namespace sinai {

namespace {

// xi_n / n as a double without overflowing on the 4n-bit numerator.
double nu_double(const BigCount& xi_n, long n) {
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, xi_n.get_mpz_t());
    return std::ldexp(mant, static_cast<int>(exp - 4 * n)) / static_cast<double>(n);
}

BigFloat pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
    BigFloat p(prec);
    mpfr_const_pi(p.get(), rnd);
    return p;
}

mpfr_rnd_t opposite(mpfr_rnd_t rnd) {
    return rnd == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
}

// Each builder evaluates its constant with every rounding pointing in `rnd`'s
// direction; the constants are increasing in lambda.
void excursion_constant(BigFloat& out, mpfr_srcptr lambda, mpfr_rnd_t rnd) {
    const auto prec = out.precision();
    BigFloat t = pi(prec, rnd);
    mpfr_div_ui(t.get(), t.get(), 6, rnd);
    mpfr_sqrt(t.get(), t.get(), rnd);
    BigFloat e(prec);
    mpfr_exp(e.get(), lambda, rnd);
    mpfr_mul(out.get(), t.get(), e.get(), rnd);
    mpfr_div_2ui(out.get(), out.get(), 1, rnd);
}

void phi_constant(BigFloat& out, mpfr_srcptr lambda, mpfr_rnd_t rnd) {
    const auto prec = out.precision();
    const mpfr_rnd_t den_rnd = opposite(rnd);
    BigFloat den = pi(prec, den_rnd);
    mpfr_mul_ui(den.get(), den.get(), 2, den_rnd);
    mpfr_sqrt(den.get(), den.get(), den_rnd);
    mpfr_mul_ui(den.get(), den.get(), 8, den_rnd);
    mpfr_exp(out.get(), lambda, rnd);
    mpfr_div(out.get(), out.get(), den.get(), rnd);
}

void local_constant(BigFloat& out, mpfr_rnd_t rnd) {
    const auto prec = out.precision();
    BigFloat den = pi(prec, opposite(rnd));
    mpfr_mul_ui(den.get(), den.get(), 4, opposite(rnd));
    mpfr_sqrt_ui(out.get(), 3, rnd);
    mpfr_div(out.get(), out.get(), den.get(), rnd);
}

void meander_constant(BigFloat& out, mpfr_srcptr lambda, mpfr_rnd_t rnd) {
    const auto prec = out.precision();
    BigFloat g = gamma_quarter(prec, opposite(rnd));
    BigFloat root_pi = pi(prec, rnd);
    mpfr_sqrt(root_pi.get(), root_pi.get(), rnd);
    BigFloat half(prec);
    mpfr_div_2ui(half.get(), lambda, 1, rnd);
    mpfr_exp(out.get(), half.get(), rnd);
    mpfr_mul(out.get(), out.get(), root_pi.get(), rnd);
    mpfr_div(out.get(), out.get(), g.get(), rnd);
}

void tau_constant(BigFloat& out, mpfr_srcptr lambda, mpfr_rnd_t rnd) {
    const auto prec = out.precision();
    BigFloat e(prec);
    mpfr_neg(e.get(), lambda, MPFR_RNDN);
    mpfr_exp(e.get(), e.get(), opposite(rnd));
    mpfr_ui_sub(out.get(), 1, e.get(), rnd);
}

template <class Builder>
Enclosure enclose(const Enclosure& lambda, Builder build) {
    Enclosure out(lambda.lower.precision());
    build(out.lower, lambda.lower.get(), MPFR_RNDD);
    build(out.upper, lambda.upper.get(), MPFR_RNDU);
    return out;
}

Rational power_of_two_fraction(const BigCount& num, unsigned long bits) {
    mpz_class den = 1;
    den <<= bits;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

LambdaEnclosure lambda_enclosure(int terms, int digits) {
    if (terms < 1) {
        throw InvalidArgument("lambda_enclosure needs at least one term");
    }
    const mpfr_prec_t prec = precision_for_digits(std::max(digits, kDefaultDigits));
    const auto xis = xi_table(terms);

    LambdaEnclosure out{Enclosure(prec)};
    out.terms = terms;
    BigFloat term(prec);
    double largest_scaled = 0.0;
    double previous_scaled = INFINITY;
    out.scaled_xi_monotone = true;
    for (long k = 1; k <= terms; ++k) {
        mpfr_set_z(term.get(), xis[static_cast<std::size_t>(k)].get_mpz_t(), MPFR_RNDD);
        mpfr_div_2ui(term.get(), term.get(), static_cast<unsigned long>(4 * k), MPFR_RNDD);
        mpfr_div_ui(term.get(), term.get(), static_cast<unsigned long>(k), MPFR_RNDD);
        mpfr_add(out.value.lower.get(), out.value.lower.get(), term.get(), MPFR_RNDD);

        const double scaled = nu_double(xis[static_cast<std::size_t>(k)], k) * std::pow(static_cast<double>(k), 2.5);
        largest_scaled = std::max(largest_scaled, scaled);
        if (scaled > previous_scaled) {
            out.scaled_xi_monotone = false;
        }
        previous_scaled = scaled;
    }
    out.tail_constant = kTailSafetyFactor * largest_scaled;

    // sum_{k > K} C k^{-5/2} <= C * integral_K^inf x^{-5/2} dx = (2/3) C K^{-3/2}.
    BigFloat tail(prec);
    mpfr_set_d(tail.get(), out.tail_constant, MPFR_RNDU);
    mpfr_mul_ui(tail.get(), tail.get(), 2, MPFR_RNDU);
    mpfr_div_ui(tail.get(), tail.get(), 3, MPFR_RNDU);
    BigFloat k32(prec);
    mpfr_set_ui(k32.get(), static_cast<unsigned long>(terms), MPFR_RNDD);
    mpfr_pow_ui(k32.get(), k32.get(), 3, MPFR_RNDD);
    mpfr_sqrt(k32.get(), k32.get(), MPFR_RNDD);
    mpfr_div(tail.get(), tail.get(), k32.get(), MPFR_RNDU);
    out.tail_bound = tail.to_double(MPFR_RNDU);
    mpfr_add(out.value.upper.get(), out.value.lower.get(), tail.get(), MPFR_RNDU);
    return out;
}

BigFloat gamma_quarter(mpfr_prec_t precision, mpfr_rnd_t rnd) {
    BigFloat quarter(precision);
    mpfr_set_d(quarter.get(), 0.25, MPFR_RNDN);
    BigFloat g(precision);
    mpfr_gamma(g.get(), quarter.get(), rnd);
    return g;
}

BigFloat gamma_quarter_agm(mpfr_prec_t precision) {
    BigFloat root2(precision);
    mpfr_sqrt_ui(root2.get(), 2, MPFR_RNDN);
    BigFloat one(precision);
    mpfr_set_ui(one.get(), 1, MPFR_RNDN);
    BigFloat m(precision);
    mpfr_agm(m.get(), one.get(), root2.get(), MPFR_RNDN);
    // Gamma(1/4)^2 = (2 pi)^{3/2} / AGM(1, sqrt 2).
    BigFloat two_pi = pi(precision, MPFR_RNDN);
    mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
    BigFloat g(precision);
    mpfr_sqrt(g.get(), two_pi.get(), MPFR_RNDN);
    mpfr_mul(g.get(), g.get(), two_pi.get(), MPFR_RNDN);
    mpfr_div(g.get(), g.get(), m.get(), MPFR_RNDN);
    mpfr_sqrt(g.get(), g.get(), MPFR_RNDN);
    return g;
}

LimitConstants limit_constants(const Enclosure& lambda) {
    return LimitConstants{
        enclose(lambda, excursion_constant),
        enclose(lambda, phi_constant),
        enclose(lambda, [](BigFloat& out, mpfr_srcptr, mpfr_rnd_t rnd) { local_constant(out, rnd); }),
        enclose(lambda, meander_constant),
        enclose(lambda, tau_constant),
    };
}

LevyReport levy_checks(int max_n, double lambda) {
    if (max_n < 1) {
        throw InvalidArgument("levy_checks needs max_n >= 1");
    }
    if (!(lambda > 0.0)) {
        throw InvalidArgument("levy_checks needs lambda > 0");
    }
    const auto xis = xi_table(max_n);
    std::vector<double> nu(static_cast<std::size_t>(max_n + 1), 0.0);
    for (long n = 1; n <= max_n; ++n) {
        nu[static_cast<std::size_t>(n)] = nu_double(xis[static_cast<std::size_t>(n)], n);
    }
    LevyReport r;
    r.scaled_xi_target = 1.0 / (8.0 * std::sqrt(2.0 * M_PI));
    r.scaled_xi.assign(nu.size(), 0.0);
    r.nu_ratio.assign(nu.size(), 0.0);
    r.convolution_ratio.assign(nu.size(), 0.0);
    for (std::size_t n = 1; n < nu.size(); ++n) {
        const double dn = static_cast<double>(n);
        r.scaled_xi[n] = nu[n] * dn * std::pow(dn, 1.5);
        if (n + 1 < nu.size()) {
            r.nu_ratio[n] = nu[n] / nu[n + 1];
        }
        // q = nu / lambda has q_0 = 0, so (q*q)_n runs over 1 <= k <= n-1.
        double conv = 0.0;
        for (std::size_t k = 1; k < n; ++k) {
            conv += nu[k] * nu[n - k];
        }
        r.convolution_ratio[n] = conv / (lambda * nu[n]);
    }
    return r;
}

std::vector<ExactRow> exact_pn_table(int max_n, double limit) {
    const auto phi = phi_recurrence(max_n);
    const auto bridges = zero_area_bridges_table(max_n);
    std::vector<ExactRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        ExactRow row;
        row.n = n;
        row.value = Rational(phi[static_cast<std::size_t>(n)], bridges[static_cast<std::size_t>(n)]);
        row.value.canonicalize();
        row.scaled = std::sqrt(static_cast<double>(n)) * row.value.get_d();
        row.ratio_to_limit = row.scaled / limit;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExactRow> exact_meander_table(int max_n, double limit) {
    const auto numerators = nonnegative_area_bridges_table(max_n);
    std::vector<ExactRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        ExactRow row;
        row.n = n;
        row.value = Rational(numerators[static_cast<std::size_t>(n)], binomial(2 * n, n));
        row.value.canonicalize();
        row.scaled = std::pow(static_cast<double>(n), 0.25) * row.value.get_d();
        row.ratio_to_limit = row.scaled / limit;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExactRow> local_limit_table(int max_n, double limit) {
    const auto bridges = zero_area_bridges_table(max_n);
    std::vector<ExactRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        ExactRow row;
        row.n = n;
        row.value = power_of_two_fraction(bridges[static_cast<std::size_t>(n)], static_cast<unsigned long>(4 * n));
        const double dn = static_cast<double>(n);
        row.scaled = dn * dn * row.value.get_d();
        row.ratio_to_limit = row.scaled / limit;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sinai
