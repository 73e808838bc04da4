#include <doctest.h>

#include <cmath>

#include "sinai/asymptotics.hpp"
#include "sinai/errors.hpp"

using namespace sinai;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

Enclosure point(double v) {
    Enclosure e(precision_for_digits(kDefaultDigits));
    mpfr_set_d(e.lower.get(), v, MPFR_RNDN);
    mpfr_set_d(e.upper.get(), v, MPFR_RNDN);
    return e;
}

}  // namespace

TEST_CASE("precision and big floats") {
    CHECK(precision_for_digits(50) >= 166);
    BigFloat a(128);
    mpfr_set_ui(a.get(), 3, MPFR_RNDN);
    BigFloat b = a;
    mpfr_add_ui(b.get(), b.get(), 1, MPFR_RNDN);
    CHECK(a.to_double() == 3.0);
    CHECK(b.to_double() == 4.0);
    BigFloat c = std::move(b);
    CHECK(c.to_double() == 4.0);
    CHECK(c.to_string(3) == "4.00e+00");
}

TEST_CASE("lambda partial sums") {
    const auto one = lambda_enclosure(1);
    CHECK(one.value.lower.to_double() == 0.0625);
    const auto two = lambda_enclosure(2);
    CHECK(two.value.lower.to_double() == doctest::Approx(1.0 / 16 + 5.0 / 512).epsilon(1e-15));
    double previous = 0.0;
    for (int k = 1; k <= 60; ++k) {
        const auto e = lambda_enclosure(k);
        REQUIRE(mpfr_cmp(e.value.lower.get(), e.value.upper.get()) <= 0);
        REQUIRE(e.value.lower.to_double() >= previous);
        previous = e.value.lower.to_double();
    }
    CHECK_THROWS_AS(lambda_enclosure(0), InvalidArgument);
}

TEST_CASE("lambda enclosure at ten thousand terms") {
    const auto e = lambda_enclosure(10000);
    CHECK(e.value.width() <= 1e-6);
    CHECK(e.upper_is_heuristic);
    CHECK(e.tail_bound > 0.0);
    CHECK(e.value.lower.to_double() == doctest::Approx(0.0804954).epsilon(1e-6));
    // upper end of a short sum covers the long one
    const auto short_sum = lambda_enclosure(1000);
    CHECK(mpfr_cmp(short_sum.value.upper.get(), e.value.lower.get()) >= 0);
}

TEST_CASE("gamma(1/4) two ways") {
    const auto prec = precision_for_digits(60);
    const BigFloat a = gamma_quarter(prec);
    const BigFloat b = gamma_quarter_agm(prec);
    BigFloat diff(prec);
    mpfr_sub(diff.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
    CHECK(diff.to_double() < 1e-50);
    CHECK(a.to_string(15) == "3.62560990822191e+00");
}

TEST_CASE("limit constants") {
    const auto zero = limit_constants(point(0.0));
    CHECK(zero.excursion.midpoint() == doctest::Approx(0.5 * std::sqrt(M_PI / 6.0)).epsilon(1e-14));
    CHECK(zero.tau.midpoint() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(zero.local.midpoint() == doctest::Approx(std::sqrt(3.0) / (4.0 * M_PI)).epsilon(1e-14));

    const auto lambda = lambda_enclosure(10000);
    const auto c = limit_constants(lambda.value);
    CHECK(c.local.midpoint() == doctest::Approx(std::sqrt(3.0) / (4.0 * M_PI)).epsilon(1e-14));
    for (const Enclosure* e : {&c.excursion, &c.phi, &c.local, &c.meander, &c.tau}) {
        REQUIRE(mpfr_cmp(e->lower.get(), e->upper.get()) <= 0);
    }
    const double lam = lambda.value.midpoint();
    CHECK(c.meander.midpoint() == doctest::Approx(std::exp(lam / 2) * std::sqrt(M_PI) / std::tgamma(0.25)).epsilon(1e-7));
    CHECK(c.tau.midpoint() == doctest::Approx(1.0 - std::exp(-lam)).epsilon(1e-6));
}

TEST_CASE("constant algebra to twelve digits") {
    const auto lambda = lambda_enclosure(2000);
    const auto c = limit_constants(lambda.value);
    const auto prec = c.phi.lower.precision();
    for (bool lower : {true, false}) {
        BigFloat ratio(prec);
        const Enclosure& local = c.local;
        mpfr_div(ratio.get(), (lower ? c.phi.lower : c.phi.upper).get(), (lower ? local.upper : local.lower).get(), MPFR_RNDN);
        BigFloat diff(prec);
        mpfr_sub(diff.get(), ratio.get(), (lower ? c.excursion.lower : c.excursion.upper).get(), MPFR_RNDN);
        mpfr_div(diff.get(), diff.get(), ratio.get(), MPFR_RNDN);
        CHECK(std::abs(diff.to_double()) < 1e-12);
    }
    CHECK(rel_diff(c.phi.midpoint() / c.local.midpoint(), c.excursion.midpoint()) < 1e-12);
}

TEST_CASE("levy checks") {
    const auto r = levy_checks(2000, 0.0804954);
    CHECK(r.scaled_xi[1] == doctest::Approx(1.0 / 16).epsilon(1e-15));
    CHECK(r.scaled_xi_target == doctest::Approx(0.0498677).epsilon(1e-6));
    for (int n = 100; n < 2000; ++n) {
        const double band = 10.0 / n;
        REQUIRE(r.nu_ratio[static_cast<std::size_t>(n)] > 1.0 - band);
        REQUIRE(r.nu_ratio[static_cast<std::size_t>(n)] < 1.0 + band);
    }
    CHECK(rel_diff(r.scaled_xi[2000], r.scaled_xi_target) < 0.01);
    CHECK_THROWS_AS(levy_checks(0, 0.08), InvalidArgument);
    CHECK_THROWS_AS(levy_checks(10, 0.0), InvalidArgument);
}

TEST_CASE("exact probability tables") {
    const auto pn = exact_pn_table(40, 0.392128);
    CHECK(pn[0].value == 1);
    CHECK(pn[1].value == Rational(1, 2));
    CHECK(pn[2].value == Rational(3, 8));
    CHECK(pn[3].value == Rational(8, 29));
    const auto gap = [&](int n) { return std::abs(pn[static_cast<std::size_t>(n)].scaled - 0.392128); };
    CHECK(gap(20) < gap(10));
    CHECK(gap(40) < gap(20));

    const auto meander = exact_meander_table(4, 0.5);
    CHECK(meander[0].value == 1);
    CHECK(meander[1].value == Rational(1, 2));
    CHECK(meander[2].value == Rational(1, 2));

    const auto local = local_limit_table(3, 1.0);
    CHECK(local[1].value == Rational(1, 8));
    CHECK(local[2].value == Rational(1, 32));
}
