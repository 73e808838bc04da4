#pragma once

#include <string>

#include <mpfr.h>

namespace sinai {

// Working precision in bits for a decimal digit count, with guard bits.
mpfr_prec_t precision_for_digits(int digits);

// Owning wrapper around an mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t precision);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
    // Scientific notation with `digits` significant digits, rounded as asked.
    std::string to_string(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

private:
    mpfr_t value_;
};

// A real number known to lie in [lower, upper].
struct Enclosure {
    BigFloat lower;
    BigFloat upper;

    explicit Enclosure(mpfr_prec_t precision) : lower(precision), upper(precision) {}

    double width() const;
    double midpoint() const;
};

}  // namespace sinai
