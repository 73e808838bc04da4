#include "sinai/big_float.hpp"

#include <cmath>
#include <memory>

namespace sinai {

mpfr_prec_t precision_for_digits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        mpfr_swap(value_, other.value_);
    }
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(value_);
}

std::string BigFloat::to_string(int digits, mpfr_rnd_t rnd) const {
    const int size = mpfr_snprintf(nullptr, 0, "%.*R*e", digits - 1, rnd, value_);
    auto buf = std::make_unique<char[]>(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buf.get(), static_cast<std::size_t>(size) + 1, "%.*R*e", digits - 1, rnd, value_);
    return std::string(buf.get(), static_cast<std::size_t>(size));
}

double Enclosure::width() const {
    BigFloat w(upper.precision());
    mpfr_sub(w.get(), upper.get(), lower.get(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
}

double Enclosure::midpoint() const {
    BigFloat m(upper.precision());
    mpfr_add(m.get(), upper.get(), lower.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
}

}  // namespace sinai
