#include "polshare/bigfloat.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "polshare/errors.hpp"

namespace polshare {

BigFloat::BigFloat(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
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
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

Rational BigFloat::to_rational() const {
  if (!mpfr_number_p(value_)) throw DomainError("non-finite value has no rational form");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

namespace {

std::string format(const char* spec, int digits, mpfr_srcptr value) {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, spec, digits, value) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(raw);
}

}  // namespace

std::string BigFloat::to_string(int digits) const { return format("%.*Rg", digits, value_); }

std::string BigFloat::to_fixed(int decimals) const { return format("%.*Rf", decimals, value_); }

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

Enclosure log2_enclosure(const Rational& x, mpfr_prec_t bits) {
  if (x <= 0) throw DomainError("log2 of a non-positive value");
  Enclosure e{BigFloat(x, bits, MPFR_RNDD), BigFloat(x, bits, MPFR_RNDU)};
  mpfr_log2(e.lo.get(), e.lo.get(), MPFR_RNDD);
  mpfr_log2(e.hi.get(), e.hi.get(), MPFR_RNDU);
  return e;
}

Enclosure exp2_enclosure(const Rational& exponent, mpfr_prec_t bits) {
  Enclosure e{BigFloat(exponent, bits, MPFR_RNDD), BigFloat(exponent, bits, MPFR_RNDU)};
  mpfr_exp2(e.lo.get(), e.lo.get(), MPFR_RNDD);
  mpfr_exp2(e.hi.get(), e.hi.get(), MPFR_RNDU);
  return e;
}

}  // namespace polshare
