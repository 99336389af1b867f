#pragma once

#include <mpfr.h>

#include <string>

#include "polshare/scalar.hpp"

namespace polshare {

/// Owning wrapper around an mpfr_t. Every operation takes an explicit
/// rounding mode so callers can build outward-rounded enclosures.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits);
  BigFloat(const Rational& value, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  /// Exact rational value of the binary float.
  Rational to_rational() const;

  /// %g-style rendering with `digits` significant digits.
  std::string to_string(int digits) const;

  /// Fixed-point rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  int compare(const BigFloat& other) const { return mpfr_cmp(value_, other.value_); }

 private:
  mpfr_t value_;
};

/// Bits needed to carry `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

/// Closed interval [lo, hi] with outward-rounded endpoints.
struct Enclosure {
  BigFloat lo;
  BigFloat hi;
};

/// Encloses log2(x) for rational x > 0.
Enclosure log2_enclosure(const Rational& x, mpfr_prec_t bits);

/// Encloses 2^e for rational e.
Enclosure exp2_enclosure(const Rational& e, mpfr_prec_t bits);

}  // namespace polshare
