#include "polshare/scalar.hpp"

#include <cctype>
#include <string>

#include "polshare/bigfloat.hpp"
#include "polshare/errors.hpp"

namespace polshare {

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt binomial(unsigned long n, unsigned long j) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, j);
  return r;
}

Rational pow(const Rational& x, unsigned long e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed number: '" + std::string(whole) + "'");
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_exact(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("malformed denominator: '" + std::string(whole) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw DomainError("zero denominator: '" + std::string(whole) + "'");
    return ratio(num, den);
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt ex = parse_integer(text.substr(e + 1), whole);
    if (!ex.fits_slong_p() || abs(ex) > 100000) throw DomainError("exponent out of range: '" + std::string(whole) + "'");
    exponent = ex.get_si();
    text = text.substr(0, e);
  }

  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw DomainError("malformed number: '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  Rational r{BigInt(digits, 10)};
  if (exponent >= 0) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
    r *= scale;
  } else {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-exponent));
    r /= scale;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_exact_string(const Rational& x) { return x.get_str(10); }

std::string to_decimal_string(const Rational& x, int digits) {
  return BigFloat(x, bits_for_digits(digits) + 64).to_string(digits);
}

}  // namespace polshare
