#include "polshare/closed_forms.hpp"

#include <algorithm>

#include "polshare/errors.hpp"

namespace polshare {

namespace {

void require_k(unsigned k) {
  if (k == 0) throw DomainError("subspace size k must be at least 1");
}

void require_sharing(unsigned p, unsigned k, const Rational& sigma) {
  require_k(k);
  if (sigma < 0 || sigma > 1) throw DomainError("sigma = " + to_exact_string(sigma) + " outside [0, 1]");
  if (k < p) {
    throw UseSpectralPathError("closed forms cover sharing (k >= p) only; k = " + std::to_string(k) +
                               " < p = " + std::to_string(p) + " needs the spectral path");
  }
}

}  // namespace

Rational f_pure(unsigned p, unsigned k) {
  require_k(k);
  if (k < p) return 1;
  return Rational(BigInt(1), pow2(k - p));
}

Rational delta_pure(unsigned p, unsigned k) {
  require_k(k);
  if (k < p) return 1;
  return ratio(pow2(p) - 1, pow2(k) - 1);
}

Rational f_partial(unsigned p, unsigned k, const Rational& sigma) {
  require_sharing(p, k, sigma);
  return pow(1 + Rational(sigma), p) / pow2(k);
}

Rational delta_partial(unsigned p, unsigned k, const Rational& sigma) {
  require_sharing(p, k, sigma);
  return (pow(1 + Rational(sigma), p) - 1) / (pow2(k) - 1);
}

BigFloat delta_partial(unsigned p, unsigned k, const BigFloat& sigma) {
  require_k(k);
  if (k < p) throw UseSpectralPathError("closed forms cover sharing (k >= p) only");
  BigFloat out(sigma.precision());
  mpfr_add_ui(out.get(), sigma.get(), 1, MPFR_RNDN);
  mpfr_pow_ui(out.get(), out.get(), p, MPFR_RNDN);
  mpfr_sub_ui(out.get(), out.get(), 1, MPFR_RNDN);
  const BigInt den = pow2(k) - 1;
  mpfr_div_z(out.get(), out.get(), den.get_mpz_t(), MPFR_RNDN);
  return out;
}

CriticalSize critical_k_pure(unsigned p) {
  if (p == 0) throw DomainError("critical size needs p >= 1");
  return {2 * p, Rational(2 * p), std::to_string(2 * p)};
}

CriticalSize critical_k_partial(unsigned p, const Rational& sigma, int digits) {
  if (p == 0) throw DomainError("critical size needs p >= 1");
  if (sigma == 0) throw DomainError("sigma = 0 carries no bias to share; critical size undefined");
  if (sigma < 0 || sigma > 1) throw DomainError("sigma = " + to_exact_string(sigma) + " outside (0, 1]");

  const mpfr_prec_t bits = bits_for_digits(digits) + 64;
  const Rational one_plus = 1 + sigma;
  Enclosure arg = log2_enclosure(one_plus, bits);
  mpfr_mul_ui(arg.lo.get(), arg.lo.get(), 2UL * p, MPFR_RNDD);
  mpfr_mul_ui(arg.hi.get(), arg.hi.get(), 2UL * p, MPFR_RNDU);

  const long lo_ceil = mpfr_get_si(arg.lo.get(), MPFR_RNDU);
  const long hi_ceil = mpfr_get_si(arg.hi.get(), MPFR_RNDU);

  // x <= m  <=>  (1 + sigma)^{2p} <= 2^m.
  const Rational target = pow(one_plus, 2UL * p);
  long k_c = lo_ceil;
  if (lo_ceil != hi_ceil) {
    const long first = std::max(1L, mpfr_get_si(arg.lo.get(), MPFR_RNDD));
    for (long m = first; m <= hi_ceil; ++m) {
      if (target <= Rational(pow2(static_cast<unsigned long>(m)))) {
        k_c = m;
        break;
      }
    }
  }
  k_c = std::max(1L, k_c);

  CriticalSize out;
  out.k_c = static_cast<unsigned>(k_c);
  if (target == Rational(pow2(out.k_c))) {
    out.exact_argument = Rational(k_c);
    out.argument_decimal = std::to_string(k_c);
  } else {
    BigFloat mid(bits);
    mpfr_add(mid.get(), arg.lo.get(), arg.hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    out.argument_decimal = mid.to_string(digits);
  }
  return out;
}

CriticalSize critical_k_partial(unsigned p, const PowerOfTwoSigma& sigma, int digits) {
  if (p == 0) throw DomainError("critical size needs p >= 1");
  const Rational& e = sigma.log2_one_plus_sigma;
  if (e <= 0) throw DomainError("sigma = 0 carries no bias to share; critical size undefined");
  if (e > 1) throw DomainError("sigma = 2^e - 1 exceeds 1");

  const Rational argument = e * (2UL * p);
  BigInt ceiling;
  mpz_cdiv_q(ceiling.get_mpz_t(), argument.get_num_mpz_t(), argument.get_den_mpz_t());
  CriticalSize out;
  out.k_c = static_cast<unsigned>(std::max(1L, ceiling.get_si()));
  out.exact_argument = argument;
  out.argument_decimal = argument.get_den() == 1 ? argument.get_num().get_str()
                                                 : to_decimal_string(argument, digits);
  return out;
}

BigFloat SigmaThreshold::value(mpfr_prec_t bits) const {
  BigFloat v(exponent, bits + 16);
  mpfr_exp2(v.get(), v.get(), MPFR_RNDN);
  mpfr_sub_ui(v.get(), v.get(), 1, MPFR_RNDN);
  BigFloat out(bits);
  mpfr_set(out.get(), v.get(), MPFR_RNDN);
  return out;
}

Enclosure SigmaThreshold::enclosure(mpfr_prec_t bits) const {
  Enclosure e = exp2_enclosure(exponent, bits);
  mpfr_sub_ui(e.lo.get(), e.lo.get(), 1, MPFR_RNDD);
  mpfr_sub_ui(e.hi.get(), e.hi.get(), 1, MPFR_RNDU);
  return e;
}

std::string SigmaThreshold::decimal(int digits) const { return value(bits_for_digits(digits)).to_string(digits); }

SigmaThreshold sigma_threshold(unsigned p, unsigned k) {
  if (p == 0 || k < p) throw DomainError("sigma threshold needs k >= p >= 1");
  SigmaThreshold t;
  t.p = p;
  t.k = k;
  t.exponent = ratio(k, 2UL * p);
  t.reachable = t.exponent <= 1;
  return t;
}

}  // namespace polshare
