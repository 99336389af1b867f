#pragma once

#include <optional>
#include <string>

#include "polshare/bigfloat.hpp"
#include "polshare/scalar.hpp"

namespace polshare {

/// f for p perfectly polarized spins shared over k: 2^{p-k} if k >= p, else 1.
Rational f_pure(unsigned p, unsigned k);

/// (2^p - 1) / (2^k - 1) if k >= p, else 1.
Rational delta_pure(unsigned p, unsigned k);

/// 2^{-k} (1 + sigma)^p. Sharing only: k < p throws UseSpectralPathError.
Rational f_partial(unsigned p, unsigned k, const Rational& sigma);

/// ((1 + sigma)^p - 1) / (2^k - 1). Sharing only, as f_partial.
Rational delta_partial(unsigned p, unsigned k, const Rational& sigma);

/// delta_partial for a sigma that is only known to floating precision.
BigFloat delta_partial(unsigned p, unsigned k, const BigFloat& sigma);

/// A polarization of the form sigma = 2^e - 1, kept symbolically so that
/// thresholds like 2^{3/4} - 1 can be fed back without rounding.
struct PowerOfTwoSigma {
  Rational log2_one_plus_sigma;
};

/// Smallest subspace size at which shared polarization is no longer
/// provably entangled.
struct CriticalSize {
  unsigned k_c = 0;
  /// 2p log2(1 + sigma) when it is rational (always the case for sigma = 1).
  std::optional<Rational> exact_argument;
  /// Decimal rendering of the argument before the ceiling.
  std::string argument_decimal;
};

CriticalSize critical_k_pure(unsigned p);

/// k_c = ceil(2p ln(1 + sigma) / ln 2). The argument is enclosed in an
/// outward-rounded interval; if the interval straddles an integer the
/// ceiling is settled exactly by comparing (1 + sigma)^{2p} with 2^m.
/// sigma = 0 has no critical size and throws DomainError.
CriticalSize critical_k_partial(unsigned p, const Rational& sigma, int digits = 30);

/// Same for sigma = 2^e - 1; the argument 2pe is then exact.
CriticalSize critical_k_partial(unsigned p, const PowerOfTwoSigma& sigma, int digits = 30);

/// Minimal polarization sigma* = 2^{k/(2p)} - 1 at which p spins shared over
/// k qubits reach the entanglable border.
struct SigmaThreshold {
  unsigned p = 0;
  unsigned k = 0;
  Rational exponent;  // k / (2p)
  bool reachable = false;  // sigma* <= 1

  PowerOfTwoSigma as_sigma() const { return {exponent}; }
  BigFloat value(mpfr_prec_t bits) const;
  Enclosure enclosure(mpfr_prec_t bits) const;
  std::string decimal(int digits = 50) const;
};

SigmaThreshold sigma_threshold(unsigned p, unsigned k);

}  // namespace polshare
