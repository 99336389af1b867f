#include "polshare/bounds.hpp"

#include <algorithm>

#include "polshare/closed_forms.hpp"
#include "polshare/errors.hpp"

namespace polshare {

std::string to_string(BoundFamily f) { return f == BoundFamily::braunstein ? "braunstein" : "gb"; }

std::string to_string(Region r) {
  switch (r) {
    case Region::S:
      return "S";
    case Region::ES:
      return "ES";
    case Region::E:
      return "E";
  }
  return "?";
}

BoundFamily parse_bound_family(std::string_view text) {
  if (text == "braunstein") return BoundFamily::braunstein;
  if (text == "gb" || text == "gurvits_barnum") return BoundFamily::gurvits_barnum;
  throw DomainError("unknown bound family '" + std::string(text) + "'");
}

Region parse_region(std::string_view text) {
  if (text == "S") return Region::S;
  if (text == "ES") return Region::ES;
  if (text == "E") return Region::E;
  throw DomainError("unknown region '" + std::string(text) + "'");
}

Bound::Bound(Kind kind, unsigned k) : kind_(kind), k_(k) {
  if (k < 2) throw DomainError("entanglement bounds need k >= 2");
}

std::optional<Rational> Bound::exact_value() const {
  switch (kind_) {
    case Kind::lower_braunstein:
      return Rational(BigInt(1), 1 + pow2(2 * k_ - 1));
    case Kind::lower_gurvits_barnum:
      if (k_ % 2 != 0) return std::nullopt;
      {
        BigInt six_half;
        mpz_ui_pow_ui(six_half.get_mpz_t(), 6, k_ / 2);
        return ratio(3, 2 * six_half);
      }
    case Kind::upper:
      if (k_ % 2 != 0) return std::nullopt;
      return Rational(BigInt(1), 1 + pow2(k_ / 2));
  }
  return std::nullopt;
}

namespace {

std::strong_ordering compare_int(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering Bound::compare(const Rational& delta) const {
  if (kind_ == Kind::lower_braunstein) {
    const int c = cmp(delta, *exact_value());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  // Both remaining bounds are positive.
  if (delta <= 0) return std::strong_ordering::less;
  const BigInt& a = delta.get_num();
  const BigInt& b = delta.get_den();

  if (kind_ == Kind::lower_gurvits_barnum) {
    // delta <=> 3 / (2 6^{k/2})  <=>  4 a^2 6^k <=> 9 b^2
    BigInt six_k;
    mpz_ui_pow_ui(six_k.get_mpz_t(), 6, k_);
    return compare_int(4 * a * a * six_k, 9 * b * b);
  }

  // delta <=> 1 / (1 + 2^{k/2})  <=>  delta 2^{k/2} <=> 1 - delta
  if (a >= b) return std::strong_ordering::greater;
  const BigInt rest = b - a;
  return compare_int(a * a * pow2(k_), rest * rest);
}

BigFloat Bound::value(mpfr_prec_t bits) const {
  BigFloat v(bits);
  switch (kind_) {
    case Kind::lower_braunstein:
      return BigFloat(*exact_value(), bits);
    case Kind::lower_gurvits_barnum:
      mpfr_ui_pow_ui(v.get(), 6, k_, MPFR_RNDN);
      mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
      mpfr_mul_2ui(v.get(), v.get(), 1, MPFR_RNDN);
      mpfr_ui_div(v.get(), 3, v.get(), MPFR_RNDN);
      return v;
    case Kind::upper:
      mpfr_ui_pow_ui(v.get(), 2, k_, MPFR_RNDN);
      mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
      mpfr_add_ui(v.get(), v.get(), 1, MPFR_RNDN);
      mpfr_ui_div(v.get(), 1, v.get(), MPFR_RNDN);
      return v;
  }
  return v;
}

std::string Bound::decimal(int digits) const {
  if (auto exact = exact_value()) return to_decimal_string(*exact, digits);
  return value(bits_for_digits(digits) + 64).to_string(digits);
}

std::string Bound::exact_or_decimal(int digits) const {
  if (auto exact = exact_value()) return to_exact_string(*exact);
  return decimal(digits);
}

Rational delta_lower_braunstein(unsigned k) { return *Bound(Bound::Kind::lower_braunstein, k).exact_value(); }

Bound delta_lower_gb(unsigned k) { return Bound(Bound::Kind::lower_gurvits_barnum, k); }

Bound delta_upper(unsigned k) { return Bound(Bound::Kind::upper, k); }

Bound lower_bound(BoundFamily family, unsigned k) {
  return Bound(family == BoundFamily::braunstein ? Bound::Kind::lower_braunstein : Bound::Kind::lower_gurvits_barnum,
               k);
}

RegionVerdict classify_region(const Rational& delta, unsigned k, BoundFamily family) {
  if (k < 2) throw DomainError("regions are only defined for k >= 2");
  if (delta < 0 || delta > 1) throw DomainError("delta = " + to_exact_string(delta) + " outside [0, 1]");

  const auto lower = lower_bound(family, k).compare(delta);
  if (lower <= 0) return {Region::S, family, lower == 0};
  const auto upper = delta_upper(k).compare(delta);
  if (upper > 0) return {Region::E, family, false};
  return {Region::ES, family, upper == 0};
}

namespace {

int rank(Region r) { return static_cast<int>(r); }

}  // namespace

Crossover crossover_k(const BiasCurve& curve, unsigned k_start, Region from, Region to, BoundFamily family,
                      unsigned k_max) {
  if (from == to) throw DomainError("crossover needs two different regions");
  k_start = std::max(k_start, 2U);

  Crossover out;
  bool left_from = false;
  for (unsigned k = k_start; k <= k_max; ++k) {
    const Region current = classify_region(curve(k), k, family).region;
    if (current == from) {
      if (left_from) {
        throw ConsistencyError("curve re-enters " + to_string(from) + " at k = " + std::to_string(k) +
                               " after leaving it");
      }
      out.from_seen = true;
      continue;
    }
    left_from = out.from_seen;
    if (current == to) {
      out.k = k;
      out.at_start = k == k_start;
      return out;
    }
  }
  return out;
}

Crossover sharing_crossover(unsigned p, const Rational& sigma, BoundFamily family, Region from, Region to,
                            unsigned k_max) {
  return crossover_k([&](unsigned k) { return delta_partial(p, k, sigma); }, std::max(p, 2U), from, to, family,
                     k_max);
}

Rational thermal_bias(unsigned k, const Rational& boltzmann, ThermalConvention convention) {
  if (k == 0) throw DomainError("thermal bias needs k >= 1");
  const Rational c = convention == ThermalConvention::eq1_half ? Rational(boltzmann / 2) : boltzmann;
  return c * k / (pow2(k) - 1);
}

std::optional<unsigned> thermal_crossover(const Rational& boltzmann, ThermalConvention convention, unsigned k_max) {
  if (boltzmann <= 0) throw DomainError("thermal crossover needs B > 0");
  const Bound::Kind kind = Bound::Kind::lower_gurvits_barnum;
  for (unsigned k = 2; k <= k_max; ++k) {
    if (Bound(kind, k).compare(thermal_bias(k, boltzmann, convention)) > 0) return k;
  }
  return std::nullopt;
}

AppendixCheck appendix_inequality_holds(unsigned p, unsigned k, int digits) {
  if (p == 0 || k < p || k < 2) throw DomainError("appendix inequality needs k >= p >= 1 and k >= 2");
  const Rational lhs = delta_pure(p, k);
  const Bound gb = delta_lower_gb(k);
  AppendixCheck out;
  out.holds = gb.compare(lhs) > 0;
  const mpfr_prec_t bits = bits_for_digits(digits) + 64;
  BigFloat ratio(lhs, bits);
  mpfr_div(ratio.get(), ratio.get(), gb.value(bits).get(), MPFR_RNDN);
  out.margin = ratio.to_string(digits);
  return out;
}

AppendixSweep verify_appendix(unsigned k_max) {
  AppendixSweep sweep;
  for (unsigned k = 2; k <= k_max; ++k) {
    const Bound gb = delta_lower_gb(k);
    const Rational at_p1 = delta_pure(1, k);
    for (unsigned p = 1; p <= k; ++p) {
      const Rational lhs = delta_pure(p, k);
      ++sweep.cases;
      if (gb.compare(lhs) <= 0) sweep.violations.emplace_back(p, k);
      if (lhs < at_p1) sweep.minimum_at_p1 = false;
    }
  }
  return sweep;
}

}  // namespace polshare
