#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polshare/bigfloat.hpp"
#include "polshare/scalar.hpp"
#include "polshare/spectrum.hpp"

namespace polshare {

/// Which separability lower bound to classify against. The entanglable
/// upper bound 1/(1 + 2^{k/2}) is shared by both.
enum class BoundFamily { braunstein, gurvits_barnum };

/// S: provably separable. ES: undecided. E: entanglable.
enum class Region { S, ES, E };

std::string to_string(BoundFamily f);
std::string to_string(Region r);
BoundFamily parse_bound_family(std::string_view text);
Region parse_region(std::string_view text);

/// A bias threshold at a given subspace size. Some of these are irrational
/// (odd k); they are never approximated when compared against a rational.
class Bound {
 public:
  enum class Kind {
    lower_braunstein,      // 1 / (1 + 2^{2k-1})
    lower_gurvits_barnum,  // 3 / (2 6^{k/2})
    upper,                 // 1 / (1 + 2^{k/2})
  };

  /// Throws DomainError for k < 2.
  Bound(Kind kind, unsigned k);

  Kind kind() const { return kind_; }
  unsigned k() const { return k_; }

  /// The bound as a rational, if it is one.
  std::optional<Rational> exact_value() const;

  /// delta <=> bound, decided with integer arithmetic only.
  std::strong_ordering compare(const Rational& delta) const;

  BigFloat value(mpfr_prec_t bits) const;
  std::string decimal(int digits = 15) const;

  /// exact_value() as "num/den" if rational, else decimal(digits).
  std::string exact_or_decimal(int digits = 15) const;

 private:
  Kind kind_;
  unsigned k_;
};

Rational delta_lower_braunstein(unsigned k);
Bound delta_lower_gb(unsigned k);
Bound delta_upper(unsigned k);
Bound lower_bound(BoundFamily family, unsigned k);

struct RegionVerdict {
  Region region = Region::S;
  BoundFamily family = BoundFamily::gurvits_barnum;
  /// delta sits exactly on delta_l or delta_u. Borders belong to the less
  /// entangled side.
  bool on_border = false;

  friend bool operator==(const RegionVerdict&, const RegionVerdict&) = default;
};

/// S if delta <= delta_l, E if delta > delta_u, ES otherwise.
/// Throws DomainError for k < 2 or delta outside [0, 1].
RegionVerdict classify_region(const Rational& delta, unsigned k, BoundFamily family);

using BiasCurve = std::function<Rational(unsigned k)>;

struct Crossover {
  /// First k in [k_start, k_max] classified as the target region.
  std::optional<unsigned> k;
  /// The curve was already in the target region at k_start.
  bool at_start = false;
  /// Some k before the crossover was classified as `from`. False when the
  /// curve never was in the source region over the scanned range.
  bool from_seen = false;
};

/// Scans k = k_start..k_max for the first verdict equal to `to`. The
/// `from` verdicts must be contiguous: a curve that leaves `from` and
/// later comes back throws ConsistencyError.
Crossover crossover_k(const BiasCurve& curve, unsigned k_start, Region from, Region to, BoundFamily family,
                      unsigned k_max);

/// crossover_k over delta_partial(p, ., sigma), starting at max(p, 2).
Crossover sharing_crossover(unsigned p, const Rational& sigma, BoundFamily family, Region from, Region to,
                            unsigned k_max = 256);

/// Bias of the k-qubit pseudopure state made from a thermal state:
/// c k / (2^k - 1) with c = B/2 (eq1_half) or B (per_transition).
Rational thermal_bias(unsigned k, const Rational& boltzmann, ThermalConvention convention);

/// Smallest k >= 2 whose thermal bias exceeds the Gurvits-Barnum lower
/// bound, or nullopt if none up to k_max. Requires B > 0.
std::optional<unsigned> thermal_crossover(const Rational& boltzmann, ThermalConvention convention,
                                          unsigned k_max = 256);

struct AppendixCheck {
  bool holds = false;
  /// (2^p - 1)/(2^k - 1) divided by 3/(2 6^{k/2}), in decimal.
  std::string margin;
};

/// (2^p - 1)/(2^k - 1) > 3/(2 6^{k/2}) for 1 <= p <= k, k >= 2.
AppendixCheck appendix_inequality_holds(unsigned p, unsigned k, int digits = 15);

struct AppendixSweep {
  std::size_t cases = 0;
  std::vector<std::pair<unsigned, unsigned>> violations;  // (p, k)
  /// For every k the smallest left-hand side over p is the p = 1 one.
  bool minimum_at_p1 = true;

  bool ok() const { return violations.empty() && minimum_at_p1; }
};

/// Every 1 <= p <= k for k = 2..k_max.
AppendixSweep verify_appendix(unsigned k_max);

}  // namespace polshare
