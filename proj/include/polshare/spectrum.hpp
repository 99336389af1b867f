#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polshare/scalar.hpp"

namespace polshare {

/// One eigenvalue and how many times it occurs.
struct Run {
  Rational value;
  BigInt multiplicity;

  friend bool operator==(const Run&, const Run&) = default;
};

/// Eigenvalue multiset of a diagonal density operator on `qubits` qubits,
/// stored as runs with strictly descending values. Never expanded to 2^n
/// entries, so n can be in the hundreds.
///
/// Invariants (checked on every construction): values >= 0, strictly
/// descending; multiplicities positive and summing to 2^n; unit trace.
class Spectrum {
 public:
  /// Sorts, merges equal values, drops empty runs, then validates.
  /// Throws ValidityError if the result is not a density spectrum.
  static Spectrum from_runs(unsigned qubits, std::vector<Run> runs);

  unsigned qubits() const { return qubits_; }
  std::span<const Run> runs() const { return runs_; }
  const Rational& max() const { return runs_.front().value; }
  BigInt dimension() const;
  Rational trace() const;

  /// Sum of the `count` largest eigenvalues (with multiplicity).
  Rational top_sum(const BigInt& count) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  Spectrum(unsigned qubits, std::vector<Run> runs) : qubits_(qubits), runs_(std::move(runs)) {}

  unsigned qubits_ = 0;
  std::vector<Run> runs_;
};

/// Renders as "[(1/2,2),(0,6)]".
std::string to_string(const Spectrum& s);
std::ostream& operator<<(std::ostream& os, const Spectrum& s);

/// n qubits, the first p of which carry polarization sigma; the rest are
/// maximally mixed.
struct EnsembleSpec {
  unsigned n = 0;
  unsigned p = 0;
  Rational sigma;

  /// Throws DomainError unless p <= n and 0 <= sigma <= 1.
  void validate() const;
};

/// chi_{k,delta} = (1 - delta) I / 2^k + delta |psi><psi|, tracked by (k, delta) only.
struct PseudopureState {
  unsigned k = 1;
  Rational delta;

  /// Largest eigenvalue (delta (2^k - 1) + 1) / 2^k.
  Rational f() const;
};

/// Which reading of the Boltzmann factor the thermal state uses.
/// eq1_half: rho = (1 + (B/2) sum sigma_z) / 2^n.
/// per_transition: rho = (1 + B sum sigma_z) / 2^n.
enum class ThermalConvention { eq1_half, per_transition };

std::string to_string(ThermalConvention c);
ThermalConvention parse_thermal_convention(std::string_view text);

/// Sorted spectrum of phi_sigma^{(x)p} (x) (I/2)^{(x)(n-p)}, with
/// multiplicities 2^{n-p} C(p, j).
Spectrum make_product_state(const EnsembleSpec& spec);

/// High-temperature thermal state of n homonuclear spins. Throws
/// ValidityError if any eigenvalue would be negative.
Spectrum make_thermal_state(unsigned n, const Rational& boltzmann, ThermalConvention convention);

/// Partial trace down to k qubits in the sorted eigenbasis: eigenvalue i of
/// the result is the sum of the i-th consecutive block of 2^{n-k} sorted
/// eigenvalues. Works on runs directly.
Spectrum reduce_by_blocking(const Spectrum& s, unsigned k);

struct Pseudopurified {
  PseudopureState state;
  Spectrum spectrum;
};

/// Cyclic averaging of the 2^k - 1 trailing eigenvalues. Keeps the largest
/// eigenvalue f and replaces the rest by (1 - f) / (2^k - 1).
Pseudopurified pseudopurify(const Spectrum& s);

/// Overlap Tr(rho rho') / Tr(rho'^2) with rho' = rho_{n,k,1}, evaluated in
/// the sorted eigenbasis. Equals the leading eigenvalue of
/// reduce_by_blocking(make_product_state(spec), k).
Rational overlap_f(const EnsembleSpec& spec, unsigned k);

/// delta = (2^k f - 1) / (2^k - 1). Requires 2^{-k} <= f <= 1.
Rational bias_from_f(const Rational& f, unsigned k);

/// f = (delta (2^k - 1) + 1) / 2^k. Requires 0 <= delta <= 1.
Rational f_from_bias(const Rational& delta, unsigned k);

}  // namespace polshare
