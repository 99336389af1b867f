#include "polshare/spectrum.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "polshare/errors.hpp"

namespace polshare {

Spectrum Spectrum::from_runs(unsigned qubits, std::vector<Run> runs) {
  std::stable_sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) { return a.value > b.value; });

  std::vector<Run> merged;
  merged.reserve(runs.size());
  for (auto& run : runs) {
    if (run.multiplicity < 0) throw ValidityError("negative multiplicity");
    if (run.multiplicity == 0) continue;
    if (!merged.empty() && merged.back().value == run.value) {
      merged.back().multiplicity += run.multiplicity;
    } else {
      merged.push_back(std::move(run));
    }
  }

  if (merged.empty()) throw ValidityError("spectrum has no eigenvalues");
  if (merged.back().value < 0) throw ValidityError("negative eigenvalue " + to_exact_string(merged.back().value));

  Spectrum s(qubits, std::move(merged));
  BigInt total = 0;
  for (const auto& run : s.runs_) total += run.multiplicity;
  if (total != pow2(qubits)) {
    throw ValidityError("multiplicities sum to " + total.get_str() + ", expected 2^" + std::to_string(qubits));
  }
  if (s.trace() != 1) throw ValidityError("trace is " + to_exact_string(s.trace()) + ", expected 1");
  return s;
}

BigInt Spectrum::dimension() const { return pow2(qubits_); }

Rational Spectrum::trace() const {
  Rational t = 0;
  for (const auto& run : runs_) t += run.value * run.multiplicity;
  return t;
}

Rational Spectrum::top_sum(const BigInt& count) const {
  if (count < 0 || count > dimension()) throw DomainError("top_sum count out of range");
  Rational sum = 0;
  BigInt left = count;
  for (const auto& run : runs_) {
    if (left == 0) break;
    const BigInt take = run.multiplicity < left ? run.multiplicity : left;
    sum += run.value * take;
    left -= take;
  }
  return sum;
}

std::string to_string(const Spectrum& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.runs().size(); ++i) {
    if (i) out += ',';
    out += '(' + to_exact_string(s.runs()[i].value) + ',' + s.runs()[i].multiplicity.get_str() + ')';
  }
  return out + ']';
}

std::ostream& operator<<(std::ostream& os, const Spectrum& s) { return os << to_string(s); }

void EnsembleSpec::validate() const {
  if (p > n) throw DomainError("p = " + std::to_string(p) + " exceeds n = " + std::to_string(n));
  if (sigma < 0 || sigma > 1) throw DomainError("sigma = " + to_exact_string(sigma) + " outside [0, 1]");
}

Rational PseudopureState::f() const { return f_from_bias(delta, k); }

std::string to_string(ThermalConvention c) {
  return c == ThermalConvention::eq1_half ? "eq1_half" : "per_transition";
}

ThermalConvention parse_thermal_convention(std::string_view text) {
  if (text == "eq1_half") return ThermalConvention::eq1_half;
  if (text == "per_transition") return ThermalConvention::per_transition;
  throw DomainError("unknown thermal convention '" + std::string(text) + "'");
}

Spectrum make_product_state(const EnsembleSpec& spec) {
  spec.validate();
  const Rational up = (1 + spec.sigma) / 2;
  const Rational down = (1 - spec.sigma) / 2;
  const Rational mixed_weight(BigInt(1), pow2(spec.n - spec.p));
  const BigInt mixed_count = pow2(spec.n - spec.p);

  std::vector<Run> runs;
  runs.reserve(spec.p + 1);
  for (unsigned j = spec.p + 1; j-- > 0;) {
    Rational value = pow(up, j) * pow(down, spec.p - j) * mixed_weight;
    runs.push_back({std::move(value), mixed_count * binomial(spec.p, j)});
  }
  return Spectrum::from_runs(spec.n, std::move(runs));
}

Spectrum make_thermal_state(unsigned n, const Rational& boltzmann, ThermalConvention convention) {
  if (n == 0) throw DomainError("thermal state needs at least one qubit");
  const Rational c = convention == ThermalConvention::eq1_half ? Rational(boltzmann / 2) : boltzmann;
  const Rational scale(BigInt(1), pow2(n));

  std::vector<Run> runs;
  runs.reserve(n + 1);
  for (unsigned w = 0; w <= n; ++w) {
    Rational value = scale * (1 + c * (static_cast<long>(n) - 2 * static_cast<long>(w)));
    if (value < 0) {
      throw ValidityError("high-temperature approximation violated: eigenvalue " + to_exact_string(value) +
                          " at Hamming weight " + std::to_string(w));
    }
    runs.push_back({std::move(value), binomial(n, w)});
  }
  return Spectrum::from_runs(n, std::move(runs));
}

Spectrum reduce_by_blocking(const Spectrum& s, unsigned k) {
  if (k > s.qubits()) {
    throw DomainError("cannot reduce " + std::to_string(s.qubits()) + " qubits to " + std::to_string(k));
  }
  const BigInt block = pow2(s.qubits() - k);

  std::vector<Run> out;
  Rational partial = 0;
  BigInt open = 0;  // entries already placed in the current partial block
  for (const auto& run : s.runs()) {
    BigInt left = run.multiplicity;
    if (open > 0) {
      const BigInt need = block - open;
      const BigInt take = left < need ? left : need;
      partial += run.value * take;
      open += take;
      left -= take;
      if (open == block) {
        out.push_back({partial, 1});
        partial = 0;
        open = 0;
      }
    }
    if (left == 0) continue;
    const BigInt whole = left / block;
    if (whole > 0) {
      out.push_back({Rational(run.value * block), whole});
      left -= whole * block;
    }
    if (left > 0) {
      partial = run.value * left;
      open = left;
    }
  }
  if (open != 0) throw ConsistencyError("blocking left an incomplete block");
  return Spectrum::from_runs(k, std::move(out));
}

Pseudopurified pseudopurify(const Spectrum& s) {
  const unsigned k = s.qubits();
  if (k == 0) throw DomainError("pseudopurify needs k >= 1");
  const Rational& f = s.max();
  const BigInt trailing = pow2(k) - 1;
  Rational rest = (1 - f) / trailing;
  PseudopureState state{k, bias_from_f(f, k)};
  return {std::move(state), Spectrum::from_runs(k, {{f, 1}, {std::move(rest), trailing}})};
}

Rational overlap_f(const EnsembleSpec& spec, unsigned k) {
  spec.validate();
  if (k < 1 || k > spec.n) throw DomainError("overlap needs 1 <= k <= n");
  const Spectrum rho = make_product_state(spec);
  // rho' = rho_{n,k,1} is uniform 2^{-(n-k)} on the leading 2^{n-k} entries.
  const BigInt support = pow2(spec.n - k);
  const Rational weight(BigInt(1), support);
  const Rational cross = rho.top_sum(support) * weight;
  const Rational purity = weight;  // support * weight^2
  return cross / purity;
}

Rational bias_from_f(const Rational& f, unsigned k) {
  if (k == 0) throw DomainError("bias needs k >= 1");
  const BigInt dim = pow2(k);
  if (f * dim < 1) throw DomainError("f = " + to_exact_string(f) + " is below 2^-k");
  if (f > 1) throw DomainError("f = " + to_exact_string(f) + " exceeds 1");
  return (dim * f - 1) / (dim - 1);
}

Rational f_from_bias(const Rational& delta, unsigned k) {
  if (k == 0) throw DomainError("bias needs k >= 1");
  if (delta < 0 || delta > 1) throw DomainError("delta = " + to_exact_string(delta) + " outside [0, 1]");
  const BigInt dim = pow2(k);
  return (delta * (dim - 1) + 1) / dim;
}

}  // namespace polshare
