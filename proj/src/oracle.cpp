#include "polshare/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "polshare/errors.hpp"

namespace polshare::oracle {

DenseDiagonal dense_build(const EnsembleSpec& spec) {
  spec.validate();
  if (spec.n > kMaxDenseQubits) {
    throw ResourceError("dense oracle is capped at " + std::to_string(kMaxDenseQubits) + " qubits");
  }
  const Rational up = (1 + spec.sigma) / 2;
  const Rational down = (1 - spec.sigma) / 2;
  Rational mixed = 1;
  for (unsigned j = spec.p; j < spec.n; ++j) mixed /= 2;

  const std::uint64_t dim = std::uint64_t{1} << spec.n;
  DenseDiagonal d{spec.n, {}};
  d.entries.reserve(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    Rational entry = mixed;
    for (unsigned q = 0; q < spec.p; ++q) {
      const bool excited = (b >> (spec.n - 1 - q)) & 1U;
      entry *= excited ? down : up;
    }
    d.entries.push_back(std::move(entry));
  }
  return d;
}

DenseDiagonal dense_partial_trace(const DenseDiagonal& d, unsigned keep) {
  if (keep > d.qubits) throw DomainError("cannot keep more qubits than the state has");
  const std::uint64_t block = std::uint64_t{1} << (d.qubits - keep);
  const std::uint64_t out_dim = std::uint64_t{1} << keep;
  DenseDiagonal out{keep, std::vector<Rational>(out_dim)};
  for (std::uint64_t i = 0; i < out_dim; ++i) {
    for (std::uint64_t t = 0; t < block; ++t) out.entries[i] += d.entries[i * block + t];
  }
  return out;
}

DenseDiagonal dense_cyclic_average(const DenseDiagonal& sorted) {
  if (sorted.qubits == 0) throw DomainError("cyclic averaging needs k >= 1");
  const std::size_t len = sorted.entries.size() - 1;
  std::vector<Rational> sum(len);
  for (std::size_t shift = 0; shift < len; ++shift) {
    for (std::size_t i = 0; i < len; ++i) sum[i] += sorted.entries[1 + (i + shift) % len];
  }
  DenseDiagonal out{sorted.qubits, {}};
  out.entries.reserve(sorted.entries.size());
  out.entries.push_back(sorted.entries.front());
  for (auto& s : sum) out.entries.push_back(s / static_cast<unsigned long>(len));
  return out;
}

DenseDiagonal sorted_descending(DenseDiagonal d) {
  std::sort(d.entries.begin(), d.entries.end(), std::greater<>());
  return d;
}

Rational dense_overlap_f(const DenseDiagonal& d, unsigned k) {
  if (k < 1 || k > d.qubits) throw DomainError("overlap needs 1 <= k <= n");
  const DenseDiagonal rho = sorted_descending(d);
  const DenseDiagonal target = dense_build({d.qubits, k, 1});
  Rational cross = 0;
  Rational purity = 0;
  for (std::size_t i = 0; i < rho.entries.size(); ++i) {
    cross += rho.entries[i] * target.entries[i];
    purity += target.entries[i] * target.entries[i];
  }
  return cross / purity;
}

std::vector<Run> run_length_encode(const DenseDiagonal& d) {
  const DenseDiagonal s = sorted_descending(d);
  std::vector<Run> runs;
  for (const auto& v : s.entries) {
    if (!runs.empty() && runs.back().value == v) {
      runs.back().multiplicity += 1;
    } else {
      runs.push_back({v, 1});
    }
  }
  return runs;
}

Rational dense_trace(const DenseDiagonal& d) {
  Rational t = 0;
  for (const auto& v : d.entries) t += v;
  return t;
}

}  // namespace polshare::oracle
