#pragma once

#include <vector>

#include "polshare/scalar.hpp"
#include "polshare/spectrum.hpp"

// Brute-force reference for small n. Everything here works on the full
// 2^n diagonal in computational-basis order and shares no code with the
// run-length path in spectrum.hpp, so agreement between the two is a
// genuine cross-check.
namespace polshare::oracle {

inline constexpr unsigned kMaxDenseQubits = 20;

struct DenseDiagonal {
  unsigned qubits = 0;
  std::vector<Rational> entries;

  friend bool operator==(const DenseDiagonal&, const DenseDiagonal&) = default;
};

/// Tensor-product construction: entry b is the product over the first p
/// qubits of (1 +- sigma)/2 (sign by bit, qubit 0 is the most significant
/// bit) times 2^{-(n-p)}. Throws ResourceError for n > kMaxDenseQubits.
DenseDiagonal dense_build(const EnsembleSpec& spec);

/// Keeps the leading k qubits, summing over the 2^{n-k} assignments of the
/// trailing ones.
DenseDiagonal dense_partial_trace(const DenseDiagonal& d, unsigned keep);

/// Averages the 2^k - 1 cyclic shifts of the trailing block of a
/// descending-sorted diagonal, one shift at a time.
DenseDiagonal dense_cyclic_average(const DenseDiagonal& sorted);

/// Tr(rho rho') / Tr(rho'^2) by explicit summation, rho sorted descending
/// and rho' = dense_build({n, k, 1}).
Rational dense_overlap_f(const DenseDiagonal& d, unsigned k);

/// Copy sorted in descending order.
DenseDiagonal sorted_descending(DenseDiagonal d);

/// Run-length encodes a diagonal (after its own independent sort) into
/// runs of strictly descending values.
std::vector<Run> run_length_encode(const DenseDiagonal& d);

/// Sum of all entries.
Rational dense_trace(const DenseDiagonal& d);

}  // namespace polshare::oracle
