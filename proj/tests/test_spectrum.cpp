#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "polshare/errors.hpp"
#include "polshare/oracle.hpp"
#include "polshare/spectrum.hpp"
#include "test_support.hpp"

using namespace polshare;
using polshare::test::q;
using polshare::test::runs;

namespace {

Spectrum S(unsigned n, std::initializer_list<std::pair<const char*, long>> list) {
  return Spectrum::from_runs(n, runs(list));
}

// Test-only expansion of a spectrum into its sorted 2^n diagonal.
std::vector<Rational> expand(const Spectrum& s) {
  std::vector<Rational> out;
  for (const auto& r : s.runs()) {
    for (long i = 0; i < r.multiplicity.get_si(); ++i) out.push_back(r.value);
  }
  return out;
}

// Dense thermal diagonal straight from the Zeeman sum: bit 0 contributes +1.
oracle::DenseDiagonal dense_thermal(unsigned n, const Rational& c) {
  oracle::DenseDiagonal d{n, {}};
  for (unsigned b = 0; b < (1U << n); ++b) {
    long zsum = 0;
    for (unsigned j = 0; j < n; ++j) zsum += ((b >> j) & 1U) ? -1 : 1;
    d.entries.push_back((1 + c * zsum) / Rational(1U << n));
  }
  return d;
}

}  // namespace

TEST_CASE("Spectrum::from_runs normalizes and validates") {
  const Spectrum s = Spectrum::from_runs(2, runs({{"1/8", 1}, {"3/8", 2}, {"1/8", 1}}));
  CHECK(to_string(s) == "[(3/8,2),(1/8,2)]");
  CHECK(s.trace() == 1);
  CHECK(s.dimension() == 4);

  CHECK_THROWS_AS(Spectrum::from_runs(2, runs({{"1/2", 2}})), ValidityError);            // dimension
  CHECK_THROWS_AS(Spectrum::from_runs(1, runs({{"1/2", 1}, {"1/4", 1}})), ValidityError);  // trace
  CHECK_THROWS_AS(Spectrum::from_runs(1, runs({{"3/2", 1}, {"-1/2", 1}})), ValidityError); // negative
  CHECK_THROWS_AS(Spectrum::from_runs(1, {}), ValidityError);
}

TEST_CASE("make_product_state") {
  SUBCASE("pure |00>") { CHECK(make_product_state({2, 2, 1}) == S(2, {{"1", 1}, {"0", 3}})); }
  SUBCASE("rho_{4,2,1}") { CHECK(make_product_state({4, 2, 1}) == S(4, {{"1/4", 4}, {"0", 12}})); }
  SUBCASE("(2,1,1/2) against the dense oracle") {
    const auto expected = runs({{"3/8", 2}, {"1/8", 2}});
    CHECK(oracle::run_length_encode(oracle::dense_build({2, 1, q("1/2")})) == expected);
    CHECK(make_product_state({2, 1, q("1/2")}) == Spectrum::from_runs(2, expected));
  }
  SUBCASE("(4,2,1/2) against the dense oracle") {
    const auto expected = runs({{"9/64", 4}, {"3/64", 8}, {"1/64", 4}});
    CHECK(oracle::run_length_encode(oracle::dense_build({4, 2, q("1/2")})) == expected);
    CHECK(make_product_state({4, 2, q("1/2")}) == Spectrum::from_runs(4, expected));
  }
  SUBCASE("sigma = 0 or p = 0 collapses to the maximally mixed state") {
    CHECK(make_product_state({3, 2, 0}) == S(3, {{"1/8", 8}}));
    CHECK(make_product_state({3, 0, q("1/2")}) == S(3, {{"1/8", 8}}));
    CHECK(make_product_state({0, 0, 1}) == S(0, {{"1", 1}}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(make_product_state({2, 3, 1}), DomainError);
    CHECK_THROWS_AS(make_product_state({2, 1, q("3/2")}), DomainError);
    CHECK_THROWS_AS(make_product_state({2, 1, q("-1/10")}), DomainError);
  }
  SUBCASE("hundreds of qubits stay cheap") {
    const Spectrum s = make_product_state({400, 300, q("1/3")});
    CHECK(s.runs().size() == 301);
    CHECK(s.dimension() == pow2(400));
  }
}

TEST_CASE("make_thermal_state") {
  CHECK(make_thermal_state(1, q("1/10"), ThermalConvention::eq1_half) == S(1, {{"21/40", 1}, {"19/40", 1}}));

  const auto expected = runs({{"11/40", 1}, {"1/4", 2}, {"9/40", 1}});
  CHECK(oracle::run_length_encode(dense_thermal(2, q("1/20"))) == expected);
  CHECK(make_thermal_state(2, q("1/10"), ThermalConvention::eq1_half) == Spectrum::from_runs(2, expected));

  CHECK(make_thermal_state(1, 0, ThermalConvention::eq1_half) == S(1, {{"1/2", 2}}));
  CHECK(make_thermal_state(1, 0, ThermalConvention::per_transition) == S(1, {{"1/2", 2}}));

  SUBCASE("per_transition doubles the splitting") {
    CHECK(make_thermal_state(3, q("1/10"), ThermalConvention::per_transition) ==
          make_thermal_state(3, q("1/5"), ThermalConvention::eq1_half));
  }
  SUBCASE("dense agreement for small n") {
    for (unsigned n = 1; n <= 8; ++n) {
      const Spectrum s = make_thermal_state(n, q("1/1000"), ThermalConvention::per_transition);
      CHECK(std::vector<Run>(s.runs().begin(), s.runs().end()) ==
            oracle::run_length_encode(dense_thermal(n, q("1/1000"))));
    }
  }
  SUBCASE("negative B sorts descending") {
    const Spectrum s = make_thermal_state(2, q("-1/10"), ThermalConvention::eq1_half);
    CHECK(s == make_thermal_state(2, q("1/10"), ThermalConvention::eq1_half));
  }
  SUBCASE("validity") {
    CHECK_THROWS_AS(make_thermal_state(1, 3, ThermalConvention::per_transition), ValidityError);
    CHECK_THROWS_AS(make_thermal_state(4, q("1/2"), ThermalConvention::per_transition), ValidityError);
    CHECK_THROWS_AS(make_thermal_state(0, q("1/2"), ThermalConvention::per_transition), DomainError);
  }
}

TEST_CASE("reduce_by_blocking") {
  const Spectrum rho421 = make_product_state({4, 2, 1});
  CHECK(reduce_by_blocking(rho421, 3) == S(3, {{"1/2", 2}, {"0", 6}}));
  CHECK(reduce_by_blocking(rho421, 2) == S(2, {{"1", 1}, {"0", 3}}));
  CHECK(reduce_by_blocking(rho421, 4) == rho421);
  CHECK(reduce_by_blocking(rho421, 0) == S(0, {{"1", 1}}));

  SUBCASE("(rho_{2,2,1/2}, k=1) equals the computational-basis trace") {
    const auto dense = oracle::dense_partial_trace(oracle::dense_build({2, 2, q("1/2")}), 1);
    CHECK(dense.entries == std::vector<Rational>{q("3/4"), q("1/4")});
    CHECK(reduce_by_blocking(make_product_state({2, 2, q("1/2")}), 1) == S(1, {{"3/4", 1}, {"1/4", 1}}));
  }

  CHECK_THROWS_AS(reduce_by_blocking(rho421, 5), DomainError);

  SUBCASE("matches block sums of the expanded diagonal on random spectra") {
    std::mt19937_64 rng(20260101);
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned n = 1 + static_cast<unsigned>(rng() % 7);
      const Spectrum s = test::random_spectrum(n, rng);
      const unsigned k = static_cast<unsigned>(rng() % (n + 1));
      const auto full = expand(s);
      const std::size_t block = std::size_t{1} << (n - k);
      std::vector<Run> blocks;
      for (std::size_t i = 0; i < full.size(); i += block) {
        Rational sum = 0;
        for (std::size_t j = 0; j < block; ++j) sum += full[i + j];
        blocks.push_back({sum, 1});
      }
      const Spectrum reduced = reduce_by_blocking(s, k);
      CHECK(reduced == Spectrum::from_runs(k, blocks));
      CHECK(reduced.trace() == 1);
      CHECK(reduced.dimension() == pow2(k));
      // Leading-block dominance.
      CHECK(reduced.max() == s.top_sum(pow2(n - k)));
    }
  }
}

TEST_CASE("pseudopurify") {
  SUBCASE("[(1/2,2),(0,6)] gives delta 3/7") {
    const auto out = pseudopurify(S(3, {{"1/2", 2}, {"0", 6}}));
    CHECK(out.state.k == 3);
    CHECK(out.state.delta == Rational(3, 7));
    CHECK(out.spectrum == S(3, {{"1/2", 1}, {"1/14", 7}}));
  }
  SUBCASE("maximally mixed fixed point") {
    for (unsigned k = 1; k <= 6; ++k) {
      const Spectrum mixed = Spectrum::from_runs(k, {{Rational(BigInt(1), pow2(k)), pow2(k)}});
      const auto out = pseudopurify(mixed);
      CHECK(out.state.delta == 0);
      CHECK(out.spectrum == mixed);
    }
  }
  SUBCASE("pure fixed point") {
    for (unsigned k = 1; k <= 6; ++k) {
      const Spectrum pure = Spectrum::from_runs(k, {{1, 1}, {0, pow2(k) - 1}});
      const auto out = pseudopurify(pure);
      CHECK(out.state.delta == 1);
      CHECK(out.spectrum == pure);
    }
  }
  SUBCASE("k = 0 has nothing to average") { CHECK_THROWS_AS(pseudopurify(S(0, {{"1", 1}})), DomainError); }
  SUBCASE("idempotent and preserves trace and max") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const Spectrum s = test::random_spectrum(1 + static_cast<unsigned>(rng() % 6), rng);
      const auto once = pseudopurify(s);
      const auto twice = pseudopurify(once.spectrum);
      CHECK(twice.spectrum == once.spectrum);
      CHECK(twice.state.delta == once.state.delta);
      CHECK(once.spectrum.max() == s.max());
      CHECK(once.spectrum.trace() == 1);
      CHECK(once.state.f() == s.max());
    }
  }
}

TEST_CASE("overlap_f") {
  CHECK(overlap_f({4, 2, 1}, 3) == Rational(1, 2));
  CHECK(overlap_f({4, 2, q("1/2")}, 3) == Rational(9, 32));
  SUBCASE("(2,2,1/2,k=1) concentration case via the oracle") {
    CHECK(oracle::dense_overlap_f(oracle::dense_build({2, 2, q("1/2")}), 1) == Rational(3, 4));
    CHECK(overlap_f({2, 2, q("1/2")}, 1) == Rational(3, 4));
  }
  for (unsigned n = 1; n <= 6; ++n) CHECK(overlap_f({n, n, 1}, n) == 1);

  CHECK_THROWS_AS(overlap_f({4, 2, 1}, 0), DomainError);
  CHECK_THROWS_AS(overlap_f({4, 2, 1}, 5), DomainError);

  SUBCASE("equals the leading eigenvalue after blocking") {
    for (unsigned n = 1; n <= 10; ++n) {
      for (unsigned p = 0; p <= n; ++p) {
        for (const auto& sigma : test::sigma_samples()) {
          const Spectrum rho = make_product_state({n, p, sigma});
          for (unsigned k = 1; k <= n; ++k) CHECK(overlap_f({n, p, sigma}, k) == reduce_by_blocking(rho, k).max());
        }
      }
    }
  }
  SUBCASE("monotone in k") {
    for (unsigned n = 2; n <= 12; ++n) {
      for (unsigned p = 0; p <= n; ++p) {
        for (const auto& sigma : test::sigma_samples()) {
          for (unsigned k = 1; k < n; ++k) {
            const EnsembleSpec spec{n, p, sigma};
            CHECK(overlap_f(spec, k + 1) <= overlap_f(spec, k));
            if (k >= p) CHECK(bias_from_f(overlap_f(spec, k + 1), k + 1) <= bias_from_f(overlap_f(spec, k), k));
          }
        }
      }
    }
  }
}

TEST_CASE("bias_from_f and f_from_bias") {
  CHECK(bias_from_f(q("1/2"), 3) == Rational(3, 7));
  for (unsigned k = 1; k <= 10; ++k) CHECK(bias_from_f(1, k) == 1);
  // (2^3 * 9/32 - 1) / 7 = (9/4 - 1) / 7 = 5/28
  CHECK(bias_from_f(q("9/32"), 3) == Rational(5, 28));
  CHECK(bias_from_f(q("1/8"), 3) == 0);

  CHECK_THROWS_AS(bias_from_f(q("1/9"), 3), DomainError);
  CHECK_THROWS_AS(bias_from_f(q("9/8"), 3), DomainError);
  CHECK_THROWS_AS(bias_from_f(q("1/2"), 0), DomainError);
  CHECK_THROWS_AS(f_from_bias(q("-1/2"), 2), DomainError);

  SUBCASE("round trip is the identity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
      const unsigned k = 1 + static_cast<unsigned>(rng() % 40);
      const unsigned long den = 1 + rng() % 100000;
      Rational delta(rng() % (den + 1), den);
      delta.canonicalize();
      CHECK(bias_from_f(f_from_bias(delta, k), k) == delta);
      const Rational f = f_from_bias(delta, k);
      CHECK(f_from_bias(bias_from_f(f, k), k) == f);
      CHECK((PseudopureState{k, delta}.f() == f));
    }
  }
}

TEST_CASE("sorted blocking majorizes the computational-basis trace") {
  // Equality needs k >= p - 1, k = 0 or sigma in {0, 1}; deeper concentration lets
  // the sorted blocks pick eigenvalues that no fixed set of kept qubits can.
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned p = 0; p <= n; ++p) {
      for (const char* s : {"0", "1/4", "1/2", "3/4", "1"}) {
        const EnsembleSpec spec{n, p, q(s)};
        const Spectrum rho = make_product_state(spec);
        const auto dense = oracle::dense_build(spec);
        const bool extreme = spec.sigma == 0 || spec.sigma == 1;
        for (unsigned k = 0; k <= n; ++k) {
          const auto traced = oracle::dense_partial_trace(dense, k);
          const Rational dense_max = *std::max_element(traced.entries.begin(), traced.entries.end());
          const Rational blocked_max = reduce_by_blocking(rho, k).max();
          CHECK(blocked_max >= dense_max);
          if (extreme || k == 0 || k + 1 >= p) {
            CHECK(blocked_max == dense_max);
          } else {
            CHECK(blocked_max > dense_max);
          }
        }
      }
    }
  }
}

TEST_CASE("concentrating three half-polarized spins onto one") {
  // Sorted eigenvalues 27, 9, 9, 9, 3, 3, 3, 1 (/64); the top four sum to 54/64
  // while keeping any single qubit gives (1 + 1/2)/2 = 48/64.
  const EnsembleSpec spec{3, 3, q("1/2")};
  CHECK(reduce_by_blocking(make_product_state(spec), 1).max() == Rational(27, 32));
  const auto traced = oracle::dense_partial_trace(oracle::dense_build(spec), 1);
  CHECK(traced.entries.front() == Rational(3, 4));
}

TEST_CASE("blocking beats the computational trace on a scrambled diagonal") {
  // Largest weights on basis states that disagree on the kept qubit.
  const oracle::DenseDiagonal d{2, {q("2/5"), q("1/10"), q("2/5"), q("1/10")}};
  const Spectrum s = Spectrum::from_runs(2, oracle::run_length_encode(d));
  const auto traced = oracle::dense_partial_trace(d, 1);
  CHECK(std::max(traced.entries[0], traced.entries[1]) == Rational(1, 2));
  CHECK(reduce_by_blocking(s, 1).max() == Rational(4, 5));
}
