#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "nary/count.hpp"
#include "nary/weight_lattice.hpp"

namespace nary {

// Independent routes used to certify the alternating-sum formulas on small
// instances. None of these call into solution_counting or series_expansion.

/// Weight multiplicities of S^k(A).
struct CharacterTable {
  int n = 0;
  int d = 0;
  std::int64_t k = 0;
  std::map<Weight, Count> multiplicities;

  Count multiplicity(const Weight& mu) const;
  Count total() const;
};

inline constexpr std::uint64_t kDefaultMaxMonomials = 10'000'000;

/// Enumerates every degree-k monomial in the coefficients and tallies weights.
/// Parallel over the leading coefficient of each monomial.
CharacterTable brute_character(int n, int d, std::int64_t k, std::uint64_t max_monomials = kDefaultMaxMonomials);
CharacterTable brute_character_serial(int n, int d, std::int64_t k,
                                      std::uint64_t max_monomials = kDefaultMaxMonomials);

struct IrreducibleModule {
  IrreducibleModule(int n, Weight highest);

  int n;
  Weight highest;
};

/// lambda - mu = sum_s k_s alpha_s over the simple roots; nullopt when mu is
/// not in the root-lattice coset of lambda.
std::optional<std::vector<std::int64_t>> simple_root_coordinates(const Weight& lambda, const Weight& mu);

/// Weight multiplicities of one irreducible module by Freudenthal's recursion
///   (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{j>=1} (mu + j alpha, alpha) m(mu + j alpha),
/// evaluated on dominant weights only and memoized. Inner products are the
/// trace form on mean-centered c-vectors; positive roots are e_b - e_a, a < b.
class FreudenthalMultiplicities {
 public:
  explicit FreudenthalMultiplicities(IrreducibleModule module);

  const IrreducibleModule& module() const noexcept { return module_; }

  /// n_lambda(mu); zero when mu is not a weight of the module.
  Count operator()(const Weight& mu);

  /// mu* <= lambda in dominance order and lambda - mu in the root lattice.
  bool is_weight(const Weight& mu) const;

 private:
  Count dominant(const Weight& mu);

  IrreducibleModule module_;
  Integer top_norm_;  // n^2 |lambda + rho|^2
  std::map<Weight, Count> memo_;
};

Count freudenthal_multiplicity(const IrreducibleModule& module, const Weight& mu);

/// sum over s in W of sign(s) n_lambda((rho - s(rho))*).
Integer e_lambda(const IrreducibleModule& module);

/// Greedy highest-weight stripping: dominant weights in decreasing height,
/// gamma(lambda) = remaining multiplicity, subtract gamma(lambda) n_lambda(.).
/// Only nonzero gamma are returned. Throws std::logic_error if a remaining
/// multiplicity turns negative.
std::map<Weight, Count> strip_decompose(const CharacterTable& table);

/// prod_{a<b} ((lambda+rho)_b - (lambda+rho)_a) / (b - a) in c-coordinates.
Count weyl_dimension(const IrreducibleModule& module);

/// Coefficients of the Gaussian binomial [k+d choose k]_q: entry m counts
/// partitions of m into at most k parts, each at most d.
std::vector<Count> bounded_partition_counts(int d, std::int64_t k);

/// Classical binary count: 0 when kd is odd, else P(kd/2) - P(kd/2 - 1).
Count classical_binary_nu(int d, std::int64_t k);

}  // namespace nary
