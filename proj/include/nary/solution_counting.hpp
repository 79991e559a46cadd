#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nary/count.hpp"
#include "nary/weight_lattice.hpp"

namespace nary {

class CountCache;

/// Required values of omega_1(alpha), ..., omega_{n-1}(alpha) for monomials
/// of the given degree.
struct OmegaTargets {
  std::int64_t degree = 0;
  std::vector<std::int64_t> targets;

  friend bool operator==(const OmegaTargets&, const OmegaTargets&) = default;
};

inline constexpr std::uint64_t kDefaultMaxStates = 100'000'000;

struct CountOptions {
  /// Bound on (k+1) * prod_s (T_s + 1) dynamic-programming cells.
  std::uint64_t max_states = kDefaultMaxStates;
  /// Optional memoization of weight_count results; not owned.
  CountCache* cache = nullptr;
};

/// Solves the weight system for the omega values:
///   T_s = kd/n - ( (mu_1 + 2 mu_2 + ... + (n-1) mu_{n-1}) / n - (mu_{s+1} + ... + mu_{n-1}) ).
/// Returns nullopt when some T_s is non-integral or negative.
std::optional<OmegaTargets> omega_targets(int n, int d, std::int64_t k, const Weight& mu);

/// Number of alpha: I_{n,d} -> Z_{>=0} with |alpha| = k and omega(alpha) = T.
/// Unbounded-knapsack dynamic program; each degree layer is updated in
/// parallel across target cells.
Count count_solutions(int n, int d, const OmegaTargets& targets, const CountOptions& options = {});

/// Single-threaded reference for count_solutions.
Count count_solutions_serial(int n, int d, const OmegaTargets& targets, const CountOptions& options = {});

/// c_{n,d}(k, mu): multiplicity of the weight mu in S^k(A). Zero when the
/// targets are infeasible; negative mu components are allowed.
Count weight_count(int n, int d, std::int64_t k, const Weight& mu, const CountOptions& options = {});

}  // namespace nary
