#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <vector>

#include "nary/count.hpp"
#include "nary/solution_counting.hpp"
#include "nary/weight_lattice.hpp"

namespace nary {

inline constexpr std::size_t kDefaultMaxSeriesTerms = 20'000'000;

/// Truncation of prod_{i in I_{n,d}} 1 / (1 - t q^i) to t-degree <= degree_bound.
///
/// Keys are (t-degree, omega_1, ..., omega_{n-1}); only nonzero coefficients
/// are stored.
class TruncatedSeries {
 public:
  using Key = std::vector<std::int64_t>;

  TruncatedSeries(int n, int d, std::int64_t degree_bound, std::map<Key, Count> coefficients);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::int64_t degree_bound() const noexcept { return degree_bound_; }
  const std::map<Key, Count>& coefficients() const noexcept { return coefficients_; }
  std::size_t size() const noexcept { return coefficients_.size(); }

  /// Stored coefficient of t^degree q^omega, zero when absent.
  Count at(std::int64_t degree, std::span<const std::int64_t> omega) const;

 private:
  int n_;
  int d_;
  std::int64_t degree_bound_;
  std::map<Key, Count> coefficients_;
};

TruncatedSeries expand_generating_series(int n, int d, std::int64_t degree_bound,
                                         std::size_t max_terms = kDefaultMaxSeriesTerms);

/// Coefficient of t^k q^T. Throws OutOfTruncation when k > degree_bound.
Count coefficient(const TruncatedSeries& series, const OmegaTargets& targets);

/// Rational shift with denominator dividing n, stored as n times its value.
struct MuOmega {
  int n = 0;
  std::vector<std::int64_t> scaled;

  friend bool operator==(const MuOmega&, const MuOmega&) = default;
};

/// Entry s is (1/n) sum_r r mu_r - sum_{r > s} mu_r, so that T_s = kd/n - entry s.
MuOmega mu_omega(const Weight& mu);

/// Invariant dimension from the orbit terms and coefficient extraction at
/// mu_omega-shifted exponents. The series must be truncated at degree >= k.
Count nu_via_series(const TruncatedSeries& series, std::int64_t k);
Count nu_via_series(int n, int d, std::int64_t k);

/// One JSON object per nonzero coefficient:
///   {"t":2,"omega":[2],"coefficient":"2"}
void write_jsonl(const TruncatedSeries& series, std::ostream& out);

}  // namespace nary
