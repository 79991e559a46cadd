#include "nary/dimension_formulas.hpp"

#include <exception>
#include <functional>
#include <string>

namespace nary {

namespace {

void check_query(int n, int d, std::int64_t k) {
  if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
  if (d < 1) throw InvalidArgument("d must be at least 1, got " + std::to_string(d));
  if (k < 0) throw InvalidArgument("k must be nonnegative, got " + std::to_string(k));
}

Count alternating_sum(int n, int d, std::int64_t k, const Weight& shift, const CountOptions& options) {
  Integer total = 0;
  for (const auto& term : signed_orbit_terms(n, shift))
    total += Integer(static_cast<long>(term.coefficient)) * weight_count(n, d, k, term.dominant, options);
  if (total < 0) {
    throw std::logic_error("negative alternating sum " + to_decimal(total) + " for n=" + std::to_string(n) +
                           " d=" + std::to_string(d) + " k=" + std::to_string(k) + " shift=" + to_string(shift));
  }
  return total;
}

}  // namespace

Count nu(int n, int d, std::int64_t k, const CountOptions& options) {
  check_query(n, d, k);
  return alternating_sum(n, d, k, Weight::zero(n), options);
}

Count gamma(int n, int d, std::int64_t k, const Weight& lambda, const CountOptions& options) {
  check_query(n, d, k);
  if (lambda.rank() != n) throw InvalidArgument("lambda has rank " + std::to_string(lambda.rank()));
  if (!lambda.is_dominant()) throw InvalidArgument("lambda " + to_string(lambda) + " is not dominant");
  return alternating_sum(n, d, k, lambda, options);
}

Count nu_ternary(int d, std::int64_t k, const CountOptions& options) {
  check_query(3, d, k);
  auto c = [&](std::int64_t a, std::int64_t b) { return weight_count(3, d, k, Weight(3, {a, b}), options); };
  Integer total = c(0, 0) - 2 * c(1, 1) - c(2, 2) + c(0, 3) + c(3, 0);
  if (total < 0) throw std::logic_error("negative ternary alternating sum " + to_decimal(total));
  return total;
}

std::vector<Count> hilbert_prefix(int n, int d, std::int64_t k_max, const CountOptions& options) {
  check_query(n, d, 0);
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  std::vector<Count> out(static_cast<std::size_t>(k_max + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k <= k_max; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = nu(n, d, k, options);
    } catch (...) {
#pragma omp critical(nary_hilbert_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Weight> candidate_highest_weights(int n, int d, std::int64_t k) {
  check_query(n, d, k);
  const std::int64_t total = k * d;
  std::vector<Weight> out;
  std::vector<std::int64_t> parts(static_cast<std::size_t>(n), 0);
  // parts[0] >= parts[1] >= ... >= parts[n-1] >= 0 summing to total.
  std::function<void(std::size_t, std::int64_t, std::int64_t)> place = [&](std::size_t pos, std::int64_t left,
                                                                           std::int64_t cap) {
    if (pos + 1 == parts.size()) {
      if (left > cap) return;
      parts[pos] = left;
      std::vector<std::int64_t> w(parts.size() - 1);
      for (std::size_t s = 0; s + 1 < parts.size(); ++s) w[s] = parts[s] - parts[s + 1];
      out.emplace_back(n, std::move(w));
      return;
    }
    for (std::int64_t p = std::min(left, cap); p >= 0; --p) {
      // remaining n-pos-1 parts are each <= p
      if (p * static_cast<std::int64_t>(parts.size() - pos) < left) break;
      parts[pos] = p;
      place(pos + 1, left - p, p);
    }
  };
  place(0, total, total);
  return out;
}

}  // namespace nary
