#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nary {

/// Exact integer used for solution counts, dimensions and multiplicities.
/// Counts are nonnegative by construction; signed intermediate sums use the
/// same representation.
using Count = mpz_class;
using Integer = mpz_class;

inline std::string to_decimal(const mpz_class& value) { return value.get_str(10); }

/// A configured bound on work or memory was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments violate an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A series coefficient was requested beyond the stored truncation degree.
class OutOfTruncation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// binomial(n, k) as an exact integer; zero when k < 0 or k > n.
inline Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Count result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace nary
