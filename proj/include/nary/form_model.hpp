#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nary/weight_lattice.hpp"

namespace nary {

/// Index i = (i_1, ..., i_{n-1}) of a coefficient a_i of an n-ary form of
/// degree d; the coefficient multiplies x_1^{d-|i|} x_2^{i_1} ... x_n^{i_{n-1}}.
class MultiIndex {
 public:
  MultiIndex(int n, int d, std::vector<int> exponents);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::span<const int> exponents() const noexcept { return exponents_; }
  int operator[](std::size_t s) const { return exponents_[s]; }
  /// |i|
  int degree() const noexcept;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  int n_;
  int d_;
  std::vector<int> exponents_;
};

inline constexpr std::size_t kDefaultMaxIndices = 1'000'000;

/// Number of coefficients of an n-ary form of degree d, binomial(n-1+d, n-1).
std::uint64_t index_count(int n, int d);

/// All of I_{n,d} in lexicographic order of the exponent vectors.
std::vector<MultiIndex> enumerate_indices(int n, int d, std::size_t max_count = kDefaultMaxIndices);

/// Weight of the coefficient a_i.
Weight epsilon_weight(const MultiIndex& i);

/// A monomial in the coefficients: finitely supported exponents alpha_i.
class Exponent {
 public:
  Exponent(int n, int d);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }

  void add(const MultiIndex& i, std::int64_t power = 1);
  const std::map<MultiIndex, std::int64_t>& powers() const noexcept { return powers_; }
  /// |alpha|
  std::int64_t degree() const noexcept;
  /// omega_s(alpha) = sum_i i_s alpha_i for s = 1..n-1.
  std::vector<std::int64_t> omega() const;

  friend Exponent operator+(const Exponent& a, const Exponent& b);

 private:
  int n_;
  int d_;
  std::map<MultiIndex, std::int64_t> powers_;
};

/// (kd - (2 omega_1 + omega_2 + ... + omega_{n-1}), omega_1 - omega_2, ..., omega_{n-2} - omega_{n-1})
Weight monomial_weight(const Exponent& alpha);

}  // namespace nary
