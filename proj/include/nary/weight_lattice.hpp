#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nary {

/// An sl_n weight given by the eigenvalues of H_1, ..., H_{n-1}.
///
/// Component s is the difference e_s - e_{s+1} of an exponent-like vector e,
/// so the coefficient a_0 of a degree-d form has weight (d, 0, ..., 0).
/// A weight is dominant when every component is nonnegative.
class Weight {
 public:
  Weight(int n, std::vector<std::int64_t> components);

  static Weight zero(int n);

  int rank() const noexcept { return n_; }
  std::span<const std::int64_t> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  std::int64_t operator[](std::size_t s) const { return components_[s]; }

  bool is_dominant() const noexcept;
  bool is_zero() const noexcept;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  int n_;
  std::vector<std::int64_t> components_;
};

/// "(c1,c2,...)"
std::string to_string(const Weight& w);

/// Permutation coordinates of a weight: n entries, defined up to a common
/// shift and stored with minimum entry 0. Consecutive differences give the
/// weight (w_s = c_{s+1} - c_s); the Weyl group permutes entries and dominant
/// weights have ascending entries.
class CVector {
 public:
  /// Accepts any representative and normalizes it.
  explicit CVector(std::vector<std::int64_t> entries);

  std::span<const std::int64_t> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t j) const { return entries_[j]; }

  friend bool operator==(const CVector&, const CVector&) = default;
  friend auto operator<=>(const CVector&, const CVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

CVector to_c(const Weight& w);
Weight from_c(const CVector& c);
/// Weight of an arbitrary (unnormalized) permutation-coordinate vector.
Weight weight_from_entries(std::span<const std::int64_t> entries);

/// The unique dominant weight on the Weyl orbit of w.
Weight dominant_representative(const Weight& w);

/// Half the sum of the positive roots, (1, ..., 1).
Weight rho(int n);

/// Sum over all pairs a < b of c_b - c_a. Strictly increases when a positive
/// root is added, so descending height is a linear extension of dominance.
std::int64_t height(const Weight& w);

inline constexpr int kDefaultMaxWeylRank = 8;

struct WeylElement {
  std::vector<int> permutation;  // acts on c-coordinates: (s c)_j = c_{permutation[j]}
  int sign;                      // (-1)^{|s|}
  int reflection_length;         // n minus the number of cycles
};

/// Visits all n! elements of S_n in lexicographic order.
void for_each_weyl_element(int n, const std::function<void(const WeylElement&)>& visit,
                           int max_rank = kDefaultMaxWeylRank);

struct SignedOrbitTerm {
  Weight dominant;
  std::int64_t coefficient;

  friend bool operator==(const SignedOrbitTerm&, const SignedOrbitTerm&) = default;
};

/// Aggregates sign(s) over s in W by the dominant weight (shift + rho - s(rho))*.
/// Zero coefficients are dropped. Terms are ordered by the smallest reflection
/// length among their contributing elements, then lexicographically.
/// Throws ResourceLimitError when n exceeds max_rank.
std::vector<SignedOrbitTerm> signed_orbit_terms(int n, const Weight& shift,
                                                int max_rank = kDefaultMaxWeylRank);

/// Renders the terms as an alternating sum, e.g.
/// "c(k,(0,0)) - 2c(k,(1,1)) - c(k,(2,2)) + c(k,(0,3)) + c(k,(3,0))".
std::string orbit_formula(const std::vector<SignedOrbitTerm>& terms);

}  // namespace nary
