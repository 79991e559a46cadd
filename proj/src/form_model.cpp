#include "nary/form_model.hpp"

#include <numeric>
#include <string>

#include "nary/count.hpp"

namespace nary {

namespace {

void check_form(int n, int d) {
  if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
  if (d < 1) throw InvalidArgument("d must be at least 1, got " + std::to_string(d));
}

}  // namespace

MultiIndex::MultiIndex(int n, int d, std::vector<int> exponents) : n_(n), d_(d), exponents_(std::move(exponents)) {
  check_form(n, d);
  if (exponents_.size() != static_cast<std::size_t>(n - 1))
    throw InvalidArgument("multi-index needs " + std::to_string(n - 1) + " exponents");
  for (int e : exponents_)
    if (e < 0) throw InvalidArgument("multi-index exponents must be nonnegative");
  if (degree() > d) throw InvalidArgument("multi-index degree exceeds d");
}

int MultiIndex::degree() const noexcept { return std::accumulate(exponents_.begin(), exponents_.end(), 0); }

std::uint64_t index_count(int n, int d) {
  check_form(n, d);
  const Count b = binomial(n - 1 + d, n - 1);
  if (!b.fits_ulong_p()) return UINT64_MAX;
  return b.get_ui();
}

std::vector<MultiIndex> enumerate_indices(int n, int d, std::size_t max_count) {
  const auto total = index_count(n, d);
  if (total > max_count) {
    throw ResourceLimitError("I_{n,d} has " + std::to_string(total) + " elements, above the bound " +
                             std::to_string(max_count));
  }
  std::vector<MultiIndex> out;
  out.reserve(total);
  std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
  // Odometer over e with |e| <= d; last position varies fastest.
  for (;;) {
    out.emplace_back(n, d, e);
    int sum = std::accumulate(e.begin(), e.end(), 0);
    std::size_t pos = e.size();
    while (pos > 0) {
      --pos;
      if (sum < d) {
        ++e[pos];
        break;
      }
      sum -= e[pos];
      e[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

Weight epsilon_weight(const MultiIndex& i) {
  Exponent alpha(i.n(), i.d());
  alpha.add(i);
  return monomial_weight(alpha);
}

Exponent::Exponent(int n, int d) : n_(n), d_(d) { check_form(n, d); }

void Exponent::add(const MultiIndex& i, std::int64_t power) {
  if (i.n() != n_ || i.d() != d_) throw InvalidArgument("multi-index belongs to a different form");
  if (power < 0) throw InvalidArgument("exponent powers must be nonnegative");
  if (power == 0) return;
  powers_[i] += power;
}

std::int64_t Exponent::degree() const noexcept {
  std::int64_t k = 0;
  for (const auto& [i, p] : powers_) k += p;
  return k;
}

std::vector<std::int64_t> Exponent::omega() const {
  std::vector<std::int64_t> w(static_cast<std::size_t>(n_ - 1), 0);
  for (const auto& [i, p] : powers_)
    for (std::size_t s = 0; s < w.size(); ++s) w[s] += static_cast<std::int64_t>(i[s]) * p;
  return w;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.n_ != b.n_ || a.d_ != b.d_) throw InvalidArgument("adding monomials of different forms");
  Exponent out = a;
  for (const auto& [i, p] : b.powers_) out.add(i, p);
  return out;
}

Weight monomial_weight(const Exponent& alpha) {
  const auto om = alpha.omega();
  const std::int64_t k = alpha.degree();
  std::vector<std::int64_t> w(om.size());
  std::int64_t first = k * alpha.d() - om[0];
  for (auto x : om) first -= x;
  w[0] = first;
  for (std::size_t s = 1; s < om.size(); ++s) w[s] = om[s - 1] - om[s];
  return Weight(alpha.n(), std::move(w));
}

}  // namespace nary
