#include "nary/weight_lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nary/count.hpp"

namespace nary {

Weight::Weight(int n, std::vector<std::int64_t> components) : n_(n), components_(std::move(components)) {
  if (n < 2) throw InvalidArgument("weight rank must be at least 2, got " + std::to_string(n));
  if (components_.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidArgument("weight of rank " + std::to_string(n) + " needs " + std::to_string(n - 1) +
                          " components, got " + std::to_string(components_.size()));
  }
}

Weight Weight::zero(int n) {
  if (n < 2) throw InvalidArgument("weight rank must be at least 2, got " + std::to_string(n));
  return Weight(n, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 0));
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](std::int64_t x) { return x >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(components_.begin(), components_.end(), [](std::int64_t x) { return x == 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.n_ != b.n_) throw InvalidArgument("adding weights of different rank");
  std::vector<std::int64_t> out(a.components_);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] += b.components_[s];
  return Weight(a.n_, std::move(out));
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.n_ != b.n_) throw InvalidArgument("subtracting weights of different rank");
  std::vector<std::int64_t> out(a.components_);
  for (std::size_t s = 0; s < out.size(); ++s) out[s] -= b.components_[s];
  return Weight(a.n_, std::move(out));
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (s) os << ',';
    os << w[s];
  }
  os << ')';
  return os.str();
}

CVector::CVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw InvalidArgument("c-vector needs at least 2 entries");
  const auto lo = *std::min_element(entries_.begin(), entries_.end());
  for (auto& x : entries_) x -= lo;
}

CVector to_c(const Weight& w) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(w.rank()), 0);
  for (std::size_t s = 0; s < w.size(); ++s) c[s + 1] = c[s] + w[s];
  return CVector(std::move(c));
}

Weight weight_from_entries(std::span<const std::int64_t> entries) {
  std::vector<std::int64_t> w(entries.size() - 1);
  for (std::size_t s = 0; s + 1 < entries.size(); ++s) w[s] = entries[s + 1] - entries[s];
  return Weight(static_cast<int>(entries.size()), std::move(w));
}

Weight from_c(const CVector& c) { return weight_from_entries(c.entries()); }

Weight dominant_representative(const Weight& w) {
  const CVector c = to_c(w);
  std::vector<std::int64_t> sorted(c.entries().begin(), c.entries().end());
  std::sort(sorted.begin(), sorted.end());
  return weight_from_entries(sorted);
}

Weight rho(int n) {
  if (n < 2) throw InvalidArgument("rank must be at least 2, got " + std::to_string(n));
  return Weight(n, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1));
}

std::int64_t height(const Weight& w) {
  const CVector c = to_c(w);
  const auto n = static_cast<std::int64_t>(c.size());
  std::int64_t h = 0;
  for (std::int64_t j = 0; j < n; ++j) h += (2 * j - n + 1) * c[static_cast<std::size_t>(j)];
  return h;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) sign = -sign;
  return sign;
}

int cycle_count(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  int cycles = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (seen[j]) continue;
    ++cycles;
    for (auto x = j; !seen[x]; x = static_cast<std::size_t>(p[x])) seen[x] = true;
  }
  return cycles;
}

}  // namespace

void for_each_weyl_element(int n, const std::function<void(const WeylElement&)>& visit, int max_rank) {
  if (n < 2) throw InvalidArgument("rank must be at least 2, got " + std::to_string(n));
  if (n > max_rank) {
    throw ResourceLimitError("Weyl group of rank " + std::to_string(n) + " exceeds the configured bound n <= " +
                             std::to_string(max_rank));
  }
  WeylElement s;
  s.permutation.resize(static_cast<std::size_t>(n));
  std::iota(s.permutation.begin(), s.permutation.end(), 0);
  do {
    s.sign = permutation_sign(s.permutation);
    s.reflection_length = n - cycle_count(s.permutation);
    visit(s);
  } while (std::next_permutation(s.permutation.begin(), s.permutation.end()));
}

std::vector<SignedOrbitTerm> signed_orbit_terms(int n, const Weight& shift, int max_rank) {
  if (shift.rank() != n) throw InvalidArgument("shift weight has rank " + std::to_string(shift.rank()));

  struct Aggregate {
    std::int64_t coefficient = 0;
    int min_length = 0;
    bool seen = false;
  };
  std::map<Weight, Aggregate> merged;

  // shift + rho - s(rho) in c-coordinates, with rho = (0, 1, ..., n-1).
  const CVector base = to_c(shift);
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  for_each_weyl_element(
      n,
      [&](const WeylElement& s) {
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = base[j] + static_cast<std::int64_t>(j) - s.permutation[j];
        auto& agg = merged[dominant_representative(weight_from_entries(v))];
        agg.coefficient += s.sign;
        if (!agg.seen || s.reflection_length < agg.min_length) agg.min_length = s.reflection_length;
        agg.seen = true;
      },
      max_rank);

  std::vector<std::pair<int, SignedOrbitTerm>> keyed;
  for (auto& [w, agg] : merged)
    if (agg.coefficient != 0) keyed.push_back({agg.min_length, SignedOrbitTerm{w, agg.coefficient}});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<SignedOrbitTerm> terms;
  terms.reserve(keyed.size());
  for (auto& [len, term] : keyed) terms.push_back(std::move(term));
  return terms;
}

std::string orbit_formula(const std::vector<SignedOrbitTerm>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const std::int64_t mag = t.coefficient < 0 ? -t.coefficient : t.coefficient;
    if (first) {
      if (t.coefficient < 0) os << "-";
    } else {
      os << (t.coefficient < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag;
    os << "c(k," << to_string(t.dominant) << ")";
    first = false;
  }
  return os.str();
}

}  // namespace nary
