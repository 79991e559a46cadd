#include "nary/oracles.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "nary/form_model.hpp"

namespace nary {

Count CharacterTable::multiplicity(const Weight& mu) const {
  auto it = multiplicities.find(mu);
  return it == multiplicities.end() ? Count(0) : it->second;
}

Count CharacterTable::total() const {
  Count sum = 0;
  for (const auto& [w, m] : multiplicities) sum += m;
  return sum;
}

namespace {

using Tally = std::map<std::vector<std::int64_t>, std::uint64_t>;

struct MonomialWalk {
  const std::vector<std::vector<std::int64_t>>& eps;
  std::vector<std::int64_t> weight;
  Tally& tally;

  // Extends a nondecreasing index sequence by `left` more factors, all >= from.
  void extend(std::size_t from, std::int64_t left) {
    if (left == 0) {
      ++tally[weight];
      return;
    }
    for (std::size_t i = from; i < eps.size(); ++i) {
      for (std::size_t s = 0; s < weight.size(); ++s) weight[s] += eps[i][s];
      extend(i, left - 1);
      for (std::size_t s = 0; s < weight.size(); ++s) weight[s] -= eps[i][s];
    }
  }
};

std::vector<std::vector<std::int64_t>> coefficient_weights(int n, int d) {
  std::vector<std::vector<std::int64_t>> eps;
  for (const auto& i : enumerate_indices(n, d)) {
    const Weight w = epsilon_weight(i);
    eps.emplace_back(w.components().begin(), w.components().end());
  }
  return eps;
}

void check_monomial_count(int n, int d, std::int64_t k, std::uint64_t max_monomials) {
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  const Count total = binomial(static_cast<std::int64_t>(index_count(n, d)) + k - 1, k);
  if (k > 0 && total > Count(std::to_string(max_monomials))) {
    throw ResourceLimitError("S^k(A) has " + to_decimal(total) + " monomials, above the enumeration bound " +
                             std::to_string(max_monomials));
  }
}

CharacterTable to_table(int n, int d, std::int64_t k, const Tally& tally) {
  CharacterTable table{n, d, k, {}};
  for (const auto& [w, m] : tally) table.multiplicities.emplace(Weight(n, w), Count(static_cast<unsigned long>(m)));
  return table;
}

}  // namespace

CharacterTable brute_character_serial(int n, int d, std::int64_t k, std::uint64_t max_monomials) {
  check_monomial_count(n, d, k, max_monomials);
  const auto eps = coefficient_weights(n, d);
  Tally tally;
  MonomialWalk walk{eps, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 0), tally};
  walk.extend(0, k);
  return to_table(n, d, k, tally);
}

CharacterTable brute_character(int n, int d, std::int64_t k, std::uint64_t max_monomials) {
  check_monomial_count(n, d, k, max_monomials);
  if (k == 0) return brute_character_serial(n, d, k, max_monomials);
  const auto eps = coefficient_weights(n, d);
  const auto lead_count = static_cast<std::int64_t>(eps.size());

  Tally merged;
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic)
    for (std::int64_t lead = 0; lead < lead_count; ++lead) {
      MonomialWalk walk{eps, eps[static_cast<std::size_t>(lead)], local};
      walk.extend(static_cast<std::size_t>(lead), k - 1);
    }
#pragma omp critical(nary_brute_merge)
    for (const auto& [w, m] : local) merged[w] += m;
  }
  return to_table(n, d, k, merged);
}

IrreducibleModule::IrreducibleModule(int n_, Weight highest_) : n(n_), highest(std::move(highest_)) {
  if (highest.rank() != n) throw InvalidArgument("highest weight has rank " + std::to_string(highest.rank()));
  if (!highest.is_dominant()) throw InvalidArgument("highest weight " + to_string(highest) + " is not dominant");
}

std::optional<std::vector<std::int64_t>> simple_root_coordinates(const Weight& lambda, const Weight& mu) {
  const auto n = static_cast<std::int64_t>(lambda.rank());
  const Weight v = lambda - mu;
  // Inverse Cartan matrix of A_{n-1}: min(i,j) - ij/n.
  std::int64_t weighted = 0;
  for (std::int64_t j = 1; j < n; ++j) weighted += j * v[static_cast<std::size_t>(j - 1)];
  if (weighted % n != 0) return std::nullopt;
  std::vector<std::int64_t> coords(static_cast<std::size_t>(n - 1));
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::int64_t j = 1; j < n; ++j) acc += std::min(i, j) * v[static_cast<std::size_t>(j - 1)];
    coords[static_cast<std::size_t>(i - 1)] = acc - i * (weighted / n);
  }
  return coords;
}

namespace {

bool dominated_by(const Weight& lambda, const Weight& mu) {
  const auto coords = simple_root_coordinates(lambda, mu);
  return coords && std::all_of(coords->begin(), coords->end(), [](std::int64_t x) { return x >= 0; });
}

// n^2 times the squared trace-form norm of the mean-centered c-vector.
Integer scaled_norm(std::span<const std::int64_t> c) {
  const auto n = static_cast<std::int64_t>(c.size());
  std::int64_t sum = 0;
  for (auto x : c) sum += x;
  Integer acc = 0;
  for (auto x : c) {
    const Integer centered = Integer(static_cast<long>(n * x - sum));
    acc += centered * centered;
  }
  return acc;
}

}  // namespace

FreudenthalMultiplicities::FreudenthalMultiplicities(IrreducibleModule module) : module_(std::move(module)) {
  top_norm_ = scaled_norm(to_c(module_.highest + rho(module_.n)).entries());
}

bool FreudenthalMultiplicities::is_weight(const Weight& mu) const {
  if (mu.rank() != module_.n) throw InvalidArgument("weight has rank " + std::to_string(mu.rank()));
  return dominated_by(module_.highest, dominant_representative(mu));
}

Count FreudenthalMultiplicities::operator()(const Weight& mu) {
  if (!is_weight(mu)) return 0;
  return dominant(dominant_representative(mu));
}

Count FreudenthalMultiplicities::dominant(const Weight& mu) {
  if (mu == module_.highest) return 1;
  if (auto it = memo_.find(mu); it != memo_.end()) return it->second;

  const int n = module_.n;
  const CVector base = to_c(mu);
  std::vector<std::int64_t> x(base.entries().begin(), base.entries().end());

  Integer rhs = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      // mu + j (e_b - e_a)
      std::copy(base.entries().begin(), base.entries().end(), x.begin());
      for (std::int64_t j = 1;; ++j) {
        x[static_cast<std::size_t>(b)] += 1;
        x[static_cast<std::size_t>(a)] -= 1;
        const Weight shifted = dominant_representative(weight_from_entries(x));
        if (!dominated_by(module_.highest, shifted)) break;
        const std::int64_t pairing = x[static_cast<std::size_t>(b)] - x[static_cast<std::size_t>(a)];
        rhs += dominant(shifted) * Integer(static_cast<long>(pairing));
      }
    }
  }
  rhs *= 2 * n * n;

  const Integer gap = top_norm_ - scaled_norm(to_c(mu + rho(n)).entries());
  if (gap <= 0 || rhs % gap != 0) {
    throw std::logic_error("Freudenthal recursion is not integral at " + to_string(mu) + " in module " +
                           to_string(module_.highest));
  }
  Count m = rhs / gap;
  memo_.emplace(mu, m);
  return m;
}

Count freudenthal_multiplicity(const IrreducibleModule& module, const Weight& mu) {
  FreudenthalMultiplicities f(module);
  return f(mu);
}

Integer e_lambda(const IrreducibleModule& module) {
  FreudenthalMultiplicities f(module);
  Integer total = 0;
  for (const auto& term : signed_orbit_terms(module.n, Weight::zero(module.n)))
    total += Integer(static_cast<long>(term.coefficient)) * f(term.dominant);
  return total;
}

std::map<Weight, Count> strip_decompose(const CharacterTable& table) {
  std::vector<Weight> order;
  std::map<Weight, Integer> remaining;
  for (const auto& [w, m] : table.multiplicities) {
    if (!w.is_dominant()) continue;
    order.push_back(w);
    remaining.emplace(w, m);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Weight& a, const Weight& b) { return height(a) > height(b); });

  std::map<Weight, Count> gammas;
  for (const auto& lambda : order) {
    const Integer g = remaining.at(lambda);
    if (g < 0) throw std::logic_error("stripping left negative multiplicity at " + to_string(lambda));
    if (g == 0) continue;
    gammas.emplace(lambda, g);
    FreudenthalMultiplicities f(IrreducibleModule(table.n, lambda));
    for (auto& [mu, rest] : remaining)
      if (height(mu) <= height(lambda)) rest -= g * f(mu);
  }
  for (const auto& [mu, rest] : remaining)
    if (rest != 0) throw std::logic_error("stripping left residual multiplicity at " + to_string(mu));
  return gammas;
}

Count weyl_dimension(const IrreducibleModule& module) {
  const CVector c = to_c(module.highest + rho(module.n));
  Integer num = 1;
  Integer den = 1;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      num *= static_cast<long>(c[b] - c[a]);
      den *= static_cast<long>(b - a);
    }
  }
  return num / den;
}

std::vector<Count> bounded_partition_counts(int d, std::int64_t k) {
  if (d < 1) throw InvalidArgument("d must be at least 1");
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  // prod_{i=1..k} (1 - q^{d+i}) / (1 - q^i), truncated at q^{kd}, which is its degree.
  const auto top = static_cast<std::size_t>(k * d);
  std::vector<Integer> poly(top + 1, 0);
  poly[0] = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto shift = static_cast<std::size_t>(d + i);
    for (std::size_t m = top + 1; m-- > shift;) poly[m] -= poly[m - shift];
  }
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto shift = static_cast<std::size_t>(i);
    for (std::size_t m = shift; m <= top; ++m) poly[m] += poly[m - shift];
  }
  return {poly.begin(), poly.end()};
}

Count classical_binary_nu(int d, std::int64_t k) {
  const auto p = bounded_partition_counts(d, k);
  const std::int64_t kd = k * d;
  if (kd % 2 != 0) return 0;
  const auto half = static_cast<std::size_t>(kd / 2);
  Count result = p[half];
  if (half > 0) result -= p[half - 1];
  return result;
}

}  // namespace nary
