#include "nary/series_expansion.hpp"

#include <string>

#include <json.hpp>

#include "nary/form_model.hpp"

namespace nary {

TruncatedSeries::TruncatedSeries(int n, int d, std::int64_t degree_bound, std::map<Key, Count> coefficients)
    : n_(n), d_(d), degree_bound_(degree_bound), coefficients_(std::move(coefficients)) {}

Count TruncatedSeries::at(std::int64_t degree, std::span<const std::int64_t> omega) const {
  Key key;
  key.reserve(omega.size() + 1);
  key.push_back(degree);
  key.insert(key.end(), omega.begin(), omega.end());
  auto it = coefficients_.find(key);
  return it == coefficients_.end() ? Count(0) : it->second;
}

TruncatedSeries expand_generating_series(int n, int d, std::int64_t degree_bound, std::size_t max_terms) {
  if (degree_bound < 0) throw InvalidArgument("degree bound must be nonnegative");
  const auto items = enumerate_indices(n, d);

  std::map<TruncatedSeries::Key, Count> coeffs;
  coeffs.emplace(TruncatedSeries::Key(static_cast<std::size_t>(n), 0), 1);

  // Multiplying by 1/(1 - t q^v) is the in-place recurrence f[key + (1,v)] += f[key]
  // taken in increasing t-degree; the t-degree leads the key so map order suffices.
  TruncatedSeries::Key shifted;
  for (const auto& v : items) {
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      if (it->first[0] >= degree_bound) continue;
      shifted = it->first;
      shifted[0] += 1;
      for (std::size_t s = 0; s < v.exponents().size(); ++s) shifted[s + 1] += v[s];
      coeffs[shifted] += it->second;
      if (coeffs.size() > max_terms) {
        throw ResourceLimitError("series expansion exceeds " + std::to_string(max_terms) + " stored coefficients");
      }
    }
  }
  return TruncatedSeries(n, d, degree_bound, std::move(coeffs));
}

Count coefficient(const TruncatedSeries& series, const OmegaTargets& targets) {
  if (targets.degree > series.degree_bound()) {
    throw OutOfTruncation("t-degree " + std::to_string(targets.degree) + " is beyond the truncation degree " +
                          std::to_string(series.degree_bound()));
  }
  if (targets.targets.size() != static_cast<std::size_t>(series.n() - 1))
    throw InvalidArgument("expected " + std::to_string(series.n() - 1) + " omega targets");
  return series.at(targets.degree, targets.targets);
}

MuOmega mu_omega(const Weight& mu) {
  const int n = mu.rank();
  std::int64_t weighted = 0;
  for (std::size_t r = 0; r < mu.size(); ++r) weighted += static_cast<std::int64_t>(r + 1) * mu[r];

  MuOmega out{n, std::vector<std::int64_t>(mu.size())};
  std::int64_t tail = 0;
  for (std::size_t s = mu.size(); s-- > 0;) {
    out.scaled[s] = weighted - n * tail;
    tail += mu[s];
  }
  return out;
}

Count nu_via_series(const TruncatedSeries& series, std::int64_t k) {
  const int n = series.n();
  if (k < 0) throw InvalidArgument("k must be nonnegative");
  if (k > series.degree_bound()) {
    throw OutOfTruncation("t-degree " + std::to_string(k) + " is beyond the truncation degree " +
                          std::to_string(series.degree_bound()));
  }
  const std::int64_t kd = k * series.d();

  Integer total = 0;
  for (const auto& term : signed_orbit_terms(n, Weight::zero(n))) {
    const MuOmega shift = mu_omega(term.dominant);
    OmegaTargets t{k, std::vector<std::int64_t>(shift.scaled.size())};
    bool feasible = true;
    for (std::size_t s = 0; s < shift.scaled.size() && feasible; ++s) {
      const std::int64_t scaled = kd - shift.scaled[s];
      feasible = scaled >= 0 && scaled % n == 0;
      t.targets[s] = scaled / n;
    }
    if (feasible) total += Integer(static_cast<long>(term.coefficient)) * coefficient(series, t);
  }
  if (total < 0) throw std::logic_error("negative alternating sum in series evaluation: " + to_decimal(total));
  return total;
}

Count nu_via_series(int n, int d, std::int64_t k) {
  return nu_via_series(expand_generating_series(n, d, k), k);
}

void write_jsonl(const TruncatedSeries& series, std::ostream& out) {
  for (const auto& [key, value] : series.coefficients()) {
    nlohmann::ordered_json rec = {{"t", key[0]},
                          {"omega", std::vector<std::int64_t>(key.begin() + 1, key.end())},
                          {"coefficient", to_decimal(value)}};
    out << rec.dump() << '\n';
  }
}

}  // namespace nary
