#include "nary/solution_counting.hpp"

#include <numeric>
#include <string>

#include "nary/cache.hpp"
#include "nary/form_model.hpp"

namespace nary {

std::optional<OmegaTargets> omega_targets(int n, int d, std::int64_t k, const Weight& mu) {
  if (n < 2) throw InvalidArgument("n must be at least 2, got " + std::to_string(n));
  if (d < 1) throw InvalidArgument("d must be at least 1, got " + std::to_string(d));
  if (k < 0) throw InvalidArgument("k must be nonnegative, got " + std::to_string(k));
  if (mu.rank() != n) throw InvalidArgument("weight has rank " + std::to_string(mu.rank()) + ", expected " + std::to_string(n));

  std::int64_t weighted = 0;
  for (std::size_t r = 0; r < mu.size(); ++r) weighted += static_cast<std::int64_t>(r + 1) * mu[r];
  const std::int64_t numerator = k * d - weighted;
  if (numerator % n != 0) return std::nullopt;
  const std::int64_t base = numerator / n;

  OmegaTargets out;
  out.degree = k;
  out.targets.assign(mu.size(), 0);
  std::int64_t tail = 0;  // mu_{s+1} + ... + mu_{n-1}
  for (std::size_t s = mu.size(); s-- > 0;) {
    out.targets[s] = base + tail;
    if (out.targets[s] < 0) return std::nullopt;
    tail += mu[s];
  }
  return out;
}

namespace {

struct Layout {
  std::vector<std::int64_t> extent;  // T_s + 1
  std::vector<std::int64_t> stride;  // last coordinate fastest
  std::uint64_t cells = 1;           // one degree layer
  std::uint64_t layers = 0;
};

// Returns false when the count is trivially zero.
bool prepare(int n, int d, const OmegaTargets& t, const CountOptions& options, Layout& layout,
             std::vector<std::vector<int>>& items) {
  if (t.targets.size() != static_cast<std::size_t>(n - 1))
    throw InvalidArgument("expected " + std::to_string(n - 1) + " omega targets");
  if (t.degree < 0) throw InvalidArgument("degree must be nonnegative");

  std::int64_t total = 0;
  for (auto x : t.targets) {
    if (x < 0) return false;
    total += x;
  }
  // Each factor contributes |i| <= d to sum_s omega_s.
  if (total > t.degree * d) return false;

  const std::size_t dims = t.targets.size();
  layout.extent.resize(dims);
  layout.stride.resize(dims);
  layout.layers = static_cast<std::uint64_t>(t.degree) + 1;
  std::uint64_t bound = layout.layers;
  for (std::size_t s = dims; s-- > 0;) {
    layout.extent[s] = t.targets[s] + 1;
    layout.stride[s] = static_cast<std::int64_t>(layout.cells);
    const auto ext = static_cast<std::uint64_t>(layout.extent[s]);
    if (bound > options.max_states / ext) {
      throw ResourceLimitError("solution count needs more than " + std::to_string(options.max_states) +
                               " dynamic-programming states");
    }
    bound *= ext;
    layout.cells *= ext;
  }

  for (const auto& i : enumerate_indices(n, d)) {
    bool fits = true;
    for (std::size_t s = 0; s < dims; ++s) fits = fits && i[s] <= t.targets[s];
    if (fits) items.emplace_back(i.exponents().begin(), i.exponents().end());
  }
  return true;
}

std::int64_t offset_of(const Layout& layout, const std::vector<int>& v) {
  std::int64_t off = 0;
  for (std::size_t s = 0; s < v.size(); ++s) off += v[s] * layout.stride[s];
  return off;
}

}  // namespace

Count count_solutions(int n, int d, const OmegaTargets& targets, const CountOptions& options) {
  Layout layout;
  std::vector<std::vector<int>> items;
  if (!prepare(n, d, targets, options, layout, items)) return 0;

  const std::size_t dims = layout.extent.size();
  const auto cells = static_cast<std::int64_t>(layout.cells);

  // Coordinates of every cell, decoded once.
  std::vector<std::int32_t> coords(layout.cells * dims);
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    auto rest = idx;
    for (std::size_t s = 0; s < dims; ++s) {
      coords[static_cast<std::size_t>(idx) * dims + s] = static_cast<std::int32_t>(rest / layout.stride[s]);
      rest %= layout.stride[s];
    }
  }

  std::vector<Count> table(layout.layers * layout.cells);
  table[0] = 1;
  for (const auto& v : items) {
    const auto off = offset_of(layout, v);
    for (std::uint64_t j = 1; j < layout.layers; ++j) {
      Count* dst = table.data() + j * layout.cells;
      const Count* src = table.data() + (j - 1) * layout.cells;
#pragma omp parallel for schedule(static) if (cells > 2048)
      for (std::int64_t idx = 0; idx < cells; ++idx) {
        const std::int32_t* c = coords.data() + static_cast<std::size_t>(idx) * dims;
        bool fits = true;
        for (std::size_t s = 0; s < dims; ++s) fits = fits && c[s] >= v[s];
        if (fits) dst[idx] += src[idx - off];
      }
    }
  }
  return table[(layout.layers - 1) * layout.cells + layout.cells - 1];
}

Count count_solutions_serial(int n, int d, const OmegaTargets& targets, const CountOptions& options) {
  Layout layout;
  std::vector<std::vector<int>> items;
  if (!prepare(n, d, targets, options, layout, items)) return 0;

  const std::size_t dims = layout.extent.size();
  std::vector<Count> table(layout.layers * layout.cells);
  table[0] = 1;
  std::vector<std::int64_t> c(dims);
  for (const auto& v : items) {
    const auto off = offset_of(layout, v);
    for (std::uint64_t j = 1; j < layout.layers; ++j) {
      std::fill(c.begin(), c.end(), 0);
      for (std::uint64_t idx = 0; idx < layout.cells; ++idx) {
        bool fits = true;
        for (std::size_t s = 0; s < dims; ++s) fits = fits && c[s] >= v[s];
        if (fits) table[j * layout.cells + idx] += table[(j - 1) * layout.cells + idx - static_cast<std::uint64_t>(off)];
        for (std::size_t s = dims; s-- > 0;) {
          if (++c[s] < layout.extent[s]) break;
          c[s] = 0;
        }
      }
    }
  }
  return table.back();
}

Count weight_count(int n, int d, std::int64_t k, const Weight& mu, const CountOptions& options) {
  const auto targets = omega_targets(n, d, k, mu);
  if (!targets) return 0;
  if (options.cache) {
    if (auto hit = options.cache->lookup(n, d, k, mu)) return *hit;
  }
  Count value = count_solutions(n, d, *targets, options);
  if (options.cache) options.cache->store(n, d, k, mu, value);
  return value;
}

}  // namespace nary
