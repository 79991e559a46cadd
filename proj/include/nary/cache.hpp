#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "nary/count.hpp"
#include "nary/weight_lattice.hpp"

namespace nary {

/// On-disk memoization of weight counts.
///
/// Records live in <dir>/counts.jsonl, one JSON object per line:
///   {"n":3,"d":3,"k":4,"mu":[1,1],"count":"7"}
/// Existing records are loaded on construction; new ones are appended.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  /// Cache rooted at $NARY_CACHE_DIR, or nullopt when the variable is unset or empty.
  static std::optional<CountCache> from_environment();

  static constexpr const char* kEnvVar = "NARY_CACHE_DIR";
  static constexpr const char* kFileName = "counts.jsonl";

  std::optional<Count> lookup(int n, int d, std::int64_t k, const Weight& mu) const;
  void store(int n, int d, std::int64_t k, const Weight& mu, const Count& value);

  std::size_t size() const;
  const std::filesystem::path& file() const noexcept { return file_; }

  CountCache(CountCache&& other) noexcept;

 private:
  using Key = std::tuple<int, int, std::int64_t, std::vector<std::int64_t>>;

  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<Key, Count> entries_;
};

}  // namespace nary
