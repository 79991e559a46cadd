#include "nary/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace nary {

CountCache::CountCache(std::filesystem::path dir) {
  std::filesystem::create_directories(dir);
  file_ = dir / kFileName;
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // Truncated trailing lines from an interrupted run are skipped.
    auto rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.contains("count")) continue;
    Key key{rec.at("n").get<int>(), rec.at("d").get<int>(), rec.at("k").get<std::int64_t>(),
            rec.at("mu").get<std::vector<std::int64_t>>()};
    entries_[std::move(key)] = Count(rec.at("count").get<std::string>(), 10);
  }
}

CountCache::CountCache(CountCache&& other) noexcept {
  std::lock_guard lock(other.mutex_);
  file_ = std::move(other.file_);
  entries_ = std::move(other.entries_);
}

std::optional<CountCache> CountCache::from_environment() {
  const char* dir = std::getenv(kEnvVar);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return CountCache(dir);
}

std::optional<Count> CountCache::lookup(int n, int d, std::int64_t k, const Weight& mu) const {
  Key key{n, d, k, {mu.components().begin(), mu.components().end()}};
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(int n, int d, std::int64_t k, const Weight& mu, const Count& value) {
  std::vector<std::int64_t> comps(mu.components().begin(), mu.components().end());
  nlohmann::ordered_json rec = {{"n", n}, {"d", d}, {"k", k}, {"mu", comps}, {"count", to_decimal(value)}};
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(Key{n, d, k, std::move(comps)}, value);
  if (!inserted) return;
  std::ofstream out(file_, std::ios::app);
  out << rec.dump() << '\n';
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace nary
