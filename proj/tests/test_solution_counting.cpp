#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "nary/cache.hpp"
#include "nary/form_model.hpp"
#include "nary/oracles.hpp"
#include "nary/solution_counting.hpp"

using namespace nary;

namespace {

// Independent count: walk all degree-k monomials and compare omega directly.
Count brute_count(int n, int d, std::int64_t k, const std::vector<std::int64_t>& targets) {
  const auto indices = enumerate_indices(n, d);
  std::uint64_t hits = 0;
  std::vector<std::int64_t> om(static_cast<std::size_t>(n - 1), 0);
  auto walk = [&](auto&& self, std::size_t from, std::int64_t left) -> void {
    if (left == 0) {
      hits += om == targets;
      return;
    }
    for (std::size_t i = from; i < indices.size(); ++i) {
      for (std::size_t s = 0; s < om.size(); ++s) om[s] += indices[i][s];
      self(self, i, left - 1);
      for (std::size_t s = 0; s < om.size(); ++s) om[s] -= indices[i][s];
    }
  };
  walk(walk, 0, k);
  return static_cast<unsigned long>(hits);
}

}  // namespace

TEST_CASE("omega_targets examples") {
  for (std::int64_t k = 0; k <= 6; ++k)
    for (int d = 1; d <= 4; ++d) {
      const auto t = omega_targets(2, d, k, Weight::zero(2));
      if ((k * d) % 2 == 0) {
        REQUIRE(t);
        CHECK(t->targets == std::vector<std::int64_t>{k * d / 2});
      } else {
        CHECK_FALSE(t);
      }
    }
  for (std::int64_t kd : {3, 6, 9, 12}) {
    const auto t = omega_targets(3, static_cast<int>(kd / 3), 3, Weight(3, {1, 1}));
    REQUIRE(t);
    CHECK(t->targets == std::vector<std::int64_t>{kd / 3, kd / 3 - 1});
  }
  CHECK_FALSE(omega_targets(3, 2, 1, Weight::zero(3)));
  CHECK_FALSE(omega_targets(3, 3, 0, Weight(3, {0, 3})));  // T = (1, -2)
  CHECK_THROWS_AS(omega_targets(3, 3, -1, Weight::zero(3)), InvalidArgument);
  CHECK_THROWS_AS(omega_targets(3, 3, 1, Weight::zero(2)), InvalidArgument);
}

TEST_CASE("solved targets satisfy the weight system of every monomial") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const int d = 1 + (trial / 4) % 4;
    const auto indices = enumerate_indices(n, d);
    std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
    Exponent alpha(n, d);
    for (int f = 0; f < trial % 7; ++f) alpha.add(indices[pick(rng)]);
    const auto t = omega_targets(n, d, alpha.degree(), monomial_weight(alpha));
    REQUIRE(t);
    CHECK(t->targets == alpha.omega());
  }
}

TEST_CASE("count_solutions examples") {
  CHECK(count_solutions(2, 2, {2, {2}}) == 2);
  CHECK(count_solutions(2, 2, {1, {0}}) == 1);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d)
      CHECK(count_solutions(n, d, {0, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 0)}) == 1);
  CHECK(count_solutions(2, 2, {2, {5}}) == 0);
  CHECK(count_solutions(3, 2, {2, {-1, 0}}) == 0);
}

TEST_CASE("count_solutions matches brute-force monomial enumeration") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d)
      for (std::int64_t k = 0; k <= (n == 4 ? 4 : 5); ++k) {
        // all targets with sum <= kd, components <= kd
        const std::int64_t kd = k * d;
        std::vector<std::int64_t> t(static_cast<std::size_t>(n - 1), 0);
        for (;;) {
          CHECK(count_solutions(n, d, {k, t}) == brute_count(n, d, k, t));
          std::size_t pos = 0;
          while (pos < t.size() && ++t[pos] > kd) t[pos++] = 0;
          if (pos == t.size()) break;
        }
      }
}

TEST_CASE("parallel and serial kernels agree") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const int d = 1 + trial % 4;
    const std::int64_t k = trial % 9;
    std::uniform_int_distribution<std::int64_t> comp(0, k * d);
    OmegaTargets t{k, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1))};
    for (auto& x : t.targets) x = comp(rng);
    CHECK(count_solutions(n, d, t) == count_solutions_serial(n, d, t));
  }
}

TEST_CASE("state-space bound") {
  CountOptions tight;
  tight.max_states = 100;
  CHECK_THROWS_AS(count_solutions(3, 3, {6, {6, 6}}, tight), ResourceLimitError);
  CHECK_THROWS_AS(count_solutions_serial(3, 3, {6, {6, 6}}, tight), ResourceLimitError);
  CHECK_THROWS_AS(weight_count(3, 3, 6, Weight::zero(3), tight), ResourceLimitError);
  CHECK_NOTHROW(count_solutions(3, 3, {1, {1, 1}}, tight));
}

TEST_CASE("weight_count examples") {
  CHECK(weight_count(2, 2, 2, Weight(2, {0})) == 2);
  CHECK(weight_count(2, 2, 1, Weight(2, {2})) == 1);
  for (int n = 2; n <= 5; ++n) CHECK(weight_count(n, 2, 0, Weight::zero(n)) == 1);
  CHECK(weight_count(3, 3, 2, Weight(3, {1, 0})) == 0);
}

TEST_CASE("weight counts are Weyl symmetric and sum to dim S^k(A)") {
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d)
      for (std::int64_t k = 0; k <= 5; ++k) {
        const auto table = brute_character(n, d, k);
        Count mass = 0;
        for (const auto& [mu, m] : table.multiplicities) {
          const Count c = weight_count(n, d, k, mu);
          CHECK(c == m);
          CHECK(c == weight_count(n, d, k, dominant_representative(mu)));
          mass += c;
        }
        CHECK(mass == binomial(static_cast<std::int64_t>(index_count(n, d)) + k - 1, k));
      }
}

TEST_CASE("on-disk cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "nary_cache_unit";
  std::filesystem::remove_all(dir);
  {
    CountCache cache(dir);
    CHECK(cache.size() == 0);
    cache.store(3, 3, 4, Weight(3, {1, 1}), Count("123456789012345678901234567890"));
    CHECK(cache.lookup(3, 3, 4, Weight(3, {1, 1})) == Count("123456789012345678901234567890"));
    CHECK_FALSE(cache.lookup(3, 3, 4, Weight(3, {1, 0})));
  }
  {
    std::ifstream in(dir / CountCache::kFileName);
    std::string line;
    std::getline(in, line);
    CHECK(line == R"({"n":3,"d":3,"k":4,"mu":[1,1],"count":"123456789012345678901234567890"})");
  }
  CountCache reloaded(dir);
  CHECK(reloaded.size() == 1);

  // weight_count consults the cache before computing
  CountOptions options;
  options.cache = &reloaded;
  CHECK(weight_count(3, 3, 4, Weight(3, {1, 1}), options) == Count("123456789012345678901234567890"));
  CHECK(weight_count(2, 2, 2, Weight(2, {0}), options) == 2);
  CHECK(reloaded.lookup(2, 2, 2, Weight(2, {0})) == 2);
  std::filesystem::remove_all(dir);
}
