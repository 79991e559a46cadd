#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nary/count.hpp"
#include "nary/weight_lattice.hpp"

using namespace nary;

namespace {

std::vector<std::int64_t> entries(const CVector& c) { return {c.entries().begin(), c.entries().end()}; }

Weight random_weight(std::mt19937& rng, int n, int lo = -20, int hi = 20) {
  std::uniform_int_distribution<int> comp(lo, hi);
  std::vector<std::int64_t> w(static_cast<std::size_t>(n - 1));
  for (auto& x : w) x = comp(rng);
  return Weight(n, w);
}

}  // namespace

TEST_CASE("weight construction validates rank") {
  CHECK_THROWS_AS(Weight(1, {}), InvalidArgument);
  CHECK_THROWS_AS(Weight(3, {1}), InvalidArgument);
  CHECK(Weight(3, {0, 2}).is_dominant());
  CHECK_FALSE(Weight(3, {2, -1}).is_dominant());
  CHECK(Weight::zero(4).is_zero());
  CHECK(to_string(Weight(3, {2, -1})) == "(2,-1)");
}

TEST_CASE("to_c examples") {
  CHECK(entries(to_c(Weight(3, {1, 1}))) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(entries(to_c(Weight(3, {0, 0}))) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(entries(to_c(Weight(2, {2}))) == std::vector<std::int64_t>{0, 2});
  // highest weight of A: negated exponent vector of a_0, i.e. -(d,0,0)
  CHECK(entries(to_c(Weight(3, {4, 0}))) == std::vector<std::int64_t>{0, 4, 4});
}

TEST_CASE("c-vectors are normalized to minimum zero") {
  CHECK(entries(CVector({5, 3, 7})) == std::vector<std::int64_t>{2, 0, 4});
  CHECK(CVector({5, 3, 7}) == CVector({2, 0, 4}));
}

TEST_CASE("to_c / from_c round trip on random weights") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 5;
    const Weight w = random_weight(rng, n);
    CHECK(from_c(to_c(w)) == w);
  }
}

TEST_CASE("dominant_representative examples") {
  CHECK(dominant_representative(Weight(3, {2, -1})) == Weight(3, {1, 1}));
  CHECK(dominant_representative(Weight(3, {-1, 2})) == Weight(3, {1, 1}));
  CHECK(dominant_representative(Weight(3, {0, 0})) == Weight(3, {0, 0}));
  CHECK(dominant_representative(Weight(3, {-1, -1})) == Weight(3, {1, 1}));
  CHECK(dominant_representative(Weight(2, {-3})) == Weight(2, {3}));
}

TEST_CASE("dominant_representative is idempotent, dominant, and Weyl invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const Weight w = random_weight(rng, n);
    const Weight star = dominant_representative(w);
    CHECK(star.is_dominant());
    CHECK(dominant_representative(star) == star);

    auto c = entries(to_c(w));
    std::shuffle(c.begin(), c.end(), rng);
    CHECK(dominant_representative(weight_from_entries(c)) == star);
  }
}

TEST_CASE("rho") {
  CHECK(rho(3) == Weight(3, {1, 1}));
  CHECK(rho(2) == Weight(2, {1}));
  CHECK(rho(5) == Weight(5, {1, 1, 1, 1}));
}

TEST_CASE("height increases along positive roots") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    const Weight w = random_weight(rng, n, -5, 5);
    auto c = entries(to_c(w));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        auto up = c;
        ++up[static_cast<std::size_t>(b)];
        --up[static_cast<std::size_t>(a)];
        CHECK(height(weight_from_entries(up)) > height(w));
      }
  }
}

TEST_CASE("signed orbit terms for sl_3 reproduce the five-term identity") {
  const auto terms = signed_orbit_terms(3, Weight::zero(3));
  const std::vector<SignedOrbitTerm> expected{{Weight(3, {0, 0}), 1},
                                              {Weight(3, {1, 1}), -2},
                                              {Weight(3, {2, 2}), -1},
                                              {Weight(3, {0, 3}), 1},
                                              {Weight(3, {3, 0}), 1}};
  CHECK(terms == expected);
  CHECK(orbit_formula(terms) == "c(k,(0,0)) - 2c(k,(1,1)) - c(k,(2,2)) + c(k,(0,3)) + c(k,(3,0))");
}

TEST_CASE("signed orbit terms for sl_2") {
  const std::vector<SignedOrbitTerm> zero{{Weight(2, {0}), 1}, {Weight(2, {2}), -1}};
  CHECK(signed_orbit_terms(2, Weight::zero(2)) == zero);
  for (std::int64_t d = 0; d <= 6; ++d) {
    const std::vector<SignedOrbitTerm> shifted{{Weight(2, {d}), 1}, {Weight(2, {d + 2}), -1}};
    CHECK(signed_orbit_terms(2, Weight(2, {d})) == shifted);
  }
}

TEST_CASE("orbit term invariants for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    int raw_sum = 0;
    std::int64_t elements = 0;
    for_each_weyl_element(n, [&](const WeylElement& s) {
      raw_sum += s.sign;
      ++elements;
    });
    CHECK(raw_sum == 0);
    std::int64_t factorial = 1;
    for (int j = 2; j <= n; ++j) factorial *= j;
    CHECK(elements == factorial);

    const auto terms = signed_orbit_terms(n, Weight::zero(n));
    REQUIRE_FALSE(terms.empty());
    CHECK(terms.front().dominant.is_zero());
    CHECK(terms.front().coefficient == 1);
    std::int64_t abs_sum = 0;
    std::int64_t signed_sum = 0;
    for (const auto& t : terms) {
      CHECK(t.dominant.is_dominant());
      CHECK(t.coefficient != 0);
      abs_sum += std::abs(t.coefficient);
      signed_sum += t.coefficient;
    }
    CHECK(abs_sum <= factorial);
    CHECK(signed_sum == 0);
  }
}

TEST_CASE("Weyl enumeration respects the rank bound") {
  CHECK_THROWS_AS(signed_orbit_terms(9, Weight::zero(9)), ResourceLimitError);
  CHECK_NOTHROW(signed_orbit_terms(4, Weight::zero(4), 4));
  CHECK_THROWS_AS(signed_orbit_terms(5, Weight::zero(5), 4), ResourceLimitError);
}
