// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "nary/cli.hpp"
#include "nary/dimension_formulas.hpp"
#include "nary/form_model.hpp"
#include "nary/oracles.hpp"
#include "nary/series_expansion.hpp"

using namespace nary;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;  // keep the first mismatch
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && seconds >= limit_seconds) {
    out.fail("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(limit_seconds) + " s");
  }
  if (!out.ok) ++failures;
  const std::string limit =
      limit_seconds < 1e6 ? "limit " + std::to_string(static_cast<int>(limit_seconds)) + " s" : "no time limit";
  std::printf("[%s] AC%d %-26s %8.3f s (%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
              limit.c_str(), out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string tag(int n, int d, std::int64_t k) {
  return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " k=" + std::to_string(k);
}

Count dim_symmetric_power(int n, int d, std::int64_t k) {
  return binomial(static_cast<std::int64_t>(index_count(n, d)) + k - 1, k);
}

}  // namespace

int main() {
  constexpr double kNoLimit = 1e9;

  criterion(1, "ternary orbit terms", 1.0, [] {
    Outcome o;
    const auto terms = signed_orbit_terms(3, Weight::zero(3));
    const std::vector<SignedOrbitTerm> expected{{Weight(3, {0, 0}), 1},
                                                {Weight(3, {1, 1}), -2},
                                                {Weight(3, {2, 2}), -1},
                                                {Weight(3, {0, 3}), 1},
                                                {Weight(3, {3, 0}), 1}};
    if (terms != expected) o.fail("orbit terms differ");
    if (orbit_formula(terms) != "c(k,(0,0)) - 2c(k,(1,1)) - c(k,(2,2)) + c(k,(0,3)) + c(k,(3,0))")
      o.fail("formula: " + orbit_formula(terms));
    std::ostringstream out, err;
    if (cli::run({"orbit", "3"}, out, err) != cli::kSuccess ||
        out.str() != "(0,0) +1\n(1,1) -2\n(2,2) -1\n(0,3) +1\n(3,0) +1\n")
      o.fail("cli output: " + out.str());
    return o;
  });

  criterion(2, "binary reduction", 10.0, [] {
    Outcome o;
    for (int d = 1; d <= 8; ++d)
      for (std::int64_t k = 0; k <= 12; ++k)
        if (nu(2, d, k) != classical_binary_nu(d, k)) o.fail(tag(2, d, k));
    return o;
  });

  criterion(3, "stripping oracle", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d)
        for (std::int64_t k = 0; k <= 6; ++k) {
          const auto gammas = strip_decompose(brute_character(n, d, k));
          const auto it = gammas.find(Weight::zero(n));
          const Count zero = it == gammas.end() ? Count(0) : it->second;
          if (nu(n, d, k) != zero) o.fail(tag(n, d, k));
        }
    return o;
  });

  criterion(4, "trivial-weight identity", 30.0, [] {
    Outcome o;
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::int64_t> lambda(static_cast<std::size_t>(n - 1), 0);
      for (;;) {
        const Weight w(n, lambda);
        const Integer expected = w.is_zero() ? 1 : 0;
        if (e_lambda(IrreducibleModule(n, w)) != expected) o.fail("lambda=" + to_string(w));
        std::size_t pos = 0;
        while (pos < lambda.size() && ++lambda[pos] > 5) lambda[pos++] = 0;
        if (pos == lambda.size()) break;
      }
    }
    return o;
  });

  criterion(5, "series path", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d) {
        const auto series = expand_generating_series(n, d, 8);
        for (std::int64_t k = 0; k <= 8; ++k)
          if (nu_via_series(series, k) != nu(n, d, k)) o.fail(tag(n, d, k));
      }
    return o;
  });

  criterion(6, "character identity", kNoLimit, [] {
    Outcome o;
    for (int n = 2; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d)
        for (std::int64_t k = 0; k <= 6; ++k)
          for (const auto& [mu, m] : brute_character(n, d, k).multiplicities)
            if (weight_count(n, d, k, mu) != m) o.fail(tag(n, d, k) + " mu=" + to_string(mu));
    return o;
  });

  criterion(7, "dimension sum", kNoLimit, [] {
    Outcome o;
    for (int n = 2; n <= 3; ++n)
      for (int d = 1; d <= 3; ++d)
        for (std::int64_t k = 0; k <= 5; ++k) {
          Count total = 0;
          for (const auto& lambda : candidate_highest_weights(n, d, k))
            total += gamma(n, d, k, lambda) * weyl_dimension(IrreducibleModule(n, lambda));
          if (total != dim_symmetric_power(n, d, k)) o.fail(tag(n, d, k));
        }
    return o;
  });

  criterion(8, "known values", kNoLimit, [] {
    Outcome o;
    const std::vector<Count> quartic{1, 0, 1, 1, 1, 1, 2};
    if (hilbert_prefix(2, 4, 6) != quartic) o.fail("hilbert_prefix(2,4,6)");
    const std::vector<int> cubic{1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2};
    for (std::int64_t k = 0; k <= 12; ++k)
      if (nu(3, 3, k) != cubic[static_cast<std::size_t>(k)]) o.fail("nu(3,3," + std::to_string(k) + ")");
    if (nu(2, 3, 4) != 1) o.fail("nu(2,3,4)");
    return o;
  });

  criterion(9, "divisibility vanishing", kNoLimit, [] {
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick_n(2, 5), pick_d(1, 6);
    std::uniform_int_distribution<std::int64_t> pick_k(0, 12);
    int tested = 0;
    while (tested < 500) {
      const int n = pick_n(rng), d = pick_d(rng);
      const auto k = pick_k(rng);
      if ((k * d) % n == 0) continue;
      ++tested;
      if (nu(n, d, k) != 0) o.fail(tag(n, d, k));
    }
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures == 0 ? 0 : 1;
}
