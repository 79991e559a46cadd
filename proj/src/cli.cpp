#include "nary/cli.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nary/cache.hpp"
#include "nary/dimension_formulas.hpp"
#include "nary/oracles.hpp"
#include "nary/series_expansion.hpp"
#include "nary/solution_counting.hpp"

namespace nary::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

enum class Format { kPlain, kJson, kCsv };

constexpr const char* kCsvHeader = "n,d,k,mu_or_lambda,result,method";

struct Record {
  int n = 0;
  int d = 0;
  std::int64_t k = 0;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  std::string result;
  double elapsed_ms = 0;
  std::string method;
};

std::vector<std::int64_t> comps(const Weight& w) { return {w.components().begin(), w.components().end()}; }

std::string csv_weight(const std::optional<Weight>& w) {
  if (!w) return "";
  std::string s = to_string(*w);  // "(a,b)"
  s = s.substr(1, s.size() - 2);
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

void emit(const Record& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::kPlain:
      out << r.result << '\n';
      break;
    case Format::kCsv:
      out << r.n << ',' << r.d << ',' << r.k << ',' << csv_weight(r.lambda ? r.lambda : r.mu) << ',' << r.result << ','
          << r.method << '\n';
      break;
    case Format::kJson: {
      json j = {{"n", r.n}, {"d", r.d}, {"k", r.k}};
      if (r.lambda) j["lambda"] = comps(*r.lambda);
      if (r.mu) j["mu"] = comps(*r.mu);
      j["result"] = r.result;
      j["elapsed_ms"] = r.elapsed_ms;
      j["method"] = r.method;
      out << j.dump() << '\n';
      break;
    }
  }
}

template <typename F>
Record timed(Record r, F&& compute) {
  const auto start = Clock::now();
  r.result = to_decimal(compute());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

void check_form(int n, int d) {
  if (n < 2) throw InvalidArgument("n: must be at least 2, got " + std::to_string(n));
  if (d < 1) throw InvalidArgument("d: must be at least 1, got " + std::to_string(d));
}

void check_degree(std::int64_t k, const char* name) {
  if (k < 0) throw InvalidArgument(std::string(name) + ": must be nonnegative, got " + std::to_string(k));
}

struct Settings {
  Format format = Format::kPlain;
  bool use_cache = false;
  std::uint64_t limit_states = kDefaultMaxStates;
};

// One row of `check`: a method's value for nu at degree k, or an agreement test.
struct CheckRow {
  std::string method;
  std::string result;
  bool agrees = true;
  std::string note;
};

std::vector<CheckRow> check_degree_slot(int n, int d, std::int64_t k, const Count& reference,
                                        const TruncatedSeries& series, const CountOptions& options) {
  std::vector<CheckRow> rows;
  auto compare = [&](const std::string& method, const Count& value) {
    rows.push_back({method, to_decimal(value), value == reference, ""});
  };
  compare("series", nu_via_series(series, k));
  if (n == 2) compare("classical-binary", classical_binary_nu(d, k));
  if (n == 3) compare("ternary", nu_ternary(d, k, options));

  std::optional<CharacterTable> table;
  try {
    table = brute_character(n, d, k);
  } catch (const ResourceLimitError& e) {
    rows.push_back({"brute-character", "", true, std::string("skipped: ") + e.what()});
  }
  if (table) {
    const auto gammas = strip_decompose(*table);
    const auto zero = gammas.find(Weight::zero(n));
    compare("strip-decompose", zero == gammas.end() ? Count(0) : zero->second);

    std::size_t mismatches = 0;
    for (const auto& [mu, m] : table->multiplicities)
      if (weight_count(n, d, k, mu, options) != m) ++mismatches;
    rows.push_back({"character-identity", std::to_string(table->multiplicities.size()), mismatches == 0,
                    std::to_string(mismatches) + " mismatching weights"});

    std::size_t gamma_mismatches = 0;
    for (const auto& [lambda, g] : gammas)
      if (gamma(n, d, k, lambda, options) != g) ++gamma_mismatches;
    rows.push_back({"theorem2-vs-strip", std::to_string(gammas.size()), gamma_mismatches == 0,
                    std::to_string(gamma_mismatches) + " mismatching highest weights"});
  }
  return rows;
}

int run_check(int n, int d, std::int64_t k_max, const Settings& settings, const CountOptions& options,
              std::ostream& out) {
  const TruncatedSeries series = expand_generating_series(n, d, k_max);
  std::vector<Count> reference(static_cast<std::size_t>(k_max + 1));
  std::vector<std::vector<CheckRow>> slots(static_cast<std::size_t>(k_max + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k <= k_max; ++k) {
    try {
      const auto slot = static_cast<std::size_t>(k);
      reference[slot] = nu(n, d, k, options);
      slots[slot] = check_degree_slot(n, d, k, reference[slot], series, options);
    } catch (...) {
#pragma omp critical(nary_check_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  bool all_agree = true;
  if (settings.format == Format::kCsv) out << "n,d,k,method,result,agrees\n";
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const auto slot = static_cast<std::size_t>(k);
    bool slot_agrees = true;
    for (const auto& row : slots[slot]) slot_agrees = slot_agrees && row.agrees;
    all_agree = all_agree && slot_agrees;
    switch (settings.format) {
      case Format::kPlain: {
        out << "k=" << k << " theorem1=" << to_decimal(reference[slot]);
        for (const auto& row : slots[slot]) {
          out << ' ' << row.method << '=' << (row.result.empty() ? "-" : row.result);
          if (!row.agrees) out << "!";
        }
        out << (slot_agrees ? " ok" : " DISAGREE") << '\n';
        break;
      }
      case Format::kCsv:
        out << n << ',' << d << ',' << k << ",theorem1," << to_decimal(reference[slot]) << ",true\n";
        for (const auto& row : slots[slot])
          out << n << ',' << d << ',' << k << ',' << row.method << ',' << row.result << ','
              << (row.agrees ? "true" : "false") << '\n';
        break;
      case Format::kJson:
        out << json({{"n", n}, {"d", d}, {"k", k}, {"method", "theorem1"}, {"result", to_decimal(reference[slot])}, {"agrees", true}}).dump()
            << '\n';
        for (const auto& row : slots[slot]) {
          json j = {{"n", n}, {"d", d}, {"k", k}, {"method", row.method}, {"result", row.result}, {"agrees", row.agrees}};
          if (!row.note.empty()) j["note"] = row.note;
          out << j.dump() << '\n';
        }
        break;
    }
  }
  return all_agree ? kSuccess : kOracleDisagreement;
}

void emit_orbit(int n, const Weight& shift, const std::vector<SignedOrbitTerm>& terms, Format format,
                std::ostream& out) {
  switch (format) {
    case Format::kPlain:
      for (const auto& t : terms) out << to_string(t.dominant) << ' ' << (t.coefficient > 0 ? "+" : "") << t.coefficient << '\n';
      break;
    case Format::kCsv:
      out << "n,lambda,weight,coefficient\n";
      for (const auto& t : terms)
        out << n << ',' << csv_weight(shift) << ',' << csv_weight(t.dominant) << ',' << t.coefficient << '\n';
      break;
    case Format::kJson: {
      json list = json::array();
      for (const auto& t : terms) list.push_back({{"weight", comps(t.dominant)}, {"coefficient", t.coefficient}});
      out << json({{"n", n}, {"lambda", comps(shift)}, {"terms", list}, {"formula", orbit_formula(terms)}, {"method", "orbit"}}).dump()
          << '\n';
      break;
    }
  }
}

}  // namespace

Weight parse_weight(const std::string& text, int n, const std::string& name) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  std::size_t position = 0;
  while (std::getline(ss, item, ',')) {
    ++position;
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InvalidArgument(name + ": entry " + std::to_string(position) + " ('" + item + "') is not an integer");
    }
    values.push_back(value);
  }
  if (!text.empty() && text.back() == ',') ++position;
  if (values.size() != static_cast<std::size_t>(n - 1) || position != values.size()) {
    throw InvalidArgument(name + ": expected " + std::to_string(n - 1) + " comma-separated integers for n=" +
                          std::to_string(n) + ", got '" + text + "'");
  }
  return Weight(n, std::move(values));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dimensions of invariants and semi-invariants of n-ary forms", "nary"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings settings;
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_flag("--cache", settings.use_cache, "Memoize weight counts under $NARY_CACHE_DIR");
  app.add_option("--limit-states", settings.limit_states, "Bound on dynamic-programming states per count")
      ->check(CLI::PositiveNumber);

  int n = 0;
  int d = 0;
  std::int64_t k = 0;
  std::int64_t k_max = 6;
  std::string lambda_text;
  std::string mu_text;
  std::string dump_path;

  auto* nu_cmd = app.add_subcommand("nu", "Dimension of degree-k invariants");
  auto* gamma_cmd = app.add_subcommand("gamma", "Multiplicity of a highest weight in S^k(A)");
  auto* count_cmd = app.add_subcommand("count", "Multiplicity of a weight in S^k(A)");
  auto* orbit_cmd = app.add_subcommand("orbit", "Signed orbit terms of the alternating sum");
  auto* table_cmd = app.add_subcommand("table", "Invariant dimensions for k = 0..kmax");
  auto* series_cmd = app.add_subcommand("series", "Invariant dimension via generating-series extraction");
  auto* check_cmd = app.add_subcommand("check", "Cross-check every applicable oracle for k = 0..kmax");

  for (auto* cmd : {nu_cmd, gamma_cmd, count_cmd, orbit_cmd, table_cmd, series_cmd, check_cmd})
    cmd->add_option("n", n, "Number of variables")->required();
  for (auto* cmd : {nu_cmd, gamma_cmd, count_cmd, table_cmd, series_cmd, check_cmd})
    cmd->add_option("d", d, "Degree of the form")->required();
  for (auto* cmd : {nu_cmd, gamma_cmd, count_cmd, series_cmd}) cmd->add_option("k", k, "Degree of the invariants")->required();
  gamma_cmd->add_option("--lambda", lambda_text, "Dominant highest weight, comma-separated")->required();
  orbit_cmd->add_option("--lambda", lambda_text, "Shift weight, comma-separated (default zero)");
  count_cmd->add_option("--mu", mu_text, "Weight, comma-separated")->required();
  table_cmd->add_option("--kmax", k_max, "Largest degree")->required();
  check_cmd->add_option("--kmax", k_max, "Largest degree (default 6)");
  series_cmd->add_option("--dump", dump_path, "Write the truncated series as JSON lines to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidArguments;
  }

  settings.format = format_name == "json" ? Format::kJson : format_name == "csv" ? Format::kCsv : Format::kPlain;

  try {
    std::optional<CountCache> cache = settings.use_cache ? CountCache::from_environment() : std::nullopt;
    if (settings.use_cache) {
      if (!cache) err << "note: --cache given but " << CountCache::kEnvVar << " is unset; caching disabled\n";
    }
    CountOptions options;
    options.max_states = settings.limit_states;
    options.cache = cache ? &*cache : nullptr;

    auto single = [&](const Record& r) {
      if (settings.format == Format::kCsv) out << kCsvHeader << '\n';
      emit(r, settings.format, out);
      return kSuccess;
    };

    if (*nu_cmd) {
      check_form(n, d);
      check_degree(k, "k");
      return single(timed(Record{n, d, k, {}, {}, "", 0, "theorem1"}, [&] { return nu(n, d, k, options); }));
    }
    if (*gamma_cmd) {
      check_form(n, d);
      check_degree(k, "k");
      const Weight lambda = parse_weight(lambda_text, n, "lambda");
      if (!lambda.is_dominant()) throw InvalidArgument("lambda: " + to_string(lambda) + " is not dominant");
      return single(
          timed(Record{n, d, k, lambda, {}, "", 0, "theorem2"}, [&] { return gamma(n, d, k, lambda, options); }));
    }
    if (*count_cmd) {
      check_form(n, d);
      check_degree(k, "k");
      const Weight mu = parse_weight(mu_text, n, "mu");
      return single(timed(Record{n, d, k, {}, mu, "", 0, "count"}, [&] { return weight_count(n, d, k, mu, options); }));
    }
    if (*orbit_cmd) {
      if (n < 2) throw InvalidArgument("n: must be at least 2, got " + std::to_string(n));
      const Weight shift = lambda_text.empty() ? Weight::zero(n) : parse_weight(lambda_text, n, "lambda");
      emit_orbit(n, shift, signed_orbit_terms(n, shift), settings.format, out);
      return kSuccess;
    }
    if (*table_cmd) {
      check_form(n, d);
      check_degree(k_max, "kmax");
      const auto start = Clock::now();
      const auto values = hilbert_prefix(n, d, k_max, options);
      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      if (settings.format == Format::kCsv) out << kCsvHeader << '\n';
      for (std::int64_t kk = 0; kk <= k_max; ++kk) {
        const auto& v = values[static_cast<std::size_t>(kk)];
        if (settings.format == Format::kPlain) {
          out << kk << ' ' << to_decimal(v) << '\n';
        } else {
          emit(Record{n, d, kk, {}, {}, to_decimal(v), ms / static_cast<double>(values.size()), "theorem1"},
               settings.format, out);
        }
      }
      return kSuccess;
    }
    if (*series_cmd) {
      check_form(n, d);
      check_degree(k, "k");
      return single(timed(Record{n, d, k, {}, {}, "", 0, "series"}, [&] {
        const auto series = expand_generating_series(n, d, k);
        if (!dump_path.empty()) {
          std::ofstream file(dump_path);
          if (!file) throw InvalidArgument("--dump: cannot open '" + dump_path + "'");
          write_jsonl(series, file);
        }
        return nu_via_series(series, k);
      }));
    }
    if (*check_cmd) {
      check_form(n, d);
      check_degree(k_max, "kmax");
      const int code = run_check(n, d, k_max, settings, options, out);
      if (code != kSuccess) err << "oracle disagreement for n=" << n << " d=" << d << '\n';
      return code;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInvalidArguments;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("nary");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nary::cli
