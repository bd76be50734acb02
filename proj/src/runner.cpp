#include "binomsum/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "binomsum/bench.hpp"
#include "binomsum/binomial.hpp"
#include "binomsum/cache.hpp"
#include "binomsum/parallel.hpp"
#include "binomsum/prime_sieve.hpp"

namespace binomsum {

namespace {

using Params = std::map<std::string, std::int64_t>;

struct Outcome {
  Report report;
  int exit = exit_code::kOk;
  /// Counterexample records, echoed to stderr.
  std::vector<Json> counterexamples;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<std::uint64_t> param(const RunConfig& config, const std::string& name) {
  auto it = config.ranges.find(name);
  if (it == config.ranges.end()) return std::nullopt;
  return it->second;
}

std::uint64_t param_or(const RunConfig& config, const std::string& name, std::uint64_t fallback) {
  return param(config, name).value_or(fallback);
}

std::uint64_t required(const RunConfig& config, const std::string& name) {
  auto v = param(config, name);
  if (!v) throw UsageError(std::string(command_name(config.command)) + " requires --" + name);
  return *v;
}

/// [n_min, n_max] from --n, or --n-min/--n-max.
std::pair<std::uint64_t, std::uint64_t> n_interval(const RunConfig& config, std::uint64_t default_min) {
  if (auto n = param(config, "n")) return {*n, *n};
  const std::uint64_t hi = required(config, "n_max");
  const std::uint64_t lo = param_or(config, "n_min", default_min);
  if (lo > hi) throw UsageError("empty range: n_min > n_max");
  return {lo, hi};
}

void enforce_ceiling(const RunConfig& config, std::uint64_t value, std::uint64_t ceiling, const char* what) {
  if (value > ceiling && !config.unsafe_large) {
    throw UsageError(std::string(what) + " = " + std::to_string(value) + " exceeds the desk-scale ceiling " +
                     std::to_string(ceiling) + "; pass --unsafe-large to override");
  }
}

Outcome falsified(const FalsificationError& e) {
  Outcome out;
  out.report.single = true;
  out.report.columns = {"kind", "operation", "parameters", "detail"};
  out.report.rows.push_back(to_json(e));
  out.counterexamples.push_back(to_json(e));
  out.exit = exit_code::kFalsified;
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  auto sieve = sieve_primes(static_cast<std::uint32_t>(hi));
  for (Prime p : sieve.primes()) {
    if (p >= lo) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// compute

Outcome run_compute(const RunConfig& config) {
  const std::string kind = config.kind.empty() ? "s_n" : config.kind;
  Outcome out;
  if (kind == "super_catalan") {
    const auto a = required(config, "a");
    const auto b = required(config, "b");
    enforce_ceiling(config, std::max(a, b), kComputeCeiling, "a, b");
    out.report.single = true;
    out.report.columns = {"kind", "a", "b", "value"};
    out.report.rows.push_back(to_json(super_catalan(a, b)));
    return out;
  }
  if (kind == "summand" || kind == "t") {
    const auto n = required(config, "n");
    const auto k = required(config, "k");
    enforce_ceiling(config, n, kComputeCeiling, "n");
    if (k > n) throw UsageError("--k must not exceed --n");
    out.report.single = true;
    if (kind == "summand") {
      out.report.columns = {"kind", "n", "k", "value", "factored"};
      out.report.rows.push_back(to_json(summand(n, k)));
    } else {
      if (n < 1) throw UsageError("t requires --n >= 1");
      out.report.columns = {"kind", "n", "k", "value"};
      out.report.rows.push_back({{"kind", "t"}, {"n", n}, {"k", k}, {"value", to_decimal(t(n, k))}});
    }
    return out;
  }
  const auto [lo, hi] = n_interval(config, 0);
  enforce_ceiling(config, hi, kComputeCeiling, "n");
  out.report.single = param(config, "n").has_value();
  out.report.columns = {"kind", "n", "value"};
  if (kind == "s_n") {
    for (const auto& v : s_range(lo, hi, config.parallelism)) out.report.rows.push_back(to_json(v));
  } else if (kind == "inner_sum") {
    HalfSummandTable table(hi, config.parallelism);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      out.report.rows.push_back({{"kind", "inner_sum"}, {"n", n}, {"value", to_decimal(table.inner_sum(n))}});
    }
  } else {
    throw UsageError("unknown compute kind '" + kind + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// certify

Outcome run_certify(const RunConfig& config) {
  Outcome out;
  out.report.columns = {"n", "k", "quotient", "cnk_divides"};
  if (auto n = param(config, "n"); n && param(config, "k")) {
    const auto k = *param(config, "k");
    enforce_ceiling(config, *n, kComputeCeiling, "n");
    if (*n < 1 || k > *n) throw UsageError("certify requires 1 <= n and 0 <= k <= n");
    out.report.single = true;
    out.report.rows.push_back(to_json(certify_theorem1(*n, k)));
    return out;
  }
  const auto [lo, hi] = n_interval(config, 1);
  if (lo < 1) throw UsageError("certify requires n >= 1");
  enforce_ceiling(config, hi, kVerifyAllCeiling, "n");
  std::vector<std::vector<Json>> per_n(hi - lo + 1);
  parallel_for(per_n.size(), config.parallelism, [&](std::size_t i) {
    const std::uint64_t n = lo + i;
    for (std::uint64_t k = 0; k <= n; ++k) per_n[i].push_back(to_json(certify_theorem1(n, k)));
  });
  for (auto& rows : per_n) {
    for (auto& row : rows) out.report.rows.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// scan-floor

Outcome run_scan_floor(const RunConfig& config) {
  const auto m_max = param_or(config, "m_max", 50);
  const auto n_max = param_or(config, "n_max", 200);
  if (m_max < 2 || n_max < 1) throw UsageError("scan-floor requires --m-max >= 2 and --n-max >= 1");
  enforce_ceiling(config, n_max, kComputeCeiling, "n_max");
  enforce_ceiling(config, m_max, kComputeCeiling, "m_max");
  const FloorScanReport report = scan_floor_inequality(m_max, n_max, config.parallelism);
  Outcome out;
  if (config.format == Format::Json) {
    out.report.single = true;
    out.report.rows.push_back(to_json(report));
  } else {
    out.report.columns = kViolationColumns;
    for (const auto& v : report.violations) out.report.rows.push_back({{"m", v.m}, {"n", v.n}, {"k", v.k}});
  }
  if (!report.all_in_exception_set) {
    for (const auto& v : report.violations) {
      if (in_floor_exception_set(v.m, v.n, v.k)) continue;
      FalsificationError e("scan_floor_inequality",
                           {{"m", static_cast<std::int64_t>(v.m)}, {"n", static_cast<std::int64_t>(v.n)},
                            {"k", static_cast<std::int64_t>(v.k)}},
                           "floor inequality fails outside the exception set");
      out.counterexamples.push_back(to_json(e));
      break;
    }
    out.exit = exit_code::kFalsified;
  }
  return out;
}

// ---------------------------------------------------------------------------
// bounds

Outcome run_bounds(const RunConfig& config) {
  const auto [lo, hi] = n_interval(config, 1);
  if (lo < 1) throw UsageError("bounds requires n >= 1");
  enforce_ceiling(config, hi, kComputeCeiling, "n");
  Outcome out;
  out.report.single = param(config, "n").has_value();
  out.report.columns = {"n", "lower", "upper", "s", "lower_tight", "upper_tight"};
  const auto values = s_range(lo, hi, config.parallelism);
  std::vector<Json> rows(values.size());
  parallel_for(values.size(), config.parallelism,
               [&](std::size_t i) { rows[i] = to_json(check_bounds(values[i].n, values[i].s)); });
  out.report.rows = std::move(rows);
  return out;
}

// ---------------------------------------------------------------------------
// asymptote

bool inside_envelope(const AsymptoticsSample& s) {
  constexpr double kTolerance = 1e-9;
  return s.nth_root >= s.lower_root * (1 - kTolerance) && s.nth_root <= s.upper_root * (1 + kTolerance);
}

Outcome run_asymptote(const RunConfig& config) {
  std::vector<AsymptoticsSample> samples;
  if (auto n = param(config, "n")) {
    if (*n < 1) throw UsageError("asymptote requires n >= 1");
    enforce_ceiling(config, *n, kComputeCeiling, "n");
    samples.push_back(sample_at(*n));
  } else {
    const auto n_max = required(config, "n_max");
    const auto stride = param_or(config, "stride", 1);
    if (n_max < 2 || stride < 1) throw UsageError("asymptote requires --n-max >= 2 and --stride >= 1");
    enforce_ceiling(config, n_max, kComputeCeiling, "n_max");
    samples = sample_asymptotics(n_max, stride, config.parallelism);
  }
  Outcome out;
  out.report.columns = kAsymptoticsColumns;
  for (const auto& s : samples) {
    out.report.rows.push_back(to_json(s));
    if (!inside_envelope(s) && out.exit == exit_code::kOk) {
      FalsificationError e("sample_asymptotics", {{"n", static_cast<std::int64_t>(s.n)}},
                           "n-th root outside the bounds envelope");
      out.counterexamples.push_back(to_json(e));
      out.exit = exit_code::kFalsified;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// pi-series

Outcome run_pi_series(const RunConfig& config) {
  const auto N = param_or(config, "n", 100);
  if (N < 1) throw UsageError("pi-series requires --n >= 1");
  enforce_ceiling(config, N, kComputeCeiling, "n");
  Outcome out;
  out.report.single = true;
  out.report.columns = {"N", "numerator", "denominator", "remainder_bound", "agreeing_digits",
                        "certified_digits", "bracketed"};
  Json row = to_json(pi_partial_sum(N));
  if (!row.at("bracketed").get<bool>()) {
    FalsificationError e("pi_partial_sum", {{"N", static_cast<std::int64_t>(N)}},
                         "reference 1/pi lies outside [partial sum, partial sum + remainder bound]");
    out.counterexamples.push_back(to_json(e));
    out.exit = exit_code::kFalsified;
  }
  out.report.rows.push_back(std::move(row));
  return out;
}

// ---------------------------------------------------------------------------
// congruence

Outcome run_congruence(const RunConfig& config) {
  const std::string claim = config.kind.empty() ? "mod8" : config.kind;
  std::vector<CongruenceResult> results;
  if (claim == "mod8") {
    const auto [lo, hi] = n_interval(config, 1);
    if (lo < 1) throw UsageError("mod8 requires n >= 1");
    enforce_ceiling(config, hi, kComputeCeiling, "n");
    HalfSummandTable table(hi, config.parallelism);
    results.resize(hi - lo + 1);
    parallel_for(results.size(), config.parallelism,
                 [&](std::size_t i) { results[i] = check_mod8(lo + i, table); });
  } else if (claim == "fermat_quotient" || claim == "mod_p_squared") {
    const bool squared = claim == "mod_p_squared";
    const auto p_max = required(config, "p_max");
    const auto p_min = std::max<std::uint64_t>(param_or(config, "p_min", 2), squared ? 5 : 2);
    enforce_ceiling(config, p_max, kComputeCeiling, "p_max");
    const auto primes = primes_between(p_min, p_max);
    if (primes.empty()) throw UsageError("no primes in the requested range");
    HalfSummandTable table(primes.back() - 1, config.parallelism);
    results.resize(primes.size());
    parallel_for(results.size(), config.parallelism, [&](std::size_t i) {
      results[i] = squared ? check_mod_p_squared(primes[i], table) : check_fermat_like(primes[i], table);
    });
  } else {
    throw UsageError("unknown congruence claim '" + claim + "'");
  }
  Outcome out;
  out.report.columns = kCongruenceColumns;
  for (const auto& r : results) {
    out.report.rows.push_back(to_json(r));
    if (!r.holds && out.exit == exit_code::kOk) {
      FalsificationError e(std::string(claim_name(r.claim)), {{"parameter", static_cast<std::int64_t>(r.parameter)}},
                           "residue " + std::to_string(r.lhs_residue) + " != expected " +
                               std::to_string(r.expected_residue));
      out.counterexamples.push_back(to_json(e));
      out.exit = exit_code::kFalsified;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify-all

struct CheckOutcome {
  std::string name;
  bool holds = true;
  std::uint64_t count = 0;
  std::optional<Json> counterexample;
};

/// Evaluates fn over every item; the lowest-index failure becomes the counterexample.
CheckOutcome run_items(const std::string& name, const std::vector<Params>& items, unsigned jobs,
                       const std::function<bool(const Params&)>& fn) {
  std::vector<std::optional<Json>> failures(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    try {
      bool ok = fn(items[i]);
      if (i == 0 && fault_injected(name)) ok = false;
      if (!ok) failures[i] = to_json(FalsificationError(name, items[i], "check returned false"));
    } catch (const FalsificationError& e) {
      failures[i] = to_json(e);
    }
  });
  CheckOutcome out{name, true, items.size(), std::nullopt};
  for (auto& f : failures) {
    if (f) {
      out.holds = false;
      out.counterexample = std::move(f);
      break;
    }
  }
  return out;
}

std::uint64_t u(const Params& p, const char* key) { return static_cast<std::uint64_t>(p.at(key)); }

std::vector<Params> nk_items(std::uint64_t n_lo, std::uint64_t n_hi) {
  std::vector<Params> items;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      items.push_back({{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}});
    }
  }
  return items;
}

std::vector<Params> n_items(std::uint64_t lo, std::uint64_t hi, const char* key = "n") {
  std::vector<Params> items;
  for (std::uint64_t n = lo; n <= hi; ++n) items.push_back({{key, static_cast<std::int64_t>(n)}});
  return items;
}

std::vector<Params> prime_items(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Params> items;
  for (auto p : primes_between(lo, hi)) items.push_back({{"p", static_cast<std::int64_t>(p)}});
  return items;
}

Outcome run_verify_all(const RunConfig& config) {
  const auto N = param_or(config, "n_max", 100);
  if (N < 2) throw UsageError("verify-all requires --n-max >= 2");
  enforce_ceiling(config, N, kVerifyAllCeiling, "n_max");
  const unsigned jobs = config.parallelism;
  const auto known = verify_all_check_names();
  for (const auto& name : config.skip) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw UsageError("unknown check '" + name + "' in --skip");
    }
  }
  auto skipped = [&](const std::string& name) {
    return std::find(config.skip.begin(), config.skip.end(), name) != config.skip.end();
  };

  const HalfSummandTable table(N + 1, jobs);
  const std::uint64_t lemma1_n = std::min<std::uint64_t>(N, 100);

  std::vector<std::pair<std::string, std::function<CheckOutcome(const std::string&)>>> checks = {
      {"s_integral",
       [&](const std::string& name) {
         return run_items(name, n_items(0, N), jobs, [&](const Params& p) {
           const auto v = s(u(p, "n"), table);
           return v.s * v.divisor == v.sum && (u(p, "n") == 0 || sgn(v.s) > 0);
         });
       }},
      {"certify_theorem1",
       [&](const std::string& name) {
         return run_items(name, nk_items(1, N), jobs, [](const Params& p) {
           return certify_theorem1(u(p, "n"), u(p, "k")).cnk_divides;
         });
       }},
      {"check_lemma1",
       [&](const std::string& name) {
         std::vector<Params> items;
         for (std::int64_t m = 1; m <= 8; ++m) {
           for (auto item : nk_items(1, lemma1_n)) {
             item["m"] = m;
             items.push_back(std::move(item));
           }
         }
         return run_items(name, items, jobs, [](const Params& p) {
           return check_lemma1(u(p, "m"), u(p, "n"), u(p, "k"));
         });
       }},
      {"check_eq_mkmk",
       [&](const std::string& name) {
         std::vector<Params> items;
         for (std::int64_t m = 1; m <= 8; ++m) {
           for (auto item : nk_items(1, lemma1_n)) {
             item["m"] = m;
             items.push_back(std::move(item));
           }
         }
         return run_items(name, items, jobs, [](const Params& p) {
           return check_eq_mkmk(u(p, "m"), u(p, "n"), u(p, "k"));
         });
       }},
      {"check_lemma2",
       [&](const std::string& name) {
         return run_items(name, nk_items(1, N), jobs,
                          [](const Params& p) { return check_lemma2(u(p, "n"), u(p, "k")).integral; });
       }},
      {"check_corollary",
       [&](const std::string& name) {
         return run_items(name, n_items(1, N), jobs, [](const Params& p) { return check_corollary(u(p, "n")); });
       }},
      {"scan_floor_inequality",
       [&](const std::string& name) {
         const auto report = scan_floor_inequality(50, N, jobs);
         CheckOutcome out{name, true, 0, std::nullopt};
         out.count = report.violations.size();
         if (fault_injected(name) || !report.all_in_exception_set) {
           out.holds = false;
           Params where{{"m_max", 50}, {"n_max", static_cast<std::int64_t>(N)}};
           for (const auto& v : report.violations) {
             if (!in_floor_exception_set(v.m, v.n, v.k)) {
               where = {{"m", static_cast<std::int64_t>(v.m)}, {"n", static_cast<std::int64_t>(v.n)},
                        {"k", static_cast<std::int64_t>(v.k)}};
               break;
             }
           }
           out.counterexample = to_json(FalsificationError(name, where, "violation outside the exception set"));
         }
         return out;
       }},
      {"check_p3_reduction",
       [&](const std::string& name) {
         return run_items(name, nk_items(1, N), jobs,
                          [](const Params& p) { return check_p3_reduction(u(p, "n"), u(p, "k")); });
       }},
      {"ratio_identity",
       [&](const std::string& name) {
         std::vector<Params> items;
         for (std::uint64_t n = 2; n <= N; ++n) {
           for (std::uint64_t k = 0; 2 * k < n; ++k) {
             items.push_back({{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}});
           }
         }
         return run_items(name, items, jobs, [&](const Params& p) {
           return sgn(ratio_identity(u(p, "n"), u(p, "k"), table).lhs) >= 0;
         });
       }},
      {"check_monotone",
       [&](const std::string& name) {
         return run_items(name, n_items(2, N), jobs,
                          [&](const Params& p) { return check_monotone(u(p, "n"), table); });
       }},
      {"check_bounds",
       [&](const std::string& name) {
         return run_items(name, n_items(1, N), jobs, [&](const Params& p) {
           check_bounds(u(p, "n"), s(u(p, "n"), table).s);
           return true;
         });
       }},
      {"asymptotic_envelope",
       [&](const std::string& name) {
         const std::uint64_t stride = std::max<std::uint64_t>(1, N / 10);
         std::vector<Params> items;
         for (std::uint64_t n = stride; n <= N; n += stride) items.push_back({{"n", static_cast<std::int64_t>(n)}});
         return run_items(name, items, jobs, [&](const Params& p) {
           const auto n = u(p, "n");
           AsymptoticsSample sample;
           sample.n = n;
           sample.log_s = log_abs(s(n, table).s);
           sample.nth_root = std::exp(sample.log_s / static_cast<double>(n));
           auto [lo, hi] = log_bound_edges(n);
           sample.lower_root = std::exp(lo / static_cast<double>(n));
           sample.upper_root = std::exp(hi / static_cast<double>(n));
           return inside_envelope(sample);
         });
       }},
      {"mod8",
       [&](const std::string& name) {
         return run_items(name, n_items(1, N), jobs,
                          [&](const Params& p) { return check_mod8(u(p, "n"), table).holds; });
       }},
      {"fermat_quotient",
       [&](const std::string& name) {
         return run_items(name, prime_items(2, N + 1), jobs,
                          [&](const Params& p) { return check_fermat_like(u(p, "p"), table).holds; });
       }},
      {"mod_p_squared",
       [&](const std::string& name) {
         return run_items(name, prime_items(5, N + 1), jobs,
                          [&](const Params& p) { return check_mod_p_squared(u(p, "p"), table).holds; });
       }},
      {"pi_partial_sum",
       [&](const std::string& name) {
         return run_items(name, {{{"N", 100}}}, 1, [](const Params& p) {
           return to_json(pi_partial_sum(u(p, "N"))).at("bracketed").get<bool>();
         });
       }},
  };

  Outcome out;
  out.report.single = true;
  Json check_rows = Json::array();
  bool all_hold = true;
  for (const auto& [name, fn] : checks) {
    if (skipped(name)) continue;
    CheckOutcome outcome = fn(name);
    Json row = {{"name", name}, {"holds", outcome.holds}, {"count", outcome.count}};
    if (outcome.counterexample) {
      row["counterexample"] = *outcome.counterexample;
      out.counterexamples.push_back(*outcome.counterexample);
    }
    all_hold = all_hold && outcome.holds;
    check_rows.push_back(std::move(row));
  }
  if (config.format == Format::Json) {
    out.report.rows.push_back(
        {{"kind", "verify_all"}, {"n_max", N}, {"all_hold", all_hold}, {"checks", check_rows}});
  } else {
    out.report.single = false;
    out.report.columns = {"name", "holds", "count"};
    for (auto& row : check_rows) {
      row.erase("counterexample");
      out.report.rows.push_back(row);
    }
  }
  out.exit = all_hold ? exit_code::kOk : exit_code::kFalsified;
  return out;
}

// ---------------------------------------------------------------------------
// bench

Outcome run_bench(const RunConfig& config) {
  std::vector<std::uint64_t> ns;
  if (auto n = param(config, "n")) {
    ns.push_back(*n);
  } else if (param(config, "n_max")) {
    const auto hi = required(config, "n_max");
    const auto lo = param_or(config, "n_min", 1);
    const auto stride = std::max<std::uint64_t>(1, param_or(config, "stride", 1));
    for (std::uint64_t n = lo; n <= hi; n += stride) ns.push_back(n);
  } else {
    ns.push_back(2000);
  }
  for (auto n : ns) enforce_ceiling(config, n, kComputeCeiling, "n");
  Outcome out;
  out.report.columns = {"n", "factored_seconds", "naive_seconds", "speedup", "factored_peak_bits",
                        "naive_peak_bits", "agree"};
  out.report.single = ns.size() == 1;
  for (auto n : ns) {
    const BenchResult r = bench_s(n, config.parallelism, 3);
    out.report.rows.push_back({{"n", r.n},
                               {"factored_seconds", r.factored_seconds},
                               {"naive_seconds", r.naive_seconds},
                               {"speedup", r.speedup()},
                               {"factored_peak_bits", r.factored_peak_bits},
                               {"naive_peak_bits", r.naive_peak_bits},
                               {"agree", r.agree}});
    if (!r.agree) out.exit = exit_code::kFalsified;
  }
  return out;
}

Outcome dispatch(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::Compute: return run_compute(config);
      case Command::Certify: return run_certify(config);
      case Command::ScanFloor: return run_scan_floor(config);
      case Command::Bounds: return run_bounds(config);
      case Command::Asymptote: return run_asymptote(config);
      case Command::PiSeries: return run_pi_series(config);
      case Command::Congruence: return run_congruence(config);
      case Command::VerifyAll: return run_verify_all(config);
      case Command::Bench: return run_bench(config);
    }
  } catch (const FalsificationError& e) {
    return falsified(e);
  }
  throw std::logic_error("unhandled command");
}

std::string cache_key(const RunConfig& config) {
  std::ostringstream key;
  key << command_name(config.command) << '|' << config.kind << '|';
  switch (config.format) {
    case Format::Json: key << "json"; break;
    case Format::Csv: key << "csv"; break;
    case Format::Text: key << "text"; break;
  }
  for (const auto& [name, value] : config.ranges) key << '|' << name << '=' << value;
  std::vector<std::string> skip = config.skip;
  std::sort(skip.begin(), skip.end());
  for (const auto& name : skip) key << "|skip=" << name;
  return key.str();
}

std::optional<std::filesystem::path> cache_file(const RunConfig& config) {
  if (config.cache_path) return std::filesystem::path(*config.cache_path);
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) {
    return std::filesystem::path(dir) / "binomsum-cache.json";
  }
  return std::nullopt;
}

void write_output(const RunConfig& config, const std::string& bytes, std::ostream& out) {
  if (!config.output_path) {
    out << bytes;
    out.flush();
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write output file " + *config.output_path);
  file << bytes;
  if (!file) throw std::runtime_error("cannot write output file " + *config.output_path);
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "compute") return Command::Compute;
  if (name == "certify") return Command::Certify;
  if (name == "scan-floor") return Command::ScanFloor;
  if (name == "bounds") return Command::Bounds;
  if (name == "asymptote") return Command::Asymptote;
  if (name == "pi-series") return Command::PiSeries;
  if (name == "congruence") return Command::Congruence;
  if (name == "verify-all") return Command::VerifyAll;
  if (name == "bench") return Command::Bench;
  throw std::invalid_argument("unknown command '" + std::string(name) + "'");
}

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Compute: return "compute";
    case Command::Certify: return "certify";
    case Command::ScanFloor: return "scan-floor";
    case Command::Bounds: return "bounds";
    case Command::Asymptote: return "asymptote";
    case Command::PiSeries: return "pi-series";
    case Command::Congruence: return "congruence";
    case Command::VerifyAll: return "verify-all";
    case Command::Bench: return "bench";
  }
  return "?";
}

std::vector<std::string> verify_all_check_names() {
  return {"s_integral",         "certify_theorem1", "check_lemma1",   "check_eq_mkmk",
          "check_lemma2",       "check_corollary",  "scan_floor_inequality",
          "check_p3_reduction", "ratio_identity",   "check_monotone", "check_bounds",
          "asymptotic_envelope", "mod8",            "fermat_quotient", "mod_p_squared",
          "pi_partial_sum"};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.parallelism < 1) throw UsageError("parallelism must be >= 1");
    set_injected_fault(config.inject_fault);

    // Bench output is timing data and fault injection must reach the checks.
    const bool cacheable = config.command != Command::Bench && config.inject_fault.empty();
    std::optional<ResultCache> cache;
    if (auto path = cache_file(config); path && cacheable) {
      cache.emplace(*path);
      if (!cache->loaded_cleanly()) err << "warning: " << cache->load_warning() << '\n';
    }
    const std::string key = cache_key(config);
    if (cache) {
      if (auto hit = cache->lookup(key)) {
        // Stored as "<exit code>\n<report bytes>".
        const auto newline = hit->find('\n');
        if (newline != std::string::npos) {
          write_output(config, hit->substr(newline + 1), out);
          return std::stoi(hit->substr(0, newline));
        }
      }
    }

    Outcome outcome = dispatch(config);
    const std::string bytes = emit_report(outcome.report, config.format);
    write_output(config, bytes, out);
    for (const auto& record : outcome.counterexamples) err << dump_json(record) << '\n';

    if (cache) {
      cache->store(key, std::to_string(outcome.exit) + "\n" + bytes);
      cache->save();
    }
    set_injected_fault("");
    return outcome.exit;
  } catch (const UsageError& e) {
    set_injected_fault("");
    err << "usage error: " << e.what() << '\n';
    return exit_code::kError;
  } catch (const std::exception& e) {
    set_injected_fault("");
    err << "error: " << e.what() << '\n';
    return exit_code::kError;
  }
}

}  // namespace binomsum
