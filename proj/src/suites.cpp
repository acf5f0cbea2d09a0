#include "falsetheta/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "falsetheta/bailey.hpp"
#include "falsetheta/characters.hpp"
#include "falsetheta/nested_sums.hpp"
#include "falsetheta/radial.hpp"

namespace falsetheta {

namespace {

struct Task {
  VerificationRecord seed;
  std::function<void(VerificationRecord&)> run;
};

std::vector<VerificationRecord> execute(std::vector<Task>&& tasks, int jobs) {
  std::vector<VerificationRecord> records(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i) records[i] = tasks[i].seed;
  std::atomic<size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      try {
        tasks[i].run(records[i]);
      } catch (const std::domain_error& e) {
        records[i].status = RecordStatus::skipped;
        records[i].note = e.what();
      } catch (const std::exception& e) {
        records[i].status = RecordStatus::mismatch;
        records[i].note = std::string("unexpected error: ") + e.what();
      }
      records[i].wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };
  size_t n = jobs > 0 ? static_cast<size_t>(jobs)
                      : std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, tasks.size());
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return records;
}

std::vector<long> pick(const std::vector<long>& chosen, std::vector<long> defaults,
                       const std::function<bool(long)>& valid, const char* what) {
  std::vector<long> out;
  if (chosen.empty()) {
    out = std::move(defaults);
  } else {
    for (long v : chosen) {
      if (!valid(v))
        throw std::invalid_argument(std::string("value out of range for ") + what + ": " +
                                    std::to_string(v));
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::vector<long> range_values(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<long> coprime_roots(long N, const std::vector<long>& chosen) {
  std::vector<long> out;
  for (long M = 1; M <= N; ++M) {
    if (std::gcd(M, N) != 1) continue;
    if (!chosen.empty() && std::find(chosen.begin(), chosen.end(), M) == chosen.end()) continue;
    out.push_back(M);
  }
  return out;
}

std::vector<long> family_a_values(Family fam, long m, const std::vector<long>& chosen,
                                  long a_max) {
  if (fam == Family::example1 || fam == Family::example2) return {0};
  std::vector<long> out;
  for (long a = 0; a <= a_max; ++a) {
    if (!chosen.empty() && std::find(chosen.begin(), chosen.end(), a) == chosen.end()) continue;
    out.push_back(a);
  }
  return out;
}

bool family_has_a(Family fam) {
  return fam == Family::hikami || fam == Family::example3;
}

std::string format_error(double err) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", err);
  return buf;
}

std::string format_complex(const std::complex<double>& z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g + %.12gi", z.real(), z.imag());
  return buf;
}

VerificationRecord seed_record(const std::string& suite, const std::string& identity,
                               Family fam, std::map<std::string, long> params) {
  VerificationRecord r;
  r.suite = suite;
  r.identity = identity;
  r.family = family_name(fam);
  r.params = std::move(params);
  return r;
}

constexpr const char* kFamilySuites[] = {"hikami", "example1", "example2", "example3"};

Family suite_family(const std::string& name) {
  if (name == "hikami") return Family::hikami;
  if (name == "example1") return Family::example1;
  if (name == "example2") return Family::example2;
  if (name == "example3") return Family::example3;
  throw std::invalid_argument("unknown family suite: " + name);
}

// ---- family suites: exact closed forms and exact limit consistency ----

void append_family_tasks(std::vector<Task>& tasks, Family fam, const SuiteOptions& options) {
  const bool odd_only = fam != Family::hikami;
  const std::vector<long> ms =
      pick(options.grid.m_values, fam == Family::hikami ? range_values(2, 6) : range_values(2, 5),
           [](long m) { return m >= 2; }, "m");
  const std::vector<long> ns =
      pick(options.grid.n_values, odd_only ? std::vector<long>{1, 3, 5, 7} : range_values(1, 6),
           [odd_only](long N) { return N >= 1 && (!odd_only || N % 2 == 1); },
           odd_only ? "N (odd required)" : "N");
  const std::string suite = family_name(fam);

  for (long m : ms) {
    for (long a : family_a_values(fam, m, options.grid.a_values, m - 2)) {
      for (long N : ns) {
        for (long M : coprime_roots(N, options.grid.m_root_values)) {
          const std::map<std::string, long> params{{"m", m}, {"a", a}, {"N", N}, {"M", M}};
          tasks.push_back(
              {seed_record(suite, "closed_form", fam, params),
               [fam, m, a, N, M](VerificationRecord& r) {
                 const FamilyInfo info = family_info(fam, m, a);
                 const CyclotomicNumber point = root_power(N, M);
                 const CyclotomicNumber truncated =
                     evaluate_truncated(fam, m, a, N, point, SupportMode::natural_support);
                 // Prefactor-multiplied form against the exact limit value.
                 const CyclotomicNumber pref =
                     to_cyclotomic(prefactor_exponent(fam, m, a, N, M), info.D * N);
                 set_exact_sides(r, pref * truncated, radial_limit_exact(fam, m, a, N, M));
                 if (chain_shape(fam, a).delta_position >= 1) {
                   const CyclotomicNumber capped =
                       evaluate_truncated(fam, m, a, N, point, SupportMode::uniform_cap);
                   if (!(capped == truncated))
                     r.note = "printed-range value differs from natural support (" +
                              to_string(capped) + " vs " + to_string(truncated) +
                              "); natural support is the checked reading";
                 }
               }});
          tasks.push_back(
              {seed_record(suite, "limit_consistency", fam, params),
               [fam, m, a, N, M](VerificationRecord& r) {
                 const FamilyInfo info = family_info(fam, m, a);
                 const CyclotomicNumber quad = radial_limit_exact(fam, m, a, N, M);
                 const TwistedPeriodicFunction twisted(info.chi, info.D, N, M);
                 const CyclotomicNumber via_l = info.multiplier * L_value(twisted, 0);
                 set_exact_sides(r, quad, via_l);
                 if (fam == Family::hikami && r.status == RecordStatus::equal) {
                   const CyclotomicNumber weighted = limit_value_hikami(m, a, N, M);
                   if (!(weighted == quad)) {
                     r.status = RecordStatus::mismatch;
                     r.note = "weighted partial-sum value differs: " + to_string(weighted);
                   }
                 }
               }});
        }
      }
    }
  }
}

// ---- series suite: definition expansion vs character q-series ----

void append_series_tasks(std::vector<Task>& tasks, const SuiteOptions& options) {
  const long order = options.series_order;
  if (order < 1) throw std::invalid_argument("series order must be positive");
  for (const char* name : kFamilySuites) {
    const Family fam = suite_family(name);
    const std::vector<long> ms = pick(options.grid.m_values, range_values(2, 4),
                                      [](long m) { return m >= 2; }, "m");
    for (long m : ms) {
      for (long a : family_a_values(fam, m, options.grid.a_values, m - 2)) {
        tasks.push_back(
            {seed_record("series", "series_identity", fam,
                         {{"m", m}, {"a", a}, {"order", order}}),
             [fam, m, a, order](VerificationRecord& r) {
               const SeriesIdentityReport report = series_identity_check(fam, m, a, order);
               r.lhs = series_preview(report.lhs.body) + " in x = q^(1/" +
                       std::to_string(report.lhs.denominator) + ")";
               r.rhs = series_preview(report.rhs.body) + " in x = q^(1/" +
                       std::to_string(report.rhs.denominator) + ")";
               r.status = report.ok ? RecordStatus::equal : RecordStatus::mismatch;
               if (report.has_discrepancy)
                 r.note = "first discrepancy at q-exponent " +
                          to_fraction_string(report.first_discrepancy);
             }});
      }
    }
  }
}

// ---- bailey suite ----

void append_bailey_tasks(std::vector<Task>& tasks, const SuiteOptions& options) {
  const long K = options.pair_order;
  const long n_max = options.pair_n_max;
  const long t_max = options.transform_n_max;
  if (K < 1 || n_max < 0 || t_max < 0)
    throw std::invalid_argument("bailey suite needs positive order and nonnegative n bounds");

  const auto pair_note = [](const PairCheckReport& report) {
    if (report.ok) return std::string("holds");
    return "first divergence at n = " + std::to_string(report.first_failure_n) +
           ", q-exponent " + std::to_string(report.first_discrepancy_exponent);
  };

  for (const char* name : kFamilySuites) {
    const Family fam = suite_family(name);
    const long default_m_hi = fam == Family::example3 ? 3 : 4;
    const std::vector<long> ms = pick(options.grid.m_values, range_values(1, default_m_hi),
                                      [](long m) { return m >= 1; }, "m");
    for (long m : ms) {
      for (long a : family_a_values(fam, m, options.grid.a_values, m - 1)) {
        const std::map<std::string, long> params{
            {"m", m}, {"a", a}, {"n_max", n_max}, {"order", K}};
        const BaileyPair pair = bailey_pair(fam, m, a);
        tasks.push_back({seed_record("bailey", "pair_definition", fam, params),
                         [pair, n_max, K, pair_note](VerificationRecord& r) {
                           const PairCheckReport report = verify_pair_definition(pair, n_max, K);
                           r.note = pair_note(report);
                           r.status =
                               report.ok ? RecordStatus::equal : RecordStatus::mismatch;
                         }});
        tasks.push_back({seed_record("bailey", "finite_transform", fam,
                                     {{"m", m}, {"a", a}, {"n_max", t_max}, {"order", K}}),
                         [pair, t_max, K, pair_note](VerificationRecord& r) {
                           const PairCheckReport report =
                               finite_transform_identity(pair, t_max, K);
                           r.note = pair_note(report);
                           r.status =
                               report.ok ? RecordStatus::equal : RecordStatus::mismatch;
                         }});
        tasks.push_back({seed_record("bailey", "infinite_transform", fam,
                                     {{"m", m}, {"a", a}, {"order", K}}),
                         [pair, K, pair_note](VerificationRecord& r) {
                           const PairCheckReport report = infinite_transform_identity(pair, K);
                           r.note = pair_note(report);
                           r.status =
                               report.ok ? RecordStatus::equal : RecordStatus::mismatch;
                         }});
        tasks.push_back({seed_record("bailey", "family_series_match", fam,
                                     {{"m", m}, {"a", a}, {"order", K}}),
                         [pair, K, pair_note](VerificationRecord& r) {
                           const PairCheckReport report = pair_family_series_match(pair, K);
                           r.note = pair_note(report);
                           r.status =
                               report.ok ? RecordStatus::equal : RecordStatus::mismatch;
                         }});
        if (fam == Family::example3) {
          tasks.push_back(
              {seed_record("bailey", "erratum_negative_control", fam, params),
               [fam, m, a, n_max, K](VerificationRecord& r) {
                 const BaileyPair flipped = bailey_pair(fam, m, a, /*corrected_sign=*/false);
                 const PairCheckReport report = verify_pair_definition(flipped, n_max, K);
                 if (!report.ok) {
                   r.status = RecordStatus::equal;
                   r.note = "sign-flipped variant correctly fails the pair definition at n = " +
                            std::to_string(report.first_failure_n);
                 } else {
                   r.status = RecordStatus::mismatch;
                   r.note = "sign-flipped variant unexpectedly satisfies the pair definition";
                 }
               }});
        }
      }
    }
  }
}

// ---- quantum suite: truncated-sum identities at odd-order roots ----

void append_quantum_tasks(std::vector<Task>& tasks, const SuiteOptions& options) {
  const std::vector<long> ms = pick(options.grid.m_values, {2, 3},
                                    [](long m) { return m >= 2; }, "m");
  const std::vector<long> ns = pick(options.grid.n_values, {1, 3, 5},
                                    [](long N) { return N >= 1 && N % 2 == 1; },
                                    "N (odd required)");
  for (long m : ms) {
    for (long N : ns) {
      for (long M : coprime_roots(N, options.grid.m_root_values)) {
        for (long a : family_a_values(Family::example3, m, options.grid.a_values, m - 2)) {
          tasks.push_back(
              {seed_record("quantum", "double_sum_halves", Family::example3,
                           {{"m", m}, {"a", a}, {"N", N}, {"M", M}}),
               [m, a, N, M](VerificationRecord& r) {
                 const CyclotomicNumber point = root_power(N, M);
                 const CyclotomicNumber lhs =
                     evaluate_truncated(Family::hikami, 2 * m - 1, 2 * a, N, point);
                 const CyclotomicNumber rhs =
                     Rational(2) * evaluate_truncated(Family::example3, m, a, N, point);
                 set_exact_sides(r, lhs, rhs);
               }});
        }
        tasks.push_back(
            {seed_record("quantum", "even_sum_halves", Family::example2,
                         {{"m", m}, {"a", 0}, {"N", N}, {"M", M}}),
             [m, N, M](VerificationRecord& r) {
               const CyclotomicNumber point = root_power(N, M);
               const CyclotomicNumber lhs =
                   evaluate_truncated(Family::hikami, 2 * m - 2, 0, N, point);
               const CyclotomicNumber rhs =
                   Rational(2) * evaluate_truncated(Family::example2, m, 0, N, point);
               set_exact_sides(r, lhs, rhs);
             }});
      }
    }
  }
}

// ---- radial suite: numeric extrapolation against exact limits ----

void append_radial_tasks(std::vector<Task>& tasks, const SuiteOptions& options) {
  if (!(options.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  for (const char* name : kFamilySuites) {
    const Family fam = suite_family(name);
    const bool odd_only = fam != Family::hikami;
    const std::vector<long> ms =
        pick(options.grid.m_values,
             fam == Family::hikami ? range_values(2, 6) : range_values(2, 5),
             [](long m) { return m >= 2; }, "m");
    const std::vector<long> ns =
        pick(options.grid.n_values, odd_only ? std::vector<long>{1, 3, 5} : range_values(1, 5),
             [odd_only](long N) { return N >= 1 && (!odd_only || N % 2 == 1); },
             odd_only ? "N (odd required)" : "N");
    const double tolerance = options.tolerance;
    for (long m : ms) {
      for (long a : family_a_values(fam, m, options.grid.a_values, m - 2)) {
        for (long N : ns) {
          for (long M : coprime_roots(N, options.grid.m_root_values)) {
            tasks.push_back(
                {seed_record("radial", "radial_limit", fam,
                             {{"m", m}, {"a", a}, {"N", N}, {"M", M}}),
                 [fam, m, a, N, M, tolerance](VerificationRecord& r) {
                   const RadialPath path = default_radial_path(N, M);
                   const RadialExtrapolation fit = extrapolate_limit(fam, m, a, path);
                   const CyclotomicNumber exact = radial_limit_exact(fam, m, a, N, M);
                   const double err =
                       fit.well_conditioned
                           ? (fit.value - complex_approximation(exact, path.precision))
                                 .abs()
                                 .to_double()
                           : 1.0;
                   r.lhs = format_complex(fit.limit);
                   r.rhs = to_string(exact);
                   r.status = (fit.well_conditioned && err < tolerance)
                                  ? RecordStatus::equal
                                  : RecordStatus::mismatch;
                   r.note = "abs error " + format_error(err) + ", fit residual " +
                            format_error(fit.fit_residual);
                 }});
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hikami", "example1", "example2", "example3", "series", "bailey", "quantum", "radial"};
}

std::vector<VerificationRecord> run_suite(const SuiteOptions& options) {
  std::vector<Task> tasks;
  const std::string& suite = options.suite;
  bool known = false;
  const auto want = [&](const std::string& name) {
    if (suite == name || suite == "all") {
      known = true;
      return true;
    }
    return false;
  };
  for (const char* name : kFamilySuites)
    if (want(name)) append_family_tasks(tasks, suite_family(name), options);
  if (want("series")) append_series_tasks(tasks, options);
  if (want("bailey")) append_bailey_tasks(tasks, options);
  if (want("quantum")) append_quantum_tasks(tasks, options);
  if (want("radial")) append_radial_tasks(tasks, options);
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  if (tasks.empty()) throw std::invalid_argument("selection produced no checks");
  return execute(std::move(tasks), options.jobs);
}

bool all_equal_or_skipped(const std::vector<VerificationRecord>& records) {
  return summarize(records).mismatch == 0;
}

}  // namespace falsetheta
