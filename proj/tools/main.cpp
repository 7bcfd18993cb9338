// shufsort command line: measure disorder, print exact descent
// distributions, validate the statistical model, and run benchmark sweeps.
//
// Exit codes: 0 success, 1 validation failure, 2 input error.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shufsort.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitInputError = 2;

struct CliError {
  int code;
  std::string message;
};

int status_exit_code(shufsort_status status) {
  switch (status) {
    case SHUFSORT_OK: return kExitOk;
    case SHUFSORT_ERR_INTERNAL: return kExitValidationFailure;
    default: return kExitInputError;
  }
}

void check(shufsort_status status, const std::string& context) {
  if (status == SHUFSORT_OK) return;
  std::string detail = shufsort_last_error();
  throw CliError{status_exit_code(status),
                 context + ": " + (detail.empty() ? shufsort_status_name(status) : detail)};
}

struct SeqDeleter {
  void operator()(shufsort_seq* s) const { shufsort_seq_free(s); }
};
struct RngDeleter {
  void operator()(shufsort_rng* r) const { shufsort_rng_free(r); }
};
struct ReportDeleter {
  void operator()(shufsort_shuffle_report* r) const { shufsort_shuffle_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { shufsort_string_free(s); }
};

using SeqPtr = std::unique_ptr<shufsort_seq, SeqDeleter>;
using RngPtr = std::unique_ptr<shufsort_rng, RngDeleter>;
using ReportPtr = std::unique_ptr<shufsort_shuffle_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

SeqPtr read_sequence(const std::string& path) {
  shufsort_seq* raw = nullptr;
  check(shufsort_seq_read_file(path.c_str(), &raw), path);
  return SeqPtr(raw);
}

SeqPtr clone(const shufsort_seq* seq) {
  shufsort_seq* raw = nullptr;
  check(shufsort_seq_clone(seq, &raw), "clone");
  return SeqPtr(raw);
}

std::vector<int64_t> keys_of(const shufsort_seq* seq) {
  std::vector<int64_t> keys(shufsort_seq_len(seq));
  check(shufsort_seq_copy_keys(seq, keys.data(), keys.size()), "copy keys");
  return keys;
}

RngPtr make_rng(uint64_t seed) {
  shufsort_rng* raw = nullptr;
  check(shufsort_rng_create(seed, &raw), "rng");
  return RngPtr(raw);
}

// Shortest round-trip decimal rendering; locale independent.
std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string policy_label(int policy, uint64_t fixed_swaps) {
  switch (policy) {
    case SHUFSORT_POLICY_BLIND: return "blind";
    case SHUFSORT_POLICY_GUARDED: return "guarded";
    case SHUFSORT_POLICY_FIXED: return "fixed:" + std::to_string(fixed_swaps);
  }
  return "unknown";
}

void parse_policy(const std::string& text, shufsort_shuffle_config& cfg) {
  if (text == "blind") {
    cfg.policy = SHUFSORT_POLICY_BLIND;
  } else if (text == "guarded") {
    cfg.policy = SHUFSORT_POLICY_GUARDED;
  } else if (text.rfind("fixed:", 0) == 0) {
    cfg.policy = SHUFSORT_POLICY_FIXED;
    const std::string count = text.substr(6);
    uint64_t swaps = 0;
    auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), swaps);
    if (ec != std::errc() || ptr != count.data() + count.size()) {
      throw CliError{kExitInputError, "bad swap count in --policy " + text};
    }
    cfg.fixed_swaps = swaps;
  } else {
    throw CliError{kExitInputError,
                   "unknown policy \"" + text + "\" (expected blind, guarded or fixed:<s>)"};
  }
}

std::pair<uint64_t, uint64_t> parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  uint64_t num = 0;
  uint64_t den = 1;
  const char* end = text.data() + (slash == std::string::npos ? text.size() : slash);
  auto [p1, e1] = std::from_chars(text.data(), end, num);
  bool ok = e1 == std::errc() && p1 == end;
  if (ok && slash != std::string::npos) {
    const char* dend = text.data() + text.size();
    auto [p2, e2] = std::from_chars(text.data() + slash + 1, dend, den);
    ok = e2 == std::errc() && p2 == dend;
  }
  if (!ok || den == 0 || num > den) {
    throw CliError{kExitInputError, "bad probability \"" + text + "\" (expected NUM/DEN <= 1)"};
  }
  return {num, den};
}

/* ---------------------------- measure ---------------------------- */

struct MeasureOptions {
  std::string input;
  uint32_t parts = 0;
};

int run_measure(const MeasureOptions& opt) {
  SeqPtr seq = read_sequence(opt.input);
  uint64_t disorder = 0;
  uint64_t runs = 0;
  check(shufsort_disorder(seq.get(), &disorder), "disorder");
  check(shufsort_run_count(seq.get(), &runs), "runs");

  std::cout << "n: " << shufsort_seq_len(seq.get()) << "\n";
  std::cout << "disorder: " << disorder << "\n";
  std::cout << "runs: " << runs << "\n";

  if (opt.parts > 0) {
    std::vector<uint64_t> per_part(std::min<size_t>(opt.parts, shufsort_seq_len(seq.get())));
    size_t count = 0;
    uint64_t total = 0;
    check(shufsort_part_disorders(seq.get(), opt.parts, per_part.data(), per_part.size(), &count,
                                  &total),
          "part disorders");
    uint64_t sum = 0;
    std::cout << "part_disorders:";
    for (size_t p = 0; p < count; ++p) {
      std::cout << ' ' << per_part[p];
      sum += per_part[p];
    }
    std::cout << "\n";
    std::cout << "parts_total: " << sum << "\n";
  }
  return kExitOk;
}

/* ---------------------------- eulerian ---------------------------- */

struct EulerianOptions {
  uint32_t n = 0;
  int64_t k = -1;
  bool k_given = false;
  uint32_t max_n = 200;
};

int run_eulerian(const EulerianOptions& opt) {
  if (opt.n < 1 || opt.n > opt.max_n) {
    throw CliError{kExitInputError, "n must lie in [1, " + std::to_string(opt.max_n) +
                                        "]; raise --max-n for larger rows"};
  }
  if (opt.k_given) {
    char* text = nullptr;
    check(shufsort_descent_count_str(opt.n, opt.k, &text), "eulerian");
    StringPtr guard(text);
    std::cout << text << "\n";
  } else {
    char* text = nullptr;
    check(shufsort_descent_distribution_str(opt.n, opt.max_n, &text), "eulerian");
    StringPtr guard(text);
    std::cout << text << "\n";
  }
  return kExitOk;
}

/* ------------------------- validate-claims ------------------------- */

struct ValidateOptions {
  uint32_t exhaustive_n = 0;
  uint32_t model_n = 0;
  uint32_t kernel_n = 0;
  uint64_t kernel_z = 0;  // 0 means "pick the default for kernel_n"
  uint32_t claim2_l = 0;
  uint32_t claim2_c = 0;
  bool claim2_given = false;
  std::string p_text = "1/2";
  uint64_t trials = 100000;
  uint64_t seed = 1;
  uint32_t max_n = 512;
  double tolerance = 0.01;
};

bool validate_exhaustive(uint32_t n) {
  if (n > 9) {
    throw CliError{kExitInputError,
                   "exhaustive validation refused for n > 9 (n! permutations); use --model"};
  }
  std::vector<uint64_t> histogram(n);
  check(shufsort_exhaustive_descent_histogram(n, histogram.data()), "exhaustive histogram");

  uint64_t enumerated = 0;
  bool match = true;
  for (uint32_t k = 0; k < n; ++k) {
    enumerated += histogram[k];
    char* text = nullptr;
    check(shufsort_descent_count_str(n, k, &text), "descent count");
    StringPtr guard(text);
    uint64_t expected = 0;
    std::from_chars(text, text + std::strlen(text), expected);
    if (histogram[k] != expected) match = false;
  }
  std::cout << (match ? "PASS" : "FAIL") << " exhaustive n=" << n << ": disorder histogram over "
            << enumerated << " permutations "
            << (match ? "matches the exact distribution" : "DIFFERS from the exact distribution")
            << "\n";
  return match;
}

bool validate_model(uint32_t n, uint32_t max_n) {
  int holds = 0;
  double p_top = 0.0;
  check(shufsort_majority_check(n, max_n, &holds, &p_top), "model check");
  const uint64_t bound = shufsort_majority_threshold(n);
  std::cout << (holds ? "PASS" : "FAIL") << " model n=" << n << ": p(disorder<z) "
            << (holds ? ">" : "NOT always >") << " 1/2 for every z in (" << bound << ", " << n - 1
            << "]; p(disorder<" << n - 1 << ") = " << format_double(p_top) << "\n";
  return holds != 0;
}

void report_kernel(uint32_t n, uint64_t z, uint64_t trials, uint64_t seed, uint32_t max_n) {
  RngPtr rng = make_rng(shufsort_subseed(seed, 0xbadd));
  uint64_t improved = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    shufsort_seq* raw = nullptr;
    check(shufsort_gen_target_disorder(n, z, shufsort_subseed(seed, t), &raw), "kernel input");
    SeqPtr seq(raw);
    size_t i = 0;
    size_t j = 0;
    check(shufsort_rng_draw_pair(rng.get(), n, &i, &j), "kernel pair");
    int delta = 0;
    check(shufsort_swap_disorder_delta(seq.get(), i, j, &delta), "kernel delta");
    if (delta < 0) ++improved;
  }
  double model = 0.0;
  check(shufsort_p_less(n, z, max_n, nullptr, nullptr, &model), "kernel model value");
  std::cout << "INFO kernel n=" << n << " z=" << z << ": empirical P(disorder decreases) = "
            << format_double(double(improved) / double(trials)) << " over " << trials
            << " single-swap trials; uniform-permutation model gives " << format_double(model)
            << " (the two need not agree)\n";
}

bool validate_claim2(uint32_t l, uint32_t c, uint64_t p_num, uint64_t p_den, uint64_t trials,
                     uint64_t seed, double tolerance) {
  double exact = 0.0;
  check(shufsort_binomial_upper_tail(l, c, p_num, p_den, nullptr, nullptr, &exact), "claim2 tail");

  RngPtr rng = make_rng(shufsort_subseed(seed, 0xc1a2));
  uint64_t hits = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    uint32_t successes = 0;
    for (uint32_t part = 0; part < l; ++part) {
      uint64_t draw = 0;
      check(shufsort_rng_below(rng.get(), p_den, &draw), "claim2 draw");
      if (draw < p_num) ++successes;
    }
    if (successes >= c) ++hits;
  }
  const double empirical = double(hits) / double(trials);
  const double diff = std::abs(empirical - exact);
  const bool pass = diff <= tolerance;
  std::cout << (pass ? "PASS" : "FAIL") << " claim2 l=" << l << " c=" << c << " p=" << p_num << "/"
            << p_den << ": empirical " << format_double(empirical) << " vs exact "
            << format_double(exact) << " (|diff| = " << format_double(diff)
            << (pass ? " <= " : " > ") << format_double(tolerance) << ")\n";
  return pass;
}

int run_validate(ValidateOptions opt) {
  const bool any_selected =
      opt.exhaustive_n > 0 || opt.model_n > 0 || opt.kernel_n > 0 || opt.claim2_given;
  if (!any_selected) {
    opt.exhaustive_n = 8;
    opt.model_n = 312;
    opt.kernel_n = 312;
    opt.claim2_l = 16;
    opt.claim2_c = 8;
    opt.claim2_given = true;
  }

  bool all_pass = true;
  if (opt.exhaustive_n > 0) all_pass &= validate_exhaustive(opt.exhaustive_n);
  if (opt.model_n > 0) all_pass &= validate_model(opt.model_n, opt.max_n);
  if (opt.kernel_n > 0) {
    uint64_t z = opt.kernel_z != 0 ? opt.kernel_z : shufsort_majority_threshold(opt.kernel_n) + 1;
    if (z > opt.kernel_n - 1) {
      throw CliError{kExitInputError, "--kernel-z must lie in [1, n-1]"};
    }
    report_kernel(opt.kernel_n, z, opt.trials, opt.seed, opt.max_n);
  }
  if (opt.claim2_given) {
    if (opt.claim2_c > opt.claim2_l) {
      throw CliError{kExitInputError, "--claim2-c must not exceed --claim2-l"};
    }
    auto [p_num, p_den] = parse_fraction(opt.p_text);
    all_pass &= validate_claim2(opt.claim2_l, opt.claim2_c, p_num, p_den, opt.trials, opt.seed,
                                opt.tolerance);
  }
  return all_pass ? kExitOk : kExitValidationFailure;
}

/* ----------------------------- bench ----------------------------- */

struct BenchOptions {
  std::vector<size_t> sizes{5000};
  uint32_t reps = 5;
  shufsort_shuffle_config cfg{};
  std::string policy_text = "guarded";
  std::string input;
  std::string out;
  std::string format = "csv";
  bool parallel = false;
};

struct Record {
  size_t data_size = 0;
  uint64_t disorder_before = 0;
  uint64_t disorder_after = 0;
  double shuffle_time = 0;
  double adaptive_after_shuffle_time = 0;
  double combined_time = 0;
  double adaptive_without_shuffle_time = 0;
  double non_adaptive_time = 0;
  double pct_improvement_vs_adaptive = 0;
  double pct_improvement_vs_nonadaptive = 0;
  uint64_t comparisons_adaptive_after_shuffle = 0;
  uint64_t comparisons_adaptive = 0;
  uint64_t comparisons_baseline = 0;
  std::string policy;
  uint64_t seed = 0;
};

constexpr const char* kCsvHeader =
    "data_size,disorder_before,disorder_after,shuffle_time,adaptive_after_shuffle_time,"
    "combined_time,adaptive_without_shuffle_time,non_adaptive_time,pct_improvement_vs_adaptive,"
    "pct_improvement_vs_nonadaptive,comparisons_adaptive_after_shuffle,comparisons_adaptive,"
    "comparisons_baseline,policy,seed";

double seconds(uint64_t ns) { return double(ns) / 1e9; }

double pct_improvement(double old_value, double new_value) {
  return old_value > 0 ? 100.0 * (old_value - new_value) / old_value : 0.0;
}

void ensure_sorted_and_equal(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                             const std::vector<int64_t>& c, size_t data_size, uint64_t seed) {
  const bool sorted = std::is_sorted(a.begin(), a.end()) &&
                      std::adjacent_find(a.begin(), a.end()) == a.end();
  if (!sorted || a != b || a != c) {
    throw CliError{kExitValidationFailure,
                   "sort outputs disagree for size " + std::to_string(data_size) + " seed " +
                       std::to_string(seed) + "; aborting benchmark"};
  }
}

Record run_bench_record(const BenchOptions& opt, const shufsort_seq* shared_input, size_t size,
                        uint64_t record_seed) {
  const uint64_t gen_seed = shufsort_subseed(record_seed, 0);
  const uint64_t shuffle_seed = shufsort_subseed(record_seed, 1);

  SeqPtr pristine;
  if (shared_input != nullptr) {
    pristine = clone(shared_input);
  } else {
    shufsort_seq* raw = nullptr;
    check(shufsort_gen_uniform(size, gen_seed, &raw), "generate input");
    pristine = SeqPtr(raw);
  }

  Record rec;
  rec.data_size = shufsort_seq_len(pristine.get());
  rec.seed = record_seed;
  check(shufsort_disorder(pristine.get(), &rec.disorder_before), "measure input");

  shufsort_shuffle_config cfg = opt.cfg;
  cfg.seed = shuffle_seed;
  rec.policy = policy_label(cfg.policy, cfg.fixed_swaps);

  // (1) shuffle + adaptive sort
  SeqPtr piped = clone(pristine.get());
  shufsort_shuffle_report* raw_report = nullptr;
  shufsort_sort_stats piped_stats{};
  check(shufsort_shuffled_sort(piped.get(), &cfg, &raw_report, &piped_stats), "shuffled sort");
  ReportPtr report(raw_report);
  rec.disorder_after = shufsort_shuffle_report_total_after(report.get());
  rec.shuffle_time = seconds(shufsort_shuffle_report_elapsed_ns(report.get()));
  rec.adaptive_after_shuffle_time = seconds(piped_stats.elapsed_ns);
  rec.combined_time = rec.shuffle_time + rec.adaptive_after_shuffle_time;
  rec.comparisons_adaptive_after_shuffle = piped_stats.comparisons;

  // (2) adaptive sort on a pristine copy
  SeqPtr plain = clone(pristine.get());
  shufsort_sort_stats plain_stats{};
  check(shufsort_adaptive_sort(plain.get(), &plain_stats), "adaptive sort");
  rec.adaptive_without_shuffle_time = seconds(plain_stats.elapsed_ns);
  rec.comparisons_adaptive = plain_stats.comparisons;

  // (3) non-adaptive baseline on a pristine copy
  SeqPtr base = clone(pristine.get());
  shufsort_sort_stats base_stats{};
  check(shufsort_baseline_sort(base.get(), &base_stats), "baseline sort");
  rec.non_adaptive_time = seconds(base_stats.elapsed_ns);
  rec.comparisons_baseline = base_stats.comparisons;

  ensure_sorted_and_equal(keys_of(piped.get()), keys_of(plain.get()), keys_of(base.get()),
                          rec.data_size, record_seed);

  rec.pct_improvement_vs_adaptive =
      pct_improvement(rec.adaptive_without_shuffle_time, rec.combined_time);
  rec.pct_improvement_vs_nonadaptive = pct_improvement(rec.non_adaptive_time, rec.combined_time);
  return rec;
}

void write_csv(std::ostream& out, const std::vector<Record>& records) {
  out << kCsvHeader << "\n";
  for (const Record& r : records) {
    out << r.data_size << ',' << r.disorder_before << ',' << r.disorder_after << ','
        << format_double(r.shuffle_time) << ',' << format_double(r.adaptive_after_shuffle_time)
        << ',' << format_double(r.combined_time) << ','
        << format_double(r.adaptive_without_shuffle_time) << ','
        << format_double(r.non_adaptive_time) << ','
        << format_double(r.pct_improvement_vs_adaptive) << ','
        << format_double(r.pct_improvement_vs_nonadaptive) << ','
        << r.comparisons_adaptive_after_shuffle << ',' << r.comparisons_adaptive << ','
        << r.comparisons_baseline << ',' << r.policy << ',' << r.seed << "\n";
  }
}

void write_json(std::ostream& out, const std::vector<Record>& records) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Record& r : records) {
    doc.push_back({{"data_size", r.data_size},
                   {"disorder_before", r.disorder_before},
                   {"disorder_after", r.disorder_after},
                   {"shuffle_time", r.shuffle_time},
                   {"adaptive_after_shuffle_time", r.adaptive_after_shuffle_time},
                   {"combined_time", r.combined_time},
                   {"adaptive_without_shuffle_time", r.adaptive_without_shuffle_time},
                   {"non_adaptive_time", r.non_adaptive_time},
                   {"pct_improvement_vs_adaptive", r.pct_improvement_vs_adaptive},
                   {"pct_improvement_vs_nonadaptive", r.pct_improvement_vs_nonadaptive},
                   {"comparisons_adaptive_after_shuffle", r.comparisons_adaptive_after_shuffle},
                   {"comparisons_adaptive", r.comparisons_adaptive},
                   {"comparisons_baseline", r.comparisons_baseline},
                   {"policy", r.policy},
                   {"seed", r.seed}});
  }
  out << doc.dump(2) << "\n";
}

int run_bench(const BenchOptions& opt) {
  SeqPtr shared_input;
  if (!opt.input.empty()) shared_input = read_sequence(opt.input);

  const std::vector<size_t> sizes =
      shared_input ? std::vector<size_t>{shufsort_seq_len(shared_input.get())} : opt.sizes;
  const size_t total = sizes.size() * opt.reps;
  std::vector<Record> records(total);

  // Record index -> (size, repetition); seeds derive from the index so that
  // identical configs reproduce identical non-time columns.
  auto record_at = [&](size_t idx) {
    const size_t size_idx = idx / opt.reps;
    const uint64_t record_seed = shufsort_subseed(opt.cfg.seed, idx);
    return run_bench_record(opt, shared_input.get(), sizes[size_idx], record_seed);
  };

  if (opt.parallel && total > 1) {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::string> errors;
    std::mutex error_mutex;
    const unsigned count = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(total)));
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (size_t idx; (idx = next.fetch_add(1)) < total;) {
          try {
            records[idx] = record_at(idx);
          } catch (const CliError& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            errors.push_back(e.message);
          } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            errors.push_back(e.what());
          }
        }
      });
    }
    for (auto& worker : workers) worker.join();
    if (!errors.empty()) throw CliError{kExitValidationFailure, errors.front()};
  } else {
    for (size_t idx = 0; idx < total; ++idx) records[idx] = record_at(idx);
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw CliError{kExitInputError, "cannot open " + opt.out + " for writing"};
    out = &file;
  }
  if (opt.format == "json") {
    write_json(*out, records);
  } else {
    write_csv(*out, records);
  }
  return kExitOk;
}

/* ------------------------------ gen ------------------------------ */

struct GenOptions {
  size_t n = 0;
  std::string kind = "uniform";
  uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  shufsort_seq* raw = nullptr;
  if (opt.kind == "uniform") {
    check(shufsort_gen_uniform(opt.n, opt.seed, &raw), "gen");
  } else if (opt.kind.rfind("target:", 0) == 0) {
    uint64_t target = 0;
    const std::string text = opt.kind.substr(7);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), target);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw CliError{kExitInputError, "bad target disorder in --kind " + opt.kind};
    }
    check(shufsort_gen_target_disorder(opt.n, target, opt.seed, &raw), "gen");
  } else if (opt.kind.rfind("nearly:", 0) == 0) {
    uint64_t swaps = 0;
    const std::string text = opt.kind.substr(7);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), swaps);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw CliError{kExitInputError, "bad swap count in --kind " + opt.kind};
    }
    check(shufsort_gen_nearly_sorted(opt.n, swaps, opt.seed, &raw), "gen");
  } else {
    throw CliError{kExitInputError,
                   "unknown --kind " + opt.kind + " (expected uniform, target:<M> or nearly:<d>)"};
  }
  SeqPtr seq(raw);

  if (opt.out.empty()) {
    std::vector<int64_t> keys = keys_of(seq.get());
    for (int64_t k : keys) std::cout << k << "\n";
  } else {
    check(shufsort_seq_write_file(seq.get(), opt.out.c_str()), opt.out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disorder measurement, exact descent-distribution analysis, shuffle "
               "preprocessing and adaptive-sort benchmarks"};
  app.require_subcommand(1);

  MeasureOptions measure_opt;
  auto* measure = app.add_subcommand("measure", "Measure the disorder of a key file");
  measure->add_option("file,--input", measure_opt.input, "newline-delimited decimal keys")
      ->required();
  measure->add_option("--parts", measure_opt.parts,
                      "also report per-part disorders for this many contiguous parts")
      ->check(CLI::PositiveNumber);

  EulerianOptions eulerian_opt;
  auto* eulerian = app.add_subcommand(
      "eulerian", "Print the exact distribution of disorder over all n-element permutations");
  eulerian->add_option("n", eulerian_opt.n, "sequence length")->required();
  auto* k_option = eulerian->add_option("k", eulerian_opt.k, "single disorder value to print");
  eulerian->add_option("--max-n", eulerian_opt.max_n, "cap for full-row computation")
      ->default_val(200);

  ValidateOptions validate_opt;
  auto* validate = app.add_subcommand(
      "validate-claims", "Validate the exact distribution and shuffle model "
                         "(all four checks run when none is selected)");
  validate->add_option("--exhaustive", validate_opt.exhaustive_n,
                       "enumerate all n! permutations (n <= 9) against the distribution");
  validate->add_option("--model", validate_opt.model_n,
                       "check p(disorder<z) > 1/2 for every z above floor(n/2)+1");
  validate->add_option("--kernel", validate_opt.kernel_n,
                       "Monte Carlo of the true one-swap transition at this n (informational)");
  validate->add_option("--kernel-z", validate_opt.kernel_z,
                       "starting disorder for --kernel (default floor(n/2)+2)");
  validate->add_option("--claim2-l", validate_opt.claim2_l, "parts for the binomial-tail check");
  validate->add_option("--claim2-c", validate_opt.claim2_c, "minimum improved parts");
  validate->add_option("--p", validate_opt.p_text, "per-part success probability NUM/DEN")
      ->default_val("1/2");
  validate->add_option("--trials", validate_opt.trials, "Monte Carlo trials")->default_val(100000);
  validate->add_option("--seed", validate_opt.seed, "Monte Carlo seed")->default_val(1);
  validate->add_option("--max-n", validate_opt.max_n, "distribution cap")->default_val(512);

  BenchOptions bench_opt;
  shufsort_shuffle_config_init(&bench_opt.cfg);
  std::string sizes_text = "5000";
  auto* bench = app.add_subcommand("bench", "Benchmark shuffle+sort against plain adaptive and "
                                            "non-adaptive sorting; emits one record per run");
  bench->add_option("--sizes", sizes_text, "comma-separated input sizes")->default_val("5000");
  bench->add_option("--reps", bench_opt.reps, "repetitions per size")->default_val(5);
  bench->add_option("--k", bench_opt.cfg.parts, "number of contiguous parts")->default_val(16);
  bench->add_option("--z", bench_opt.cfg.threshold, "disorder threshold per part")
      ->default_val(10);
  bench->add_option("--m", bench_opt.cfg.budget_divisor, "swap budget divisor")->default_val(2);
  bench->add_option("--policy", bench_opt.policy_text, "blind, guarded or fixed:<s>")
      ->default_val("guarded");
  bench->add_option("--seed", bench_opt.cfg.seed, "master seed")->default_val(1);
  bench->add_option("--input", bench_opt.input, "benchmark this key file instead of generating");
  bench->add_option("--out", bench_opt.out, "write records here instead of stdout");
  bench->add_option("--format", bench_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  bench->add_flag("--parallel", bench_opt.parallel,
                  "run repetitions concurrently (perturbs wall-time columns)");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a key file");
  gen->add_option("--n", gen_opt.n, "sequence length")->required();
  gen->add_option("--kind", gen_opt.kind, "uniform, target:<M> or nearly:<d>")
      ->default_val("uniform");
  gen->add_option("--seed", gen_opt.seed, "generator seed")->default_val(1);
  gen->add_option("--out", gen_opt.out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (measure->parsed()) return run_measure(measure_opt);
    if (eulerian->parsed()) {
      eulerian_opt.k_given = k_option->count() > 0;
      return run_eulerian(eulerian_opt);
    }
    if (validate->parsed()) {
      validate_opt.claim2_given =
          validate->count("--claim2-l") > 0 || validate->count("--claim2-c") > 0;
      return run_validate(validate_opt);
    }
    if (bench->parsed()) {
      parse_policy(bench_opt.policy_text, bench_opt.cfg);
      bench_opt.sizes.clear();
      std::stringstream sizes_stream(sizes_text);
      std::string token;
      while (std::getline(sizes_stream, token, ',')) {
        size_t size = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), size);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          throw CliError{kExitInputError, "bad size \"" + token + "\" in --sizes"};
        }
        bench_opt.sizes.push_back(size);
      }
      if (bench_opt.sizes.empty()) throw CliError{kExitInputError, "--sizes is empty"};
      if (bench_opt.reps == 0) throw CliError{kExitInputError, "--reps must be >= 1"};
      return run_bench(bench_opt);
    }
    if (gen->parsed()) return run_gen(gen_opt);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitOk;
}
