#include "shufsort.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/combinatorics.hpp"
#include "core/datagen.hpp"
#include "core/disorder.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/sequence.hpp"
#include "core/shuffle.hpp"
#include "core/sort.hpp"

using namespace shufsort;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `fn`, mapping exceptions onto status codes and the thread-local
// error detail.
template <typename Fn>
shufsort_status guard(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return SHUFSORT_OK;
  } catch (const DuplicateKeyError& e) {
    g_last_error = e.what();
    return SHUFSORT_ERR_DUPLICATE_KEYS;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return SHUFSORT_ERR_PARSE;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return SHUFSORT_ERR_IO;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    // cap violations surface as a dedicated status so callers can raise max_n
    if (g_last_error.find("exceeds the configured cap") != std::string::npos) {
      return SHUFSORT_ERR_LIMIT;
    }
    return SHUFSORT_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return SHUFSORT_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SHUFSORT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SHUFSORT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SHUFSORT_ERR_INTERNAL;
  }
}

shufsort_status require(bool ok, const char* message) {
  if (ok) return SHUFSORT_OK;
  g_last_error = message;
  return SHUFSORT_ERR_INVALID_ARGUMENT;
}

ShuffleConfig to_config(const shufsort_shuffle_config& c) {
  ShuffleConfig cfg;
  cfg.parts = c.parts;
  cfg.threshold = c.threshold;
  cfg.budget_divisor = c.budget_divisor;
  switch (c.policy) {
    case SHUFSORT_POLICY_BLIND: cfg.policy = ShufflePolicy::blind; break;
    case SHUFSORT_POLICY_GUARDED: cfg.policy = ShufflePolicy::guarded; break;
    case SHUFSORT_POLICY_FIXED: cfg.policy = ShufflePolicy::fixed_count; break;
    default: throw std::invalid_argument("unknown shuffle policy");
  }
  cfg.fixed_swaps = c.fixed_swaps;
  cfg.seed = c.seed;
  return cfg;
}

void fill_stats(const SortStats& stats, shufsort_sort_stats* out) {
  out->comparisons = stats.comparisons;
  out->moves = stats.moves;
  out->runs_detected = stats.runs_detected;
  out->elapsed_ns = static_cast<uint64_t>(stats.elapsed.count());
}

unsigned effective_cap(uint32_t max_n) { return max_n == 0 ? kDistributionCapDefault : max_n; }

}  // namespace

struct shufsort_seq {
  KeySequence impl;
};

struct shufsort_rng {
  RngStream impl;
};

struct shufsort_shuffle_report {
  ShuffleReport impl;
};

extern "C" {

const char* shufsort_version(void) { return "0.1.0"; }

const char* shufsort_status_name(int status) {
  switch (status) {
    case SHUFSORT_OK: return "ok";
    case SHUFSORT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SHUFSORT_ERR_DUPLICATE_KEYS: return "duplicate_keys";
    case SHUFSORT_ERR_PARSE: return "parse_error";
    case SHUFSORT_ERR_IO: return "io_error";
    case SHUFSORT_ERR_LIMIT: return "limit_exceeded";
    case SHUFSORT_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* shufsort_last_error(void) { return g_last_error.c_str(); }

void shufsort_string_free(char* s) { std::free(s); }

/* ---- sequences ---- */

shufsort_status shufsort_seq_create(const int64_t* keys, size_t len, shufsort_seq** out) {
  if (auto st = require(out != nullptr && (keys != nullptr || len == 0), "null argument")) return st;
  return guard([&] {
    std::vector<Key> v(keys, keys + len);
    *out = new shufsort_seq{KeySequence::of(std::move(v))};
  });
}

void shufsort_seq_free(shufsort_seq* seq) { delete seq; }

size_t shufsort_seq_len(const shufsort_seq* seq) { return seq == nullptr ? 0 : seq->impl.size(); }

shufsort_status shufsort_seq_clone(const shufsort_seq* seq, shufsort_seq** out) {
  if (auto st = require(seq != nullptr && out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_seq{seq->impl}; });
}

shufsort_status shufsort_seq_copy_keys(const shufsort_seq* seq, int64_t* out, size_t cap) {
  if (auto st = require(seq != nullptr && (out != nullptr || seq->impl.empty()), "null argument"))
    return st;
  if (auto st = require(cap >= seq->impl.size(), "destination buffer too small")) return st;
  const auto keys = seq->impl.keys();
  std::copy(keys.begin(), keys.end(), out);
  g_last_error.clear();
  return SHUFSORT_OK;
}

shufsort_status shufsort_seq_swap(shufsort_seq* seq, size_t i, size_t j) {
  if (auto st = require(seq != nullptr, "null argument")) return st;
  return guard([&] { seq->impl.swap_keys(i, j); });
}

shufsort_status shufsort_seq_read_file(const char* path, shufsort_seq** out) {
  if (auto st = require(path != nullptr && out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_seq{read_sequence_file(path)}; });
}

shufsort_status shufsort_seq_write_file(const shufsort_seq* seq, const char* path) {
  if (auto st = require(seq != nullptr && path != nullptr, "null argument")) return st;
  return guard([&] { write_sequence_file(seq->impl, path); });
}

/* ---- disorder ---- */

shufsort_status shufsort_disorder(const shufsort_seq* seq, uint64_t* out) {
  if (auto st = require(seq != nullptr && out != nullptr, "null argument")) return st;
  return guard([&] { *out = descent_count(seq->impl); });
}

shufsort_status shufsort_run_count(const shufsort_seq* seq, uint64_t* out) {
  if (auto st = require(seq != nullptr && out != nullptr, "null argument")) return st;
  return guard([&] { *out = seq->impl.empty() ? 0 : descent_count(seq->impl) + 1; });
}

shufsort_status shufsort_swap_disorder_delta(const shufsort_seq* seq, size_t i, size_t j,
                                             int* delta) {
  if (auto st = require(seq != nullptr && delta != nullptr, "null argument")) return st;
  return guard([&] { *delta = swap_disorder_delta(seq->impl.keys(), i, j); });
}

shufsort_status shufsort_part_disorders(const shufsort_seq* seq, uint32_t parts,
                                        uint64_t* per_part, size_t per_part_cap,
                                        size_t* part_count, uint64_t* total) {
  if (auto st = require(seq != nullptr && part_count != nullptr && total != nullptr,
                        "null argument"))
    return st;
  return guard([&] {
    const PartitionView view = partition_bounds(seq->impl.size(), parts);
    if (view.part_count() > per_part_cap && !view.bounds.empty()) {
      throw std::invalid_argument("per_part buffer too small");
    }
    const DisorderReport report = part_disorders(seq->impl, view);
    for (std::size_t p = 0; p < report.per_part.size(); ++p) per_part[p] = report.per_part[p];
    *part_count = report.per_part.size();
    *total = report.total;
  });
}

/* ---- rng ---- */

shufsort_status shufsort_rng_create(uint64_t seed, shufsort_rng** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_rng{RngStream(seed)}; });
}

void shufsort_rng_free(shufsort_rng* rng) { delete rng; }

uint64_t shufsort_rng_next(shufsort_rng* rng) { return rng == nullptr ? 0 : rng->impl.next(); }

shufsort_status shufsort_rng_below(shufsort_rng* rng, uint64_t bound, uint64_t* out) {
  if (auto st = require(rng != nullptr && out != nullptr, "null argument")) return st;
  return guard([&] { *out = rng->impl.below(bound); });
}

shufsort_status shufsort_rng_draw_pair(shufsort_rng* rng, size_t len, size_t* i, size_t* j) {
  if (auto st = require(rng != nullptr && i != nullptr && j != nullptr, "null argument")) return st;
  return guard([&] {
    auto [a, b] = draw_pair(rng->impl, len);
    *i = a;
    *j = b;
  });
}

uint64_t shufsort_subseed(uint64_t master, uint64_t index) { return derive_subseed(master, index); }

/* ---- shuffle ---- */

void shufsort_shuffle_config_init(shufsort_shuffle_config* cfg) {
  if (cfg == nullptr) return;
  cfg->parts = 16;
  cfg->threshold = 10;
  cfg->budget_divisor = 2;
  cfg->policy = SHUFSORT_POLICY_GUARDED;
  cfg->fixed_swaps = 2;
  cfg->seed = 1;
}

shufsort_status shufsort_preprocess(shufsort_seq* seq, const shufsort_shuffle_config* cfg,
                                    shufsort_shuffle_report** out) {
  if (auto st = require(seq != nullptr && cfg != nullptr && out != nullptr, "null argument"))
    return st;
  return guard([&] { *out = new shufsort_shuffle_report{preprocess(seq->impl, to_config(*cfg))}; });
}

void shufsort_shuffle_report_free(shufsort_shuffle_report* rep) { delete rep; }

uint64_t shufsort_shuffle_report_total_before(const shufsort_shuffle_report* rep) {
  return rep == nullptr ? 0 : rep->impl.total_before;
}

uint64_t shufsort_shuffle_report_total_after(const shufsort_shuffle_report* rep) {
  return rep == nullptr ? 0 : rep->impl.total_after;
}

uint64_t shufsort_shuffle_report_elapsed_ns(const shufsort_shuffle_report* rep) {
  return rep == nullptr ? 0 : static_cast<uint64_t>(rep->impl.elapsed.count());
}

size_t shufsort_shuffle_report_part_count(const shufsort_shuffle_report* rep) {
  return rep == nullptr ? 0 : rep->impl.per_part.size();
}

shufsort_status shufsort_shuffle_report_part(const shufsort_shuffle_report* rep, size_t index,
                                             uint64_t* disorder_before, uint64_t* disorder_after,
                                             uint64_t* swaps_attempted, uint64_t* swaps_applied) {
  if (auto st = require(rep != nullptr, "null argument")) return st;
  if (auto st = require(index < rep->impl.per_part.size(), "part index out of range")) return st;
  const PartShuffle& part = rep->impl.per_part[index];
  if (disorder_before != nullptr) *disorder_before = part.disorder_before;
  if (disorder_after != nullptr) *disorder_after = part.disorder_after;
  if (swaps_attempted != nullptr) *swaps_attempted = part.swaps_attempted;
  if (swaps_applied != nullptr) *swaps_applied = part.swaps_applied;
  g_last_error.clear();
  return SHUFSORT_OK;
}

/* ---- sorting ---- */

shufsort_status shufsort_adaptive_sort(shufsort_seq* seq, shufsort_sort_stats* stats) {
  if (auto st = require(seq != nullptr && stats != nullptr, "null argument")) return st;
  return guard([&] {
    auto [sorted, s] = adaptive_merge_sort(seq->impl);
    seq->impl = std::move(sorted);
    fill_stats(s, stats);
  });
}

shufsort_status shufsort_baseline_sort(shufsort_seq* seq, shufsort_sort_stats* stats) {
  if (auto st = require(seq != nullptr && stats != nullptr, "null argument")) return st;
  return guard([&] {
    auto [sorted, s] = baseline_merge_sort(seq->impl);
    seq->impl = std::move(sorted);
    fill_stats(s, stats);
  });
}

shufsort_status shufsort_shuffled_sort(shufsort_seq* seq, const shufsort_shuffle_config* cfg,
                                       shufsort_shuffle_report** report,
                                       shufsort_sort_stats* stats) {
  if (auto st = require(seq != nullptr && cfg != nullptr && stats != nullptr, "null argument"))
    return st;
  return guard([&] {
    PipelineResult result = shuffled_adaptive_sort(seq->impl, to_config(*cfg));
    seq->impl = std::move(result.sorted);
    if (report != nullptr) *report = new shufsort_shuffle_report{std::move(result.shuffle)};
    fill_stats(result.sort, stats);
  });
}

/* ---- generators ---- */

shufsort_status shufsort_gen_uniform(size_t n, uint64_t seed, shufsort_seq** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_seq{uniform_permutation(n, seed)}; });
}

shufsort_status shufsort_gen_target_disorder(size_t n, uint64_t target, uint64_t seed,
                                             shufsort_seq** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_seq{with_target_disorder(n, target, seed)}; });
}

shufsort_status shufsort_gen_nearly_sorted(size_t n, uint64_t swaps, uint64_t seed,
                                           shufsort_seq** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = new shufsort_seq{nearly_sorted(n, swaps, seed)}; });
}

/* ---- combinatorics ---- */

shufsort_status shufsort_binomial_str(uint64_t n, int64_t k, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = dup_string(binomial(n, k).get_str()); });
}

shufsort_status shufsort_eulerian_runs_str(uint64_t n, uint64_t k, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = dup_string(eulerian_runs(n, k).get_str()); });
}

shufsort_status shufsort_descent_count_str(uint64_t n, int64_t k, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] { *out = dup_string(descent_permutation_count(n, k).get_str()); });
}

shufsort_status shufsort_descent_distribution_str(uint32_t n, uint32_t max_n, char** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  return guard([&] {
    const DescentDistribution dist = descent_distribution(n, effective_cap(max_n));
    std::ostringstream line;
    for (std::size_t k = 0; k < dist.counts.size(); ++k) {
      if (k > 0) line << ' ';
      line << dist.counts[k].get_str();
    }
    *out = dup_string(line.str());
  });
}

shufsort_status shufsort_exhaustive_descent_histogram(uint32_t n, uint64_t* counts) {
  if (auto st = require(counts != nullptr, "null argument")) return st;
  return guard([&] {
    if (n < 1 || n > 9) {
      throw std::invalid_argument("exhaustive histogram limited to 1 <= n <= 9");
    }
    std::vector<Key> perm(n);
    std::iota(perm.begin(), perm.end(), Key{1});
    for (uint32_t k = 0; k < n; ++k) counts[k] = 0;
    do {
      ++counts[descent_count(std::span<const Key>(perm))];
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

shufsort_status shufsort_p_less(uint32_t n, uint64_t z, uint32_t max_n, char** num, char** den,
                                double* value) {
  return guard([&] {
    const Probability p = prob_disorder_below(n, z, effective_cap(max_n));
    if (num != nullptr) *num = dup_string(p.num().get_str());
    if (den != nullptr) *den = dup_string(p.den().get_str());
    if (value != nullptr) *value = p.value();
  });
}

uint64_t shufsort_majority_threshold(uint64_t n) { return majority_threshold(n); }

shufsort_status shufsort_majority_check(uint32_t n, uint32_t max_n, int* holds, double* p_at_top) {
  return guard([&] {
    const MajorityCheck check = verify_majority_threshold(n, effective_cap(max_n));
    if (holds != nullptr) *holds = check.holds ? 1 : 0;
    if (p_at_top != nullptr) *p_at_top = check.p_at_top;
  });
}

shufsort_status shufsort_binomial_upper_tail(uint32_t l, uint32_t c, uint64_t p_num,
                                             uint64_t p_den, char** num, char** den,
                                             double* value) {
  return guard([&] {
    const Probability p(BigCount(static_cast<unsigned long>(p_num)),
                        BigCount(static_cast<unsigned long>(p_den)));
    const Probability tail = binomial_upper_tail(l, c, p);
    if (num != nullptr) *num = dup_string(tail.num().get_str());
    if (den != nullptr) *den = dup_string(tail.den().get_str());
    if (value != nullptr) *value = tail.value();
  });
}

shufsort_status shufsort_improvement_condition(uint64_t disorder_before, uint64_t disorder_after,
                                               uint32_t budget_divisor, int* holds, double* ratio) {
  return guard([&] {
    const ImprovementCheck check =
        improvement_condition(disorder_before, disorder_after, budget_divisor);
    if (holds != nullptr) *holds = check.holds ? 1 : 0;
    if (ratio != nullptr) *ratio = check.ratio;
  });
}

} /* extern "C" */
