#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace shufsort {

// Exact nonnegative count; GMP keeps every value exact at any n we accept.
using BigCount = mpz_class;

// Distribution-sized computations refuse n above this unless the caller
// raises the cap explicitly. Exact rows stay cheap well past table scale, the
// cap just stops accidental huge requests.
inline constexpr unsigned kDistributionCapDefault = 200;

// C(n, k); zero when k is negative or exceeds n.
BigCount binomial(std::uint64_t n, std::int64_t k);

BigCount factorial(std::uint64_t n);

// Number of n-element permutations with exactly k maximal ascending runs,
// via the explicit alternating sum
//   sum_{0<=j<=k} (-1)^j (k-j)^n C(n+1, j).
// Zero outside 1 <= k <= n. Positive and negative terms are accumulated
// separately; the recurrence route below independently confirms the result.
BigCount eulerian_runs(std::uint64_t n, std::uint64_t k);

// Number of n-element permutations with disorder (descent count) exactly k:
// a permutation with k descents has k+1 runs. Zero outside 0 <= k <= n-1.
BigCount descent_permutation_count(std::uint64_t n, std::int64_t k);

// counts[k] = number of n-permutations with k descents, 0 <= k <= n-1.
// Built with the triangle recurrence
//   A(n, k) = k*A(n-1, k) + (n-k+1)*A(n-1, k-1)     (runs convention)
// which is independent of the alternating-sum formula above.
struct DescentDistribution {
  unsigned n = 0;
  std::vector<BigCount> counts;
};

DescentDistribution descent_distribution(unsigned n, unsigned cap = kDistributionCapDefault);

// Exact probability in [0, 1], kept in lowest terms.
class Probability {
 public:
  Probability() : q_(0) {}
  Probability(BigCount num, BigCount den);

  BigCount num() const { return BigCount(q_.get_num()); }
  BigCount den() const { return BigCount(q_.get_den()); }
  double value() const { return q_.get_d(); }
  const mpq_class& rational() const { return q_; }

  friend bool operator==(const Probability& a, const Probability& b) { return a.q_ == b.q_; }
  friend auto operator<=>(const Probability& a, const Probability& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

// P(disorder of a uniform random n-permutation < z): the partial descent
// distribution mass below z over n!.
Probability prob_disorder_below(unsigned n, std::uint64_t z,
                                unsigned cap = kDistributionCapDefault);

// floor(n/2) + 1. For every z strictly above this, more than half of all
// permutations have disorder below z (the distribution is symmetric and
// unimodal); verify_majority_threshold checks that property exactly.
std::uint64_t majority_threshold(std::uint64_t n);

struct MajorityCheck {
  bool holds = false;    // p > 1/2 for every z in (majority_threshold, n-1]
  double p_at_top = 0.0; // prob_disorder_below(n, n-1) = (n! - 1)/n!
};

MajorityCheck verify_majority_threshold(unsigned n, unsigned cap = kDistributionCapDefault);

// P(X >= at_least) for X ~ Binomial(trials, p), exact.
Probability binomial_upper_tail(unsigned trials, unsigned at_least, const Probability& p);

// Whether (disorder_before+1)/(disorder_after+1) > 2^(1/m), decided by
// comparing (before+1)^m against 2*(after+1)^m in integer arithmetic; the
// real-valued quotient is returned alongside for reporting.
struct ImprovementCheck {
  bool holds = false;
  double ratio = 0.0;
};

ImprovementCheck improvement_condition(std::uint64_t disorder_before,
                                       std::uint64_t disorder_after, unsigned budget_divisor);

}  // namespace shufsort
