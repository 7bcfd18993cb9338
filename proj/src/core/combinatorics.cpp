#include "core/combinatorics.hpp"

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace shufsort {

namespace {

void check_cap(unsigned n, unsigned cap, const char* who) {
  if (n > cap) {
    throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(n) +
                                " exceeds the configured cap " + std::to_string(cap));
  }
}

}  // namespace

BigCount binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

BigCount factorial(std::uint64_t n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigCount eulerian_runs(std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < 1 || k > n) return 0;
  BigCount positive = 0;
  BigCount negative = 0;
  BigCount term;
  for (std::uint64_t j = 0; j < k; ++j) {  // the j = k term has (k-j)^n = 0
    mpz_ui_pow_ui(term.get_mpz_t(), k - j, n);
    term *= binomial(n + 1, static_cast<std::int64_t>(j));
    if (j % 2 == 0) {
      positive += term;
    } else {
      negative += term;
    }
  }
  assert(positive >= negative);
  return positive - negative;
}

BigCount descent_permutation_count(std::uint64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || static_cast<std::uint64_t>(k) > n - 1) return 0;
  return eulerian_runs(n, static_cast<std::uint64_t>(k) + 1);
}

DescentDistribution descent_distribution(unsigned n, unsigned cap) {
  if (n < 1) throw std::invalid_argument("descent_distribution: n must be >= 1");
  check_cap(n, cap, "descent_distribution");

  // row[i] = number of m-permutations with i+1 runs, i.e. i descents.
  std::vector<BigCount> row{1};
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<BigCount> next(m);
    next[0] = 1;        // single ascending run
    next[m - 1] = 1;    // fully descending
    for (unsigned k = 2; k < m; ++k) {
      next[k - 1] = BigCount(k) * row[k - 1] + BigCount(m - k + 1) * row[k - 2];
    }
    row = std::move(next);
  }
  return DescentDistribution{n, std::move(row)};
}

Probability::Probability(BigCount num, BigCount den) {
  if (den <= 0) throw std::invalid_argument("Probability: denominator must be positive");
  if (num < 0 || num > den) throw std::invalid_argument("Probability: value outside [0, 1]");
  q_ = mpq_class(std::move(num), std::move(den));
  q_.canonicalize();
}

Probability prob_disorder_below(unsigned n, std::uint64_t z, unsigned cap) {
  if (n < 1) throw std::invalid_argument("prob_disorder_below: n must be >= 1");
  if (z > n - 1) {
    throw std::invalid_argument("prob_disorder_below: z must lie in [0, n-1]");
  }
  check_cap(n, cap, "prob_disorder_below");
  DescentDistribution dist = descent_distribution(n, cap);
  BigCount below = 0;
  for (std::uint64_t k = 0; k < z; ++k) below += dist.counts[k];
  return Probability(std::move(below), factorial(n));
}

std::uint64_t majority_threshold(std::uint64_t n) { return n / 2 + 1; }

MajorityCheck verify_majority_threshold(unsigned n, unsigned cap) {
  if (n < 1) throw std::invalid_argument("verify_majority_threshold: n must be >= 1");
  check_cap(n, cap, "verify_majority_threshold");

  DescentDistribution dist = descent_distribution(n, cap);
  const BigCount total = factorial(n);

  MajorityCheck check;
  check.holds = true;

  BigCount below = 0;  // running sum_{k < z} counts[k]
  const std::uint64_t first_z = majority_threshold(n) + 1;
  for (std::uint64_t z = 0; z + 1 <= static_cast<std::uint64_t>(n) - 1; ++z) {
    below += dist.counts[z];
    // `below` is now the mass under disorder < z+1
    if (z + 1 >= first_z && 2 * below <= total) check.holds = false;
  }
  check.p_at_top = Probability(total - 1, total).value();
  return check;
}

Probability binomial_upper_tail(unsigned trials, unsigned at_least, const Probability& p) {
  if (at_least > trials) {
    throw std::invalid_argument("binomial_upper_tail: at_least must not exceed trials");
  }
  const BigCount pn = p.num();
  const BigCount pd = p.den();
  const BigCount qn = pd - pn;

  BigCount num = 0;
  BigCount success_pow, failure_pow;
  for (unsigned x = at_least; x <= trials; ++x) {
    mpz_pow_ui(success_pow.get_mpz_t(), pn.get_mpz_t(), x);
    mpz_pow_ui(failure_pow.get_mpz_t(), qn.get_mpz_t(), trials - x);
    num += binomial(trials, x) * success_pow * failure_pow;
  }
  BigCount den;
  mpz_pow_ui(den.get_mpz_t(), pd.get_mpz_t(), trials);
  return Probability(std::move(num), std::move(den));
}

ImprovementCheck improvement_condition(std::uint64_t disorder_before,
                                       std::uint64_t disorder_after, unsigned budget_divisor) {
  if (budget_divisor == 0) {
    throw std::invalid_argument("improvement_condition: budget divisor must be >= 1");
  }
  BigCount lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), disorder_before + 1, budget_divisor);
  mpz_ui_pow_ui(rhs.get_mpz_t(), disorder_after + 1, budget_divisor);
  rhs *= 2;

  ImprovementCheck check;
  check.holds = lhs > rhs;
  check.ratio = double(disorder_before + 1) / double(disorder_after + 1);
  return check;
}

}  // namespace shufsort
