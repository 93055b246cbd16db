#ifndef FQRANK_DISTRIBUTIONS_H_
#define FQRANK_DISTRIBUTIONS_H_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fqrank/exact.h"

namespace fqrank {

// Exact probability mass function over nonnegative integer weights.
class WeightPmf {
 public:
  WeightPmf() = default;
  explicit WeightPmf(std::map<std::uint64_t, ExactProb> mass);

  const std::map<std::uint64_t, ExactProb>& mass() const { return mass_; }
  ExactProb at(std::uint64_t weight) const;
  std::size_t size() const { return mass_.size(); }

  Rational total() const;
  Rational mean() const;
  Rational variance() const;
  // (weight, P(W <= weight)) in increasing weight order.
  std::vector<std::pair<std::uint64_t, ExactProb>> cumulative() const;

  friend bool operator==(const WeightPmf& a, const WeightPmf& b) { return a.mass_ == b.mass_; }

 private:
  std::map<std::uint64_t, ExactProb> mass_;
};

struct MomentSummary {
  Rational mean;
  Rational variance;
  double sd = 0.0;
};

// Moments of the rank-one weight W = XY, with X, Y independent
// Binomial(m, 1 - 1/q) and Binomial(n, 1 - 1/q).
struct Rank1Moments {
  Rational expected_weight;   // E(W) = mn p^2
  Rational expected_square;   // E(W^2)
  Rational positive_prob;     // P(W > 0) = (1 - q^-m)(1 - q^-n)
  MomentSummary conditioned;  // law of W given W > 0, i.e. rank-one matrices
  // Unconditioned W, variance taken from the simplified closed form
  // mn(1-n-m)p^4 + mn(n+m-2)p^3 + mn p^2.
  MomentSummary unconditioned;
};

// Probability that a fixed entry of a uniform rank-k m x n matrix is nonzero:
// (q^m - q^{m-1})(q^n - q^{n-k}) / ((q^m - 1)(q^n - 1)). Requires 1 <= k <= min(m, n).
ExactProb entry_nonzero_prob(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q);

struct CrComponentProbs {
  ExactProb c11_nonzero;
  ExactProb r11_nonzero;
};

// The two independent factors of entry_nonzero_prob under A = CR.
CrComponentProbs cr_component_probs(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                                    std::uint64_t q);

// Mean weight of a uniform rank-k matrix; zero for k = 0.
Rational average_weight(std::uint32_t m, std::uint32_t n, std::uint32_t k, std::uint64_t q);

// Weight of a uniform nonzero vector of length len:
// C(len, mu) (q-1)^mu / (q^len - 1) for 1 <= mu <= len.
WeightPmf rank1_vector_pmf(std::uint32_t len, std::uint64_t q);

// Weight of a uniform rank-one m x n matrix, the law of wt(C) * wt(R).
WeightPmf rank1_weight_pmf(std::uint32_t m, std::uint32_t n, std::uint64_t q);

Rank1Moments rank1_moments(std::uint32_t m, std::uint32_t n, std::uint64_t q);

// E(W^2) - E(W)^2 from the unsimplified expansion, for cross-checking the
// simplified variance in Rank1Moments.
Rational rank1_unconditioned_variance_expanded(std::uint32_t m, std::uint32_t n,
                                               std::uint64_t q);

// Standard normal cdf; absolute error well below 1e-10.
double normal_cdf(double z);

// sup |F(w) - Phi((w - mean) / sd)| over both one-sided limits at every atom,
// with mean and sd taken from the pmf itself. Throws std::domain_error for a
// zero-variance pmf.
double ks_distance_to_normal(const WeightPmf& pmf);

// sqrt of a nonnegative rational, rounded to double.
double exact_sqrt(const Rational& x);

}  // namespace fqrank

#endif  // FQRANK_DISTRIBUTIONS_H_
