#include "fqrank/distributions.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fqrank/counting.h"

namespace fqrank {
namespace {

void check_q(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
}

void check_rank(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  if (m == 0 || n == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (k == 0 || k > std::min(m, n)) {
    throw std::invalid_argument("rank " + std::to_string(k) + " outside [1, min(m, n)]");
  }
}

Rational make_rational(const BigCount& num, const BigCount& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational from_uint(std::uint64_t x) { return Rational(to_big(x)); }

// 1 - 1/q
Rational nonzero_entry_prob(std::uint64_t q) { return make_rational(to_big(q - 1), to_big(q)); }

}  // namespace

WeightPmf::WeightPmf(std::map<std::uint64_t, ExactProb> mass) : mass_(std::move(mass)) {
  for (auto& [w, p] : mass_) {
    p.canonicalize();
    if (p < 0) throw std::invalid_argument("negative probability at weight " + std::to_string(w));
  }
}

ExactProb WeightPmf::at(std::uint64_t weight) const {
  auto it = mass_.find(weight);
  return it == mass_.end() ? ExactProb(0) : it->second;
}

Rational WeightPmf::total() const {
  Rational s = 0;
  for (const auto& [w, p] : mass_) s += p;
  return s;
}

Rational WeightPmf::mean() const {
  Rational s = 0;
  for (const auto& [w, p] : mass_) s += from_uint(w) * p;
  return s;
}

Rational WeightPmf::variance() const {
  Rational s1 = 0, s2 = 0;
  for (const auto& [w, p] : mass_) {
    const Rational x = from_uint(w);
    s1 += x * p;
    s2 += x * x * p;
  }
  return s2 - s1 * s1;
}

std::vector<std::pair<std::uint64_t, ExactProb>> WeightPmf::cumulative() const {
  std::vector<std::pair<std::uint64_t, ExactProb>> out;
  out.reserve(mass_.size());
  Rational running = 0;
  for (const auto& [w, p] : mass_) {
    running += p;
    out.emplace_back(w, running);
  }
  return out;
}

ExactProb entry_nonzero_prob(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q) {
  check_q(q);
  check_rank(m, n, k);
  const BigCount num = (power(q, m) - power(q, m - 1)) * (power(q, n) - power(q, n - k));
  const BigCount den = (power(q, m) - 1) * (power(q, n) - 1);
  return make_rational(num, den);
}

CrComponentProbs cr_component_probs(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                                    std::uint64_t q) {
  check_q(q);
  check_rank(m, n, k);
  CrComponentProbs out;
  out.c11_nonzero = make_rational(power(q, m) - power(q, m - 1), power(q, m) - 1);
  // A k = n row space is all of F_q^n and always meets the first coordinate.
  out.r11_nonzero = k < n ? ExactProb(1 - subspace_ratio(n, k, q)) : ExactProb(1);
  return out;
}

Rational average_weight(std::uint32_t m, std::uint32_t n, std::uint32_t k, std::uint64_t q) {
  check_q(q);
  if (m == 0 || n == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (k > std::min(m, n)) throw std::invalid_argument("rank exceeds min(m, n)");
  if (k == 0) return Rational(0);
  return from_uint(static_cast<std::uint64_t>(m) * n) * entry_nonzero_prob(m, n, k, q);
}

WeightPmf rank1_vector_pmf(std::uint32_t len, std::uint64_t q) {
  check_q(q);
  if (len == 0) throw std::invalid_argument("rank1_vector_pmf: length must be positive");
  const BigCount nonzero_vectors = power(q, len) - 1;
  std::map<std::uint64_t, ExactProb> mass;
  for (std::uint32_t mu = 1; mu <= len; ++mu) {
    BigCount binom;
    mpz_bin_uiui(binom.get_mpz_t(), len, mu);
    mass.emplace(mu, make_rational(binom * power(q - 1, mu), nonzero_vectors));
  }
  return WeightPmf(std::move(mass));
}

WeightPmf rank1_weight_pmf(std::uint32_t m, std::uint32_t n, std::uint64_t q) {
  if (m == 0 || n == 0) throw std::invalid_argument("rank1_weight_pmf: dimensions must be positive");
  const WeightPmf col = rank1_vector_pmf(m, q);
  const WeightPmf row = rank1_vector_pmf(n, q);
  std::map<std::uint64_t, ExactProb> mass;
  for (const auto& [mu, pc] : col.mass()) {
    for (const auto& [nu, pr] : row.mass()) mass[mu * nu] += pc * pr;
  }
  return WeightPmf(std::move(mass));
}

Rank1Moments rank1_moments(std::uint32_t m, std::uint32_t n, std::uint64_t q) {
  check_q(q);
  if (m == 0 || n == 0) throw std::invalid_argument("rank1_moments: dimensions must be positive");
  const Rational p = nonzero_entry_prob(q);
  const Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p;
  const Rational mm = from_uint(m), nn = from_uint(n);
  const Rational mn = mm * nn;

  Rank1Moments out;
  out.expected_weight = mn * p2;
  out.expected_square = mn * p2 + mn * (mm + nn - 2) * p3 + mm * (mm - 1) * nn * (nn - 1) * p4;
  out.positive_prob = (1 - make_rational(1, power(q, m))) * (1 - make_rational(1, power(q, n)));

  out.conditioned.mean = out.expected_weight / out.positive_prob;
  out.conditioned.variance =
      out.expected_square / out.positive_prob - out.conditioned.mean * out.conditioned.mean;
  out.conditioned.sd = exact_sqrt(out.conditioned.variance);

  out.unconditioned.mean = out.expected_weight;
  out.unconditioned.variance = mn * (1 - nn - mm) * p4 + mn * (nn + mm - 2) * p3 + mn * p2;
  out.unconditioned.sd = exact_sqrt(out.unconditioned.variance);
  return out;
}

Rational rank1_unconditioned_variance_expanded(std::uint32_t m, std::uint32_t n,
                                               std::uint64_t q) {
  const Rank1Moments mo = rank1_moments(m, n, q);
  return mo.expected_square - mo.expected_weight * mo.expected_weight;
}

double exact_sqrt(const Rational& x) {
  if (x < 0) throw std::domain_error("square root of a negative rational");
  mpf_class f(0, 256);
  f = x;
  mpf_class r(0, 256);
  mpf_sqrt(r.get_mpf_t(), f.get_mpf_t());
  return r.get_d();
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_distance_to_normal(const WeightPmf& pmf) {
  const Rational var = pmf.variance();
  if (var <= 0) throw std::domain_error("ks_distance_to_normal: pmf has zero variance");
  const double mean = to_double(pmf.mean());
  const double sd = exact_sqrt(var);

  double best = 0.0;
  Rational before = 0;
  for (const auto& [w, p] : pmf.mass()) {
    const double phi = normal_cdf((static_cast<double>(w) - mean) / sd);
    const Rational after = before + p;
    best = std::max({best, std::abs(to_double(before) - phi), std::abs(to_double(after) - phi)});
    before = after;
  }
  return best;
}

}  // namespace fqrank
