#include "fqrank/counting.h"

#include <stdexcept>
#include <string>

namespace fqrank {
namespace {

void check_q(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2, got " + std::to_string(q));
}

void check_dim(std::uint32_t n, std::uint32_t k, const char* what) {
  if (k > n) {
    throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
}

}  // namespace

BigCount power(std::uint64_t q, std::uint32_t e) {
  BigCount base;
  mpz_set_ui(base.get_mpz_t(), static_cast<unsigned long>(q));
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigCount exact_divide(const BigCount& a, const BigCount& b) {
  if (b == 0 || mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0) {
    throw std::logic_error("inexact division " + a.get_str() + " / " + b.get_str());
  }
  BigCount out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

BigCount count_independent_tuples(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
  check_q(q);
  check_dim(n, k, "count_independent_tuples");
  const BigCount qn = power(q, n);
  BigCount out = 1;
  BigCount qi = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    out *= qn - qi;
    qi *= static_cast<unsigned long>(q);
  }
  return out;
}

BigCount gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
  check_q(q);
  check_dim(n, k, "gaussian_binomial");
  return exact_divide(count_independent_tuples(n, k, q), count_independent_tuples(k, k, q));
}

BigCount count_rank_matrices(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q) {
  check_q(q);
  if (k > m || k > n) {
    throw std::invalid_argument("count_rank_matrices: rank " + std::to_string(k) +
                                " exceeds min(m, n)");
  }
  return gaussian_binomial(m, k, q) * count_independent_tuples(n, k, q);
}

std::array<BigCount, 3> count_rank_matrices_forms(std::uint32_t m, std::uint32_t n,
                                                  std::uint32_t k, std::uint64_t q) {
  check_q(q);
  if (k > m || k > n) {
    throw std::invalid_argument("count_rank_matrices_forms: rank exceeds min(m, n)");
  }
  const BigCount tm = count_independent_tuples(m, k, q);
  const BigCount tn = count_independent_tuples(n, k, q);
  const BigCount tk = count_independent_tuples(k, k, q);
  return {gaussian_binomial(m, k, q) * tn, gaussian_binomial(n, k, q) * tm,
          exact_divide(tm * tn, tk)};
}

BigCount count_invertible(std::uint32_t n, std::uint64_t q) {
  return count_independent_tuples(n, n, q);
}

ExactProb subspace_ratio(std::uint32_t n, std::uint32_t k, std::uint64_t q) {
  check_q(q);
  if (k >= n) {
    throw std::invalid_argument("subspace_ratio: need k < n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  ExactProb out(power(q, n - k) - 1, power(q, n) - 1);
  out.canonicalize();
  return out;
}

}  // namespace fqrank
