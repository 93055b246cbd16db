#ifndef FQRANK_COUNTING_H_
#define FQRANK_COUNTING_H_

#include <array>
#include <cstdint>

#include "fqrank/exact.h"

// Exact counts of subspaces and fixed-rank matrices. Every formula here is a
// polynomial or exact quotient in q, so any integer q >= 2 is accepted, prime
// power or not. All functions throw std::invalid_argument on out-of-range
// arguments.
namespace fqrank {

// Ordered k-tuples of linearly independent vectors in F_q^n:
// (q^n - 1)(q^n - q)...(q^n - q^{k-1}).
BigCount count_independent_tuples(std::uint32_t n, std::uint32_t k, std::uint64_t q);

// Number of k-dimensional subspaces of F_q^n.
BigCount gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t q);

// Number of m x n matrices of rank k.
BigCount count_rank_matrices(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q);

// The three algebraically equal expressions for the rank-k count, evaluated
// independently: [m k]_q * tuples(n, k), [n k]_q * tuples(m, k), and
// tuples(m, k) * tuples(n, k) / tuples(k, k).
std::array<BigCount, 3> count_rank_matrices_forms(std::uint32_t m, std::uint32_t n,
                                                  std::uint32_t k, std::uint64_t q);

BigCount count_invertible(std::uint32_t n, std::uint64_t q);

// [n-1 k]_q / [n k]_q = (q^{n-k} - 1) / (q^n - 1), for 0 <= k < n. This is the
// probability that a uniform k-dimensional subspace lies inside the
// coordinate hyperplane x_1 = 0.
ExactProb subspace_ratio(std::uint32_t n, std::uint32_t k, std::uint64_t q);

// q^e as an exact integer.
BigCount power(std::uint64_t q, std::uint32_t e);

// Exact a / b. Throws std::logic_error when b does not divide a.
BigCount exact_divide(const BigCount& a, const BigCount& b);

}  // namespace fqrank

#endif  // FQRANK_COUNTING_H_
