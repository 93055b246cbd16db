#ifndef FQRANK_SAMPLING_H_
#define FQRANK_SAMPLING_H_

#include <cstdint>
#include <map>
#include <span>

#include "fqrank/exact.h"
#include "fqrank/gf.h"
#include "fqrank/matrix.h"
#include "fqrank/random_stream.h"

namespace fqrank {

// Uniform m x k matrix of rank k. Columns are drawn one at a time, each
// uniform among vectors outside the span of the earlier columns.
MatrixFq sample_full_rank(std::uint32_t m, std::uint32_t k, const FieldSpec& field,
                          RandomStream& stream);

// Uniform k x n reduced row echelon matrix without zero rows, i.e. a uniform
// k-dimensional subspace of F_q^n.
MatrixFq sample_rref(std::uint32_t k, std::uint32_t n, const FieldSpec& field,
                     RandomStream& stream);

// Uniform m x n matrix of rank k as C R with C and R drawn independently.
MatrixFq sample_rank_k(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                       const FieldSpec& field, RandomStream& stream);

struct EmpiricalPmf {
  std::uint64_t samples = 0;
  std::map<std::uint32_t, std::uint64_t> counts;

  Rational mean() const;
  // Unbiased sample variance.
  Rational variance() const;
};

// Weight histogram of `samples` independent rank-k draws. Draws are split
// into fixed-size chunks with one substream each, so the result depends on
// the seed only, never on `threads` (0 = all processors).
EmpiricalPmf empirical_weight_pmf(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                                  const FieldSpec& field, std::uint64_t samples,
                                  const RandomStream& stream, unsigned threads = 1);

inline constexpr std::uint64_t kSamplesPerChunk = 4096;

// Pearson statistic sum (O - E)^2 / E for observed counts against
// probabilities summing to one.
double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> probabilities);

}  // namespace fqrank

#endif  // FQRANK_SAMPLING_H_
