#ifndef FQRANK_ORACLE_H_
#define FQRANK_ORACLE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fqrank/distributions.h"
#include "fqrank/exact.h"
#include "fqrank/gf.h"

// Ground truth by exhaustive enumeration of all q^{mn} matrices.
namespace fqrank {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 24;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact number of m x n matrices with each (rank, weight).
struct JointTable {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  // Only nonzero cells are stored.
  std::map<std::pair<std::uint32_t, std::uint32_t>, BigCount> counts;

  BigCount count(std::uint32_t rank, std::uint32_t weight) const;
  BigCount total() const;
  std::map<std::uint32_t, BigCount> rank_totals() const;
  std::map<std::uint32_t, BigCount> weights_of_rank(std::uint32_t rank) const;
  // Exact mean weight among rank-k matrices. Throws if none exist.
  Rational mean_weight(std::uint32_t rank) const;
  // Weight law among rank-k matrices.
  WeightPmf weight_pmf(std::uint32_t rank) const;
};

// Number of rank-k matrices with a nonzero entry at each cell.
struct EntryCountTable {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t k = 0;
  std::vector<BigCount> counts;  // row-major, m * n

  const BigCount& at(std::uint32_t i, std::uint32_t j) const { return counts[i * n + j]; }
  bool is_constant() const;
};

// `threads` = 0 uses every available processor. Throws CapExceeded when
// q^{mn} > cap and std::invalid_argument for empty dimensions.
JointTable enumerate_joint(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                           std::uint64_t cap = kDefaultEnumerationCap, unsigned threads = 1);

EntryCountTable enumerate_entry_counts(std::uint32_t m, std::uint32_t n,
                                       const FieldSpec& field, std::uint32_t k,
                                       std::uint64_t cap = kDefaultEnumerationCap,
                                       unsigned threads = 1);

// CSV with header "rank,weight,count", rows sorted by (rank, weight). Lines
// starting with '#' carry the parameter echo and are skipped when reading.
void write_joint_csv(std::ostream& os, const JointTable& table);
JointTable read_joint_csv(std::istream& is);

}  // namespace fqrank

#endif  // FQRANK_ORACLE_H_
