#ifndef FQRANK_MATRIX_H_
#define FQRANK_MATRIX_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fqrank/gf.h"

namespace fqrank {

// Dense m x n matrix over F_q, entries stored row-major as element indices.
class MatrixFq {
 public:
  // Zero matrix. Throws std::invalid_argument if rows or cols is zero.
  MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols);
  // Throws if entries.size() != rows * cols or any entry is outside the field.
  MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols,
           std::vector<Elem> entries);

  static MatrixFq identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::span<const Elem> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const Elem> entries() const { return entries_; }

  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  MatrixFq rref;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

struct CrPair {
  MatrixFq c;  // m x k, rank k
  MatrixFq r;  // k x n, reduced row echelon form without zero rows
};

// Number of nonzero entries.
std::size_t weight(const MatrixFq& a);

RrefResult rref(const MatrixFq& a);
std::size_t rank(const MatrixFq& a);

// Throws std::invalid_argument on inner-dimension or field mismatch.
MatrixFq matmul(const MatrixFq& a, const MatrixFq& b);

// A = C R with R the nonzero rows of rref(A) and C the pivot columns of A.
// Throws std::invalid_argument for the zero matrix.
CrPair cr_factor(const MatrixFq& a);

// True when a satisfies every reduced-row-echelon condition.
bool is_rref(const MatrixFq& a);

// In-place Gauss-Jordan elimination over a row-major buffer. Returns the rank;
// on return the first `rank` rows hold the reduced basis. Writes pivot
// columns to `pivots` when non-null. Shared by the enumeration kernels.
std::size_t reduce_in_place(const FieldSpec& field, std::span<Elem> data,
                            std::size_t rows, std::size_t cols,
                            std::vector<std::size_t>* pivots = nullptr);

// Text form: "m n q" then m lines of n space-separated element indices.
std::string format_matrix(const MatrixFq& a);
void write_matrix(std::ostream& os, const MatrixFq& a);

// Parses the text form. The field is looked up from q alone unless an explicit
// field is supplied, in which case q must match it.
MatrixFq parse_matrix(std::istream& is);
MatrixFq parse_matrix(std::istream& is, const FieldSpec& field);
MatrixFq parse_matrix(const std::string& text);

}  // namespace fqrank

#endif  // FQRANK_MATRIX_H_
