#include "fqrank/matrix.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fqrank {

MatrixFq::MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
}

MatrixFq::MatrixFq(FieldSpec field, std::size_t rows, std::size_t cols,
                   std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (Elem x : entries_) {
    if (!field_.contains(x)) {
      throw std::invalid_argument("entry " + std::to_string(x) + " outside " +
                                  field_.describe());
    }
  }
}

MatrixFq MatrixFq::identity(FieldSpec field, std::size_t n) {
  MatrixFq out(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

std::size_t weight(const MatrixFq& a) {
  const auto e = a.entries();
  return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](Elem x) { return x != 0; }));
}

std::size_t reduce_in_place(const FieldSpec& field, std::span<Elem> data,
                            std::size_t rows, std::size_t cols,
                            std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && data[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    Elem* pr = data.data() + pivot * cols;
    if (pivot != r) std::swap_ranges(pr, pr + cols, data.data() + r * cols);
    pr = data.data() + r * cols;

    if (pr[c] != 1) {
      const Elem scale = field.inv(pr[c]);
      for (std::size_t j = c; j < cols; ++j) pr[j] = field.mul(pr[j], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* row = data.data() + i * cols;
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (pr[j] != 0) row[j] = field.sub(row[j], field.mul(factor, pr[j]));
      }
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

RrefResult rref(const MatrixFq& a) {
  std::vector<Elem> data(a.entries().begin(), a.entries().end());
  std::vector<std::size_t> pivots;
  reduce_in_place(a.field(), data, a.rows(), a.cols(), &pivots);
  return RrefResult{MatrixFq(a.field(), a.rows(), a.cols(), std::move(data)),
                    std::move(pivots)};
}

std::size_t rank(const MatrixFq& a) {
  std::vector<Elem> data(a.entries().begin(), a.entries().end());
  return reduce_in_place(a.field(), data, a.rows(), a.cols());
}

MatrixFq matmul(const MatrixFq& a, const MatrixFq& b) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument("matmul: operands over different fields");
  }
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " differ");
  }
  const FieldSpec& f = a.field();
  MatrixFq out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Elem x = a(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
      }
    }
  }
  return out;
}

CrPair cr_factor(const MatrixFq& a) {
  RrefResult reduced = rref(a);
  const std::size_t k = reduced.rank();
  if (k == 0) throw std::invalid_argument("cr_factor: zero matrix has no CR factorization");

  std::vector<Elem> r_entries(reduced.rref.entries().begin(),
                              reduced.rref.entries().begin() + k * a.cols());
  MatrixFq r(a.field(), k, a.cols(), std::move(r_entries));

  MatrixFq c(a.field(), a.rows(), k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < k; ++t) c(i, t) = a(i, reduced.pivot_cols[t]);
  }
  return CrPair{std::move(c), std::move(r)};
}

bool is_rref(const MatrixFq& a) {
  std::size_t last_lead = 0;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto row = a.row(i);
    const auto lead = std::find_if(row.begin(), row.end(), [](Elem x) { return x != 0; });
    if (lead == row.end()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    const auto c = static_cast<std::size_t>(lead - row.begin());
    if (i > 0 && c <= last_lead) return false;
    if (*lead != 1) return false;
    for (std::size_t t = 0; t < a.rows(); ++t) {
      if (t != i && a(t, c) != 0) return false;
    }
    last_lead = c;
  }
  return true;
}

void write_matrix(std::ostream& os, const MatrixFq& a) {
  os << a.rows() << ' ' << a.cols() << ' ' << a.field().q() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a(i, j);
    }
    os << '\n';
  }
}

std::string format_matrix(const MatrixFq& a) {
  std::ostringstream os;
  write_matrix(os, a);
  return os.str();
}

namespace {

MatrixFq parse_body(std::istream& is, std::size_t m, std::size_t n, const FieldSpec& field) {
  std::vector<Elem> entries;
  entries.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i) {
    long long v = 0;
    if (!(is >> v)) throw std::invalid_argument("matrix text: truncated entries");
    if (v < 0 || !field.contains(static_cast<std::uint32_t>(v))) {
      throw std::invalid_argument("matrix text: entry " + std::to_string(v) +
                                  " outside " + field.describe());
    }
    entries.push_back(static_cast<Elem>(v));
  }
  return MatrixFq(field, m, n, std::move(entries));
}

void parse_header(std::istream& is, std::size_t& m, std::size_t& n, std::uint32_t& q) {
  long long mm = 0, nn = 0, qq = 0;
  if (!(is >> mm >> nn >> qq)) throw std::invalid_argument("matrix text: bad header");
  if (mm <= 0 || nn <= 0 || qq < 2 || qq > kMaxFieldOrder) {
    throw std::invalid_argument("matrix text: header out of range");
  }
  m = static_cast<std::size_t>(mm);
  n = static_cast<std::size_t>(nn);
  q = static_cast<std::uint32_t>(qq);
}

}  // namespace

MatrixFq parse_matrix(std::istream& is) {
  std::size_t m = 0, n = 0;
  std::uint32_t q = 0;
  parse_header(is, m, n, q);
  return parse_body(is, m, n, make_field_of_order(q));
}

MatrixFq parse_matrix(std::istream& is, const FieldSpec& field) {
  std::size_t m = 0, n = 0;
  std::uint32_t q = 0;
  parse_header(is, m, n, q);
  if (q != field.q()) {
    throw std::invalid_argument("matrix text: q = " + std::to_string(q) +
                                " does not match " + field.describe());
  }
  return parse_body(is, m, n, field);
}

MatrixFq parse_matrix(const std::string& text) {
  std::istringstream is(text);
  return parse_matrix(is);
}

}  // namespace fqrank
