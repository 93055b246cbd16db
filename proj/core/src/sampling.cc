#include "fqrank/sampling.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fqrank {
namespace {

// Fully reduced basis of a growing subspace of F_q^len.
class SpanBasis {
 public:
  SpanBasis(const FieldSpec& field, std::size_t len) : field_(field), len_(len) {}

  // Reduces v against the basis in place; v ends up zero iff it was in the span.
  void reduce(std::vector<Elem>& v) const {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      const Elem factor = v[pivots_[b]];
      if (factor == 0) continue;
      const auto& row = rows_[b];
      for (std::size_t j = 0; j < len_; ++j) {
        if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
      }
    }
  }

  // Adds a vector already reduced and nonzero.
  void insert_reduced(std::vector<Elem> v) {
    const auto c = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; }) - v.begin());
    const Elem scale = field_.inv(v[c]);
    for (auto& x : v) x = field_.mul(x, scale);
    for (auto& row : rows_) {
      const Elem factor = row[c];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < len_; ++j) {
        if (v[j] != 0) row[j] = field_.sub(row[j], field_.mul(factor, v[j]));
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
  }

 private:
  const FieldSpec& field_;
  std::size_t len_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

// Draws `count` vectors of length `len`, each uniform outside the span of the
// previous ones, by rejection.
std::vector<std::vector<Elem>> draw_independent(std::uint32_t count, std::uint32_t len,
                                                const FieldSpec& field, RandomStream& stream) {
  SpanBasis basis(field, len);
  std::vector<std::vector<Elem>> out;
  out.reserve(count);
  std::vector<Elem> v(len), work(len);
  while (out.size() < count) {
    for (auto& x : v) x = static_cast<Elem>(stream.uniform(field.q()));
    work = v;
    basis.reduce(work);
    if (std::all_of(work.begin(), work.end(), [](Elem x) { return x == 0; })) continue;
    basis.insert_reduced(work);
    out.push_back(v);
  }
  return out;
}

}  // namespace

MatrixFq sample_full_rank(std::uint32_t m, std::uint32_t k, const FieldSpec& field,
                          RandomStream& stream) {
  if (k == 0 || k > m) {
    throw std::invalid_argument("sample_full_rank: need 1 <= k <= m, got k = " +
                                std::to_string(k) + ", m = " + std::to_string(m));
  }
  const auto columns = draw_independent(k, m, field, stream);
  MatrixFq c(field, m, k);
  for (std::uint32_t j = 0; j < k; ++j) {
    for (std::uint32_t i = 0; i < m; ++i) c(i, j) = columns[j][i];
  }
  return c;
}

MatrixFq sample_rref(std::uint32_t k, std::uint32_t n, const FieldSpec& field,
                     RandomStream& stream) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("sample_rref: need 1 <= k <= n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  const auto rows = draw_independent(k, n, field, stream);
  std::vector<Elem> entries;
  entries.reserve(static_cast<std::size_t>(k) * n);
  for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  return rref(MatrixFq(field, k, n, std::move(entries))).rref;
}

MatrixFq sample_rank_k(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                       const FieldSpec& field, RandomStream& stream) {
  if (k == 0 || k > std::min(m, n)) {
    throw std::invalid_argument("sample_rank_k: rank " + std::to_string(k) +
                                " outside [1, min(m, n)]");
  }
  const MatrixFq c = sample_full_rank(m, k, field, stream);
  const MatrixFq r = sample_rref(k, n, field, stream);
  return matmul(c, r);
}

Rational EmpiricalPmf::mean() const {
  if (samples == 0) throw std::invalid_argument("empty sample");
  BigCount s = 0;
  for (const auto& [w, c] : counts) s += to_big(w) * to_big(c);
  Rational r(s, to_big(samples));
  r.canonicalize();
  return r;
}

Rational EmpiricalPmf::variance() const {
  if (samples < 2) throw std::invalid_argument("sample variance needs two draws");
  const Rational mu = mean();
  Rational ss = 0;
  for (const auto& [w, c] : counts) {
    const Rational d = Rational(w) - mu;
    ss += d * d * Rational(to_big(c));
  }
  return ss / Rational(to_big(samples - 1));
}

EmpiricalPmf empirical_weight_pmf(std::uint32_t m, std::uint32_t n, std::uint32_t k,
                                  const FieldSpec& field, std::uint64_t samples,
                                  const RandomStream& stream, unsigned threads) {
  if (samples == 0) throw std::invalid_argument("empirical_weight_pmf: need at least one draw");
  if (k == 0 || k > std::min(m, n)) {
    throw std::invalid_argument("empirical_weight_pmf: rank " + std::to_string(k) +
                                " outside [1, min(m, n)]");
  }
  const std::uint64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

  const std::size_t width = static_cast<std::size_t>(m) * n + 1;
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(width, 0));
  auto worker = [&](unsigned t) {
    for (std::uint64_t c = t; c < chunks; c += threads) {
      RandomStream local = stream.substream(c);
      const std::uint64_t begin = c * kSamplesPerChunk;
      const std::uint64_t end = std::min(samples, begin + kSamplesPerChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        ++partial[t][weight(sample_rank_k(m, n, k, field, local))];
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  EmpiricalPmf out;
  out.samples = samples;
  for (std::size_t w = 0; w < width; ++w) {
    std::uint64_t total = 0;
    for (const auto& p : partial) total += p[w];
    if (total) out.counts[static_cast<std::uint32_t>(w)] = total;
  }
  return out;
}

double chi_square_statistic(std::span<const std::uint64_t> observed,
                            std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.empty()) {
    throw std::invalid_argument("chi_square_statistic: size mismatch");
  }
  double n = 0;
  for (auto o : observed) n += static_cast<double>(o);
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i];
    if (expected <= 0) throw std::invalid_argument("chi_square_statistic: empty cell");
    const double d = static_cast<double>(observed[i]) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace fqrank
