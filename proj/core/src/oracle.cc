#include "fqrank/oracle.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "fqrank/matrix.h"

namespace fqrank {
namespace {

std::uint64_t state_count(std::uint32_t m, std::uint32_t n, std::uint32_t q, std::uint64_t cap) {
  if (m == 0 || n == 0) throw std::invalid_argument("matrix dimensions must be positive");
  std::uint64_t total = 1;
  const std::uint64_t cells = static_cast<std::uint64_t>(m) * n;
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (total > cap / q) {
      throw CapExceeded("enumeration of " + std::to_string(q) + "^" + std::to_string(cells) +
                        " matrices exceeds cap " + std::to_string(cap));
    }
    total *= q;
  }
  if (total > cap) {
    throw CapExceeded("enumeration of " + std::to_string(total) +
                      " matrices exceeds cap " + std::to_string(cap));
  }
  return total;
}

unsigned resolve_threads(unsigned threads, std::uint64_t total) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  // Small instances are not worth a thread each.
  const std::uint64_t useful = std::max<std::uint64_t>(1, total / 4096);
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, useful));
}

// Calls visit(entries, rank, weight) for every matrix with odometer index in
// [begin, end). The first cell is the least significant digit.
template <typename Visit>
void for_each_matrix(const FieldSpec& field, std::uint32_t m, std::uint32_t n,
                     std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const std::size_t cells = static_cast<std::size_t>(m) * n;
  const std::uint32_t q = field.q();
  std::vector<Elem> digits(cells, 0);
  std::uint64_t rest = begin;
  std::uint32_t weight = 0;
  for (std::size_t i = 0; i < cells; ++i) {
    digits[i] = static_cast<Elem>(rest % q);
    rest /= q;
    if (digits[i] != 0) ++weight;
  }
  std::vector<Elem> scratch(cells);
  for (std::uint64_t index = begin; index < end; ++index) {
    std::copy(digits.begin(), digits.end(), scratch.begin());
    const auto r = static_cast<std::uint32_t>(reduce_in_place(field, scratch, m, n));
    visit(std::span<const Elem>(digits), r, weight);

    for (std::size_t i = 0; i < cells; ++i) {
      if (digits[i] == 0) ++weight;
      if (++digits[i] < q) break;
      digits[i] = 0;
      --weight;
    }
  }
}

// Runs `kernel(begin, end, partial)` over disjoint blocks and sums the partials.
template <typename Kernel>
std::vector<std::uint64_t> run_blocks(std::uint64_t total, unsigned threads, std::size_t width,
                                      Kernel kernel) {
  threads = resolve_threads(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(width, 0));
  if (threads == 1) {
    kernel(0, total, partial[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t block = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = std::min(total, t * block);
      const std::uint64_t e = std::min(total, b + block);
      pool.emplace_back([&, b, e, t] { kernel(b, e, partial[t]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> sum(width, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < width; ++i) sum[i] += p[i];
  }
  return sum;
}

}  // namespace

BigCount JointTable::count(std::uint32_t rank, std::uint32_t weight) const {
  auto it = counts.find({rank, weight});
  return it == counts.end() ? BigCount(0) : it->second;
}

BigCount JointTable::total() const {
  BigCount s = 0;
  for (const auto& [key, c] : counts) s += c;
  return s;
}

std::map<std::uint32_t, BigCount> JointTable::rank_totals() const {
  std::map<std::uint32_t, BigCount> out;
  for (const auto& [key, c] : counts) out[key.first] += c;
  return out;
}

std::map<std::uint32_t, BigCount> JointTable::weights_of_rank(std::uint32_t rank) const {
  std::map<std::uint32_t, BigCount> out;
  for (const auto& [key, c] : counts) {
    if (key.first == rank) out[key.second] = c;
  }
  return out;
}

Rational JointTable::mean_weight(std::uint32_t rank) const {
  BigCount n = 0, s = 0;
  for (const auto& [w, c] : weights_of_rank(rank)) {
    n += c;
    s += c * w;
  }
  if (n == 0) throw std::invalid_argument("no matrices of rank " + std::to_string(rank));
  Rational r(s, n);
  r.canonicalize();
  return r;
}

WeightPmf JointTable::weight_pmf(std::uint32_t rank) const {
  const auto row = weights_of_rank(rank);
  BigCount n = 0;
  for (const auto& [w, c] : row) n += c;
  if (n == 0) throw std::invalid_argument("no matrices of rank " + std::to_string(rank));
  std::map<std::uint64_t, ExactProb> mass;
  for (const auto& [w, c] : row) mass.emplace(w, ExactProb(c, n));
  return WeightPmf(std::move(mass));
}

bool EntryCountTable::is_constant() const {
  return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
}

JointTable enumerate_joint(std::uint32_t m, std::uint32_t n, const FieldSpec& field,
                           std::uint64_t cap, unsigned threads) {
  const std::uint64_t total = state_count(m, n, field.q(), cap);
  const std::uint32_t cells = m * n;
  const std::size_t stride = cells + 1;
  const std::size_t width = (std::min(m, n) + 1) * stride;

  const auto sums = run_blocks(total, threads, width,
                               [&](std::uint64_t b, std::uint64_t e, std::vector<std::uint64_t>& out) {
                                 for_each_matrix(field, m, n, b, e,
                                                 [&](std::span<const Elem>, std::uint32_t r, std::uint32_t w) {
                                                   ++out[r * stride + w];
                                                 });
                               });

  JointTable table{m, n, field.q(), {}};
  for (std::size_t i = 0; i < width; ++i) {
    if (sums[i] == 0) continue;
    table.counts.emplace(std::make_pair(static_cast<std::uint32_t>(i / stride),
                                        static_cast<std::uint32_t>(i % stride)),
                         to_big(sums[i]));
  }
  return table;
}

EntryCountTable enumerate_entry_counts(std::uint32_t m, std::uint32_t n,
                                       const FieldSpec& field, std::uint32_t k,
                                       std::uint64_t cap, unsigned threads) {
  if (k == 0 || k > std::min(m, n)) {
    throw std::invalid_argument("rank " + std::to_string(k) + " outside [1, min(m, n)]");
  }
  const std::uint64_t total = state_count(m, n, field.q(), cap);
  const std::size_t cells = static_cast<std::size_t>(m) * n;

  const auto sums = run_blocks(total, threads, cells,
                               [&](std::uint64_t b, std::uint64_t e, std::vector<std::uint64_t>& out) {
                                 for_each_matrix(field, m, n, b, e,
                                                 [&](std::span<const Elem> a, std::uint32_t r, std::uint32_t) {
                                                   if (r != k) return;
                                                   for (std::size_t i = 0; i < cells; ++i) {
                                                     if (a[i] != 0) ++out[i];
                                                   }
                                                 });
                               });

  EntryCountTable table{m, n, field.q(), k, {}};
  table.counts.reserve(cells);
  for (std::uint64_t c : sums) table.counts.push_back(to_big(c));
  return table;
}

void write_joint_csv(std::ostream& os, const JointTable& table) {
  os << "# m=" << table.m << " n=" << table.n << " q=" << table.q << '\n';
  os << "rank,weight,count\n";
  for (const auto& [key, c] : table.counts) {
    os << key.first << ',' << key.second << ',' << c.get_str() << '\n';
  }
}

JointTable read_joint_csv(std::istream& is) {
  JointTable table;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream tokens(line.substr(1));
      std::string tok;
      while (tokens >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "m") table.m = static_cast<std::uint32_t>(std::stoul(val));
        if (key == "n") table.n = static_cast<std::uint32_t>(std::stoul(val));
        if (key == "q") table.q = static_cast<std::uint32_t>(std::stoul(val));
      }
      continue;
    }
    if (!header) {
      if (line != "rank,weight,count") {
        throw std::invalid_argument("joint csv: unexpected header '" + line + "'");
      }
      header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string r, w, c;
    if (!std::getline(fields, r, ',') || !std::getline(fields, w, ',') ||
        !std::getline(fields, c)) {
      throw std::invalid_argument("joint csv: malformed row '" + line + "'");
    }
    BigCount count;
    if (count.set_str(c, 10) != 0) throw std::invalid_argument("joint csv: bad count '" + c + "'");
    table.counts[{static_cast<std::uint32_t>(std::stoul(r)),
                  static_cast<std::uint32_t>(std::stoul(w))}] = count;
  }
  if (!header) throw std::invalid_argument("joint csv: missing header");
  return table;
}

}  // namespace fqrank
