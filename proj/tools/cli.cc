#include "cli.h"

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fqrank/counting.h"
#include "fqrank/distributions.h"
#include "fqrank/gf.h"
#include "fqrank/oracle.h"
#include "fqrank/random_stream.h"
#include "fqrank/sampling.h"
#include "output_record.h"

namespace fqrank::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::string modulus;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
  std::string format = "csv";
  std::uint64_t cap = kDefaultEnumerationCap;
  unsigned threads = 0;
  bool cumulative = false;
  bool normal_overlay = false;
  std::vector<std::uint32_t> sizes{10, 25, 50, 100};

  CLI::Option* k_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* modulus_opt = nullptr;
};

// Per-subcommand handles, copied into Options once the subcommand is known.
struct Handles {
  CLI::Option* k_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* modulus_opt = nullptr;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

Format output_format(const Options& o) {
  return o.format == "json" ? Format::kJson : Format::kCsv;
}

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("--modulus expects comma-separated coefficients, got '" + text + "'");
    }
  }
  return out;
}

FieldSpec resolve_field(const Options& o) {
  if (given(o.p_opt)) {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (given(o.modulus_opt)) modulus = parse_modulus(o.modulus);
    FieldSpec f = make_field(o.p, o.e, modulus);
    if (given(o.q_opt) && o.q != f.q()) {
      throw UsageError("--q " + std::to_string(o.q) + " disagrees with --p " +
                       std::to_string(o.p) + " --e " + std::to_string(o.e));
    }
    return f;
  }
  if (!given(o.q_opt)) {
    throw UsageError("a field is required: pass a prime --q, or --p and --e");
  }
  if (!is_prime(o.q)) {
    throw UsageError("--q " + std::to_string(o.q) +
                     " is not prime; pass --p and --e (and optionally --modulus)");
  }
  if (given(o.modulus_opt)) throw UsageError("--modulus requires --p and --e");
  return make_field(static_cast<std::uint32_t>(o.q), 1);
}

std::uint64_t require_q(const Options& o) {
  if (!given(o.q_opt)) throw UsageError("--q is required");
  return o.q;
}

void echo_field(Record& r, const FieldSpec& f) {
  r.param("q", Cell::integer(f.q()));
  r.param("p", Cell::integer(f.p()));
  r.param("e", Cell::integer(f.e()));
  if (f.e() > 1) {
    std::string mod;
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
      mod += (i ? ";" : "") + std::to_string(f.modulus()[i]);
    }
    r.param("modulus", Cell::str(mod));
  }
}

std::vector<std::uint32_t> ranks_to_report(const Options& o, std::uint32_t lowest) {
  const std::uint32_t top = std::min(o.m, o.n);
  if (given(o.k_opt)) {
    if (o.k > top) {
      throw UsageError("--k " + std::to_string(o.k) + " exceeds min(m, n) = " + std::to_string(top));
    }
    return {o.k};
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = lowest; k <= top; ++k) out.push_back(k);
  return out;
}

Record cmd_count(const Options& o) {
  const std::uint64_t q = require_q(o);
  Record r{"count", {}, {}, {"k", "count", "gaussian_binomial_m_k", "independent_tuples_n_k"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  if (given(o.k_opt)) r.param("k", Cell::integer(o.k));
  r.param("q", Cell::integer(static_cast<std::int64_t>(q)));
  for (std::uint32_t k : ranks_to_report(o, 0)) {
    r.rows.push_back({Cell::integer(k), Cell::big(count_rank_matrices(o.m, o.n, k, q)),
                      Cell::big(gaussian_binomial(o.m, k, q)),
                      Cell::big(count_independent_tuples(o.n, k, q))});
  }
  r.note("total_matrices", Cell::big(power(q, o.m * o.n)));
  if (o.m == o.n) r.note("invertible", Cell::big(count_invertible(o.n, q)));
  return r;
}

Record cmd_avg_weight(const Options& o) {
  const std::uint64_t q = require_q(o);
  Record r{"avg-weight", {}, {}, {"k", "average_weight", "average_weight_decimal",
                                  "entry_nonzero_prob", "entry_nonzero_prob_decimal",
                                  "pr_c11_nonzero", "pr_r11_nonzero"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  if (given(o.k_opt)) r.param("k", Cell::integer(o.k));
  r.param("q", Cell::integer(static_cast<std::int64_t>(q)));
  for (std::uint32_t k : ranks_to_report(o, 1)) {
    const Rational avg = average_weight(o.m, o.n, k, q);
    if (k == 0) {
      r.rows.push_back({Cell::integer(0), Cell::ratio(avg), Cell::decimal(avg), Cell::ratio(0),
                        Cell::decimal(0), Cell::str(""), Cell::str("")});
      continue;
    }
    const ExactProb entry = entry_nonzero_prob(o.m, o.n, k, q);
    const CrComponentProbs cr = cr_component_probs(o.m, o.n, k, q);
    r.rows.push_back({Cell::integer(k), Cell::ratio(avg), Cell::decimal(avg), Cell::ratio(entry),
                      Cell::decimal(entry), Cell::ratio(cr.c11_nonzero), Cell::ratio(cr.r11_nonzero)});
  }
  Rational unconditioned(to_big(q - 1), to_big(q));
  unconditioned.canonicalize();
  r.note_rational("unconditioned_entry_prob", unconditioned);
  return r;
}

void note_moments(Record& r, const Rank1Moments& mo) {
  r.note_rational("conditioned_mean", mo.conditioned.mean);
  r.note_rational("conditioned_variance", mo.conditioned.variance);
  r.note("conditioned_sd", Cell::real(mo.conditioned.sd));
  r.note_rational("unconditioned_mean", mo.unconditioned.mean);
  r.note_rational("unconditioned_variance", mo.unconditioned.variance);
  r.note("unconditioned_sd", Cell::real(mo.unconditioned.sd));
}

Record cmd_rank1_pmf(const Options& o) {
  const std::uint64_t q = require_q(o);
  const bool cumulative = o.cumulative || o.normal_overlay;
  Record r{"rank1-pmf", {}, {}, {"weight", "pmf_num_den", "pmf_decimal"}, {}};
  if (cumulative) r.columns.push_back("cdf");
  if (o.normal_overlay) r.columns.push_back("normal_cdf");
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  r.param("q", Cell::integer(static_cast<std::int64_t>(q)));

  const WeightPmf pmf = rank1_weight_pmf(o.m, o.n, q);
  const Rank1Moments mo = rank1_moments(o.m, o.n, q);
  const double mean = to_double(mo.conditioned.mean);
  const double sd = mo.conditioned.sd;
  Rational running = 0;
  for (const auto& [w, p] : pmf.mass()) {
    running += p;
    std::vector<Cell> row{Cell::integer(static_cast<std::int64_t>(w)), Cell::ratio(p), Cell::decimal(p)};
    if (cumulative) row.push_back(Cell::decimal(running));
    if (o.normal_overlay) {
      // A degenerate law has no normal overlay; use the point-mass cdf.
      const double phi = sd > 0 ? normal_cdf((static_cast<double>(w) - mean) / sd)
                                : (static_cast<double>(w) >= mean ? 1.0 : 0.0);
      row.push_back(Cell::real(phi));
    }
    r.rows.push_back(std::move(row));
  }
  r.note("support_size", Cell::integer(static_cast<std::int64_t>(pmf.size())));
  note_moments(r, mo);
  if (o.normal_overlay && sd > 0) r.note("ks_distance", Cell::real(ks_distance_to_normal(pmf)));
  return r;
}

Record cmd_moments(const Options& o) {
  const std::uint64_t q = require_q(o);
  Record r{"moments", {}, {}, {"quantity", "num_den", "decimal"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  r.param("q", Cell::integer(static_cast<std::int64_t>(q)));
  const Rank1Moments mo = rank1_moments(o.m, o.n, q);
  auto exact = [&](const char* name, const Rational& v) {
    r.rows.push_back({Cell::str(name), Cell::ratio(v), Cell::decimal(v)});
  };
  auto approx = [&](const char* name, double v) {
    r.rows.push_back({Cell::str(name), Cell::str(""), Cell::real(v)});
  };
  exact("expected_weight", mo.expected_weight);
  exact("expected_square", mo.expected_square);
  exact("positive_prob", mo.positive_prob);
  exact("conditioned_mean", mo.conditioned.mean);
  exact("conditioned_variance", mo.conditioned.variance);
  approx("conditioned_sd", mo.conditioned.sd);
  exact("unconditioned_mean", mo.unconditioned.mean);
  exact("unconditioned_variance", mo.unconditioned.variance);
  approx("unconditioned_sd", mo.unconditioned.sd);
  return r;
}

Record cmd_oracle(const Options& o) {
  const FieldSpec f = resolve_field(o);
  Record r{"oracle", {}, {}, {"rank", "weight", "count"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  echo_field(r, f);
  r.param("cap", Cell::integer(static_cast<std::int64_t>(o.cap)));
  const JointTable t = enumerate_joint(o.m, o.n, f, o.cap, o.threads);
  for (const auto& [key, c] : t.counts) {
    r.rows.push_back({Cell::integer(key.first), Cell::integer(key.second), Cell::big(c)});
  }
  return r;
}

Record cmd_entry_counts(const Options& o) {
  const FieldSpec f = resolve_field(o);
  if (!given(o.k_opt)) throw UsageError("--k is required");
  Record r{"entry-counts", {}, {}, {"i", "j", "count"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  r.param("k", Cell::integer(o.k));
  echo_field(r, f);
  r.param("cap", Cell::integer(static_cast<std::int64_t>(o.cap)));
  const EntryCountTable t = enumerate_entry_counts(o.m, o.n, f, o.k, o.cap, o.threads);
  for (std::uint32_t i = 0; i < o.m; ++i) {
    for (std::uint32_t j = 0; j < o.n; ++j) {
      r.rows.push_back({Cell::integer(i), Cell::integer(j), Cell::big(t.at(i, j))});
    }
  }
  r.note("cell_constant", Cell::boolean(t.is_constant()));
  r.note("rank_count", Cell::big(count_rank_matrices(o.m, o.n, o.k, f.q())));
  return r;
}

std::uint32_t required_rank(const Options& o) {
  if (!given(o.k_opt)) throw UsageError("--k is required");
  return o.k;
}

Record cmd_sample(const Options& o) {
  const FieldSpec f = resolve_field(o);
  const std::uint32_t k = required_rank(o);
  const std::uint64_t samples = o.samples == 0 ? 1 : o.samples;
  Record r{"sample", {}, {}, {"sample", "rank", "weight", "entries"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  r.param("k", Cell::integer(k));
  echo_field(r, f);
  r.param("seed", Cell::str(std::to_string(o.seed)));
  r.param("samples", Cell::integer(static_cast<std::int64_t>(samples)));
  RandomStream stream(o.seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const MatrixFq a = sample_rank_k(o.m, o.n, k, f, stream);
    std::string entries;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
      entries += (i ? " " : "") + std::to_string(a.entries()[i]);
    }
    r.rows.push_back({Cell::integer(static_cast<std::int64_t>(s)),
                      Cell::integer(static_cast<std::int64_t>(rank(a))),
                      Cell::integer(static_cast<std::int64_t>(weight(a))), Cell::str(entries)});
  }
  return r;
}

Record cmd_empirical(const Options& o) {
  const FieldSpec f = resolve_field(o);
  const std::uint32_t k = required_rank(o);
  const std::uint64_t samples = o.samples == 0 ? 10000 : o.samples;
  Record r{"empirical", {}, {}, {"weight", "count", "frequency"}, {}};
  r.param("m", Cell::integer(o.m));
  r.param("n", Cell::integer(o.n));
  r.param("k", Cell::integer(k));
  echo_field(r, f);
  r.param("seed", Cell::str(std::to_string(o.seed)));
  r.param("samples", Cell::integer(static_cast<std::int64_t>(samples)));

  const EmpiricalPmf e = empirical_weight_pmf(o.m, o.n, k, f, samples, RandomStream(o.seed), o.threads);
  for (const auto& [w, c] : e.counts) {
    Rational freq(to_big(c), to_big(samples));
    freq.canonicalize();
    r.rows.push_back({Cell::integer(w), Cell::integer(static_cast<std::int64_t>(c)), Cell::decimal(freq)});
  }
  const Rational closed = average_weight(o.m, o.n, k, f.q());
  r.note_rational("sample_mean", e.mean());
  r.note_rational("closed_form_mean", closed);
  if (samples >= 2) {
    const double se = exact_sqrt(e.variance() / Rational(to_big(samples)));
    r.note("standard_error", Cell::real(se));
    if (se > 0) r.note("z_score", Cell::real(to_double(e.mean() - closed) / se));
  }
  return r;
}

Record cmd_clt(const Options& o) {
  const std::uint64_t q = given(o.q_opt) ? o.q : 2;
  Record r{"clt", {}, {}, {"s", "ks_distance", "support_size", "conditioned_mean", "conditioned_sd"}, {}};
  r.param("q", Cell::integer(static_cast<std::int64_t>(q)));
  std::string sizes;
  for (std::size_t i = 0; i < o.sizes.size(); ++i) sizes += (i ? ";" : "") + std::to_string(o.sizes[i]);
  r.param("sizes", Cell::str(sizes));
  bool decreasing = true;
  double previous = 0;
  for (std::size_t i = 0; i < o.sizes.size(); ++i) {
    const std::uint32_t s = o.sizes[i];
    if (s == 0) throw UsageError("--sizes entries must be positive");
    const WeightPmf pmf = rank1_weight_pmf(s, s, q);
    const Rank1Moments mo = rank1_moments(s, s, q);
    if (mo.conditioned.variance == 0) {
      throw UsageError("size " + std::to_string(s) + " gives a degenerate weight law");
    }
    const double d = ks_distance_to_normal(pmf);
    if (i > 0 && !(d < previous)) decreasing = false;
    previous = d;
    r.rows.push_back({Cell::integer(s), Cell::real(d), Cell::integer(static_cast<std::int64_t>(pmf.size())),
                      Cell::decimal(mo.conditioned.mean), Cell::real(mo.conditioned.sd)});
  }
  r.note("strictly_decreasing", Cell::boolean(decreasing));
  return r;
}

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer: '" + env + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact weight and rank statistics of matrices over finite fields", "fqrank"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::map<const CLI::App*, Handles> handles;
  const CLI::Range positive(std::uint64_t{1}, std::uint64_t{1} << 32);
  auto add_dims = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--m", o.m, "Number of rows")->required()->check(positive);
    sub->add_option("--n", o.n, "Number of columns")->required()->check(positive);
    if (with_k) handles[sub].k_opt = sub->add_option("--k", o.k, "Rank");
  };
  auto add_q = [&](CLI::App* sub) {
    handles[sub].q_opt = sub->add_option("--q", o.q, "Field size (any integer >= 2 for closed forms)")
                  ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
  };
  auto add_field = [&](CLI::App* sub) {
    add_q(sub);
    handles[sub].p_opt = sub->add_option("--p", o.p, "Field characteristic");
    sub->add_option("--e", o.e, "Extension degree")->check(positive);
    handles[sub].modulus_opt = sub->add_option("--modulus", o.modulus,
                                    "Irreducible monic modulus, coefficients from x^0 up, comma separated");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "Worker threads (0 = all processors)");
  };
  auto add_random = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (default from FQRANK_SEED or built in)");
    sub->add_option("--samples", o.samples, "Number of draws")->check(CLI::PositiveNumber);
  };

  std::vector<std::pair<CLI::App*, Record (*)(const Options&)>> commands;
  auto add = [&](const char* name, const char* help, Record (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    add_common(sub);
    return sub;
  };

  CLI::App* sub = add("count", "Number of m x n matrices of each rank", cmd_count);
  add_dims(sub, true);
  add_q(sub);
  sub = add("avg-weight", "Average weight and nonzero-entry probability by rank", cmd_avg_weight);
  add_dims(sub, true);
  add_q(sub);
  sub = add("rank1-pmf", "Exact weight distribution of rank-one matrices", cmd_rank1_pmf);
  add_dims(sub, false);
  add_q(sub);
  sub->add_flag("--cumulative", o.cumulative, "Add the cumulative distribution column");
  sub->add_flag("--normal-overlay", o.normal_overlay, "Add the matching normal cdf column");
  sub = add("moments", "Mean and variance of the rank-one weight", cmd_moments);
  add_dims(sub, false);
  add_q(sub);
  sub = add("oracle", "Exhaustive (rank, weight) table", cmd_oracle);
  add_dims(sub, false);
  add_field(sub);
  sub->add_option("--cap", o.cap, "Maximum number of matrices to enumerate");
  add_threads(sub);
  sub = add("entry-counts", "Per-cell nonzero counts among rank-k matrices", cmd_entry_counts);
  add_dims(sub, true);
  add_field(sub);
  sub->add_option("--cap", o.cap, "Maximum number of matrices to enumerate");
  add_threads(sub);
  sub = add("sample", "Uniform random rank-k matrices", cmd_sample);
  add_dims(sub, true);
  add_field(sub);
  add_random(sub);
  sub = add("empirical", "Monte Carlo weight histogram of rank-k matrices", cmd_empirical);
  add_dims(sub, true);
  add_field(sub);
  add_random(sub);
  add_threads(sub);
  sub = add("clt", "Kolmogorov-Smirnov distance to the normal law over a size sweep", cmd_clt);
  add_q(sub);
  sub->add_option("--sizes", o.sizes, "Square sizes s to sweep")->delimiter(',');

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    o.seed = default_seed();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "fqrank: argument error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "fqrank: argument error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  for (const auto& [cmd, fn] : commands) {
    if (!cmd->parsed()) continue;
    const Handles& h = handles[cmd];
    o.k_opt = h.k_opt;
    o.q_opt = h.q_opt;
    o.p_opt = h.p_opt;
    o.modulus_opt = h.modulus_opt;
    try {
      const Record record = fn(o);
      std::ostringstream buffer;
      write_record(buffer, record, output_format(o));
      out << buffer.str();
      return kExitOk;
    } catch (const CapExceeded& e) {
      err << "fqrank: cap exceeded: " << one_line(e.what()) << '\n';
      return kExitCapExceeded;
    } catch (const UsageError& e) {
      err << "fqrank: argument error: " << one_line(e.what()) << '\n';
      return kExitUsage;
    } catch (const std::invalid_argument& e) {
      err << "fqrank: invalid parameter: " << one_line(e.what()) << '\n';
      return kExitUsage;
    } catch (const std::domain_error& e) {
      err << "fqrank: invalid parameter: " << one_line(e.what()) << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "fqrank: internal error: " << one_line(e.what()) << '\n';
      return kExitInternal;
    }
  }
  err << "fqrank: argument error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace fqrank::cli
