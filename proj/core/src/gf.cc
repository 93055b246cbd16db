#include "fqrank/gf.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace fqrank {
namespace {

constexpr std::uint32_t kTableThreshold = 256;

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return r;
}

Poly to_poly(std::uint32_t index, std::uint32_t p, std::uint32_t e) {
  Poly a(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    a[i] = index % p;
    index /= p;
  }
  return a;
}

std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = a.size(); i-- > 0;) index = index * p + a[i];
  return index;
}

// True when m (monic, degree >= 2) has no monic factor of degree <= deg/2.
bool is_irreducible(const Poly& m, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
  for (std::uint32_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly f = to_poly(static_cast<std::uint32_t>(c), p, d);
      f.push_back(1);
      if (poly_mod(m, f, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t q) {
  static const std::map<std::uint32_t, std::vector<std::uint32_t>> table = {
      {4, {1, 1, 1}},              // x^2 + x + 1
      {8, {1, 1, 0, 1}},           // x^3 + x + 1
      {9, {1, 0, 1}},              // x^2 + 1
      {16, {1, 1, 0, 0, 1}},       // x^4 + x + 1
      {25, {2, 0, 1}},             // x^2 + 2
      {27, {1, 2, 0, 1}},          // x^3 + 2x + 1
      {32, {1, 0, 1, 0, 0, 1}},    // x^5 + x^2 + 1
      {49, {1, 0, 1}},             // x^2 + 1
      {64, {1, 1, 0, 0, 0, 0, 1}}, // x^6 + x + 1
  };
  auto it = table.find(q);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (e == 0 || e > kMaxExtensionDegree) {
    throw std::invalid_argument("extension degree must be in [1, " +
                                std::to_string(kMaxExtensionDegree) + "]");
  }
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < e; ++i) q64 *= p;
  if (q64 > kMaxFieldOrder) {
    throw std::invalid_argument("field order " + std::to_string(q64) +
                                " exceeds 65536");
  }
  const auto q = static_cast<std::uint32_t>(q64);

  auto impl = std::make_shared<FieldSpec::Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = q;

  if (e > 1) {
    if (!modulus) {
      modulus = builtin_modulus(q);
      if (!modulus) {
        throw std::invalid_argument("no built-in modulus for q = " +
                                    std::to_string(q) + "; pass one explicitly");
      }
    }
    const Poly& m = *modulus;
    if (m.size() != e + 1 || m.back() != 1) {
      throw std::invalid_argument("modulus must be monic of degree " +
                                  std::to_string(e));
    }
    if (std::any_of(m.begin(), m.end(), [p](std::uint32_t c) { return c >= p; })) {
      throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(m, p)) {
      throw std::invalid_argument("modulus is reducible over F_" + std::to_string(p));
    }
    impl->modulus = m;
  }

  // Slow multiplication, used only while building the log/exp tables.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    return from_poly(poly_mod(poly_mul(to_poly(a, p, e), to_poly(b, p, e), p),
                              impl->modulus, p),
                     p);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint32_t k) {
    std::uint32_t r = 1;
    while (k > 0) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  const std::uint32_t order = q - 1;
  const auto factors = prime_factors(order);
  std::uint32_t generator = 1;
  for (std::uint32_t g = (q == 2 ? 1 : 2); g < q; ++g) {
    bool primitive = true;
    for (std::uint32_t r : factors) {
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = g;
      break;
    }
  }

  impl->log.assign(q, 0);
  impl->exp.assign(2 * static_cast<std::size_t>(order), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    impl->exp[i] = static_cast<Elem>(x);
    impl->exp[i + order] = static_cast<Elem>(x);
    impl->log[x] = i;
    x = slow_mul(x, generator);
  }

  if (q <= kTableThreshold) {
    impl->add.resize(static_cast<std::size_t>(q) * q);
    impl->sub.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const Poly pa = to_poly(a, p, e);
      for (std::uint32_t b = 0; b < q; ++b) {
        const Poly pb = to_poly(b, p, e);
        Poly s(e), d(e);
        for (std::uint32_t i = 0; i < e; ++i) {
          s[i] = (pa[i] + pb[i]) % p;
          d[i] = (pa[i] + p - pb[i]) % p;
        }
        impl->add[a * q + b] = static_cast<Elem>(from_poly(s, p));
        impl->sub[a * q + b] = static_cast<Elem>(from_poly(d, p));
      }
    }
  }

  return FieldSpec(std::move(impl));
}

FieldSpec make_field_of_order(std::uint32_t q) {
  if (is_prime(q)) return make_field(q, 1);
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    std::uint32_t e = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) break;
    return make_field(p, e);
  }
  throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

Elem FieldSpec::add_slow(Elem a, Elem b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->e == 1) return static_cast<Elem>((a + b) % p);
  std::uint32_t r = 0, scale = 1, x = a, y = b;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    r += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<Elem>(r);
}

Elem FieldSpec::neg_slow(Elem a) const {
  const std::uint32_t p = impl_->p;
  if (impl_->e == 1) return static_cast<Elem>((p - a) % p);
  std::uint32_t r = 0, scale = 1, x = a;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    r += ((p - x % p) % p) * scale;
    x /= p;
    scale *= p;
  }
  return static_cast<Elem>(r);
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t order = impl_->q - 1;
  return impl_->exp[(order - impl_->log[a]) % order];
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "F_" << q();
  if (e() > 1) {
    os << " = F_" << p() << "[x]/(";
    bool first = true;
    for (std::size_t i = modulus().size(); i-- > 0;) {
      const auto c = modulus()[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  if (a.impl_ == b.impl_) return true;
  return a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus();
}

FieldElement::FieldElement(FieldSpec field, std::uint32_t index)
    : field_(std::move(field)), index_(0) {
  if (!field_.contains(index)) {
    throw std::invalid_argument("element index " + std::to_string(index) +
                                " outside " + field_.describe());
  }
  index_ = static_cast<Elem>(index);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!(a.field() == b.field())) {
    throw std::invalid_argument("operands belong to different fields");
  }
  const FieldSpec& f = a.field();
  switch (op) {
    case ArithOp::kAdd:
      return FieldElement(f, f.add(a.index(), b.index()));
    case ArithOp::kSub:
      return FieldElement(f, f.sub(a.index(), b.index()));
    case ArithOp::kMul:
      return FieldElement(f, f.mul(a.index(), b.index()));
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

FieldElement field_inv(const FieldElement& a) {
  return FieldElement(a.field(), a.field().inv(a.index()));
}

}  // namespace fqrank
