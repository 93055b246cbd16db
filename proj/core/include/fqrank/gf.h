#ifndef FQRANK_GF_H_
#define FQRANK_GF_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqrank {

// Index encoding of a field element. For prime fields this is the residue;
// for F_{p^e} it is the base-p digit string of the polynomial coordinates,
// constant term in the least significant digit. 0 and 1 are the additive and
// multiplicative identities in every field.
using Elem = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;
inline constexpr std::uint32_t kMaxExtensionDegree = 6;

bool is_prime(std::uint64_t n);

// Irreducible monic modulus shipped for q in {4, 8, 9, 16, 25, 27, 32, 49, 64}.
// Coefficients are listed from the constant term up to the leading 1.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t q);

// Immutable description of F_q, q = p^e, with precomputed arithmetic tables.
// Copies share the same tables; equality compares (p, e, modulus).
class FieldSpec {
 public:
  std::uint32_t p() const { return impl_->p; }
  std::uint32_t e() const { return impl_->e; }
  std::uint32_t q() const { return impl_->q; }
  // Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  Elem add(Elem a, Elem b) const {
    if (!impl_->add.empty()) return impl_->add[a * impl_->q + b];
    return add_slow(a, b);
  }
  Elem sub(Elem a, Elem b) const {
    if (!impl_->sub.empty()) return impl_->sub[a * impl_->q + b];
    return add_slow(a, neg_slow(b));
  }
  Elem neg(Elem a) const { return sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }
  // Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;

  bool contains(std::uint32_t index) const { return index < impl_->q; }

  // A generator of the multiplicative group.
  Elem primitive_element() const { return impl_->exp[1 % (impl_->q - 1)]; }

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> add;  // q*q, only for small q
    std::vector<Elem> sub;
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<Elem> exp;           // length 2(q-1)
  };

  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;

  std::shared_ptr<const Impl> impl_;

  friend FieldSpec make_field(std::uint32_t p, std::uint32_t e,
                              std::optional<std::vector<std::uint32_t>> modulus);
};

// Builds F_{p^e}. When e > 1 and no modulus is given, the built-in table is
// consulted. Throws std::invalid_argument for a non-prime p, a non-monic or
// reducible modulus, an order above 2^16, or a q without a built-in modulus.
FieldSpec make_field(std::uint32_t p, std::uint32_t e = 1,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// F_q from its order alone: prime q, or a prime power with a built-in modulus.
FieldSpec make_field_of_order(std::uint32_t q);

enum class ArithOp { kAdd, kSub, kMul };

// An element bound to its field. Mixing elements of different fields throws
// std::invalid_argument.
class FieldElement {
 public:
  FieldElement(FieldSpec field, std::uint32_t index);

  const FieldSpec& field() const { return field_; }
  Elem index() const { return index_; }
  bool is_zero() const { return index_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }

 private:
  FieldSpec field_;
  Elem index_;
};

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement field_inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kAdd);
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kSub);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, ArithOp::kMul);
}

}  // namespace fqrank

#endif  // FQRANK_GF_H_
