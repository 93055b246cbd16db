#include "fqrank/gf.h"

#include <gtest/gtest.h>

#include <random>

namespace fqrank {
namespace {

std::vector<FieldSpec> supported_small_fields() {
  std::vector<FieldSpec> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 31u, 61u}) out.push_back(make_field(p));
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) out.push_back(make_field_of_order(q));
  return out;
}

TEST(MakeFieldTest, PrimeField) {
  const FieldSpec f2 = make_field(2, 1);
  EXPECT_EQ(f2.q(), 2u);
  EXPECT_EQ(f2.p(), 2u);
  EXPECT_EQ(f2.e(), 1u);
  EXPECT_TRUE(f2.contains(1));
  EXPECT_FALSE(f2.contains(2));
}

TEST(MakeFieldTest, QuarticFieldFromIrreducibleQuadratic) {
  // x^2 + x + 1 has no root in F_2: 0 -> 1, 1 -> 1.
  for (int x = 0; x < 2; ++x) EXPECT_NE((x * x + x + 1) % 2, 0);
  const FieldSpec f4 = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(f4.q(), 4u);
}

TEST(MakeFieldTest, RejectsReducibleModulus) {
  // (x + 1)^2 = x^2 + 2x + 1 = x^2 + 1 in characteristic 2.
  EXPECT_EQ((1 + 1) % 2, 0);
  EXPECT_THROW(make_field(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 has no roots but is reducible.
  EXPECT_THROW(make_field(2, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1}), std::invalid_argument);
}

TEST(MakeFieldTest, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 1), std::invalid_argument);
  EXPECT_THROW(make_field(1, 1), std::invalid_argument);
  EXPECT_THROW(make_field(2, 0), std::invalid_argument);
  EXPECT_THROW(make_field(2, 17), std::invalid_argument);
  EXPECT_THROW(make_field(65537, 1), std::invalid_argument);
  EXPECT_THROW(make_field(11, 2), std::invalid_argument);  // no built-in modulus for 121
  EXPECT_THROW(make_field(2, 2, std::vector<std::uint32_t>{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(make_field(2, 2, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
  EXPECT_THROW(make_field(3, 2, std::vector<std::uint32_t>{1, 3, 1}), std::invalid_argument);
  EXPECT_THROW(make_field_of_order(6), std::invalid_argument);
  EXPECT_THROW(make_field_of_order(1), std::invalid_argument);
}

TEST(MakeFieldTest, BuiltinModuliAreIrreducible) {
  for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    const auto m = builtin_modulus(q);
    ASSERT_TRUE(m.has_value()) << q;
    const FieldSpec f = make_field_of_order(q);
    EXPECT_EQ(f.q(), q);
    EXPECT_EQ(f.modulus(), *m);
  }
  EXPECT_FALSE(builtin_modulus(121).has_value());
}

TEST(FieldArithTest, Examples) {
  const FieldSpec f2 = make_field(2);
  EXPECT_EQ(f2.add(1, 1), 0);
  const FieldSpec f5 = make_field(5);
  EXPECT_EQ(f5.mul(2, 3), 1);
  // alpha = x is index 2, alpha + 1 is index 3.
  const FieldSpec f4 = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(f4.mul(2, 2), 3);

  const FieldElement a(f4, 2);
  EXPECT_EQ((a * a).index(), 3);
  EXPECT_EQ((a + a).index(), 0);
  EXPECT_EQ((FieldElement(f5, 1) - FieldElement(f5, 3)).index(), 3);
}

TEST(FieldArithTest, MismatchedFieldsThrow) {
  const FieldElement a(make_field(2), 1);
  const FieldElement b(make_field(3), 1);
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(field_arith(a, b, ArithOp::kMul), std::invalid_argument);
  EXPECT_THROW(FieldElement(make_field(3), 3), std::invalid_argument);
  // Same parameters built twice are the same field.
  EXPECT_NO_THROW(FieldElement(make_field(3), 1) + FieldElement(make_field(3), 2));
}

TEST(FieldInvTest, Examples) {
  EXPECT_EQ(make_field(2).inv(1), 1);
  // 3 * 5 = 15 = 1 mod 7
  EXPECT_EQ(3 * 5 % 7, 1);
  EXPECT_EQ(make_field(7).inv(3), 5);
  const FieldSpec f4 = make_field(2, 2, std::vector<std::uint32_t>{1, 1, 1});
  EXPECT_EQ(f4.inv(2), 3);
  EXPECT_EQ(field_inv(FieldElement(f4, 3)).index(), 2);
  EXPECT_THROW(f4.inv(0), std::domain_error);
  EXPECT_THROW(field_inv(FieldElement(f4, 0)), std::domain_error);
}

TEST(FieldPropertyTest, InverseExhaustive) {
  for (const FieldSpec& f : supported_small_fields()) {
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      const Elem x = static_cast<Elem>(a);
      EXPECT_EQ(f.mul(x, f.inv(x)), 1) << f.describe() << " a=" << a;
    }
  }
}

TEST(FieldPropertyTest, Characteristic) {
  for (const FieldSpec& f : supported_small_fields()) {
    Elem s = 0;
    for (std::uint32_t i = 0; i < f.p(); ++i) {
      s = f.add(s, 1);
      if (i + 1 < f.p()) EXPECT_NE(s, 0);
    }
    EXPECT_EQ(s, 0) << f.describe();
  }
}

void check_laws(const FieldSpec& f, Elem a, Elem b, Elem c) {
  EXPECT_EQ(f.add(a, b), f.add(b, a));
  EXPECT_EQ(f.mul(a, b), f.mul(b, a));
  EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
  EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
  EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
  EXPECT_EQ(f.add(f.sub(a, b), b), a);
  EXPECT_EQ(f.add(a, f.neg(a)), 0);
}

TEST(FieldPropertyTest, GroupLawsAllTriplesSmallFields) {
  for (const FieldSpec& f : supported_small_fields()) {
    if (f.q() > 9) continue;
    for (Elem a = 0; a < f.q(); ++a)
      for (Elem b = 0; b < f.q(); ++b)
        for (Elem c = 0; c < f.q(); ++c) check_laws(f, a, b, c);
  }
}

TEST(FieldPropertyTest, GroupLawsRandomTriples) {
  std::mt19937_64 gen(7);
  std::vector<FieldSpec> fields = supported_small_fields();
  // Above the table threshold: on-the-fly addition.
  fields.push_back(make_field(65521));
  fields.push_back(make_field(17, 2, std::vector<std::uint32_t>{3, 0, 1}));
  fields.push_back(make_field(3, 6, std::vector<std::uint32_t>{2, 2, 1, 0, 2, 0, 1}));
  for (const FieldSpec& f : fields) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<Elem>(d(gen)), b = static_cast<Elem>(d(gen)),
                 c = static_cast<Elem>(d(gen));
      check_laws(f, a, b, c);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    }
  }
}

TEST(FieldPropertyTest, PrimeFieldsMatchModularArithmetic) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 257u, 65521u}) {
    const FieldSpec f = make_field(p);
    std::mt19937_64 gen(p);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t a = d(gen), b = d(gen);
      EXPECT_EQ(f.add(static_cast<Elem>(a), static_cast<Elem>(b)), (a + b) % p);
      EXPECT_EQ(f.sub(static_cast<Elem>(a), static_cast<Elem>(b)), (a + p - b) % p);
      EXPECT_EQ(f.mul(static_cast<Elem>(a), static_cast<Elem>(b)), a * b % p);
    }
  }
}

TEST(FieldPropertyTest, PrimitiveElementGeneratesGroup) {
  for (const FieldSpec& f : supported_small_fields()) {
    const Elem g = f.primitive_element();
    std::vector<bool> seen(f.q(), false);
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < f.q(); ++i) {
      EXPECT_FALSE(seen[x]) << f.describe();
      seen[x] = true;
      x = f.mul(x, g);
    }
    EXPECT_EQ(x, 1);
  }
}

TEST(FieldSpecTest, DescribeAndEquality) {
  EXPECT_EQ(make_field(7).describe(), "F_7");
  EXPECT_EQ(make_field_of_order(4).describe(), "F_4 = F_2[x]/(x^2 + x + 1)");
  EXPECT_TRUE(make_field(5) == make_field(5));
  EXPECT_FALSE(make_field(5) == make_field(7));
  EXPECT_FALSE(make_field(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1}) ==
               make_field(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1}));
}

}  // namespace
}  // namespace fqrank
