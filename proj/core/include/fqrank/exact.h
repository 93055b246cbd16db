#ifndef FQRANK_EXACT_H_
#define FQRANK_EXACT_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fqrank {

// Arbitrary-precision nonnegative count. Never rounded.
using BigCount = mpz_class;
// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;
// A Rational known to lie in [0, 1].
using ExactProb = mpq_class;

// "num/den"; integers still carry "/1".
std::string to_num_den(const Rational& x);
// Decimal with the given number of significant digits, e.g. "156.250009313".
std::string to_decimal(const Rational& x, int significant_digits = 12);
// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

double to_double(const Rational& x);

// Portable construction from 64-bit values (mpz_class has no uint64_t overload
// where that type is unsigned long long).
BigCount to_big(std::uint64_t x);

}  // namespace fqrank

#endif  // FQRANK_EXACT_H_
