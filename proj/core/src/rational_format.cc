#include <cstdio>
#include <stdexcept>
#include <vector>

#include "fqrank/exact.h"

namespace fqrank {

std::string to_num_den(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal(const Rational& x, int significant_digits) {
  // Enough binary precision for the requested digits plus guard bits.
  mpf_class f(0, static_cast<mp_bitcnt_t>(significant_digits * 4 + 64));
  f = x;
  const int n = gmp_snprintf(nullptr, 0, "%.*Fg", significant_digits, f.get_mpf_t());
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

double to_double(const Rational& x) { return x.get_d(); }

BigCount to_big(std::uint64_t x) {
  BigCount z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return z;
}

}  // namespace fqrank
