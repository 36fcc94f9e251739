#include "wk/rational.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>
#include <utility>

namespace wk {

Rational make_rational(Integer numerator, Integer denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational r(std::move(numerator), std::move(denominator));
  r.canonicalize();
  return r;
}

Integer numerator_of(const Rational& r) { return r.get_num(); }

Integer denominator_of(const Rational& r) { return r.get_den(); }

std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw std::invalid_argument("expected num/den, got '" + text + "'");
  }
  std::size_t num_start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (!all_digits(text, num_start, slash) || !all_digits(text, slash + 1, text.size())) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  Integer num(text.substr(0, slash));
  Integer den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) throw std::invalid_argument("rational not in lowest terms: '" + text + "'");
  return Rational(std::move(num), std::move(den));
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer pow_integer(unsigned long base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

const Integer& odd_double_factorial(long k) {
  if (k < -1 || k % 2 == 0) {
    throw std::domain_error("odd double factorial of " + std::to_string(k));
  }
  // table[m] = (2m-1)!!, so table[0] = (-1)!! = 1. A deque keeps returned
  // references valid while later calls extend the table.
  static thread_local std::deque<Integer> table{Integer(1)};
  const auto m = static_cast<std::size_t>((k + 1) / 2);
  while (table.size() <= m) {
    const long top = 2 * static_cast<long>(table.size()) - 1;
    table.push_back(table.back() * top);
  }
  return table[m];
}

}  // namespace wk
