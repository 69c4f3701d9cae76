#include "qspp/rational.hpp"

#include <cctype>

namespace qspp {
namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view token) {
  bool negative = false;
  std::string_view body = token;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : body.substr(slash + 1);
  if (!is_decimal(num) || !is_decimal(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(token) + "'");
  }
  const BigInt n{std::string(num)};
  const BigInt d{std::string(den)};
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(token) +
                                "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.str(); }

bool exact_sqrt(const Rational& value, Rational& root) {
  if (value < 0) return false;
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

BigInt factorial(std::int64_t n) {
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace qspp
