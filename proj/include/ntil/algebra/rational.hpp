#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ntil {

/// Arbitrary-precision integer and exact fraction. GMP keeps every mpq in
/// lowest terms with a positive denominator after each operation.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }

/// Largest integer not exceeding q.
inline BigInt floor(const Rational& q) {
  BigInt num = numerator_of(q);
  BigInt den = denominator_of(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num.sign() < 0 && quot * den != num) quot -= 1;
  return quot;
}

inline BigInt ceil(const Rational& q) { return -floor(-q); }

inline Rational pow10(int k) {
  Rational r = 1;
  const Rational base = k >= 0 ? Rational(10) : Rational(1, 10);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r *= base;
  return r;
}

/// "num/den", or just "num" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Accepts "a", "-a", "a/b", "-a/b" in decimal digits.
inline Rational parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  BigInt d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(std::string{num}), d);
}

/// Fixed-point decimal with `places` digits after the point, rounded half to even.
inline std::string to_decimal(const Rational& q, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal precision");
  const Rational scaled = q * pow10(places);
  BigInt lo = floor(scaled);
  const Rational frac = scaled - Rational(lo);
  if (frac > Rational(1, 2) || (frac == Rational(1, 2) && lo % 2 != 0)) lo += 1;

  const bool negative = lo.sign() < 0;
  std::string digits = (negative ? BigInt(-lo) : lo).str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// r -= a * b in place, using `scratch` for the product.
inline void sub_mul(Rational& r, const Rational& a, const Rational& b, Rational& scratch) {
  mpq_mul(scratch.backend().data(), a.backend().data(), b.backend().data());
  mpq_sub(r.backend().data(), r.backend().data(), scratch.backend().data());
}

}  // namespace ntil
