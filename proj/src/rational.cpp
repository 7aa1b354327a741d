#include "graphdep/rational.hpp"

#include <cctype>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Rational parse_integer(std::string_view s) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw InputError("not a number: '" + std::string(s) + "'");
  mpz_class z(std::string(digits), 10);
  return Rational(negative ? mpz_class(-z) : z);
}

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(text.substr(0, slash));
    Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    Rational out = num / den;
    out.canonicalize();
    return out;
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Rational ex = parse_integer(text.substr(e + 1));
    if (abs(ex) > 400) throw InputError("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_num().get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InputError("not a number: '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw InputError("not a number: '" + std::string(text) + "'");
    digits = std::string(mantissa);
  }
  Rational out(mpz_class(digits, 10));
  out *= pow10(exponent);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace graphdep
