#include "gallagher/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gallagher {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

Integer pow10(long exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

Integer round_half_even(const Rational& q) {
  Integer fl;
  Integer rem;
  mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const int c = cmp(Integer(2 * rem), q.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(fl.get_mpz_t()))) ++fl;
  return fl;
}

void trim_fraction(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  const auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part[0] == '-' ||
      den_part[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_part);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational out(parse_integer(num_part), den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational out(Integer(std::to_string(num)), Integer(std::to_string(den)));
  out.canonicalize();
  return out;
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  if (r == 0) return "0";
  const bool negative = r < 0;
  const Rational a = abs(r);

  // exponent = floor(log10(a)), found from a size estimate then corrected exactly
  long exponent = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
                  static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto ten_pow = [](long e) {
    return e >= 0 ? Rational(pow10(e)) : Rational(Integer(1), pow10(-e));
  };
  while (ten_pow(exponent) > a) --exponent;
  while (ten_pow(exponent + 1) <= a) ++exponent;

  Integer mantissa = round_half_even(a * ten_pow(digits - 1 - exponent));
  if (mantissa == pow10(digits)) {
    mantissa /= 10;
    ++exponent;
  }
  const std::string m = mantissa.get_str();

  std::string out;
  if (exponent < -4 || exponent >= digits) {
    out = m.substr(0, 1) + "." + m.substr(1);
    trim_fraction(out);
    const long e = exponent < 0 ? -exponent : exponent;
    out += exponent < 0 ? "e-" : "e+";
    if (e < 10) out += "0";
    out += std::to_string(e);
  } else if (exponent >= 0) {
    out = m.substr(0, exponent + 1) + "." + m.substr(exponent + 1);
    trim_fraction(out);
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + m;
    trim_fraction(out);
  }
  return negative ? "-" + out : out;
}

}  // namespace gallagher
