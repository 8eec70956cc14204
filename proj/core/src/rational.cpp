#include "qpathlen/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qpathlen {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  mpz_class v(std::string(s), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

bool is_ratio_literal(std::string_view text) {
  return text.find('/') != std::string_view::npos;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash));
    mpz_class den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head.front() == '+' || head.front() == '-')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if (frac.empty() || !all_digits(frac) || (!head.empty() && !all_digits(head)))
      throw std::invalid_argument("not a decimal: '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class whole = head.empty() ? mpz_class(0) : mpz_class(std::string(head), 10);
    mpz_class num = whole * scale + mpz_class(std::string(frac), 10);
    if (negative) num = -num;
    Rational r(num, scale);
    r.canonicalize();
    return r;
  }

  return Rational(parse_integer(s));
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

bool in_unit_interval(const Rational& q) {
  return q > 0 && q < 1;
}

Rational rational_pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // base is canonical, so num^e / den^e already is.
  return out;
}

double to_double(const Rational& value) {
  return value.get_d();
}

}  // namespace qpathlen
