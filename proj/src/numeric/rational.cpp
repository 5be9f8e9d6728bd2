#include "simson/numeric/rational.hpp"

#include <cctype>

#include "simson/error.hpp"

namespace simson::num {

namespace {

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(Errc::ParseError, "cannot parse number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) parse_fail(whole);
  mpz_class v(std::string(digits), 10);
  return (!s.empty() && s.front() == '-') ? mpz_class(-v) : v;
}

}  // namespace

Rational Rational::make(const mpz_class& p, const mpz_class& q) {
  if (q == 0) throw Error(Errc::ZeroDenominator, "zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  return Rational(std::move(r));
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) parse_fail(text);

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class p = parse_integer(text.substr(0, slash), text);
    const std::string_view den = text.substr(slash + 1);
    if (!all_digits(den)) parse_fail(text);
    const mpz_class q(std::string(den), 10);
    if (q == 0) throw Error(Errc::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
    return make(p, q);
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac.empty()) parse_fail(text);
    if (!int_part.empty() && !all_digits(int_part)) parse_fail(text);
    if (!frac.empty() && !all_digits(frac)) parse_fail(text);

    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    const mpz_class fraction = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class p = whole * scale + fraction;
    if (negative) p = -p;
    return make(p, scale);
  }

  return Rational(parse_integer(text, text));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ + y.q_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ - y.q_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.q_ * y.q_)); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  return Rational(mpq_class(x.q_ / y.q_));
}

}  // namespace simson::num
