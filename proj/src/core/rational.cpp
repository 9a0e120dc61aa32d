#include "fairdiv/rational.hpp"

#include <algorithm>
#include <ostream>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void reject(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::ParseError, "invalid rational \"" + std::string(text) + "\": " + std::string(why));
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator");
  }
  value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  mpq_class q;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) reject(text, "expected p/q");
    mpz_class d(std::string(den), 10);
    if (d == 0) reject(text, "zero denominator");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) reject(text, "expected a finite decimal");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    q = mpq_class(mpz_class(std::string(whole) + std::string(frac), 10), scale);
  } else {
    if (!all_digits(body)) reject(text, "expected digits");
    q = mpq_class(mpz_class(std::string(body), 10));
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return numerator_string() + "/" + denominator_string(); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::InvariantViolated, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  if (r.value_.get_den() == 1) return os << r.numerator_string();
  return os << r.to_string();
}

}  // namespace fairdiv
