#include "seifsec/rational.hpp"

#include <limits>
#include <stdexcept>

namespace seifsec {

namespace {

BigInt from_int64(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form
  // only for values outside long's range.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return BigInt(static_cast<long>(v));
  }
  return BigInt(std::to_string(v));
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(from_int64(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(from_int64(num), from_int64(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const BigInt& n) : value_(n) {}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text, 10));
    return Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  } catch (const std::domain_error&) {
    throw std::invalid_argument("malformed rational: '" + text + "' has zero denominator");
  }
}

BigInt Rational::numerator() const { return value_.get_num(); }
BigInt Rational::denominator() const { return value_.get_den(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::optional<std::int64_t> Rational::to_int64() const {
  if (!is_integer()) return std::nullopt;
  const BigInt& n = value_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::int64_t Rational::as_int64(const char* what) const {
  auto v = to_int64();
  if (!v) throw std::domain_error(std::string(what) + " is not an integer: " + to_string());
  return *v;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace seifsec
