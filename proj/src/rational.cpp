#include "maghom/rational.hpp"

#include <cctype>

#include "maghom/errors.hpp"

namespace maghom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

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
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

ExtendedRational::ExtendedRational(long value) : value_(value) {
  if (value < 0) throw Error("negative extended rational");
}

ExtendedRational::ExtendedRational(const Rational& value) : value_(value) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw Error("negative extended rational");
}

ExtendedRational::ExtendedRational(const Integer& num, const Integer& den)
    : ExtendedRational(make_rational(num, den)) {}

ExtendedRational ExtendedRational::infinity() {
  ExtendedRational r;
  r.infinite_ = true;
  return r;
}

const Rational& ExtendedRational::value() const {
  if (infinite_) throw Error("value() of INF");
  return value_;
}

ExtendedRational ExtendedRational::operator+(const ExtendedRational& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return ExtendedRational(Rational(value_ + other.value_));
}

ExtendedRational& ExtendedRational::operator+=(const ExtendedRational& other) {
  *this = *this + other;
  return *this;
}

bool ExtendedRational::operator==(const ExtendedRational& other) const {
  if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
  return value_ == other.value_;
}

std::strong_ordering ExtendedRational::operator<=>(const ExtendedRational& other) const {
  if (infinite_ || other.infinite_) {
    if (infinite_ == other.infinite_) return std::strong_ordering::equal;
    return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  int c = cmp(value_, other.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtendedRational::to_string() const {
  if (infinite_) return "inf";
  return rational_to_string(value_);
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  auto s = trim(text);
  if (s == "inf" || s == "INF" || s == "Inf") return infinity();
  Rational q = parse_rational(s);
  if (sgn(q) < 0) throw ParseError("negative distance: '" + std::string(s) + "'");
  return ExtendedRational(q);
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(trim(s.substr(0, slash)));
  Integer den = parse_integer(trim(s.substr(slash + 1)));
  if (sgn(den) == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
  return make_rational(num, den);
}

}  // namespace maghom
