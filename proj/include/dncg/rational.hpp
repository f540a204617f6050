#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dncg/extended.hpp"

namespace dncg {

using BigInt = boost::multiprecision::cpp_int;

// All cost arithmetic is exact. Boundary comparisons (e.g. alpha against 1
// or 2) must never go through floating point.
using Rational = boost::rational<BigInt>;

inline Rational rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// Parses "7", "-7" or "3/2". Decimal notation is rejected on purpose: a
// string like "1.5" has no exact meaning once read as double.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  if (text.find('.') != std::string_view::npos) fail();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) fail();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) fail();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
    return BigInt(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text), BigInt(1));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) fail();
  return Rational(parse_int(text.substr(0, slash)), den);
}

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Exact cost that may be infinite (an unreachable vertex makes a player's
// communication term infinite). Same saturation rules as ExtDistance.
class ExtCost {
 public:
  ExtCost() = default;
  ExtCost(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by design

  static ExtCost infinite() {
    ExtCost c;
    c.finite_ = false;
    return c;
  }

  static ExtCost of(ExtDistance d) {
    if (d.is_infinite()) return infinite();
    return ExtCost(Rational(BigInt(d.value()), BigInt(1)));
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw std::logic_error("ExtCost: value() on infinite");
    return value_;
  }

  friend ExtCost operator+(const ExtCost& a, const ExtCost& b) {
    if (!a.finite_ || !b.finite_) return infinite();
    return ExtCost(a.value_ + b.value_);
  }

  ExtCost& operator+=(const ExtCost& o) { return *this = *this + o; }

  friend bool operator==(const ExtCost& a, const ExtCost& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend bool operator<(const ExtCost& a, const ExtCost& b) {
    if (a.finite_ != b.finite_) return a.finite_;
    if (!a.finite_) return false;
    return a.value_ < b.value_;
  }
  friend bool operator>(const ExtCost& a, const ExtCost& b) { return b < a; }
  friend bool operator<=(const ExtCost& a, const ExtCost& b) { return !(b < a); }
  friend bool operator>=(const ExtCost& a, const ExtCost& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const ExtCost& c) {
    if (c.is_infinite()) return os << "inf";
    return os << to_string(c.value_);
  }

 private:
  bool finite_ = true;
  Rational value_{BigInt(0), BigInt(1)};
};

inline std::string to_string(const ExtCost& c) {
  return c.is_infinite() ? "inf" : to_string(c.value());
}

}  // namespace dncg
