#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dncg {

// Temporal distance that is either a finite non-negative integer or the
// distinguished value "infinite". Infinite compares strictly greater than
// every finite value and all arithmetic saturates; there is no numeric
// sentinel that could silently overflow into a finite result.
class ExtDistance {
 public:
  constexpr ExtDistance() = default;

  static constexpr ExtDistance infinite() {
    ExtDistance d;
    d.finite_ = false;
    return d;
  }

  static constexpr ExtDistance of(std::int64_t value) {
    if (value < 0) throw std::invalid_argument("ExtDistance: negative value");
    ExtDistance d;
    d.value_ = value;
    return d;
  }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }

  constexpr std::int64_t value() const {
    if (!finite_) throw std::logic_error("ExtDistance: value() on infinite");
    return value_;
  }

  friend constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) {
    if (!a.finite_ || !b.finite_) return infinite();
    return of(a.value_ + b.value_);
  }

  ExtDistance& operator+=(ExtDistance o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtDistance a, ExtDistance b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }

  friend constexpr std::strong_ordering operator<=>(ExtDistance a, ExtDistance b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, ExtDistance d) {
    if (d.is_infinite()) return os << "inf";
    return os << d.value();
  }

 private:
  bool finite_ = true;
  std::int64_t value_ = 0;
};

inline ExtDistance min(ExtDistance a, ExtDistance b) { return a < b ? a : b; }
inline ExtDistance max(ExtDistance a, ExtDistance b) { return a < b ? b : a; }

}  // namespace dncg
