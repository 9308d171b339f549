#pragma once

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>

namespace rotstate {

/// Angular momentum quantum number j or projection m, stored as 2j so that
/// half-odd-integer values stay exact. Construct whole values directly
/// (HalfInt(1) is j=1) and half-odd values via from_twice (from_twice(3) is 3/2).
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_valid_magnitude() const { return twice_ >= 0; }

  /// m is a projection of j when |m| <= j and m, j differ by an integer.
  constexpr bool is_projection_of(HalfInt j) const {
    return std::abs(twice_) <= j.twice_ && (twice_ - j.twice_) % 2 == 0;
  }

  constexpr double to_double() const { return twice_ / 2.0; }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) {
    return os << h.to_string();
  }

 private:
  int twice_ = 0;
};

}  // namespace rotstate
