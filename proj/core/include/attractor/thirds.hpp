#pragma once

#include <compare>
#include <string>

namespace attractor {

// Exact value n/3, n >= 0. The combinatorial invariant only ever needs
// integers shifted by 0, 1/3 or 2/3, so a single integer numerator over the
// fixed denominator 3 is enough; no floating point is involved.
class Third {
public:
  constexpr Third() = default;

  static constexpr Third of_int(int n) { return Third(3 * n); }
  static constexpr Third of_thirds(int numerator) { return Third(numerator); }

  constexpr int thirds() const { return n_; }
  constexpr bool is_integer() const { return n_ % 3 == 0; }

  friend constexpr auto operator<=>(Third, Third) = default;

  constexpr Third operator+(Third o) const { return Third(n_ + o.n_); }

  // "2", "1/3", "5/3", ...
  std::string str() const {
    if (is_integer()) return std::to_string(n_ / 3);
    return std::to_string(n_) + "/3";
  }

private:
  explicit constexpr Third(int numerator) : n_(numerator) {}
  int n_ = 0;
};

inline constexpr Third kOneThird = Third::of_thirds(1);
inline constexpr Third kTwoThirds = Third::of_thirds(2);

}  // namespace attractor
