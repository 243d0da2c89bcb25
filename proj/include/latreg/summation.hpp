#pragma once

#include <cmath>
#include <span>

namespace latreg {

/// Neumaier's variant of Kahan summation. The running compensation also
/// absorbs the error when an addend is larger than the partial sum.
class CompensatedSum {
public:
  constexpr CompensatedSum() = default;

  void add(double value) noexcept {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) noexcept {
    add(value);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> values) noexcept {
  CompensatedSum acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2 (double-double). Used for
/// vertex sums and the determinants built from them, so that differences of
/// nearly equal products keep about 106 bits before the final rounding.
struct Extended {
  double hi = 0.0;
  double lo = 0.0;

  constexpr Extended() = default;
  constexpr Extended(double value) : hi(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Extended(double h, double l) : hi(h), lo(l) {}

  double value() const noexcept { return hi + lo; }
};

namespace detail {

inline Extended two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Extended quick_two_sum(double a, double b) noexcept {
  const double s = a + b;
  return {s, b - (s - a)};
}

}  // namespace detail

/// Exact product of two doubles.
inline Extended two_product(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Extended operator+(const Extended& a, const Extended& b) noexcept {
  Extended s = detail::two_sum(a.hi, b.hi);
  const Extended t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline Extended operator-(const Extended& a) noexcept { return {-a.hi, -a.lo}; }

inline Extended operator-(const Extended& a, const Extended& b) noexcept { return a + (-b); }

inline Extended operator*(const Extended& a, const Extended& b) noexcept {
  Extended p = two_product(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

/// Running double-double sum.
class ExtendedSum {
public:
  void add(const Extended& value) noexcept { sum_ = sum_ + value; }
  void add_product(double a, double b) noexcept { add(two_product(a, b)); }

  const Extended& extended() const noexcept { return sum_; }
  double value() const noexcept { return sum_.value(); }

private:
  Extended sum_;
};

}  // namespace latreg
