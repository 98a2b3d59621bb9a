#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace innerdyn::num {

using Bits = mpfr_prec_t;

inline constexpr Bits kMinBits = 64;

/// Arbitrary-precision binary floating-point number with its own precision.
///
/// Every value carries the precision it was created with. Binary operations
/// produce a result at the larger of the two operand precisions; operations
/// with machine scalars keep the precision of the BigReal operand. All
/// rounding is to nearest, ties to even. Changing precision is always an
/// explicit call to `rounded()`.
class BigReal {
 public:
  explicit BigReal(Bits prec = kMinBits);
  BigReal(long value, Bits prec);
  BigReal(double value, Bits prec);

  /// Parses a decimal literal ("0.1", "-2.5e-3") correctly rounded to `prec`.
  /// Throws DomainError on malformed input.
  static BigReal parse(std::string_view text, Bits prec);
  static BigReal pi(Bits prec);
  static BigReal two_pi(Bits prec);
  /// 2^exponent, exact.
  static BigReal pow2(long exponent, Bits prec);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Bits prec() const noexcept { return mpfr_get_prec(value_); }
  BigReal rounded(Bits prec) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const;
  long to_long() const;  // truncates toward zero
  /// Scientific notation with `digits` significant digits, e.g. "1.500e-01".
  std::string to_string(int digits = 40) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  BigReal operator-() const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t value_;
};

// Mixed arithmetic with machine scalars; the result keeps the BigReal precision.
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator/(long a, const BigReal& b);
BigReal operator+(const BigReal& a, double b);
BigReal operator-(const BigReal& a, double b);
BigReal operator-(double a, const BigReal& b);
BigReal operator*(const BigReal& a, double b);
BigReal operator/(const BigReal& a, double b);
BigReal operator/(double a, const BigReal& b);

template <std::integral I>
BigReal operator+(const BigReal& a, I b) { return a + static_cast<long>(b); }
template <std::integral I>
BigReal operator+(I a, const BigReal& b) { return b + static_cast<long>(a); }
template <std::integral I>
BigReal operator-(const BigReal& a, I b) { return a - static_cast<long>(b); }
template <std::integral I>
BigReal operator-(I a, const BigReal& b) { return static_cast<long>(a) - b; }
template <std::integral I>
BigReal operator*(const BigReal& a, I b) { return a * static_cast<long>(b); }
template <std::integral I>
BigReal operator*(I a, const BigReal& b) { return b * static_cast<long>(a); }
template <std::integral I>
BigReal operator/(const BigReal& a, I b) { return a / static_cast<long>(b); }
template <std::integral I>
BigReal operator/(I a, const BigReal& b) { return static_cast<long>(a) / b; }
inline BigReal operator+(double a, const BigReal& b) { return b + a; }
inline BigReal operator*(double a, const BigReal& b) { return b * a; }

std::partial_ordering operator<=>(const BigReal& a, long b);
std::partial_ordering operator<=>(const BigReal& a, double b);
bool operator==(const BigReal& a, long b);
bool operator==(const BigReal& a, double b);
template <std::integral I>
std::partial_ordering operator<=>(const BigReal& a, I b) { return a <=> static_cast<long>(b); }
template <std::integral I>
bool operator==(const BigReal& a, I b) { return a == static_cast<long>(b); }

BigReal abs(const BigReal& x);
BigReal sqr(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log2(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal tan(const BigReal& x);
BigReal cot(const BigReal& x);
BigReal asin(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal tanh(const BigReal& x);
BigReal atanh(const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
/// x - k*m with k = trunc(x/m), computed exactly (C fmod semantics).
BigReal fmod(const BigReal& x, const BigReal& m);
BigReal floor(const BigReal& x);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
const BigReal& min(const BigReal& a, const BigReal& b);
const BigReal& max(const BigReal& a, const BigReal& b);

/// Binary exponent e with x = m * 2^e, 0.5 <= |m| < 1; x must be nonzero and finite.
long exponent_of(const BigReal& x);

}  // namespace innerdyn::num
