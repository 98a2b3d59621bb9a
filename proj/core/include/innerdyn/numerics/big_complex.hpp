#pragma once

#include "innerdyn/numerics/big_real.hpp"

namespace innerdyn::num {

/// Complex number over BigReal; both parts always share one precision.
class BigComplex {
 public:
  explicit BigComplex(Bits prec = kMinBits);
  /// Promotes the lower-precision part so that re and im share max(prec).
  BigComplex(const BigReal& re, const BigReal& im);
  explicit BigComplex(const BigReal& re);

  static BigComplex i(Bits prec);
  static BigComplex polar(const BigReal& modulus, const BigReal& angle);
  static BigComplex parse(std::string_view re, std::string_view im, Bits prec);

  const BigReal& re() const noexcept { return re_; }
  const BigReal& im() const noexcept { return im_; }
  Bits prec() const noexcept { return re_.prec(); }
  BigComplex rounded(Bits prec) const;

  BigComplex operator-() const;
  BigComplex conj() const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& s);
  friend BigComplex operator/(const BigComplex& a, const BigReal& s);
  friend BigComplex operator+(const BigComplex& a, const BigReal& s);
  friend BigComplex operator-(const BigComplex& a, const BigReal& s);

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  BigReal re_;
  BigReal im_;
};

inline BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }
inline BigComplex operator+(const BigReal& s, const BigComplex& a) { return a + s; }
BigComplex operator-(const BigReal& s, const BigComplex& a);
BigComplex operator+(const BigComplex& a, long s);
BigComplex operator-(long s, const BigComplex& a);
BigComplex operator*(const BigComplex& a, long s);

BigReal abs(const BigComplex& z);
/// |z|^2
BigReal norm(const BigComplex& z);
/// Principal argument in (-pi, pi].
BigReal arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Complex tangent; stable for arbitrarily large |Im z|.
BigComplex tan(const BigComplex& z);

}  // namespace innerdyn::num
