#include "innerdyn/numerics/big_complex.hpp"

#include <algorithm>

namespace innerdyn::num {

BigComplex::BigComplex(Bits prec) : re_(prec), im_(prec) {}

BigComplex::BigComplex(const BigReal& re, const BigReal& im)
    : re_(re.rounded(std::max(re.prec(), im.prec()))), im_(im.rounded(std::max(re.prec(), im.prec()))) {}

BigComplex::BigComplex(const BigReal& re) : re_(re), im_(re.prec()) {}

BigComplex BigComplex::i(Bits prec) { return {BigReal(prec), BigReal(1L, prec)}; }

BigComplex BigComplex::polar(const BigReal& modulus, const BigReal& angle) {
  return {modulus * cos(angle), modulus * sin(angle)};
}

BigComplex BigComplex::parse(std::string_view re, std::string_view im, Bits prec) {
  return {BigReal::parse(re, prec), BigReal::parse(im, prec)};
}

BigComplex BigComplex::rounded(Bits prec) const { return {re_.rounded(prec), im_.rounded(prec)}; }

BigComplex BigComplex::operator-() const { return {-re_, -im_}; }

BigComplex BigComplex::conj() const { return {re_, -im_}; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal denom = sqr(b.re_) + sqr(b.im_);
  return {(a.re_ * b.re_ + a.im_ * b.im_) / denom, (a.im_ * b.re_ - a.re_ * b.im_) / denom};
}

BigComplex operator*(const BigComplex& a, const BigReal& s) { return {a.re_ * s, a.im_ * s}; }

BigComplex operator/(const BigComplex& a, const BigReal& s) { return {a.re_ / s, a.im_ / s}; }

BigComplex operator+(const BigComplex& a, const BigReal& s) { return {a.re_ + s, a.im_.rounded(std::max(a.prec(), s.prec()))}; }

BigComplex operator-(const BigComplex& a, const BigReal& s) { return {a.re_ - s, a.im_.rounded(std::max(a.prec(), s.prec()))}; }

BigComplex operator-(const BigReal& s, const BigComplex& a) { return {s - a.re(), -a.im()}; }

BigComplex operator+(const BigComplex& a, long s) { return {a.re() + s, a.im()}; }

BigComplex operator-(long s, const BigComplex& a) { return {s - a.re(), -a.im()}; }

BigComplex operator*(const BigComplex& a, long s) { return {a.re() * s, a.im() * s}; }

BigReal abs(const BigComplex& z) { return hypot(z.re(), z.im()); }

BigReal norm(const BigComplex& z) { return sqr(z.re()) + sqr(z.im()); }

BigReal arg(const BigComplex& z) { return atan2(z.im(), z.re()); }

BigComplex exp(const BigComplex& z) { return BigComplex::polar(exp(z.re()), z.im()); }

BigComplex tan(const BigComplex& z) {
  if (z.im().is_zero()) return BigComplex(tan(z.re()));
  // tan z = i (1 - q) / (1 + q), q = exp(2iz), |q| = exp(-2 Im z) < 1 in the upper half-plane.
  if (z.im() < 0L) return tan(z.conj()).conj();
  const BigComplex q = BigComplex::polar(exp(ldexp(-z.im(), 1)), ldexp(z.re(), 1));
  const BigComplex ratio = (1L - q) / (q + 1L);
  return {-ratio.im(), ratio.re()};
}

}  // namespace innerdyn::num
