#include "innerdyn/numerics/big_real.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "innerdyn/errors.hpp"

namespace innerdyn::num {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Bits checked(Bits prec) {
  if (prec < kMinBits || prec > MPFR_PREC_MAX) {
    throw std::invalid_argument("BigReal precision must be at least 64 bits, got " + std::to_string(prec));
  }
  return prec;
}

Bits joint(const BigReal& a, const BigReal& b) { return std::max(a.prec(), b.prec()); }

template <class Op>
BigReal unary(const BigReal& x, Op op) {
  BigReal r(x.prec());
  op(r.get(), x.get(), kRnd);
  return r;
}

std::partial_ordering order_from(int cmp, bool unordered) {
  if (unordered) return std::partial_ordering::unordered;
  if (cmp < 0) return std::partial_ordering::less;
  if (cmp > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

BigReal::BigReal(Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_si(value_, value, kRnd);
}

BigReal::BigReal(double value, Bits prec) {
  mpfr_init2(value_, checked(prec));
  mpfr_set_d(value_, value, kRnd);
}

BigReal BigReal::parse(std::string_view text, Bits prec) {
  BigReal r(prec);
  std::string owned(text);
  // strip surrounding whitespace
  const auto first = owned.find_first_not_of(" \t");
  const auto last = owned.find_last_not_of(" \t");
  if (first == std::string::npos) throw DomainError("empty decimal literal");
  owned = owned.substr(first, last - first + 1);
  char* end = nullptr;
  mpfr_strtofr(r.value_, owned.c_str(), &end, 10, kRnd);
  if (end == owned.c_str() || *end != '\0' || !r.is_finite()) {
    throw DomainError("malformed decimal literal '" + owned + "'");
  }
  return r;
}

BigReal BigReal::pi(Bits prec) {
  BigReal r(prec);
  mpfr_const_pi(r.value_, kRnd);
  return r;
}

BigReal BigReal::two_pi(Bits prec) {
  BigReal r = pi(prec);
  mpfr_mul_2ui(r.value_, r.value_, 1, kRnd);
  return r;
}

BigReal BigReal::pow2(long exponent, Bits prec) {
  BigReal r(prec);
  mpfr_set_si_2exp(r.value_, 1, exponent, kRnd);
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.prec());
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, kMinBits);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.prec());
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::rounded(Bits prec) const {
  BigReal r(prec);
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

double BigReal::to_double() const { return mpfr_get_d(value_, kRnd); }

long BigReal::to_long() const { return mpfr_get_si(value_, MPFR_RNDZ); }

std::string BigReal::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal r(joint(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  const bool unordered = mpfr_unordered_p(a.value_, b.value_) != 0;
  return order_from(unordered ? 0 : mpfr_cmp(a.value_, b.value_), unordered);
}

BigReal operator+(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_add_si(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_sub_si(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_sub(r.get(), a, b.get(), kRnd);
  return r;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_mul_si(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_div_si(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_si_div(r.get(), a, b.get(), kRnd);
  return r;
}

BigReal operator+(const BigReal& a, double b) {
  BigReal r(a.prec());
  mpfr_add_d(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator-(const BigReal& a, double b) {
  BigReal r(a.prec());
  mpfr_sub_d(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator-(double a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_d_sub(r.get(), a, b.get(), kRnd);
  return r;
}

BigReal operator*(const BigReal& a, double b) {
  BigReal r(a.prec());
  mpfr_mul_d(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator/(const BigReal& a, double b) {
  BigReal r(a.prec());
  mpfr_div_d(r.get(), a.get(), b, kRnd);
  return r;
}

BigReal operator/(double a, const BigReal& b) {
  BigReal r(b.prec());
  mpfr_d_div(r.get(), a, b.get(), kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  const bool unordered = mpfr_nan_p(a.get()) != 0;
  return order_from(unordered ? 0 : mpfr_cmp_si(a.get(), b), unordered);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
  const bool unordered = mpfr_nan_p(a.get()) != 0 || b != b;
  return order_from(unordered ? 0 : mpfr_cmp_d(a.get(), b), unordered);
}

bool operator==(const BigReal& a, long b) { return (a <=> b) == std::partial_ordering::equivalent; }
bool operator==(const BigReal& a, double b) { return (a <=> b) == std::partial_ordering::equivalent; }

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqr(const BigReal& x) { return unary(x, mpfr_sqr); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal log2(const BigReal& x) { return unary(x, mpfr_log2); }
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal tan(const BigReal& x) { return unary(x, mpfr_tan); }
BigReal cot(const BigReal& x) { return unary(x, mpfr_cot); }
BigReal asin(const BigReal& x) { return unary(x, mpfr_asin); }
BigReal atan(const BigReal& x) { return unary(x, mpfr_atan); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal tanh(const BigReal& x) { return unary(x, mpfr_tanh); }
BigReal atanh(const BigReal& x) { return unary(x, mpfr_atanh); }

BigReal floor(const BigReal& x) {
  BigReal r(x.prec());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r(joint(base, exponent));
  mpfr_pow(r.get(), base.get(), exponent.get(), kRnd);
  return r;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.prec());
  mpfr_pow_si(r.get(), base.get(), exponent, kRnd);
  return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(joint(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(joint(x, y));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigReal fmod(const BigReal& x, const BigReal& m) {
  BigReal r(joint(x, m));
  mpfr_fmod(r.get(), x.get(), m.get(), kRnd);
  return r;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal r(x.prec());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

const BigReal& min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
const BigReal& max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

long exponent_of(const BigReal& x) {
  if (x.is_zero() || !x.is_finite()) throw DomainError("exponent_of requires a nonzero finite value");
  return mpfr_get_exp(x.get());
}

}  // namespace innerdyn::num
