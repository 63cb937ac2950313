#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace selberg {

// Exact rational on int64 with overflow-checked arithmetic. The gamma-set
// algebra decides set coincidences by equality tests, so everything that
// feeds it must stay exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_, tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
    __int128 d = i128(a.den_) * b.den_;
    return make(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Integer floor; exact.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p", "p/q", or a decimal like "0.5" (decimals must be exact in
  // binary-free base-10 sense: digits after the point give a power-of-ten
  // denominator).
  static Rational parse(std::string_view s);

  // Converts a double that is an exact small rational (denominator a power of
  // two not exceeding max_den). Throws otherwise: irrational or unrepresentable
  // inputs must be given as "p/q" strings.
  static Rational from_double_exact(double x, std::int64_t max_den = (1 << 20));

 private:
  struct tag {};
  Rational(std::int64_t n, std::int64_t d, tag) : num_(n), den_(d) {}
  static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax)
      throw std::overflow_error("rational overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), tag{});
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }

  void normalize() { *this = make(num_, den_); }

  std::int64_t num_, den_;
};

// Complex number with exact rational real and imaginary parts.
struct QComplex {
  Rational re, im;

  QComplex() = default;
  QComplex(Rational r) : re(r) {}
  QComplex(Rational r, Rational i) : re(r), im(i) {}

  bool is_real() const { return im.is_zero(); }

  friend QComplex operator+(const QComplex& a, const QComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend QComplex operator-(const QComplex& a, const QComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend QComplex operator*(const Rational& c, const QComplex& a) {
    return {c * a.re, c * a.im};
  }
  friend QComplex operator/(const QComplex& a, const Rational& c) {
    return {a.re / c, a.im / c};
  }
  QComplex conj() const { return {re, -im}; }

  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
  // Lexicographic order, for canonical sorting only.
  friend bool operator<(const QComplex& a, const QComplex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    return im.is_zero() ? re.str() : re.str() + (im > Rational(0) ? "+" : "") + im.str() + "i";
  }
};

}  // namespace selberg
