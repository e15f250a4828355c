#pragma once

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace hida {

/// Parses "p/q", "-p/q", "+p" etc. into a canonical rational. Throws ParseError.
mpq_class parse_rational(std::string_view text);

/// Canonical text form of a rational ("3/2", "-1", "0").
std::string rational_string(const mpq_class& q);

/// Exact Gaussian rational re + i*im. All spaces in the engine are complexified,
/// so every coefficient is a Scalar.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : re_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);              // NOLINT(google-explicit-constructor)

  static Scalar parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2 = re^2 + im^2.
  mpq_class abs_squared() const;
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form for diagnostics, e.g. "3/2", "1-2i", "1/2i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Integer power with exponent >= 0.
Scalar pow(const Scalar& base, unsigned exponent);

}  // namespace hida
