#pragma once

#include <optional>
#include <string>

#include "galint/qrat.hpp"

namespace galint {

/// Exact element re + im*i of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(QRat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(QRat re, QRat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(QRat(0), QRat(1)); }

  const QRat& re() const { return re_; }
  const QRat& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == QRat(1); }
  // Both parts integral, i.e. an element of Z[i].
  bool is_gaussian_integer() const { return re_.is_integer() && im_.is_integer(); }

  QRat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat conj() const { return {re_, -im_}; }
  GaussRat inverse() const;

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

  GaussRat pow(long e) const;

  // Least common denominator of both parts.
  mpz_class denominator() const;

  // Printed in the expression grammar: "3/4", "-i", "2*i", "11/16-1/2*i".
  std::string to_string() const;
  // True when to_string() is a sum of a real and an imaginary part and needs
  // parentheses as a factor.
  bool needs_parens() const { return !re_.is_zero() && !im_.is_zero(); }

 private:
  QRat re_;
  QRat im_;
};

// Total order by (re, im); used for deterministic enumeration of poles and
// canonical map keys. Not compatible with the field operations.
struct GaussLess {
  bool operator()(const GaussRat& a, const GaussRat& b) const {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
  }
};

/// Square root in Q(i). Returns w with w*w == z, normalized so that re(w) > 0,
/// or re(w) == 0 and im(w) >= 0; absent when z is not a square in Q(i).
std::optional<GaussRat> gauss_sqrt(const GaussRat& z);

}  // namespace galint
