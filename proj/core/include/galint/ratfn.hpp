#pragma once

#include <string>
#include <string_view>

#include "galint/upoly.hpp"

namespace galint {

/// Rational function num/den in one variable over Q(i), kept canonical:
/// gcd(num, den) = 1 and den monic. Equality is therefore structural.
class RatFn {
 public:
  RatFn() : den_(1) {}
  RatFn(GaussRat constant) : num_(std::move(constant)), den_(1) {}  // NOLINT
  RatFn(long constant) : RatFn(GaussRat(constant)) {}  // NOLINT
  RatFn(UPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT
  RatFn(UPoly num, UPoly den);

  static RatFn x() { return RatFn(UPoly::x()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  GaussRat constant_value() const { return num_.coeff(0); }

  // deg(den) - deg(num); the order of vanishing at infinity.
  int order_at_infinity() const;

  RatFn operator-() const { return RatFn(-num_, den_, Canonical{}); }
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  friend bool operator==(const RatFn& a, const RatFn& b) = default;

  RatFn inverse() const;
  RatFn pow(long e) const;
  RatFn derivative() const;
  // Throws InputError when x is a pole.
  GaussRat eval(const GaussRat& x) const;
  // f(x + c)
  RatFn shift(const GaussRat& c) const;
  // f(g(x))
  RatFn compose(const RatFn& g) const;

  // "(num)/(den)" or the bare numerator, in the expression grammar.
  std::string to_string(std::string_view var) const;

 private:
  struct Canonical {};
  RatFn(UPoly num, UPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  UPoly num_;
  UPoly den_;
};

}  // namespace galint
