#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galint/gauss.hpp"

namespace galint {

/// Dense univariate polynomial over Q(i). coeffs()[j] multiplies x^j; the
/// leading coefficient is never zero.
class UPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  UPoly() = default;
  UPoly(GaussRat constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(GaussRat(constant)) {}  // NOLINT
  explicit UPoly(std::vector<GaussRat> coeffs);

  static UPoly x() { return UPoly(std::vector<GaussRat>{GaussRat(0), GaussRat(1)}); }
  static UPoly monomial(GaussRat c, int power);
  // x - root
  static UPoly linear(const GaussRat& root);

  const std::vector<GaussRat>& coeffs() const { return c_; }
  // kZeroDegree for the zero polynomial.
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  GaussRat coeff(int j) const;
  GaussRat leading() const { return c_.empty() ? GaussRat() : c_.back(); }
  GaussRat trailing() const { return c_.empty() ? GaussRat() : c_.front(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const GaussRat& k);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const GaussRat& k) { return a *= k; }
  friend UPoly operator*(const GaussRat& k, UPoly a) { return a *= k; }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  UPoly pow(unsigned e) const;
  UPoly derivative() const;
  GaussRat eval(const GaussRat& x) const;
  // p(x + c)
  UPoly shift(const GaussRat& c) const;
  // x^deg * p(1/x) with deg = degree()
  UPoly reversed() const;
  UPoly monic() const;

  // "2*x^2-(1+i)*x+3/4" in the expression grammar.
  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<GaussRat> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor; throws InputError when both are zero.
UPoly poly_gcd(const UPoly& p, const UPoly& q);

/// Returns s with s*a == g (mod m), g = gcd(a, m) monic. Used for inverses in
/// Q(i)[x]/(m).
struct ExtendedGcd {
  UPoly gcd;
  UPoly s;
  UPoly t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Exact quotient; throws InternalError when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

}  // namespace galint
