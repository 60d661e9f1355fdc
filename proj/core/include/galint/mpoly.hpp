#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galint/ratfn.hpp"

namespace galint {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
/// Terms are keyed by dense exponent vectors in descending lexicographic
/// order, so terms().begin() is the leading term.
class MPoly {
 public:
  using TermMap = std::map<Exponent, GaussRat, std::greater<>>;

  MPoly() = default;
  explicit MPoly(size_t nvars) : nvars_(nvars) {}
  MPoly(size_t nvars, const GaussRat& constant);
  static MPoly variable(size_t nvars, size_t index);
  static MPoly monomial(size_t nvars, Exponent exponent, GaussRat coefficient);

  size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRat constant_term() const;
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  const GaussRat& leading_coefficient() const { return terms_.begin()->second; }
  const Exponent& leading_exponent() const { return terms_.begin()->first; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const GaussRat& k);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const GaussRat& k) { return a *= k; }
  friend MPoly operator*(const GaussRat& k, MPoly a) { return a *= k; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly pow(unsigned e) const;
  MPoly derivative(size_t var) const;
  GaussRat eval(const std::vector<GaussRat>& point) const;
  // Substitution of univariate rational functions for every variable.
  RatFn eval(const std::vector<RatFn>& point) const;

  // Largest monomial dividing every term.
  Exponent monomial_content() const;
  MPoly divide_monomial(const Exponent& e) const;
  // Exact quotient when b divides a, absent otherwise.
  friend std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponent& e, const GaussRat& c);

  size_t nvars_ = 0;
  TermMap terms_;
};

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

/// Multivariate rational function num/den. Normalization cancels common
/// monomial factors and exact polynomial divisibility, and makes the leading
/// coefficient of den equal to 1; it does not compute multivariate gcds.
/// Equality and constancy are decided by cross-multiplication.
class MRatFn {
 public:
  MRatFn() = default;
  MRatFn(MPoly poly);  // NOLINT(google-explicit-constructor)
  MRatFn(MPoly num, MPoly den);

  size_t nvars() const { return num_.nvars(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const;

  MRatFn operator-() const;
  friend MRatFn operator+(const MRatFn& a, const MRatFn& b);
  friend MRatFn operator-(const MRatFn& a, const MRatFn& b);
  friend MRatFn operator*(const MRatFn& a, const MRatFn& b);
  friend MRatFn operator/(const MRatFn& a, const MRatFn& b);
  friend bool operator==(const MRatFn& a, const MRatFn& b);

  MRatFn derivative(size_t var) const;
  // Absent when the point is a zero of the denominator.
  std::optional<GaussRat> eval(const std::vector<GaussRat>& point) const;
  RatFn eval(const std::vector<RatFn>& point) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  MPoly num_;
  MPoly den_;
};

}  // namespace galint
