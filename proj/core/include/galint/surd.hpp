#pragma once

#include <map>
#include <optional>
#include <string>

#include "galint/gauss.hpp"

namespace galint {

/// Finite sum q + sum_k c_k * sqrt(k) with q, c_k in Q(i).
///
/// Every stored radicand k is a Gaussian integer that is not a square in Q(i),
/// with rational square factors (found by trial division up to 10^6) pulled
/// out; negative rational radicands are stored as i*sqrt(|k|). Two radicands
/// whose ratio is a square in Q(i) are merged into one atom when summed.
///
/// sqrt(k) denotes the principal square root. Merging two atoms uses
/// gauss_sqrt of their ratio with the sign that matches principal values.
/// Which atom survives a merge depends on the order of operations, so
/// equality is decided by subtracting and testing for zero.
class SurdSum {
 public:
  using TermMap = std::map<GaussRat, GaussRat, GaussLess>;

  SurdSum() = default;
  SurdSum(GaussRat rational) : rational_(std::move(rational)) {}  // NOLINT
  SurdSum(long value) : rational_(value) {}  // NOLINT

  // coefficient * sqrt(radicand), canonicalized.
  static SurdSum sqrt(const GaussRat& radicand, const GaussRat& coefficient = GaussRat(1));

  const GaussRat& rational_part() const { return rational_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return rational_.is_zero() && terms_.empty(); }
  // No surd atoms left.
  std::optional<GaussRat> as_gauss() const;
  std::optional<mpz_class> as_integer() const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o) { return *this += -o; }
  SurdSum& operator*=(const GaussRat& k);

  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(SurdSum a, const GaussRat& k) { return a *= k; }
  friend SurdSum operator*(const GaussRat& k, SurdSum a) { return a *= k; }
  friend bool operator==(const SurdSum& a, const SurdSum& b) { return (a - b).is_zero(); }

  // "1/2+1/2*i*sqrt(7)" style; sqrt(...) is not part of the input grammar.
  std::string to_string() const;

 private:
  void add_atom(GaussRat radicand, GaussRat coefficient);

  GaussRat rational_;
  TermMap terms_;
};

/// Non-negative integer value of a, if a has no surd atoms and is a real
/// non-negative integer.
std::optional<unsigned long> surd_as_nonneg_int(const SurdSum& a);

}  // namespace galint
