#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace galint {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class QRat {
 public:
  QRat() = default;
  QRat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const mpz_class& integer) : v_(integer) {}
  QRat(const mpz_class& num, const mpz_class& den);
  explicit QRat(mpq_class value);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  QRat operator-() const { return QRat(mpq_class(-v_)); }
  QRat& operator+=(const QRat& o) { v_ += o.v_; return *this; }
  QRat& operator-=(const QRat& o) { v_ -= o.v_; return *this; }
  QRat& operator*=(const QRat& o) { v_ *= o.v_; return *this; }
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

  friend bool operator==(const QRat& a, const QRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const QRat& a, const QRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  QRat abs() const { return QRat(mpq_class(::abs(v_))); }
  QRat inverse() const;

  // Exact square root in Q, if one exists.
  std::optional<QRat> sqrt() const;

  // "p" or "p/q".
  std::string to_string() const;

 private:
  mpq_class v_;
};

mpz_class lcm(const mpz_class& a, const mpz_class& b);

}  // namespace galint
