#include "galint/qrat.hpp"

#include "galint/error.hpp"

namespace galint {

QRat::QRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

QRat::QRat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  return QRat(mpq_class(1) / v_);
}

std::optional<QRat> QRat::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(num().get_mpz_t()) || !mpz_perfect_square_p(den().get_mpz_t()))
    return std::nullopt;
  mpz_class n = ::sqrt(num());
  mpz_class d = ::sqrt(den());
  return QRat(n, d);
}

std::string QRat::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace galint
