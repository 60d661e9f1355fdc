#include "galint/gauss.hpp"

#include "galint/error.hpp"

namespace galint {

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  QRat re = re_ * o.re_ - im_ * o.im_;
  QRat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw InputError("division by zero in Q(i)");
  QRat n = norm();
  return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_real()) {
    if (o.re_.is_zero()) throw InputError("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussRat GaussRat::pow(long e) const {
  GaussRat base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussRat result(1);
  while (n) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

mpz_class GaussRat::denominator() const { return lcm(re_.den(), im_.den()); }

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_ == QRat(1)) {
    im = "i";
  } else if (im_ == QRat(-1)) {
    im = "-i";
  } else {
    im = im_.to_string() + "*i";
  }
  if (re_.is_zero()) return im;
  if (im.front() == '-') return re_.to_string() + im;
  return re_.to_string() + "+" + im;
}

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
  if (z.is_zero()) return GaussRat();
  // w = x + y i with x^2 - y^2 = a, 2xy = b, x^2 + y^2 = |z|.
  auto modulus = z.norm().sqrt();
  if (!modulus) return std::nullopt;
  const QRat& a = z.re();
  const QRat& b = z.im();
  auto x = ((*modulus + a) / QRat(2)).sqrt();
  auto y = ((*modulus - a) / QRat(2)).sqrt();
  if (!x || !y) return std::nullopt;
  QRat xs = *x;
  QRat ys = *y;
  // Fix the relative sign from 2xy = b, then normalize the overall sign.
  if (b.sign() < 0) ys = -ys;
  GaussRat w(xs, ys);
  if (w.re().sign() < 0 || (w.re().is_zero() && w.im().sign() < 0)) w = -w;
  return w;
}

}  // namespace galint
