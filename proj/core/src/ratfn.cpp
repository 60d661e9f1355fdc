#include "galint/ratfn.hpp"

#include <algorithm>

#include "galint/error.hpp"

namespace galint {

RatFn::RatFn(UPoly num, UPoly den) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den.degree() > 0 && num.degree() >= 0) {
    UPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  GaussRat inv = den.leading().inverse();
  num_ = num * inv;
  den_ = den * inv;
}

int RatFn::order_at_infinity() const {
  if (num_.is_zero()) return std::numeric_limits<int>::max();
  return den_.degree() - num_.degree();
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (den_ == o.den_) return *this = RatFn(num_ + o.num_, den_);
  return *this = RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn& RatFn::operator-=(const RatFn& o) {
  if (den_ == o.den_) return *this = RatFn(num_ - o.num_, den_);
  return *this = RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn& RatFn::operator*=(const RatFn& o) {
  return *this = RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw InputError("rational function division by zero");
  return *this = RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::inverse() const { return RatFn(1) / *this; }

RatFn RatFn::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  auto n = static_cast<unsigned>(e);
  return RatFn(num_.pow(n), den_.pow(n), Canonical{});
}

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

GaussRat RatFn::eval(const GaussRat& x) const {
  GaussRat d = den_.eval(x);
  if (d.is_zero()) throw InputError("evaluation at a pole");
  return num_.eval(x) / d;
}

RatFn RatFn::shift(const GaussRat& c) const { return RatFn(num_.shift(c), den_.shift(c)); }

RatFn RatFn::compose(const RatFn& g) const {
  auto horner = [&g](const UPoly& p) {
    RatFn acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
      acc *= g;
      acc += RatFn(*it);
    }
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RatFn::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  auto single_term = [](const UPoly& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const GaussRat& c) { return !c.is_zero(); }) == 1;
  };
  GaussRat lc = num_.leading();
  bool simple_num = single_term(num_) && lc.is_real() && lc.re().is_integer();
  bool simple_den = single_term(den_);
  std::string n = num_.to_string(var), d = den_.to_string(var);
  return (simple_num ? n : "(" + n + ")") + "/" + (simple_den ? d : "(" + d + ")");
}

}  // namespace galint
