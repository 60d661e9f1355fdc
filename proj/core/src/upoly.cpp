#include "galint/upoly.hpp"

#include "galint/error.hpp"

namespace galint {

UPoly::UPoly(GaussRat constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(GaussRat c, int power) {
  if (c.is_zero()) return {};
  std::vector<GaussRat> v(static_cast<size_t>(power) + 1);
  v.back() = std::move(c);
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const GaussRat& root) {
  return UPoly(std::vector<GaussRat>{-root, GaussRat(1)});
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat UPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<size_t>(j)];
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const GaussRat& k) {
  if (k.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= k;
  return *this;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(1);
  UPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussRat> out(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j) out[j - 1] = c_[j] * GaussRat(static_cast<long>(j));
  return UPoly(std::move(out));
}

GaussRat UPoly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::shift(const GaussRat& c) const {
  // Horner in the polynomial ring: p(x + c).
  UPoly acc;
  UPoly xc(std::vector<GaussRat>{c, GaussRat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= xc;
    acc += UPoly(*it);
  }
  return acc;
}

UPoly UPoly::reversed() const {
  std::vector<GaussRat> v(c_.rbegin(), c_.rend());
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return {};
  return *this * leading().inverse();
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const GaussRat& c = c_[static_cast<size_t>(j)];
    if (c.is_zero()) continue;
    std::string mono;
    if (j == 1) {
      mono = std::string(var);
    } else if (j > 1) {
      mono = std::string(var) + "^" + std::to_string(j);
    }
    std::string term;
    if (mono.empty()) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == GaussRat(-1)) {
      term = "-" + mono;
    } else if (c.needs_parens()) {
      term = "(" + c.to_string() + ")*" + mono;
    } else {
      term = c.to_string() + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<GaussRat> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<GaussRat> quo(static_cast<size_t>(da - db) + 1);
  GaussRat inv = b.leading().inverse();
  for (int k = da - db; k >= 0; --k) {
    GaussRat q = rem[static_cast<size_t>(k + db)] * inv;
    if (q.is_zero()) continue;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= q * b.coeffs()[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly poly_gcd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InputError("gcd(0, 0) is undefined");
  UPoly a = p;
  UPoly b = q;
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0(1), s1;
  UPoly t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw InputError("gcd(0, 0) is undefined");
  GaussRat inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

}  // namespace galint
