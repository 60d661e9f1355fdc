#include "galint/mpoly.hpp"

#include <algorithm>

#include "galint/error.hpp"

namespace galint {

MPoly::MPoly(size_t nvars, const GaussRat& constant) : nvars_(nvars) {
  if (!constant.is_zero()) terms_.emplace(Exponent(nvars, 0), constant);
}

MPoly MPoly::variable(size_t nvars, size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(nvars, std::move(e), GaussRat(1));
}

MPoly MPoly::monomial(size_t nvars, Exponent exponent, GaussRat coefficient) {
  MPoly p(nvars);
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponent), std::move(coefficient));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponent& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

GaussRat MPoly::constant_term() const {
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? GaussRat() : it->second;
}

int MPoly::total_degree() const {
  int best = UPoly::kZeroDegree;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    best = std::max(best, d);
  }
  return best;
}

bool MPoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int k : e) d += k;
    if (d != degree) return false;
  }
  return true;
}

void MPoly::add_term(const Exponent& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const GaussRat& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out(std::max(a.nvars_, b.nvars_));
  Exponent e(out.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(nvars_, GaussRat(1));
  MPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::derivative(size_t var) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.add_term(d, c * GaussRat(static_cast<long>(e[var])));
  }
  return out;
}

GaussRat MPoly::eval(const std::vector<GaussRat>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong dimension");
  GaussRat acc;
  for (const auto& [e, c] : terms_) {
    GaussRat t = c;
    for (size_t k = 0; k < nvars_; ++k)
      if (e[k]) t *= point[k].pow(e[k]);
    acc += t;
  }
  return acc;
}

RatFn MPoly::eval(const std::vector<RatFn>& point) const {
  if (point.size() != nvars_) throw InputError("substitution has wrong dimension");
  // Cache powers per variable; the fields here have low degree.
  std::vector<std::vector<RatFn>> powers(nvars_);
  auto power = [&](size_t k, int e) -> const RatFn& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(1);
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[k]);
    return cache[static_cast<size_t>(e)];
  };
  // Accumulate over a common denominator: all terms share denominators that
  // are products of the substituted denominators.
  UPoly common(1);
  for (size_t k = 0; k < nvars_; ++k) {
    int maxe = 0;
    for (const auto& [e, c] : terms_) maxe = std::max(maxe, e[k]);
    if (maxe) common *= point[k].den().pow(static_cast<unsigned>(maxe));
  }
  UPoly num;
  for (const auto& [e, c] : terms_) {
    RatFn t(c);
    for (size_t k = 0; k < nvars_; ++k)
      if (e[k]) t *= power(k, e[k]);
    num += exact_div(t.num() * common, t.den());
  }
  return RatFn(num, common);
}

Exponent MPoly::monomial_content() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent g = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t k = 0; k < nvars_; ++k) g[k] = std::min(g[k], e[k]);
  return g;
}

MPoly MPoly::divide_monomial(const Exponent& m) const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    for (size_t k = 0; k < nvars_; ++k) d[k] -= m[k];
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw InputError("multivariate division by zero");
  size_t n = std::max(a.nvars_, b.nvars_);
  MPoly rem = a;
  MPoly quo(n);
  const Exponent& lb = b.leading_exponent();
  GaussRat inv = b.leading_coefficient().inverse();
  while (!rem.is_zero()) {
    const Exponent& lr = rem.leading_exponent();
    Exponent q(n);
    for (size_t k = 0; k < n; ++k) {
      q[k] = lr[k] - lb[k];
      if (q[k] < 0) return std::nullopt;
    }
    MPoly t = MPoly::monomial(n, q, rem.leading_coefficient() * inv);
    quo += t;
    rem -= t * b;
  }
  return quo;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (size_t k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
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

MRatFn::MRatFn(MPoly poly) : num_(std::move(poly)) {
  den_ = MPoly(num_.nvars(), GaussRat(1));
}

MRatFn::MRatFn(MPoly num, MPoly den) {
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  size_t n = std::max(num.nvars(), den.nvars());
  if (num.is_zero()) {
    num_ = MPoly(n);
    den_ = MPoly(n, GaussRat(1));
    return;
  }
  Exponent g = num.monomial_content();
  Exponent h = den.monomial_content();
  for (size_t k = 0; k < g.size(); ++k) g[k] = std::min(g[k], h[k]);
  num = num.divide_monomial(g);
  den = den.divide_monomial(g);
  if (!den.is_constant()) {
    if (auto q = exact_divide(num, den)) {
      num = std::move(*q);
      den = MPoly(n, GaussRat(1));
    } else if (auto q2 = exact_divide(den, num)) {
      den = std::move(*q2);
      num = MPoly(n, GaussRat(1));
    }
  }
  GaussRat inv = den.leading_coefficient().inverse();
  num_ = num * inv;
  den_ = den * inv;
}

bool MRatFn::is_constant() const {
  // num == k * den with k = lc(num)/lc(den).
  if (num_.is_zero()) return true;
  GaussRat k = num_.leading_coefficient() / den_.leading_coefficient();
  return num_ == den_ * k;
}

MRatFn MRatFn::operator-() const { return MRatFn(-num_, den_); }

MRatFn operator+(const MRatFn& a, const MRatFn& b) {
  if (a.den_ == b.den_) return MRatFn(a.num_ + b.num_, a.den_);
  return MRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

MRatFn operator-(const MRatFn& a, const MRatFn& b) {
  if (a.den_ == b.den_) return MRatFn(a.num_ - b.num_, a.den_);
  return MRatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

MRatFn operator*(const MRatFn& a, const MRatFn& b) {
  return MRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

MRatFn operator/(const MRatFn& a, const MRatFn& b) {
  if (b.is_zero()) throw InputError("rational function division by zero");
  return MRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const MRatFn& a, const MRatFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

MRatFn MRatFn::derivative(size_t var) const {
  if (is_polynomial()) return MRatFn(num_.derivative(var) * den_.leading_coefficient().inverse());
  return MRatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::optional<GaussRat> MRatFn::eval(const std::vector<GaussRat>& point) const {
  GaussRat d = den_.eval(point);
  if (d.is_zero()) return std::nullopt;
  return num_.eval(point) / d;
}

RatFn MRatFn::eval(const std::vector<RatFn>& point) const {
  RatFn d = den_.eval(point);
  if (d.is_zero()) throw InputError("substitution annihilates the denominator");
  return num_.eval(point) / d;
}

std::string MRatFn::to_string(const std::vector<std::string>& names) const {
  if (is_polynomial()) return (num_ * den_.leading_coefficient().inverse()).to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace galint
