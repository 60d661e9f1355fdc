#include "galint/surd.hpp"

#include <complex>
#include <vector>

namespace galint {
namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

struct CanonicalRoot {
  GaussRat factor;                   // sqrt(z) == factor * sqrt(radicand)
  std::optional<GaussRat> radicand;  // absent when sqrt(z) lies in Q(i)
};

CanonicalRoot canonical_root(const GaussRat& z) {
  if (auto w = gauss_sqrt(z)) return {*w, std::nullopt};
  // Scale to a Gaussian integer: sqrt(z) = sqrt(z * L^2) / L.
  mpz_class l = z.denominator();
  mpz_class re = z.re().num() * (l / z.re().den()) * l;
  mpz_class im = z.im().num() * (l / z.im().den()) * l;
  QRat factor(mpz_class(1), l);

  mpz_class g;
  mpz_gcd(g.get_mpz_t(), re.get_mpz_t(), im.get_mpz_t());
  for (unsigned long p = 2; p <= kTrialDivisionBound; ++p) {
    mpz_class p2 = mpz_class(p) * p;
    if (p2 > g) break;
    while (mpz_divisible_p(g.get_mpz_t(), p2.get_mpz_t())) {
      g /= p2;
      re /= p2;
      im /= p2;
      factor *= QRat(static_cast<long>(p));
    }
  }
  GaussRat f(factor);
  if (im == 0 && re < 0) {
    re = -re;
    f *= GaussRat::i();
  }
  return {f, GaussRat(QRat(re), QRat(im))};
}

}  // namespace

SurdSum SurdSum::sqrt(const GaussRat& radicand, const GaussRat& coefficient) {
  SurdSum out;
  if (coefficient.is_zero() || radicand.is_zero()) return out;
  CanonicalRoot root = canonical_root(radicand);
  if (!root.radicand) {
    out.rational_ = coefficient * root.factor;
  } else {
    out.add_atom(*root.radicand, coefficient * root.factor);
  }
  return out;
}

namespace {

std::complex<double> approx(const GaussRat& z) { return {z.re().raw().get_d(), z.im().raw().get_d()}; }

}  // namespace

void SurdSum::add_atom(GaussRat radicand, GaussRat coefficient) {
  if (coefficient.is_zero()) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    for (auto cand = terms_.begin(); cand != terms_.end(); ++cand) {
      if (auto w = gauss_sqrt(radicand / cand->first)) {
        // sqrt(radicand) = +-w * sqrt(existing); the two candidates are
        // negatives of each other, so doubles pick the principal one safely
        std::complex<double> lhs = std::sqrt(approx(radicand));
        std::complex<double> rhs = approx(*w) * std::sqrt(approx(cand->first));
        it = cand;
        coefficient *= std::real(std::conj(lhs) * rhs) < 0 ? -*w : *w;
        break;
      }
    }
  }
  if (it == terms_.end()) {
    terms_.emplace(std::move(radicand), std::move(coefficient));
    return;
  }
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<GaussRat> SurdSum::as_gauss() const {
  if (!terms_.empty()) return std::nullopt;
  return rational_;
}

std::optional<mpz_class> SurdSum::as_integer() const {
  if (!terms_.empty() || !rational_.is_real() || !rational_.re().is_integer())
    return std::nullopt;
  return rational_.re().num();
}

SurdSum SurdSum::operator-() const {
  SurdSum out = *this;
  out.rational_ = -out.rational_;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  rational_ += o.rational_;
  for (const auto& [k, c] : o.terms_) add_atom(k, c);
  return *this;
}

SurdSum& SurdSum::operator*=(const GaussRat& k) {
  if (k.is_zero()) {
    *this = SurdSum();
    return *this;
  }
  rational_ *= k;
  for (auto& [r, c] : terms_) c *= k;
  return *this;
}

std::string SurdSum::to_string() const {
  std::string out;
  if (!rational_.is_zero() || terms_.empty()) out = rational_.to_string();
  for (const auto& [k, c] : terms_) {
    std::string atom = "sqrt(" + k.to_string() + ")";
    std::string coeff;
    if (c.is_one()) {
      coeff = "";
    } else if (c == GaussRat(-1)) {
      coeff = "-";
    } else if (c.needs_parens()) {
      coeff = "(" + c.to_string() + ")*";
    } else {
      coeff = c.to_string() + "*";
    }
    std::string term = coeff + atom;
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::optional<unsigned long> surd_as_nonneg_int(const SurdSum& a) {
  auto n = a.as_integer();
  if (!n || *n < 0 || !n->fits_ulong_p()) return std::nullopt;
  return n->get_ui();
}

}  // namespace galint
