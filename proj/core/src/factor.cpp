#include "galint/factor.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "galint/error.hpp"

namespace galint {
namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

// Prime factorization of n > 0 by trial division; an unfactored cofactor
// beyond the bound is returned as if it were prime.
std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  for (unsigned long p = 2; p <= kTrialDivisionBound; ++p) {
    if (mpz_class(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(mpz_class(p), e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  return divs;
}

bool divides(const GaussRat& d, const GaussRat& z) { return (z / d).is_gaussian_integer(); }

// All Gaussian integers dividing z (z a nonzero Gaussian integer), including
// every unit multiple.
std::vector<GaussRat> gaussian_divisors(const GaussRat& z) {
  std::vector<GaussRat> out;
  for (const mpz_class& m : divisors(z.norm().num())) {
    mpz_class root = sqrt(m);
    for (mpz_class x = 0; x <= root; ++x) {
      mpz_class y2 = m - x * x;
      if (!mpz_perfect_square_p(y2.get_mpz_t())) continue;
      mpz_class y = sqrt(y2);
      for (int sx : {1, -1}) {
        for (int sy : {1, -1}) {
          if ((x == 0 && sx < 0) || (y == 0 && sy < 0)) continue;
          GaussRat g(QRat(mpz_class(x * sx)), QRat(mpz_class(y * sy)));
          if (divides(g, z)) out.push_back(g);
        }
      }
    }
  }
  return out;
}

// Scales p to Gaussian-integer coefficients.
UPoly clear_denominators(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.denominator());
  return p * GaussRat(QRat(l));
}

// Roots in Q(i) of a square-free polynomial with nonzero constant term.
std::vector<GaussRat> simple_roots(const UPoly& f) {
  std::vector<GaussRat> roots;
  UPoly p = clear_denominators(f);
  if (p.degree() < 1) return roots;
  if (p.degree() == 1) {
    roots.push_back(-p.coeff(0) / p.coeff(1));
    return roots;
  }
  std::vector<GaussRat> numerators = gaussian_divisors(p.trailing());
  std::vector<GaussRat> denominators = gaussian_divisors(p.leading());
  std::set<GaussRat, GaussLess> seen;
  for (const auto& b : denominators) {
    for (const auto& a : numerators) {
      GaussRat cand = a / b;
      if (!seen.insert(cand).second) continue;
      if (p.eval(cand).is_zero()) {
        roots.push_back(cand);
        if (static_cast<int>(roots.size()) == p.degree()) return roots;
      }
    }
  }
  return roots;
}

}  // namespace

std::vector<std::pair<UPoly, int>> square_free(const UPoly& p) {
  // Yun's algorithm.
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  UPoly a = p.monic();
  UPoly da = a.derivative();
  UPoly b = poly_gcd(a, da);
  UPoly c = exact_div(a, b);
  UPoly d = exact_div(da, b) - c.derivative();
  int k = 1;
  while (c.degree() > 0) {
    UPoly g = poly_gcd(c, d);
    if (g.degree() > 0) out.emplace_back(g, k);
    c = exact_div(c, g);
    d = exact_div(d, g) - c.derivative();
    ++k;
  }
  return out;
}

RootSplit roots_in_Qi(const UPoly& p) {
  if (p.is_zero()) throw InputError("roots_in_Qi of the zero polynomial");
  RootSplit out;
  out.remainder = UPoly(1);
  std::map<GaussRat, int, GaussLess> found;
  for (const auto& [factor, mult] : square_free(p)) {
    UPoly rest = factor;
    if (rest.trailing().is_zero()) {
      found[GaussRat()] += mult;
      rest = exact_div(rest, UPoly::x());
    }
    for (const auto& root : simple_roots(rest)) {
      found[root] += mult;
      rest = exact_div(rest, UPoly::linear(root));
    }
    out.remainder *= rest.monic().pow(static_cast<unsigned>(mult));
  }
  out.roots.assign(found.begin(), found.end());
  return out;
}

std::vector<GaussRat> taylor_coefficients(const RatFn& f, const GaussRat& c, int n) {
  UPoly num = f.num().shift(c);
  UPoly den = f.den().shift(c);
  if (den.trailing().is_zero()) throw InputError("Taylor expansion at a pole");
  // Power-series division num/den truncated at order n.
  std::vector<GaussRat> out(static_cast<size_t>(n));
  GaussRat inv = den.trailing().inverse();
  for (int k = 0; k < n; ++k) {
    GaussRat acc = num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = acc * inv;
  }
  return out;
}

PartialFractions partial_fractions(const RatFn& f) {
  RootSplit split = roots_in_Qi(f.den());
  if (split.remainder.degree() > 0) {
    throw UnsupportedError("unsupported base field: denominator factor " +
                           split.remainder.to_string("x") + " has no roots in Q(i)");
  }
  PartialFractions pf;
  auto [quo, rem] = divmod(f.num(), f.den());
  pf.polynomial_part = quo;
  for (const auto& [pole, order] : split.roots) {
    // (x - p)^k * f is regular at p; its Taylor coefficients give c_{p,k..1}.
    UPoly cofactor = exact_div(f.den(), UPoly::linear(pole).pow(static_cast<unsigned>(order)));
    RatFn local(rem, cofactor);
    std::vector<GaussRat> t = taylor_coefficients(local, pole, order);
    PoleTerm term{pole, std::vector<GaussRat>(static_cast<size_t>(order))};
    for (int j = 1; j <= order; ++j) term.coefficients[static_cast<size_t>(j - 1)] = t[static_cast<size_t>(order - j)];
    pf.poles.push_back(std::move(term));
  }
  return pf;
}

RatFn recombine(const PartialFractions& pf) {
  RatFn out(pf.polynomial_part);
  for (const auto& term : pf.poles) {
    for (int j = 1; j <= term.order(); ++j) {
      const GaussRat& c = term.coefficients[static_cast<size_t>(j - 1)];
      if (c.is_zero()) continue;
      out += RatFn(UPoly(c), UPoly::linear(term.pole).pow(static_cast<unsigned>(j)));
    }
  }
  return out;
}

}  // namespace galint
