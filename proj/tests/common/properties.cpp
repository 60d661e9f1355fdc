#include "properties.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "galint/expr.hpp"
#include "galint/factor.hpp"
#include "galint/kovacic.hpp"

using namespace galint;

namespace properties {
namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GaussRat gauss_int(Rng& rng, long bound) { return GaussRat(QRat(uniform(rng, -bound, bound)), QRat(uniform(rng, -bound, bound))); }

GaussRat gauss_rat(Rng& rng, long bound) {
  return GaussRat(QRat(uniform(rng, -bound, bound), uniform(rng, 1, 4)), QRat(uniform(rng, -bound, bound), uniform(rng, 1, 4)));
}

GaussRat nonzero(Rng& rng, long bound) {
  GaussRat z;
  while (z.is_zero()) z = gauss_rat(rng, bound);
  return z;
}

UPoly random_poly(Rng& rng, int max_degree, long bound) {
  std::vector<GaussRat> c;
  int d = static_cast<int>(uniform(rng, 0, max_degree));
  for (int k = 0; k <= d; ++k) c.push_back(gauss_int(rng, bound));
  return UPoly(c);
}

std::vector<GaussRat> distinct_points(Rng& rng, size_t n, long bound) {
  std::vector<GaussRat> pts;
  while (pts.size() < n) {
    GaussRat c = gauss_int(rng, bound);
    bool fresh = true;
    for (const auto& p : pts) fresh = fresh && !(p == c);
    if (fresh) pts.push_back(c);
  }
  return pts;
}

void fail(Outcome& o, const std::string& what) {
  ++o.failures;
  if (o.notes.size() < 5) o.notes.push_back(what);
}

std::complex<double> approx(const GaussRat& z) { return {z.re().raw().get_d(), z.im().raw().get_d()}; }

std::complex<double> approx(const SurdSum& s) {
  std::complex<double> v = approx(s.rational_part());
  for (const auto& [k, c] : s.terms()) v += approx(c) * std::sqrt(approx(k));
  return v;
}

// third-order operator for the symmetric square, written out by hand
RatFn riccati3(const RatFn& r, const RatFn& th, const UPoly& P) {
  RatFn p0(P), p1 = p0.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
  RatFn th1 = th.derivative(), th2 = th1.derivative();
  RatFn three(3), four(4), two(2);
  return p3 + three * th * p2 + (three * th * th + three * th1 - four * r) * p1 +
         (th2 + three * th * th1 + th * th * th - four * r * th - two * r.derivative()) * p0;
}

}  // namespace

Outcome partial_fraction_roundtrip(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    auto poles = distinct_points(rng, static_cast<size_t>(uniform(rng, 1, 3)), 4);
    UPoly den(1);
    for (const auto& c : poles) {
      // random scaling keeps denominators with rational roots in play
      GaussRat s(QRat(uniform(rng, 1, 3)));
      den *= (UPoly::x() * s - UPoly(c * s)).pow(static_cast<unsigned>(uniform(rng, 1, 3)));
    }
    RatFn f(random_poly(rng, 5, 6), den);
    try {
      PartialFractions pf = partial_fractions(f);
      RatFn back = recombine(pf);
      // rebuild independently from the terms as well
      RatFn manual(pf.polynomial_part);
      for (const auto& t : pf.poles)
        for (int j = 1; j <= t.order(); ++j)
          manual += RatFn(t.coefficients[static_cast<size_t>(j - 1)]) * RatFn(UPoly::linear(t.pole)).pow(-j);
      if (!(back == f) || !(manual == f)) fail(o, f.to_string("t"));
    } catch (const std::exception& e) {
      fail(o, f.to_string("t") + ": " + e.what());
    }
  }
  return o;
}

Outcome surd_field_axioms(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  // radicands that never merge with each other
  const std::vector<GaussRat> safe = {GaussRat(2), GaussRat(3), GaussRat(8), GaussRat(12), GaussRat(-7),
                                      GaussRat(QRat(1, 3)), GaussRat(QRat(7), QRat(8)), GaussRat(QRat(-7), QRat(8)),
                                      GaussRat(QRat(5), QRat(2)), GaussRat(QRat(20), QRat(8)), GaussRat(QRat(-1), QRat(3))};
  // plus pairs whose ratio is a square in Q(i), which get merged
  std::vector<GaussRat> merging = safe;
  for (const char* z : {"-7-8*i", "-8+7*i", "2*i", "-3", "3*i*(1+i)^2"}) merging.push_back(parse_gauss(z));
  auto random_surd = [&](const std::vector<GaussRat>& pool) {
    SurdSum s(gauss_rat(rng, 5));
    int n = static_cast<int>(uniform(rng, 0, 3));
    for (int j = 0; j < n; ++j) s += SurdSum::sqrt(pool[static_cast<size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))], gauss_rat(rng, 5));
    return s;
  };
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    bool safe_draw = k % 2 == 0;
    const auto& pool = safe_draw ? safe : merging;
    SurdSum a = random_surd(pool), b = random_surd(pool), c = random_surd(pool);
    GaussRat x = gauss_rat(rng, 5), y = gauss_rat(rng, 5);
    bool ok = true;
    ok = ok && ((a + b) + c == a + (b + c));
    ok = ok && (a + b == b + a);
    ok = ok && (a + SurdSum() == a);
    ok = ok && (a + (-a)).is_zero();
    ok = ok && (a - b == a + (-b));
    ok = ok && ((a + b) * x == a * x + b * x);
    ok = ok && (a * (x + y) == a * x + a * y);
    ok = ok && (a * (x * y) == (a * x) * y);
    ok = ok && (a * GaussRat(1) == a);
    ok = ok && (a * GaussRat(0)).is_zero();
    if (safe_draw) {
      // without merges the representation is canonical
      SurdSum s1 = (a + b) + c, s2 = c + (b + a);
      ok = ok && s1.to_string() == s2.to_string();
    }
    // numeric agreement with principal square roots
    std::complex<double> lhs = approx(a * x + b + c);
    std::complex<double> rhs = approx(a) * approx(x) + approx(b) + approx(c);
    ok = ok && std::abs(lhs - rhs) <= 1e-9 * (1 + std::abs(rhs));
    if (!ok) fail(o, a.to_string() + " | " + b.to_string() + " | " + c.to_string());
  }
  return o;
}

Outcome gauss_field_axioms(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    GaussRat a = gauss_rat(rng, 9), b = gauss_rat(rng, 9), c = nonzero(rng, 9);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a * b == b * a && c * c.inverse() == GaussRat(1) && (a / c) * c == a && (a - a).is_zero() &&
              (a * b).norm() == a.norm() * b.norm();
    if (auto w = gauss_sqrt(a * a)) ok = ok && (*w * *w == a * a);
    else ok = false;
    if (!ok) fail(o, a.to_string() + " | " + b.to_string() + " | " + c.to_string());
  }
  return o;
}

Outcome case1_witness_soundness(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  const std::vector<QRat> exps = {QRat(1, 2), QRat(-1, 2), QRat(3, 2), QRat(1), QRat(2), QRat(1, 3), QRat(-1, 4)};
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    // chi = prod (t - c)^a * exp(q t) has omega = chi'/chi rational
    auto poles = distinct_points(rng, static_cast<size_t>(uniform(rng, 1, 3)), 3);
    RatFn omega;
    for (const auto& c : poles)
      omega += RatFn(GaussRat(exps[static_cast<size_t>(uniform(rng, 0, static_cast<long>(exps.size()) - 1))])) /
               RatFn(UPoly::linear(c));
    if (uniform(rng, 0, 2) == 0) omega += RatFn(gauss_int(rng, 2));
    RatFn r = omega.derivative() + omega * omega;
    try {
      KovacicReport rep = kovacic_classify(r);
      if (rep.verdict.case_label != "1") {
        fail(o, "no case-1 verdict for " + r.to_string("t"));
        continue;
      }
      if (!rep.c1) continue;  // constant r handled in closed form
      auto w = rep.c1->omega_full();
      if (!w || !(w->derivative() + *w * *w == r)) fail(o, "bad witness for " + r.to_string("t"));
    } catch (const std::exception& e) {
      fail(o, r.to_string("t") + ": " + e.what());
    }
  }
  return o;
}

Outcome case2_witness_soundness(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    // chi = f^(-1/4) exp(+-int sqrt(f)) for odd-degree f with simple roots
    auto roots = distinct_points(rng, uniform(rng, 0, 1) ? 1 : 3, 3);
    GaussRat lead;
    while (lead.is_zero()) lead = gauss_int(rng, 3);
    UPoly f(lead);
    for (const auto& c : roots) f *= UPoly::linear(c);
    RatFn F(f), F1 = F.derivative(), F2 = F1.derivative();
    RatFn r = F - F2 / (RatFn(4) * F) + RatFn(5) * F1 * F1 / (RatFn(16) * F * F);
    try {
      KovacicReport rep = kovacic_classify(r);
      if (rep.verdict.case_label != "2" || !rep.c2 || !rep.c2->witness) {
        fail(o, "expected case 2 for " + r.to_string("t") + ", got " + rep.verdict.case_label);
        continue;
      }
      const Case2Family& w = rep.c2->families[*rep.c2->witness];
      if (!w.theta || !w.P || !riccati3(r, *w.theta, *w.P).is_zero()) fail(o, "bad witness for " + r.to_string("t"));
    } catch (const std::exception& e) {
      fail(o, r.to_string("t") + ": " + e.what());
    }
  }
  return o;
}

Outcome leibniz_rule(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    auto random_ratfn = [&] {
      UPoly den = random_poly(rng, 3, 4);
      if (den.is_zero()) den = UPoly(1);
      return RatFn(random_poly(rng, 3, 4), den);
    };
    RatFn f = random_ratfn(), g = random_ratfn();
    bool ok = (f * g).derivative() == f.derivative() * g + f * g.derivative() &&
              (f + g).derivative() == f.derivative() + g.derivative();
    if (!g.is_zero()) ok = ok && (f / g).derivative() == (f.derivative() * g - f * g.derivative()) / (g * g);
    // multivariate: d/dx_j of a product
    MPoly p(2), q(2);
    for (int t = 0; t < 4; ++t) {
      p += MPoly::monomial(2, {static_cast<int>(uniform(rng, 0, 3)), static_cast<int>(uniform(rng, 0, 3))}, gauss_int(rng, 4));
      q += MPoly::monomial(2, {static_cast<int>(uniform(rng, 0, 3)), static_cast<int>(uniform(rng, 0, 3))}, gauss_int(rng, 4));
    }
    for (size_t j = 0; j < 2; ++j) ok = ok && (p * q).derivative(j) == p.derivative(j) * q + p * q.derivative(j);
    if (!ok) fail(o, f.to_string("t") + " | " + g.to_string("t"));
  }
  return o;
}

Outcome gcd_exactness(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    UPoly g = random_poly(rng, 3, 5), u = random_poly(rng, 4, 5), v = random_poly(rng, 4, 5);
    if (g.is_zero()) g = UPoly(1);
    UPoly a = g * u, b = g * v;
    if (a.is_zero() && b.is_zero()) {
      --o.instances;
      continue;
    }
    UPoly h = poly_gcd(a, b);
    bool ok = h.leading() == GaussRat(1);
    ok = ok && divmod(a, h).second.is_zero() && divmod(b, h).second.is_zero();
    ok = ok && divmod(h, g).second.is_zero();  // every common divisor divides the gcd
    ExtendedGcd e = extended_gcd(a, b);
    ok = ok && e.gcd == h && e.s * a + e.t * b == h;
    if (!ok) fail(o, a.to_string("t") + " | " + b.to_string("t"));
  }
  return o;
}

Outcome parse_print_roundtrip(int count, std::uint64_t seed) {
  Rng rng(seed);
  Outcome o;
  std::vector<std::string> vars{"x", "y", "z"};
  for (int k = 0; k < count; ++k) {
    ++o.instances;
    MPoly p(3);
    for (int t = 0; t < 5; ++t)
      p += MPoly::monomial(3, {static_cast<int>(uniform(rng, 0, 3)), static_cast<int>(uniform(rng, 0, 2)), static_cast<int>(uniform(rng, 0, 2))},
                           gauss_rat(rng, 7));
    UPoly den = random_poly(rng, 3, 4);
    if (den.is_zero()) den = UPoly(1);
    RatFn f(random_poly(rng, 3, 4), den);
    bool ok = parse_poly(p.to_string(vars), vars) == p && parse_ratfn(f.to_string("t"), "t") == f;
    if (!ok) fail(o, p.to_string(vars) + " | " + f.to_string("t"));
  }
  return o;
}

}  // namespace properties
