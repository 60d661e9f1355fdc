#include "galint/kovacic.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <set>

#include "galint/error.hpp"
#include "galint/factor.hpp"
#include "galint/matrix.hpp"

namespace galint {

std::string Pole::label(const std::string& var) const {
  if (split) return location.to_string();
  return "root of " + group.to_string(var);
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "true";
    case Tri::No:
      return "false";
    case Tri::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

const GaussRat kHalf(QRat(1, 2));

// alpha = 1/2 +- 1/2 sqrt(1 + 4b)
std::pair<SurdSum, SurdSum> order_two_exponents(const GaussRat& b) {
  SurdSum root = SurdSum::sqrt(GaussRat(1) + GaussRat(4) * b, kHalf);
  return {SurdSum(kHalf) + root, SurdSum(kHalf) - root};
}

// Value of a in Q(i)[x]/(q) reduced to degree < deg q.
UPoly reduce_mod(const UPoly& a, const UPoly& q) { return divmod(a, q).second; }

UPoly inverse_mod(const UPoly& a, const UPoly& q) {
  ExtendedGcd eg = extended_gcd(reduce_mod(a, q), q);
  if (eg.gcd.degree() != 0) throw InternalError("non-invertible element modulo a square-free factor");
  return reduce_mod(eg.s, q);
}

std::string group_error(const UPoly& q, const std::string& what) {
  return "unsupported base field: " + what + " at the roots of " + q.to_string("x") +
         ", which has no roots in Q(i)";
}

// Laurent data of r at infinity for even order -2nu <= 0.
void infinity_expansion(const RatFn& r, InfinityData& inf) {
  int nu = -inf.order / 2;
  auto [q, rem] = divmod(r.num(), r.den());
  // Coefficient of x^k in the expansion of r at infinity, k >= nu - 1 >= -1.
  auto coeff = [&](int k) -> GaussRat {
    if (k >= 0) return q.coeff(k);
    if (k == -1 && rem.degree() == r.den().degree() - 1) return rem.leading() / r.den().leading();
    return GaussRat();
  };
  auto a = gauss_sqrt(coeff(2 * nu));
  if (!a) return;
  std::vector<GaussRat> s(static_cast<size_t>(nu) + 1);
  s[0] = *a;
  GaussRat inv2a = (GaussRat(2) * *a).inverse();
  for (int j = 1; j <= nu; ++j) {
    GaussRat acc = coeff(2 * nu - j);
    for (int i = 1; i < j; ++i) acc -= s[static_cast<size_t>(i)] * s[static_cast<size_t>(j - i)];
    s[static_cast<size_t>(j)] = acc * inv2a;
  }
  std::vector<GaussRat> c(static_cast<size_t>(nu) + 1);
  for (int j = 0; j <= nu; ++j) c[static_cast<size_t>(nu - j)] = s[static_cast<size_t>(j)];
  UPoly S(std::move(c));
  // b = coefficient of x^(nu-1) in r - S^2.
  UPoly S2 = S * S;
  GaussRat b = coeff(nu - 1) - (nu - 1 >= 0 ? S2.coeff(nu - 1) : GaussRat());
  GaussRat ratio = b / *a;
  inf.sqrt_r = std::move(S);
  inf.b = b;
  inf.alpha_plus = SurdSum((ratio - GaussRat(nu)) * kHalf);
  inf.alpha_minus = SurdSum((-ratio - GaussRat(nu)) * kHalf);
}

// Basis of {P : deg P <= d, op(P) == 0}.
std::vector<UPoly> polynomial_kernel(const std::function<RatFn(const UPoly&)>& op, unsigned long d) {
  std::vector<RatFn> images;
  UPoly common(1);
  for (unsigned long j = 0; j <= d; ++j) {
    images.push_back(op(UPoly::monomial(GaussRat(1), static_cast<int>(j))));
    const UPoly& den = images.back().den();
    common = exact_div(common * den, poly_gcd(common, den));
  }
  std::vector<UPoly> nums;
  int rows = 0;
  for (const RatFn& f : images) {
    nums.push_back(f.num() * exact_div(common, f.den()));
    rows = std::max(rows, nums.back().degree() + 1);
  }
  if (rows <= 0) {
    std::vector<UPoly> all;
    for (unsigned long j = 0; j <= d; ++j) all.push_back(UPoly::monomial(GaussRat(1), static_cast<int>(j)));
    return all;
  }
  Matrix<GaussRat> m(static_cast<size_t>(rows), d + 1, GaussRat());
  for (size_t j = 0; j <= d; ++j)
    for (int k = 0; k < rows; ++k) m(static_cast<size_t>(k), j) = nums[j].coeff(k);
  std::vector<UPoly> basis;
  for (auto& v : null_space(m)) basis.push_back(UPoly(std::move(v)));
  return basis;
}

std::optional<UPoly> monic_of_degree(const std::vector<UPoly>& basis, unsigned long d) {
  for (const UPoly& p : basis)
    if (p.degree() == static_cast<int>(d)) return p.monic();
  return std::nullopt;
}

// Expands per-pole slots: one slot per root of every pole entry.
std::vector<size_t> slot_owner(const SingularityProfile& pr) {
  std::vector<size_t> owner;
  for (size_t k = 0; k < pr.poles.size(); ++k)
    for (int j = 0; j < pr.poles[k].count(); ++j) owner.push_back(k);
  return owner;
}

// (1/(x-c)) for split poles, q'/q for groups.
RatFn log_derivative(const Pole& p) { return RatFn(p.group.derivative(), p.group); }

void collect_uniform(const std::vector<size_t>& owner, const std::vector<int>& choice, size_t npoles,
                     std::vector<std::optional<int>>& per_pole, bool& uniform) {
  per_pole.assign(npoles, std::nullopt);
  uniform = true;
  for (size_t s = 0; s < owner.size(); ++s) {
    auto& v = per_pole[owner[s]];
    if (!v) {
      v = choice[s];
    } else if (*v != choice[s]) {
      uniform = false;
    }
  }
}

}  // namespace

SingularityProfile analyze(const RatFn& r) {
  SingularityProfile pr;
  pr.r = r;
  if (r.is_zero()) {
    pr.infinity.order = INT_MAX;
    return pr;
  }
  pr.infinity.order = r.order_at_infinity();
  RootSplit split = roots_in_Qi(r.den());
  for (const auto& [c, k] : split.roots) {
    Pole p;
    p.location = c;
    p.group = UPoly::linear(c);
    p.order = k;
    RatFn local = r * RatFn(UPoly::linear(c).pow(static_cast<unsigned>(k)));
    std::vector<GaussRat> t = taylor_coefficients(local, c, k);
    p.residue = t[static_cast<size_t>(k - 1)];
    if (k >= 2) p.b = t[static_cast<size_t>(k - 2)];
    pr.poles.push_back(std::move(p));
  }
  if (split.remainder.degree() > 0) {
    for (const auto& [q, k] : square_free(split.remainder)) {
      Pole p;
      p.split = false;
      p.group = q;
      p.order = k;
      if (k == 2) {
        // b(c) = N(c) / (D'(c) q'(c)^2) with D = q^2 D'.
        UPoly rest = exact_div(r.den(), q.pow(2));
        UPoly qd = q.derivative();
        UPoly val = reduce_mod(r.num() * inverse_mod(rest * qd * qd, q), q);
        if (val.degree() > 0) throw UnsupportedError(group_error(q, "the coefficient b varies"));
        p.b = val.coeff(0);
      }
      pr.poles.push_back(std::move(p));
    }
  }
  for (Pole& p : pr.poles) {
    if (p.order == 1) {
      p.alpha_plus = SurdSum(1);
      p.alpha_minus = SurdSum(1);
    } else if (p.order == 2) {
      auto [ap, am] = order_two_exponents(*p.b);
      p.alpha_plus = ap;
      p.alpha_minus = am;
    }
  }
  InfinityData& inf = pr.infinity;
  if (inf.order > 2) {
    inf.alpha_plus = SurdSum(0);
    inf.alpha_minus = SurdSum(1);
  } else if (inf.order == 2) {
    inf.b = r.num().leading() / r.den().leading();
    auto [ap, am] = order_two_exponents(*inf.b);
    inf.alpha_plus = ap;
    inf.alpha_minus = am;
  } else if (inf.order <= 0 && inf.order % 2 == 0) {
    infinity_expansion(r, inf);
  }
  return pr;
}

std::optional<KovacicVerdict> polynomial_shortcut(const RatFn& r) {
  if (!r.is_polynomial() || r.num().degree() <= 0) return std::nullopt;
  KovacicVerdict v;
  v.abelian = Tri::No;
  v.solvable = Tri::Unknown;
  v.note = "polynomial coefficient: identity component is SL(2,C) or C* semidirect C+";
  return v;
}

RatFn case1_operator(const RatFn& r, const RatFn& omega, const UPoly& P) {
  RatFn p(P);
  return p.derivative().derivative() + GaussRat(2) * omega * p.derivative() +
         (omega.derivative() + omega * omega - r) * p;
}

RatFn case2_operator(const RatFn& r, const RatFn& theta, const UPoly& P) {
  RatFn p(P);
  RatFn p1 = p.derivative(), p2 = p1.derivative(), p3 = p2.derivative();
  RatFn t1 = theta.derivative(), t2 = t1.derivative();
  return p3 + GaussRat(3) * theta * p2 +
         (GaussRat(3) * theta * theta + GaussRat(3) * t1 - GaussRat(4) * r) * p1 +
         (t2 + GaussRat(3) * theta * t1 + theta * theta * theta - GaussRat(4) * r * theta -
          GaussRat(2) * r.derivative()) *
             p;
}

std::optional<RatFn> Case1Result::omega_full() const {
  if (!witness) return std::nullopt;
  const Case1Family& f = families[*witness];
  return *f.omega + RatFn(f.P->derivative(), *f.P);
}

Case1Result case1(const RatFn& r, const SingularityProfile& pr) {
  Case1Result out;
  const InfinityData& inf = pr.infinity;
  for (const Pole& p : pr.poles)
    if (p.order > 2 && p.order % 2 == 1) {
      out.reason = "pole of odd order " + std::to_string(p.order) + " > 2";
      return out;
    }
  if (inf.order % 2 != 0 && inf.order <= 2) {
    out.reason = "odd order " + std::to_string(inf.order) + " at infinity";
    return out;
  }
  for (const Pole& p : pr.poles)
    if (p.order >= 4) throw UnsupportedError("unsupported pole order " + std::to_string(p.order));
  if (!inf.alpha_plus) throw UnsupportedError("unsupported base field: leading coefficient of r at infinity is not a square in Q(i)");
  out.conditions = true;

  // Options per slot: (sign, alpha). Equal alphas without a sqrt part collapse.
  struct Option {
    int sign;
    SurdSum alpha;
  };
  auto options = [](const SurdSum& ap, const SurdSum& am, bool has_sqrt) {
    std::vector<Option> o{{1, ap}};
    if (has_sqrt || !(ap == am)) o.push_back({-1, am});
    return o;
  };
  std::vector<std::vector<Option>> slots;
  slots.push_back(options(*inf.alpha_plus, *inf.alpha_minus, inf.sqrt_r.has_value()));
  std::vector<size_t> owner = slot_owner(pr);
  for (size_t o : owner) slots.push_back(options(*pr.poles[o].alpha_plus, *pr.poles[o].alpha_minus, false));

  std::vector<size_t> idx(slots.size(), 0);
  for (;;) {
    Case1Family fam;
    SurdSum d;
    std::vector<int> pole_choice;
    for (size_t s = 0; s < slots.size(); ++s) {
      const Option& o = slots[s][idx[s]];
      fam.signs.push_back(o.sign);
      if (s == 0) {
        d += o.alpha;
      } else {
        d -= o.alpha;
        pole_choice.push_back(static_cast<int>(idx[s]));
      }
    }
    fam.d = d;
    fam.degree = surd_as_nonneg_int(d);
    if (fam.degree) {
      std::vector<std::optional<int>> per_pole;
      bool uniform = true;
      collect_uniform(owner, pole_choice, pr.poles.size(), per_pole, uniform);
      if (!uniform) {
        for (size_t k = 0; k < pr.poles.size(); ++k)
          if (!pr.poles[k].split)
            throw UnsupportedError(group_error(pr.poles[k].group, "a sign family with integer degree is not uniform"));
      }
      RatFn omega;
      if (inf.sqrt_r) omega += RatFn(*inf.sqrt_r) * GaussRat(fam.signs[0]);
      for (size_t k = 0; k < pr.poles.size(); ++k) {
        const Pole& p = pr.poles[k];
        const SurdSum& alpha = *per_pole[k] == 0 ? *p.alpha_plus : *p.alpha_minus;
        auto a = alpha.as_gauss();
        if (!a) throw UnsupportedError("unsupported base field: exponent " + alpha.to_string() + " at " + p.label("x") + " is not in Q(i)");
        omega += log_derivative(p) * *a;
      }
      fam.omega = omega;
      auto basis = polynomial_kernel([&](const UPoly& P) { return case1_operator(r, omega, P); }, *fam.degree);
      fam.solution_dim = basis.size();
      fam.P = monic_of_degree(basis, *fam.degree);
      if (!fam.P && !basis.empty()) {
        // A lower-degree kernel element still yields a solution.
        UPoly best = basis.front();
        for (const UPoly& b : basis)
          if (b.degree() > best.degree()) best = b;
        fam.P = best.monic();
      }
      if (fam.P && !out.witness) out.witness = out.families.size();
    }
    out.families.push_back(std::move(fam));
    size_t s = slots.size();
    while (s-- > 0) {
      if (++idx[s] < slots[s].size()) break;
      idx[s] = 0;
    }
    if (s == static_cast<size_t>(-1)) break;
  }
  return out;
}

namespace {

// {2 + k sqrt(1+4b) : k = 0, +-2} intersected with Z.
std::vector<long> order_two_set(const GaussRat& b) {
  std::set<long> e{2};
  auto root = gauss_sqrt(GaussRat(1) + GaussRat(4) * b);
  // 2*sqrt(1+4b) integral is enough; half-integer roots occur
  if (root && root->is_real() && (root->re() * QRat(2)).is_integer()) {
    long k = (root->re() * QRat(2)).num().get_si();
    e.insert(2 + k);
    e.insert(2 - k);
  }
  return {e.begin(), e.end()};
}

}  // namespace

Case2Result case2(const RatFn& r, const SingularityProfile& pr) {
  Case2Result out;
  bool ok = false;
  for (const Pole& p : pr.poles) ok = ok || p.order == 2 || (p.order > 2 && p.order % 2 == 1);
  if (!ok) {
    out.reason = "no pole of order 2 or of odd order > 2";
    return out;
  }
  out.conditions = true;
  const InfinityData& inf = pr.infinity;
  if (inf.order > 2) {
    out.E_infinity = {0, 2, 4};
  } else if (inf.order == 2) {
    out.E_infinity = order_two_set(*inf.b);
  } else {
    out.E_infinity = {inf.order};
  }
  for (const Pole& p : pr.poles) {
    if (p.order == 1) {
      out.E.push_back({4});
    } else if (p.order == 2) {
      out.E.push_back(order_two_set(*p.b));
    } else {
      out.E.push_back({p.order});
    }
  }
  std::vector<size_t> owner = slot_owner(pr);
  std::vector<const std::vector<long>*> slots{&out.E_infinity};
  for (size_t o : owner) slots.push_back(&out.E[o]);
  std::vector<size_t> idx(slots.size(), 0);
  for (;;) {
    long sum = 0;
    std::vector<long> e;
    std::vector<int> pole_choice;
    for (size_t s = 0; s < slots.size(); ++s) {
      long v = (*slots[s])[idx[s]];
      e.push_back(v);
      if (s == 0) {
        sum += v;
      } else {
        sum -= v;
        pole_choice.push_back(static_cast<int>(v));
      }
    }
    if (sum >= 0 && sum % 2 == 0) {
      Case2Family fam;
      fam.e = e;
      fam.d = sum / 2;
      std::vector<std::optional<int>> per_pole;
      bool uniform = true;
      collect_uniform(owner, pole_choice, pr.poles.size(), per_pole, uniform);
      if (!uniform)
        for (size_t k = 0; k < pr.poles.size(); ++k)
          if (!pr.poles[k].split)
            throw UnsupportedError(group_error(pr.poles[k].group, "an exponent family is not uniform"));
      RatFn theta;
      for (size_t k = 0; k < pr.poles.size(); ++k)
        theta += log_derivative(pr.poles[k]) * GaussRat(QRat(*per_pole[k], 2));
      fam.theta = theta;
      if (fam.d == 0) fam.residual = case2_operator(r, theta, UPoly(1));
      auto basis = polynomial_kernel([&](const UPoly& P) { return case2_operator(r, theta, P); },
                                     static_cast<unsigned long>(fam.d));
      fam.P = monic_of_degree(basis, static_cast<unsigned long>(fam.d));
      if (fam.P && !out.witness) out.witness = out.families.size();
      out.families.push_back(std::move(fam));
    }
    size_t s = slots.size();
    while (s-- > 0) {
      if (++idx[s] < slots[s]->size()) break;
      idx[s] = 0;
    }
    if (s == static_cast<size_t>(-1)) break;
  }
  return out;
}

Case3Result case3_necessary(const RatFn&, const SingularityProfile& pr) {
  Case3Result out;
  for (const Pole& p : pr.poles)
    if (p.order > 2) {
      out.reason = "pole of order " + std::to_string(p.order) + " > 2";
      return out;
    }
  const InfinityData& inf = pr.infinity;
  if (inf.order < 2) {
    out.reason = "order " + std::to_string(inf.order) + " < 2 at infinity";
    return out;
  }
  out.conditions = true;
  // A finite group has rational local exponent differences.
  auto rational_diff = [](const GaussRat& b) -> std::optional<QRat> {
    auto root = gauss_sqrt(GaussRat(1) + GaussRat(4) * b);
    if (!root || !root->is_real()) return std::nullopt;
    return root->re();
  };
  std::vector<std::optional<QRat>> diffs;
  for (const Pole& p : pr.poles) {
    if (p.order != 2) {
      diffs.push_back(std::nullopt);
      continue;
    }
    auto dlt = rational_diff(*p.b);
    if (!dlt) {
      out.reason = "exponent difference at " + p.label("x") + " is not rational";
      return out;
    }
    diffs.push_back(dlt);
  }
  std::optional<QRat> dinf;
  if (inf.order == 2) {
    dinf = rational_diff(*inf.b);
    if (!dinf) {
      out.reason = "exponent difference at infinity is not rational";
      return out;
    }
  }
  std::vector<size_t> owner = slot_owner(pr);
  for (int n : {4, 6, 12}) {
    auto set_for = [n](const std::optional<QRat>& diff, bool infinity_high) {
      std::set<QRat> e;
      for (int k = -n / 2; k <= n / 2; ++k) {
        QRat v = QRat(6) + QRat(12 * k, n) * (infinity_high ? QRat(1) : *diff);
        if (v.is_integer()) e.insert(v);
      }
      return e;
    };
    // Achievable sums over the poles, then test each e_inf.
    std::set<QRat> sums{QRat(0)};
    for (size_t o : owner) {
      std::set<QRat> E = pr.poles[o].order == 1 ? std::set<QRat>{QRat(12)} : set_for(diffs[o], false);
      std::set<QRat> next;
      for (const QRat& a : sums)
        for (const QRat& b : E) next.insert(a + b);
      sums = std::move(next);
    }
    std::set<QRat> Einf = inf.order > 2 ? set_for(std::nullopt, true) : set_for(dinf, false);
    bool found = false;
    for (const QRat& ei : Einf)
      for (const QRat& s : sums) {
        QRat d = QRat(n, 12) * (ei - s);
        if (d.is_integer() && d.sign() >= 0) found = true;
      }
    if (found) out.n_values.push_back(n);
  }
  out.passed = !out.n_values.empty();
  if (!out.passed) out.reason = "no n in {4, 6, 12} gives a non-negative integer degree";
  return out;
}

KovacicReport kovacic_classify(const RatFn& r) {
  KovacicReport rep;
  KovacicVerdict& v = rep.verdict;
  auto shortcut = polynomial_shortcut(r);
  rep.polynomial_shortcut = shortcut.has_value();

  if (r.is_constant()) {
    v.case_label = "1";
    v.subcase = "1.1";
    v.solvable = Tri::Yes;
    v.abelian = Tri::Yes;
    v.identity_component = "subgroup of C* (abelian)";
    if (r.is_zero()) {
      v.omega = RatFn();
      v.P = UPoly(1);
      v.note = "r = 0: solutions 1 and x";
    } else if (auto w = gauss_sqrt(r.constant_value())) {
      v.omega = RatFn(*w);
      v.P = UPoly(1);
      v.note = "constant r: exponential solutions with omega = +-sqrt(r)";
    } else {
      v.omega_text = SurdSum::sqrt(r.constant_value()).to_string();
      v.note = "constant r: exponential solutions with omega = +-sqrt(r)";
    }
    return rep;
  }

  rep.profile = analyze(r);
  const SingularityProfile& pr = *rep.profile;

  rep.c1 = case1(r, pr);
  if (rep.c1->witness) {
    const Case1Result& c1 = *rep.c1;
    const Case1Family& w = c1.families[*c1.witness];
    v.case_label = "1";
    v.omega = w.omega;
    v.P = w.P;
    v.solvable = Tri::Yes;
    std::vector<RatFn> distinct;
    bool two_dim = false;
    for (const Case1Family& f : c1.families) {
      if (!f.P) continue;
      if (f.solution_dim >= 2) two_dim = true;
      RatFn full = *f.omega + RatFn(f.P->derivative(), *f.P);
      if (std::find(distinct.begin(), distinct.end(), full) == distinct.end()) distinct.push_back(full);
    }
    if (two_dim || distinct.size() >= 2) {
      v.subcase = "1.1";
      v.abelian = Tri::Yes;
      v.identity_component = "subgroup of C* (abelian)";
    } else {
      bool rational = !pr.infinity.sqrt_r;
      mpz_class m = 1;
      std::vector<size_t> owner = slot_owner(pr);
      for (size_t s = 0; rational && s < owner.size(); ++s) {
        const Pole& p = pr.poles[owner[s]];
        const SurdSum& alpha = w.signs[s + 1] > 0 ? *p.alpha_plus : *p.alpha_minus;
        auto a = alpha.as_gauss();
        if (!a || !a->is_real()) {
          rational = false;
        } else {
          m = lcm(m, a->re().den());
        }
      }
      if (rational) {
        v.subcase = "1.2";
        v.m = m.get_ui();
        v.abelian = Tri::Yes;
        v.identity_component = "C+ (abelian)";
      } else {
        v.subcase = "1.3";
        v.abelian = Tri::No;
        v.identity_component = "C* semidirect C+ (solvable, non-abelian)";
      }
    }
    if (shortcut && v.abelian == Tri::Yes)
      throw InternalError("abelian verdict for a polynomial coefficient");
    return rep;
  }

  rep.c2 = case2(r, pr);
  if (rep.c2->witness) {
    const Case2Family& w = rep.c2->families[*rep.c2->witness];
    v.case_label = "2";
    v.theta = w.theta;
    v.P = w.P;
    v.solvable = Tri::Yes;
    v.abelian = Tri::Yes;
    v.identity_component = "subgroup of C* inside the infinite dihedral group (abelian)";
    if (shortcut) throw InternalError("abelian verdict for a polynomial coefficient");
    return rep;
  }

  rep.c3 = case3_necessary(r, pr);
  if (rep.c3->passed) {
    v.case_label = "3_necessary_passed";
    v.solvable = Tri::Yes;
    v.abelian = Tri::Yes;
    v.necessary_only = true;
    v.identity_component = "finite group, trivial identity component (necessary conditions only)";
    return rep;
  }

  v.case_label = "4";
  v.solvable = Tri::No;
  v.abelian = Tri::No;
  v.identity_component = "SL(2,C)";
  return rep;
}

namespace {

ojson surd_or_null(const std::optional<SurdSum>& s) { return s ? ojson(s->to_string()) : ojson(); }
ojson gauss_or_null(const std::optional<GaussRat>& g) { return g ? ojson(g->to_string()) : ojson(); }

std::string signs_text(const std::vector<int>& s) {
  std::string out;
  for (int x : s) out += x > 0 ? '+' : '-';
  return out;
}

}  // namespace

ojson KovacicReport::verdict_json(const std::string& var) const {
  const KovacicVerdict& v = verdict;
  ojson j{{"case", v.case_label}};
  if (v.subcase) j["subcase"] = *v.subcase;
  j["identity_component"] = v.identity_component;
  j["solvable"] = v.solvable == Tri::Unknown ? ojson("unknown") : ojson(v.solvable == Tri::Yes);
  j["abelian"] = v.abelian == Tri::Unknown ? ojson("unknown") : ojson(v.abelian == Tri::Yes);
  if (v.necessary_only) j["necessary_only"] = true;
  if (v.omega) j["omega"] = v.omega->to_string(var);
  if (!v.omega_text.empty()) j["omega"] = v.omega_text;
  if (v.theta) j["theta"] = v.theta->to_string(var);
  if (v.P) j["P"] = v.P->to_string(var);
  if (v.m) j["m"] = *v.m;
  if (polynomial_shortcut) j["polynomial_coefficient"] = true;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

ojson KovacicReport::to_json(const std::string& var) const {
  ojson j = ojson::object();
  if (profile) {
    ojson poles = ojson::array();
    for (const Pole& p : profile->poles) {
      ojson e{{"location", p.label(var)}, {"order", p.order}};
      if (!p.split) e["count"] = p.count();
      e["b"] = gauss_or_null(p.b);
      e["residue"] = gauss_or_null(p.residue);
      e["alpha_plus"] = surd_or_null(p.alpha_plus);
      e["alpha_minus"] = surd_or_null(p.alpha_minus);
      poles.push_back(std::move(e));
    }
    const InfinityData& inf = profile->infinity;
    ojson ij{{"order", inf.order}, {"b", gauss_or_null(inf.b)}};
    if (inf.sqrt_r) ij["sqrt_r"] = inf.sqrt_r->to_string(var);
    ij["alpha_plus"] = surd_or_null(inf.alpha_plus);
    ij["alpha_minus"] = surd_or_null(inf.alpha_minus);
    j["profile"] = ojson{{"r", profile->r.to_string(var)}, {"poles", poles}, {"infinity", ij}};
  }
  if (c1) {
    ojson fams = ojson::array();
    for (const Case1Family& f : c1->families) {
      ojson e{{"signs", signs_text(f.signs)}, {"d", f.d.to_string()}};
      if (f.degree) {
        e["degree"] = *f.degree;
        e["omega"] = f.omega->to_string(var);
        e["P"] = f.P ? ojson(f.P->to_string(var)) : ojson();
      }
      fams.push_back(std::move(e));
    }
    ojson c{{"conditions", c1->conditions}};
    if (!c1->reason.empty()) c["reason"] = c1->reason;
    c["families"] = fams;
    c["witness"] = c1->witness ? ojson(*c1->witness) : ojson();
    j["case1"] = c;
  }
  if (c2) {
    ojson c{{"conditions", c2->conditions}};
    if (!c2->reason.empty()) c["reason"] = c2->reason;
    if (c2->conditions) {
      ojson E = ojson::object();
      E["infinity"] = c2->E_infinity;
      for (size_t k = 0; k < profile->poles.size(); ++k) E[profile->poles[k].label(var)] = c2->E[k];
      c["E"] = E;
      ojson fams = ojson::array();
      for (const Case2Family& f : c2->families) {
        ojson e{{"e", f.e}, {"d", f.d}, {"theta", f.theta->to_string(var)}};
        if (f.residual) e["residual"] = f.residual->to_string(var);
        e["P"] = f.P ? ojson(f.P->to_string(var)) : ojson();
        fams.push_back(std::move(e));
      }
      c["families"] = fams;
      c["witness"] = c2->witness ? ojson(*c2->witness) : ojson();
    }
    j["case2"] = c;
  }
  if (c3) {
    ojson c{{"conditions", c3->conditions}, {"passed", c3->passed}};
    if (!c3->reason.empty()) c["reason"] = c3->reason;
    if (!c3->n_values.empty()) c["n"] = c3->n_values;
    j["case3"] = c;
  }
  j["verdict"] = verdict_json(var);
  return j;
}

}  // namespace galint
