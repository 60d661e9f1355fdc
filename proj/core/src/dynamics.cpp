#include "galint/dynamics.hpp"

#include "galint/factor.hpp"

namespace galint {

ojson CheckResult::to_json() const {
  ojson j{{"status", to_string(status)}};
  if (!reason.empty()) j["reason"] = reason;
  if (!residual.empty()) j["residual"] = residual;
  if (trivial) j["trivial"] = true;
  return j;
}

namespace {

CheckResult refuted(std::string reason, std::string residual = {}) {
  CheckResult r;
  r.status = Status::Refuted;
  r.reason = std::move(reason);
  r.residual = std::move(residual);
  return r;
}

size_t nvars_of(const VectorField& F) { return F.size(); }

MRatFn lift(const MPoly& p, size_t n) { return p.nvars() == 0 ? MRatFn(MPoly(n)) : MRatFn(p); }

}  // namespace

MPoly lie_scalar(const VectorField& F, const MPoly& phi) {
  MPoly acc(nvars_of(F));
  for (size_t j = 0; j < F.size(); ++j) acc += F[j] * phi.derivative(j);
  return acc;
}

MRatFn lie_scalar(const VectorField& F, const MRatFn& phi) {
  MPoly lp = lie_scalar(F, phi.num());
  MPoly lq = lie_scalar(F, phi.den());
  if (phi.is_polynomial()) return MRatFn(lp * phi.den().leading_coefficient().inverse());
  return MRatFn(phi.den() * lp - phi.num() * lq, phi.den() * phi.den());
}

MPoly divergence(const VectorField& F) {
  MPoly acc(nvars_of(F));
  for (size_t j = 0; j < F.size(); ++j) acc += F[j].derivative(j);
  return acc;
}

CheckResult check_first_integral(const VectorField& F, const MRatFn& phi,
                                 const std::vector<std::string>& names) {
  if (phi.is_constant()) return refuted("constant");
  MRatFn l = lie_scalar(F, phi);
  if (!l.is_zero()) return refuted("Lie derivative does not vanish", l.to_string(names));
  return {};
}

CheckResult check_multiplier(const VectorField& F, const MRatFn& J, const std::vector<std::string>& names) {
  if (J.is_zero()) throw InputError("multiplier must not vanish identically");
  size_t n = nvars_of(F);
  MRatFn res = J * lift(divergence(F), n) + lie_scalar(F, J);
  if (!res.is_zero()) return refuted("div(J F) does not vanish", res.to_string(names));
  return {};
}

CheckResult check_multiplier_ratio(const VectorField& F, const MRatFn& J1, const MRatFn& J2,
                                   const std::vector<std::string>& names) {
  if (J1.is_zero() || J2.is_zero()) throw InputError("multiplier must not vanish identically");
  MRatFn ratio = J2 / J1;
  if (ratio.is_constant()) return refuted("ratio constant");
  return check_first_integral(F, ratio, names);
}

CheckResult check_symmetry(const VectorField& F, const std::vector<MRatFn>& V,
                           const std::vector<std::string>& names) {
  size_t n = nvars_of(F);
  if (V.size() != n) throw InputError("symmetry field has wrong dimension");
  for (size_t i = 0; i < n; ++i) {
    MRatFn acc{MPoly(n)};
    for (size_t j = 0; j < n; ++j) {
      acc = acc + lift(F[i].derivative(j), n) * V[j];
      acc = acc - V[i].derivative(j) * lift(F[j], n);
    }
    if (!acc.is_zero())
      return refuted("bracket component " + std::to_string(i + 1) + " does not vanish", acc.to_string(names));
  }
  return {};
}

CheckResult check_lax(const VectorField& F, const PolyMatrix& L, const PolyMatrix& N,
                      const std::vector<std::string>& names) {
  size_t m = L.size();
  if (N.size() != m) throw InputError("Lax matrices have different sizes");
  for (size_t i = 0; i < m; ++i)
    if (L[i].size() != m || N[i].size() != m) throw InputError("Lax matrices must be square");
  size_t n = nvars_of(F);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      MPoly comm(n);
      for (size_t k = 0; k < m; ++k) comm += N[i][k] * L[k][j] - L[i][k] * N[k][j];
      MPoly res = lie_scalar(F, L[i][j]) - comm;
      if (!res.is_zero())
        return refuted("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") differs",
                       res.to_string(names));
    }
  return {};
}

CheckResult check_poisson(const PolyMatrix& pi, const std::vector<std::string>& names) {
  size_t n = pi.size();
  for (const auto& row : pi)
    if (row.size() != n) throw InputError("Poisson matrix must be square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j)
      if (!(pi[i][j] + pi[j][i]).is_zero())
        return refuted("not skew-symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                       (pi[i][j] + pi[j][i]).to_string(names));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        MPoly acc(names.size());
        for (size_t l = 0; l < n; ++l)
          acc += pi[l][i] * pi[j][k].derivative(l) + pi[l][j] * pi[k][i].derivative(l) +
                 pi[l][k] * pi[i][j].derivative(l);
        if (!acc.is_zero())
          return refuted("Jacobi identity fails for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             "," + std::to_string(k + 1) + ")",
                         acc.to_string(names));
      }
  return {};
}

CheckResult check_hamiltonian_realization(const VectorField& F, const PolyMatrix& pi, const MRatFn& H,
                                          const std::vector<std::string>& names) {
  size_t n = nvars_of(F);
  if (pi.size() != n) throw InputError("Poisson matrix dimension differs from the field");
  CheckResult p = check_poisson(pi, names);
  if (!p.confirmed()) return p;
  for (size_t i = 0; i < n; ++i) {
    MRatFn acc = -lift(F[i], n);
    for (size_t j = 0; j < n; ++j) acc = acc + lift(pi[i][j], n) * H.derivative(j);
    if (!acc.is_zero())
      return refuted("component " + std::to_string(i + 1) + " differs from (pi grad H)", acc.to_string(names));
  }
  return {};
}

CheckResult verify_balance(const VectorField& F, const std::vector<GaussRat>& c) {
  for (const MPoly& f : F)
    if (!f.is_homogeneous(2)) throw UnsupportedError("unsupported balance convention: field is not homogeneous quadratic");
  if (c.size() != F.size()) throw InputError("balance has wrong dimension");
  for (size_t i = 0; i < F.size(); ++i) {
    GaussRat v = F[i].eval(c);
    if (v != -c[i])
      return refuted("F(c) != -c at component " + std::to_string(i + 1), (v + c[i]).to_string());
  }
  CheckResult ok;
  bool zero = true;
  for (const GaussRat& x : c) zero = zero && x.is_zero();
  ok.trivial = zero;
  return ok;
}

UPoly KovalevskayaData::reconstruct() const {
  UPoly p(1);
  for (const auto& [e, m] : linear_eigenvalues) p *= UPoly::linear(e).pow(static_cast<unsigned>(m));
  for (const auto& f : residual_factors) p *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

ojson KovalevskayaData::to_json() const {
  ojson mat = ojson::array();
  for (size_t i = 0; i < K.rows(); ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < K.cols(); ++j) row.push_back(K(i, j).to_string());
    mat.push_back(std::move(row));
  }
  ojson lin = ojson::array();
  for (const auto& [e, m] : linear_eigenvalues) lin.push_back(ojson{{"value", e.to_string()}, {"multiplicity", m}});
  ojson res = ojson::array();
  for (const auto& f : residual_factors) {
    ojson roots = ojson::array();
    for (const auto& r : f.roots) roots.push_back(r.to_string());
    res.push_back(ojson{{"factor", f.factor.to_string("lambda")}, {"multiplicity", f.multiplicity}, {"roots", roots}});
  }
  return ojson{{"K", mat},
               {"charpoly", charpoly.to_string("lambda")},
               {"linear_eigenvalues", lin},
               {"residual_factors", res}};
}

KovalevskayaData kovalevskaya(const VectorField& F, const std::vector<GaussRat>& c) {
  CheckResult b = verify_balance(F, c);
  if (!b.confirmed()) throw InputError("balance refuted: " + b.reason);
  if (b.trivial) throw InputError("trivial balance c = 0 has no Kovalevskaya matrix");
  size_t n = F.size();
  KovalevskayaData out;
  out.K = Matrix<GaussRat>(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.K(i, j) = F[i].derivative(j).eval(c) + (i == j ? GaussRat(1) : GaussRat(0));
  out.charpoly = charpoly(out.K);
  RootSplit split = roots_in_Qi(out.charpoly);
  out.linear_eigenvalues = split.roots;
  if (split.remainder.degree() > 0) {
    for (const auto& [f, k] : square_free(split.remainder)) {
      ResidualFactor rf;
      rf.factor = f;
      rf.multiplicity = k;
      if (f.degree() == 2) {
        GaussRat p = f.coeff(1), q = f.coeff(0);
        GaussRat disc = p * p - GaussRat(4) * q;
        GaussRat half(QRat(1, 2));
        SurdSum s = SurdSum::sqrt(disc, half);
        rf.roots.push_back(SurdSum(-p * half) + s);
        rf.roots.push_back(SurdSum(-p * half) - s);
      }
      out.residual_factors.push_back(std::move(rf));
    }
  }
  return out;
}

}  // namespace galint
