#include "galint/variational.hpp"

#include <functional>

namespace galint {

CheckResult check_solution(const VectorField& F, const ParamSolution& sol) {
  if (sol.sigma.is_zero()) throw InputError("sigma must not vanish identically");
  if (sol.components.size() != F.size()) throw InputError("solution has wrong dimension");
  for (size_t i = 0; i < F.size(); ++i) {
    RatFn res = sol.sigma * sol.components[i].derivative() - F[i].eval(sol.components);
    if (!res.is_zero()) {
      CheckResult r;
      r.status = Status::Refuted;
      r.reason = "component " + std::to_string(i + 1) + " violates sigma*R' = F(R)";
      r.residual = res.to_string(sol.param);
      return r;
    }
  }
  return {};
}

LinSys variational_eq(const VectorField& F, const ParamSolution& sol) {
  CheckResult c = check_solution(F, sol);
  if (!c.confirmed()) throw InputError("solution refuted: " + c.reason);
  size_t n = F.size();
  LinSys L{Matrix<RatFn>(n, n), {}, sol.param};
  RatFn inv = sol.sigma.inverse();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) L.M(i, j) = F[i].derivative(j).eval(sol.components) * inv;
  L.provenance.push_back("variational equations (1/sigma) DF(R(" + sol.param + "))");
  return L;
}

LinearIntegral gradient_integral(const MRatFn& phi, const VectorField& F, const ParamSolution& sol) {
  size_t n = F.size();
  LinearIntegral out;
  bool zero = true;
  for (size_t j = 0; j < n; ++j) {
    out.g.push_back(phi.derivative(j).eval(sol.components));
    zero = zero && out.g.back().is_zero();
  }
  for (size_t j = 0; j < n; ++j) {
    RatFn acc = sol.sigma * out.g[j].derivative();
    for (size_t i = 0; i < n; ++i)
      if (!out.g[i].is_zero()) acc += out.g[i] * F[i].derivative(j).eval(sol.components);
    if (!acc.is_zero())
      throw InternalError("transported gradient is not a linear integral at column " + std::to_string(j + 1) +
                          ": " + acc.to_string(sol.param));
  }
  out.constant_zero = zero;
  return out;
}

bool is_linear_integral(const LinSys& L, const std::vector<RatFn>& g) {
  size_t n = L.dim();
  if (g.size() != n) throw InputError("covector has wrong dimension");
  for (size_t j = 0; j < n; ++j) {
    RatFn acc = g[j].derivative();
    for (size_t i = 0; i < n; ++i) acc += g[i] * L.M(i, j);
    if (!acc.is_zero()) return false;
  }
  return true;
}

LinSys apply_transform(const LinSys& L, const Matrix<RatFn>& P) {
  if (P.rows() != L.dim() || !P.square()) throw InputError("transform has wrong dimension");
  auto Pinv = inverse(P);
  if (!Pinv) throw InputError("transform is singular (det P = 0)");
  Matrix<RatFn> dP = P.map([](const RatFn& f) { return f.derivative(); });
  LinSys out{*Pinv * (L.M * P - dP), L.provenance, L.var};
  out.provenance.push_back("transform xi = P eta");
  return out;
}

std::vector<RatFn> transport(const std::vector<RatFn>& g, const Matrix<RatFn>& P) {
  std::vector<RatFn> out(P.cols());
  for (size_t j = 0; j < P.cols(); ++j)
    for (size_t i = 0; i < P.rows(); ++i) out[j] += g.at(i) * P(i, j);
  return out;
}

LinSys extract_subsystem(const LinSys& L, const std::vector<size_t>& indices) {
  size_t n = L.dim();
  std::vector<bool> chosen(n, false);
  for (size_t k : indices) {
    if (k >= n) throw InputError("subsystem index " + std::to_string(k + 1) + " out of range");
    chosen[k] = true;
  }
  for (size_t i : indices)
    for (size_t j = 0; j < n; ++j)
      if (!chosen[j] && !L.M(i, j).is_zero())
        throw InputError("subsystem is not decoupled: entry (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ") = " + L.M(i, j).to_string(L.var) + " is nonzero");
  LinSys out{L.M.submatrix(indices, indices), L.provenance, L.var};
  std::string list;
  for (size_t k : indices) list += (list.empty() ? "" : ",") + std::to_string(k + 1);
  out.provenance.push_back("subsystem {" + list + "}");
  return out;
}

size_t eliminated_index(const std::vector<RatFn>& g) {
  for (size_t k = g.size(); k-- > 0;)
    if (!g[k].is_zero()) return k;
  throw InputError("level-set covector vanishes identically");
}

LinSys restrict_level_set(const LinSys& L, const std::vector<RatFn>& g) {
  size_t n = L.dim();
  size_t k = eliminated_index(g);
  if (!is_linear_integral(L, g)) throw InputError("covector is not a linear integral of the system");
  std::vector<size_t> keep;
  for (size_t j = 0; j < n; ++j)
    if (j != k) keep.push_back(j);
  LinSys out{Matrix<RatFn>(n - 1, n - 1), L.provenance, L.var};
  RatFn gk_inv = g[k].inverse();
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      out.M(a, b) = L.M(keep[a], keep[b]) - L.M(keep[a], k) * g[keep[b]] * gk_inv;
  out.provenance.push_back("zero level set of the linear integral, eliminated index " + std::to_string(k + 1));
  return out;
}

ScalarODE2 to_scalar2(const LinSys& L, size_t p, size_t q) {
  if (L.dim() != 2) throw InputError("scalar reduction needs a 2x2 system");
  if (p > 1 || q > 1 || p == q) throw InputError("scalar rows must be (1,2) or (2,1)");
  const RatFn& mpp = L.M(p, p);
  const RatFn& mpq = L.M(p, q);
  const RatFn& mqp = L.M(q, p);
  const RatFn& mqq = L.M(q, q);
  if (mpq.is_zero()) throw InputError("decoupled; use row swap or direct first-order solve");
  RatFn log_d = mpq.derivative() / mpq;
  ScalarODE2 out;
  out.a = -(mpp + mqq + log_d);
  out.b = -mpp.derivative() + mpp * (mqq + log_d) - mpq * mqp;
  out.r = normal_form(out.a, out.b);
  return out;
}

RatFn normal_form(const RatFn& a, const RatFn& b) {
  return a * a * GaussRat(QRat(1, 4)) + a.derivative() * GaussRat(QRat(1, 2)) - b;
}

Structural structural_solvability(const LinSys& L) {
  // Lower-triangular after a simultaneous permutation iff the dependency
  // graph i -> j (M(i, j) != 0, i != j) has no cycle.
  size_t n = L.dim();
  std::vector<int> state(n, 0);
  std::function<bool(size_t)> cyclic = [&](size_t v) {
    state[v] = 1;
    for (size_t w = 0; w < n; ++w) {
      if (w == v || L.M(v, w).is_zero()) continue;
      if (state[w] == 1) return true;
      if (state[w] == 0 && cyclic(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (size_t v = 0; v < n; ++v)
    if (state[v] == 0 && cyclic(v)) return Structural::Unknown;
  return Structural::TriangularSolvable;
}

std::string to_string(Structural s) {
  return s == Structural::TriangularSolvable ? "triangular_solvable" : "unknown";
}

ojson matrix_json(const Matrix<RatFn>& M, const std::string& var) {
  ojson rows = ojson::array();
  for (size_t i = 0; i < M.rows(); ++i) {
    ojson row = ojson::array();
    for (size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).to_string(var));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson row_json(const std::vector<RatFn>& g, const std::string& var) {
  ojson row = ojson::array();
  for (const RatFn& f : g) row.push_back(f.to_string(var));
  return row;
}

}  // namespace galint
