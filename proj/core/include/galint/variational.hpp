#pragma once

#include <string>
#include <vector>

#include "galint/dynamics.hpp"

namespace galint {

/// Linear system dxi/ds = M(s) xi with the chain of steps that produced it.
struct LinSys {
  Matrix<RatFn> M;
  std::vector<std::string> provenance;
  std::string var = "s";

  size_t dim() const { return M.rows(); }
};

/// xi'' + a xi' + b xi = 0 and its normal form chi'' = r chi.
struct ScalarODE2 {
  RatFn a;
  RatFn b;
  RatFn r;
};

struct LinearIntegral {
  bool constant_zero = false;
  std::vector<RatFn> g;  // row covector
};

enum class Structural { TriangularSolvable, Unknown };

CheckResult check_solution(const VectorField& F, const ParamSolution& sol);

// M = (1/sigma) DF(R(s)). Throws InputError when the solution is refuted.
LinSys variational_eq(const VectorField& F, const ParamSolution& sol);

// g = grad(phi)(R(s)), checked against sigma g' + g DF(R) = 0; a failure of
// that identity is an InternalError.
LinearIntegral gradient_integral(const MRatFn& phi, const VectorField& F, const ParamSolution& sol);

// g' + g M == 0
bool is_linear_integral(const LinSys& L, const std::vector<RatFn>& g);

// M -> P^{-1} (M P - P'). Throws InputError when det P == 0.
LinSys apply_transform(const LinSys& L, const Matrix<RatFn>& P);
// Covector of the same integral in the new coordinates xi = P eta.
std::vector<RatFn> transport(const std::vector<RatFn>& g, const Matrix<RatFn>& P);

// Principal block on zero-based indices; requires M(i, j) == 0 for selected
// i and unselected j.
LinSys extract_subsystem(const LinSys& L, const std::vector<size_t>& indices);

// Restricts to g . xi = 0, eliminating the largest index k with g_k != 0.
LinSys restrict_level_set(const LinSys& L, const std::vector<RatFn>& g);
size_t eliminated_index(const std::vector<RatFn>& g);

// Eliminates row q of a 2x2 system through row p (zero-based). Throws
// InputError when M(p, q) == 0.
ScalarODE2 to_scalar2(const LinSys& L, size_t p, size_t q);
RatFn normal_form(const RatFn& a, const RatFn& b);

Structural structural_solvability(const LinSys& L);
std::string to_string(Structural s);

ojson matrix_json(const Matrix<RatFn>& M, const std::string& var);
ojson row_json(const std::vector<RatFn>& g, const std::string& var);

}  // namespace galint
