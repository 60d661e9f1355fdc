#pragma once

#include <string>
#include <utility>
#include <vector>

#include "galint/matrix.hpp"
#include "galint/report.hpp"
#include "galint/surd.hpp"
#include "galint/system.hpp"

namespace galint {

using VectorField = std::vector<MPoly>;

struct CheckResult {
  Status status = Status::Confirmed;
  std::string reason;    // set when refuted
  std::string residual;  // printed nonzero residual, if any
  bool trivial = false;  // degenerate balance c = 0

  bool confirmed() const { return status == Status::Confirmed; }
  ojson to_json() const;
};

MPoly lie_scalar(const VectorField& F, const MPoly& phi);
MRatFn lie_scalar(const VectorField& F, const MRatFn& phi);
MPoly divergence(const VectorField& F);

CheckResult check_first_integral(const VectorField& F, const MRatFn& phi,
                                 const std::vector<std::string>& names);
// Throws InputError when J vanishes identically.
CheckResult check_multiplier(const VectorField& F, const MRatFn& J, const std::vector<std::string>& names);
CheckResult check_multiplier_ratio(const VectorField& F, const MRatFn& J1, const MRatFn& J2,
                                   const std::vector<std::string>& names);
CheckResult check_symmetry(const VectorField& F, const std::vector<MRatFn>& V,
                           const std::vector<std::string>& names);
CheckResult check_lax(const VectorField& F, const PolyMatrix& L, const PolyMatrix& N,
                      const std::vector<std::string>& names);
CheckResult check_poisson(const PolyMatrix& pi, const std::vector<std::string>& names);
CheckResult check_hamiltonian_realization(const VectorField& F, const PolyMatrix& pi, const MRatFn& H,
                                          const std::vector<std::string>& names);

// Throws UnsupportedError unless every component is homogeneous of degree 2.
CheckResult verify_balance(const VectorField& F, const std::vector<GaussRat>& c);

struct ResidualFactor {
  UPoly factor;  // monic, no roots in Q(i)
  int multiplicity = 1;
  std::vector<SurdSum> roots;  // filled for quadratic factors
};

struct KovalevskayaData {
  Matrix<GaussRat> K;
  UPoly charpoly;  // det(lambda*I - K)
  std::vector<std::pair<GaussRat, int>> linear_eigenvalues;
  std::vector<ResidualFactor> residual_factors;

  // Product of the reported factors; equals charpoly.
  UPoly reconstruct() const;
  ojson to_json() const;
};

// K = DF(c) + I. Throws InputError for a refuted or trivial balance.
KovalevskayaData kovalevskaya(const VectorField& F, const std::vector<GaussRat>& c);

}  // namespace galint
