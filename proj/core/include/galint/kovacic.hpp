#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galint/report.hpp"
#include "galint/surd.hpp"
#include "galint/upoly.hpp"
#include "galint/ratfn.hpp"

namespace galint {

/// A finite pole of r, or a group of conjugate poles. A split pole has
/// group = x - location. A non-split group is a square-free factor of the
/// denominator with no roots in Q(i) whose roots share the pole order and the
/// coefficient b; the algorithm then treats each root as its own pole.
struct Pole {
  GaussRat location;
  UPoly group;
  bool split = true;
  int order = 0;
  std::optional<GaussRat> b;        // coefficient of (x - c)^-2
  std::optional<GaussRat> residue;  // split poles only
  std::optional<SurdSum> alpha_plus;
  std::optional<SurdSum> alpha_minus;

  // Number of poles represented.
  int count() const { return group.degree(); }
  std::string label(const std::string& var) const;
};

struct InfinityData {
  int order = 0;  // deg(den) - deg(num)
  std::optional<GaussRat> b;
  // Polynomial part of the expansion of sqrt(r) at infinity, for even
  // order <= 0 when its leading coefficient is a square in Q(i).
  std::optional<UPoly> sqrt_r;
  std::optional<SurdSum> alpha_plus;
  std::optional<SurdSum> alpha_minus;
};

struct SingularityProfile {
  RatFn r;
  std::vector<Pole> poles;  // split poles sorted by (re, im), then groups
  InfinityData infinity;
};

/// Throws UnsupportedError("unsupported base field ...") when some factor of
/// the denominator has no roots in Q(i) and the coefficient data is not
/// uniform over its roots.
SingularityProfile analyze(const RatFn& r);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct KovacicVerdict {
  std::string case_label;  // "1", "2", "3_necessary_passed", "4"
  std::optional<std::string> subcase;
  Tri solvable = Tri::Unknown;
  Tri abelian = Tri::Unknown;
  std::string identity_component;
  bool necessary_only = false;
  std::optional<RatFn> omega;
  std::string omega_text;  // for constant r with no root in Q(i)
  std::optional<RatFn> theta;
  std::optional<UPoly> P;
  std::optional<unsigned long> m;  // subcase 1.2
  std::string note;
};

/// Present iff r is a non-constant polynomial: abelian = no, solvable unknown.
std::optional<KovacicVerdict> polynomial_shortcut(const RatFn& r);

// Sign families are written with the infinity slot first, followed by one
// slot per pole (conjugate poles of a group each get their own slot).
struct Case1Family {
  std::vector<int> signs;
  SurdSum d;
  std::optional<unsigned long> degree;
  std::optional<RatFn> omega;
  std::optional<UPoly> P;
  size_t solution_dim = 0;
};

struct Case1Result {
  bool conditions = false;
  std::string reason;
  std::vector<Case1Family> families;
  std::optional<size_t> witness;

  // omega + P'/P of the witness.
  std::optional<RatFn> omega_full() const;
};

struct Case2Family {
  std::vector<long> e;
  long d = 0;
  std::optional<RatFn> theta;
  std::optional<UPoly> P;
  std::optional<RatFn> residual;  // operator value at P = 1 when d == 0
};

struct Case2Result {
  bool conditions = false;
  std::string reason;
  std::vector<long> E_infinity;
  std::vector<std::vector<long>> E;  // per entry of profile.poles
  std::vector<Case2Family> families;
  std::optional<size_t> witness;
};

struct Case3Result {
  bool conditions = false;
  bool passed = false;
  std::string reason;
  std::vector<int> n_values;  // n in {4, 6, 12} admitting an integer degree
};

Case1Result case1(const RatFn& r, const SingularityProfile& profile);
Case2Result case2(const RatFn& r, const SingularityProfile& profile);
Case3Result case3_necessary(const RatFn& r, const SingularityProfile& profile);

// Left sides of the Riccati-type equations, for witness checks.
RatFn case1_operator(const RatFn& r, const RatFn& omega, const UPoly& P);
RatFn case2_operator(const RatFn& r, const RatFn& theta, const UPoly& P);

struct KovacicReport {
  std::optional<SingularityProfile> profile;
  std::optional<Case1Result> c1;
  std::optional<Case2Result> c2;
  std::optional<Case3Result> c3;
  KovacicVerdict verdict;
  bool polynomial_shortcut = false;

  ojson to_json(const std::string& var) const;
  ojson verdict_json(const std::string& var) const;
};

KovacicReport kovacic_classify(const RatFn& r);

}  // namespace galint
