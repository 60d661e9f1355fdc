#pragma once

#include <utility>
#include <vector>

#include "galint/ratfn.hpp"

namespace galint {

/// Square-free decomposition p = lc * prod f_k^k with f_k monic, square-free
/// and pairwise coprime. Entries with f_k == 1 are omitted.
std::vector<std::pair<UPoly, int>> square_free(const UPoly& p);

struct RootSplit {
  // Distinct roots sorted by (re, im), with multiplicities.
  std::vector<std::pair<GaussRat, int>> roots;
  // Monic factor without roots in Q(i).
  UPoly remainder;
};

/// Roots of p (p != 0) in Q(i). The candidate search runs over quotients of
/// Gaussian-integer divisors of the trailing and leading coefficients of each
/// square-free factor, after clearing denominators.
RootSplit roots_in_Qi(const UPoly& p);

struct PoleTerm {
  GaussRat pole;
  // coefficients[j - 1] multiplies 1/(x - pole)^j, j = 1..order.
  std::vector<GaussRat> coefficients;
  int order() const { return static_cast<int>(coefficients.size()); }
};

struct PartialFractions {
  UPoly polynomial_part;
  std::vector<PoleTerm> poles;  // sorted by (re, im)
};

/// f = polynomial_part + sum c_{p,j} / (x - p)^j. Throws UnsupportedError
/// naming the irreducible remainder when the denominator does not split
/// over Q(i).
PartialFractions partial_fractions(const RatFn& f);

/// Inverse of partial_fractions.
RatFn recombine(const PartialFractions& pf);

/// First n Taylor coefficients of f at x = c (c must not be a pole).
std::vector<GaussRat> taylor_coefficients(const RatFn& f, const GaussRat& c, int n);

}  // namespace galint
