#pragma once

#include <complex>
#include <string>

#include "galint/expr.hpp"
#include "galint/pipeline.hpp"

namespace testing {

inline galint::GaussRat G(const std::string& s) { return galint::parse_gauss(s); }
inline galint::RatFn R(const std::string& s, const std::string& var = "t") { return galint::parse_ratfn(s, var); }
inline galint::UPoly U(const std::string& s, const std::string& var = "t") {
  galint::RatFn f = R(s, var);
  return f.num() * f.den().leading().inverse();
}

inline std::string data_path(const std::string& name) { return std::string(GALINT_DATA_DIR) + "/systems/" + name; }

inline std::complex<double> approx(const galint::GaussRat& z) {
  return {z.re().raw().get_d(), z.im().raw().get_d()};
}

// Principal-branch numeric value of a surd sum.
inline std::complex<double> approx(const galint::SurdSum& s) {
  std::complex<double> v = approx(s.rational_part());
  for (const auto& [k, c] : s.terms()) v += approx(c) * std::sqrt(approx(k));
  return v;
}

}  // namespace testing
