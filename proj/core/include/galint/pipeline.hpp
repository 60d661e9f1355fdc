#pragma once

#include <string>
#include <vector>

#include "galint/kovacic.hpp"
#include "galint/variational.hpp"

namespace galint {

/// Karabut system of odd dimension n >= 3 in variables x1..xn.
VectorField karabut(int n);
std::vector<std::string> karabut_variables(int n);
// Field plus the integrals sum(x_i) and sum(x_i^2).
SystemDesc karabut_system(int n);
nlohmann::ordered_json karabut_document(int n);

enum class Scope {
  Verify,       // declared tensors only
  Variational,  // plus solution, VE, linear integrals and the reduction chain
  Full          // plus Kovacic classification and the obstruction verdict
};

Report run_pipeline(const SystemDesc& desc, Scope scope = Scope::Full);

// Standalone reports for the CLI.
Report kovacic_report(const RatFn& r, const std::string& var);
Report kovalevskaya_report(const SystemDesc& desc, const std::vector<GaussRat>& balance);

}  // namespace galint
