#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "galint/matrix.hpp"
#include "galint/mpoly.hpp"

namespace galint {

using PolyMatrix = std::vector<std::vector<MPoly>>;

struct LaxPair {
  PolyMatrix L;
  PolyMatrix N;
};

struct PoissonData {
  PolyMatrix pi;
  MRatFn hamiltonian;
};

struct ParamSolution {
  std::string param;
  std::vector<RatFn> components;
  RatFn sigma;
};

// Indices are zero-based here; the document uses one-based indices.
struct ReductionDesc {
  std::optional<Matrix<RatFn>> transform;
  std::optional<size_t> level_set_index;
  std::optional<std::vector<size_t>> subsystem_indices;
  std::pair<size_t, size_t> scalar_rows{0, 1};
  bool scalar_rows_declared = false;
};

struct SystemDesc {
  std::string name;
  std::vector<std::string> variables;
  std::vector<MPoly> field;
  std::vector<MRatFn> integrals;
  std::vector<std::string> integral_text;
  std::vector<MRatFn> multipliers;
  std::vector<std::string> multiplier_text;
  std::vector<std::vector<MRatFn>> symmetry_fields;
  std::optional<LaxPair> lax;
  std::optional<PoissonData> poisson;
  std::optional<ParamSolution> solution;
  std::optional<ReductionDesc> reduction;

  size_t dimension() const { return variables.size(); }
};

/// Errors are InputError with a message starting at the offending path,
/// e.g. "field[2]: unknown identifier 'y' at offset 0".
SystemDesc load_system(const nlohmann::json& document);
SystemDesc load_system_text(std::string_view text);
SystemDesc load_system_file(const std::filesystem::path& path);

}  // namespace galint
