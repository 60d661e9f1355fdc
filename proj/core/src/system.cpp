#include "galint/system.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "galint/expr.hpp"

namespace galint {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing mandatory key");
  return *it;
}

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

const std::string& as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected an expression string");
  return v.get_ref<const std::string&>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

template <typename F>
auto lowered(const json& v, const std::string& path, F f) {
  const std::string& text = as_string(v, path);
  try {
    return f(parse_expr(text));
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

MPoly poly_at(const json& v, const std::string& path, const std::vector<std::string>& vars) {
  return lowered(v, path, [&](const Expr& e) { return to_poly(e, vars); });
}

MRatFn mratfn_at(const json& v, const std::string& path, const std::vector<std::string>& vars) {
  return lowered(v, path, [&](const Expr& e) { return to_mratfn(e, vars); });
}

RatFn ratfn_at(const json& v, const std::string& path, const std::string& param) {
  return lowered(v, path, [&](const Expr& e) { return to_ratfn(e, param); });
}

PolyMatrix poly_matrix(const json& v, const std::string& path, const std::vector<std::string>& vars,
                       size_t n) {
  as_array(v, path);
  if (v.size() != n) fail(path, "expected " + std::to_string(n) + " rows, found " + std::to_string(v.size()));
  PolyMatrix m;
  for (size_t i = 0; i < n; ++i) {
    std::string rp = idx(path, i);
    as_array(v[i], rp);
    if (v[i].size() != n)
      fail(rp, "expected " + std::to_string(n) + " entries, found " + std::to_string(v[i].size()));
    std::vector<MPoly> row;
    for (size_t j = 0; j < n; ++j) row.push_back(poly_at(v[i][j], idx(rp, j), vars));
    m.push_back(std::move(row));
  }
  return m;
}

size_t one_based(const json& v, const std::string& path, size_t bound) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  long k = v.get<long>();
  if (k < 1 || static_cast<size_t>(k) > bound)
    fail(path, "index " + std::to_string(k) + " outside 1.." + std::to_string(bound));
  return static_cast<size_t>(k - 1);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path.empty() ? "document" : path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(sub(path, key), "unknown key");
  }
}

}  // namespace

SystemDesc load_system(const json& doc) {
  check_keys(doc, "",
             {"name", "variables", "field", "integrals", "multipliers", "symmetry_fields", "lax",
              "poisson", "solution", "reduction"});
  SystemDesc d;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    d.name = it->get<std::string>();
  }

  const json& vars = as_array(require(doc, "variables", ""), "variables");
  if (vars.empty()) fail("variables", "at least one variable is required");
  std::set<std::string> seen;
  for (size_t k = 0; k < vars.size(); ++k) {
    std::string p = idx("variables", k);
    if (!vars[k].is_string()) fail(p, "expected a name");
    std::string name = vars[k].get<std::string>();
    Expr e;
    try {
      e = parse_expr(name);
    } catch (const InputError& err) {
      fail(p, err.what());
    }
    if (e->kind != ExprNode::Kind::Variable || e->name != name) fail(p, "'" + name + "' is not an identifier");
    if (!seen.insert(name).second) fail(p, "duplicate variable '" + name + "'");
    d.variables.push_back(name);
  }
  size_t n = d.variables.size();

  const json& field = as_array(require(doc, "field", ""), "field");
  if (field.size() != n)
    fail("field", "dimension mismatch: " + std::to_string(n) + " variables but " +
                      std::to_string(field.size()) + " field components");
  for (size_t k = 0; k < n; ++k) d.field.push_back(poly_at(field[k], idx("field", k), d.variables));

  if (auto it = doc.find("integrals"); it != doc.end()) {
    as_array(*it, "integrals");
    for (size_t k = 0; k < it->size(); ++k) {
      d.integrals.push_back(mratfn_at((*it)[k], idx("integrals", k), d.variables));
      d.integral_text.push_back((*it)[k].get<std::string>());
    }
  }
  if (auto it = doc.find("multipliers"); it != doc.end()) {
    as_array(*it, "multipliers");
    for (size_t k = 0; k < it->size(); ++k) {
      d.multipliers.push_back(mratfn_at((*it)[k], idx("multipliers", k), d.variables));
      d.multiplier_text.push_back((*it)[k].get<std::string>());
    }
  }
  if (auto it = doc.find("symmetry_fields"); it != doc.end()) {
    as_array(*it, "symmetry_fields");
    for (size_t k = 0; k < it->size(); ++k) {
      std::string p = idx("symmetry_fields", k);
      const json& v = as_array((*it)[k], p);
      if (v.size() != n)
        fail(p, "dimension mismatch: expected " + std::to_string(n) + " components, found " +
                    std::to_string(v.size()));
      std::vector<MRatFn> comps;
      for (size_t j = 0; j < n; ++j) comps.push_back(mratfn_at(v[j], idx(p, j), d.variables));
      d.symmetry_fields.push_back(std::move(comps));
    }
  }
  if (auto it = doc.find("lax"); it != doc.end()) {
    check_keys(*it, "lax", {"L", "N"});
    const json& L = as_array(require(*it, "L", "lax"), "lax.L");
    size_t m = L.size();
    if (m == 0) fail("lax.L", "empty matrix");
    LaxPair lax;
    lax.L = poly_matrix(L, "lax.L", d.variables, m);
    lax.N = poly_matrix(require(*it, "N", "lax"), "lax.N", d.variables, m);
    d.lax = std::move(lax);
  }
  if (auto it = doc.find("poisson"); it != doc.end()) {
    check_keys(*it, "poisson", {"pi", "hamiltonian"});
    PoissonData pd;
    pd.pi = poly_matrix(require(*it, "pi", "poisson"), "poisson.pi", d.variables, n);
    pd.hamiltonian = mratfn_at(require(*it, "hamiltonian", "poisson"), "poisson.hamiltonian", d.variables);
    d.poisson = std::move(pd);
  }

  std::string param;
  if (auto it = doc.find("solution"); it != doc.end()) {
    check_keys(*it, "solution", {"param", "components", "sigma"});
    const json& pv = require(*it, "param", "solution");
    if (!pv.is_string()) fail("solution.param", "expected a name");
    param = pv.get<std::string>();
    if (seen.count(param)) fail("solution.param", "'" + param + "' clashes with a state variable");
    ParamSolution sol;
    sol.param = param;
    const json& comps = as_array(require(*it, "components", "solution"), "solution.components");
    if (comps.size() != n)
      fail("solution.components", "dimension mismatch: expected " + std::to_string(n) + " components, found " +
                                      std::to_string(comps.size()));
    for (size_t k = 0; k < n; ++k)
      sol.components.push_back(ratfn_at(comps[k], idx("solution.components", k), param));
    sol.sigma = ratfn_at(require(*it, "sigma", "solution"), "solution.sigma", param);
    if (sol.sigma.is_zero()) fail("solution.sigma", "sigma must not vanish identically");
    d.solution = std::move(sol);
  }

  if (auto it = doc.find("reduction"); it != doc.end()) {
    check_keys(*it, "reduction", {"transform", "level_set_index", "subsystem_indices", "scalar_rows"});
    ReductionDesc red;
    if (auto t = it->find("transform"); t != it->end()) {
      const json& rows = as_array(*t, "reduction.transform");
      if (rows.size() != n)
        fail("reduction.transform", "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
      Matrix<RatFn> P(n, n);
      for (size_t i = 0; i < n; ++i) {
        std::string rp = idx("reduction.transform", i);
        as_array(rows[i], rp);
        if (rows[i].size() != n) fail(rp, "expected " + std::to_string(n) + " entries");
        for (size_t j = 0; j < n; ++j)
          P(i, j) = param.empty() ? RatFn(lowered(rows[i][j], idx(rp, j), [](const Expr& e) { return to_gauss(e); }))
                                  : ratfn_at(rows[i][j], idx(rp, j), param);
      }
      red.transform = std::move(P);
    }
    if (auto s = it->find("subsystem_indices"); s != it->end()) {
      as_array(*s, "reduction.subsystem_indices");
      std::vector<size_t> ind;
      for (size_t k = 0; k < s->size(); ++k) {
        size_t v = one_based((*s)[k], idx("reduction.subsystem_indices", k), n);
        if (!ind.empty() && v <= ind.back())
          fail(idx("reduction.subsystem_indices", k), "indices must be strictly increasing");
        ind.push_back(v);
      }
      if (ind.empty()) fail("reduction.subsystem_indices", "empty index list");
      red.subsystem_indices = std::move(ind);
    }
    if (auto l = it->find("level_set_index"); l != it->end()) {
      if (d.integrals.empty()) fail("reduction.level_set_index", "no integrals declared");
      red.level_set_index = one_based(*l, "reduction.level_set_index", d.integrals.size());
    }
    if (auto r = it->find("scalar_rows"); r != it->end()) {
      as_array(*r, "reduction.scalar_rows");
      if (r->size() != 2) fail("reduction.scalar_rows", "expected two row indices");
      size_t p = one_based((*r)[0], "reduction.scalar_rows[0]", 2);
      size_t q = one_based((*r)[1], "reduction.scalar_rows[1]", 2);
      if (p == q) fail("reduction.scalar_rows", "rows must differ");
      red.scalar_rows = {p, q};
      red.scalar_rows_declared = true;
    }
    d.reduction = std::move(red);
  }
  return d;
}

SystemDesc load_system_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document: ") + e.what());
  }
  return load_system(doc);
}

SystemDesc load_system_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_system_text(buf.str());
}

}  // namespace galint
