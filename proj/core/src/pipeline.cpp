#include "galint/pipeline.hpp"

#include <random>

namespace galint {

VectorField karabut(int n) {
  if (n < 3 || n % 2 == 0) throw InputError("Karabut systems need an odd dimension n >= 3, got " + std::to_string(n));
  size_t N = static_cast<size_t>(n);
  VectorField F;
  for (int j = 1; j <= n; ++j) {
    MPoly plus(N, GaussRat(1)), minus(N, GaussRat(1));
    for (int k = 1; k <= (n - 1) / 2; ++k) {
      plus *= MPoly::variable(N, static_cast<size_t>((2 * k + j - 1) % n));
      minus *= MPoly::variable(N, static_cast<size_t>((2 * k + j - 2) % n));
    }
    F.push_back(plus - minus);
  }
  return F;
}

std::vector<std::string> karabut_variables(int n) {
  std::vector<std::string> v;
  for (int j = 1; j <= n; ++j) v.push_back("x" + std::to_string(j));
  return v;
}

SystemDesc karabut_system(int n) {
  SystemDesc d;
  d.name = "karabut" + std::to_string(n);
  d.variables = karabut_variables(n);
  d.field = karabut(n);
  size_t N = static_cast<size_t>(n);
  MPoly s1(N), s2(N);
  for (size_t j = 0; j < N; ++j) {
    s1 += MPoly::variable(N, j);
    s2 += MPoly::variable(N, j).pow(2);
  }
  d.integrals = {MRatFn(s1), MRatFn(s2)};
  d.integral_text = {s1.to_string(d.variables), s2.to_string(d.variables)};
  return d;
}

nlohmann::ordered_json karabut_document(int n) {
  SystemDesc d = karabut_system(n);
  ojson field = ojson::array();
  for (const MPoly& f : d.field) field.push_back(f.to_string(d.variables));
  return ojson{{"name", d.name}, {"variables", d.variables}, {"field", field}, {"integrals", d.integral_text}};
}

namespace {

const char* ordinal(size_t k) {
  static const char* names[] = {"zeroth", "first", "second", "third", "fourth", "fifth",
                                "sixth",  "seventh", "eighth", "ninth", "tenth"};
  return k < std::size(names) ? names[k] : "next";
}

// Jacobian rank of the functions at sample points, maximized over a few
// deterministic rational points where all of them are defined.
size_t sampled_rank(const std::vector<MRatFn>& fs, size_t n) {
  if (fs.empty()) return 0;
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  size_t best = 0;
  for (int attempt = 0; attempt < 8 && best < fs.size(); ++attempt) {
    std::vector<GaussRat> pt;
    for (size_t j = 0; j < n; ++j) pt.emplace_back(QRat(num(rng), den(rng)));
    Matrix<GaussRat> J(fs.size(), n);
    bool defined = true;
    for (size_t i = 0; i < fs.size() && defined; ++i)
      for (size_t j = 0; j < n && defined; ++j) {
        auto v = fs[i].derivative(j).eval(pt);
        if (!v) defined = false;
        else J(i, j) = *v;
      }
    if (defined) best = std::max(best, rank(J));
  }
  return best;
}

struct Tally {
  bool all_confirmed = true;
  std::string failed_stage;
  std::string failed_reason;
  std::string failed_residual;
};

void record(Report& rep, Tally& t, const std::string& name, const CheckResult& c, ojson data) {
  ojson cj = c.to_json();
  for (auto& [k, v] : cj.items())
    if (k != "status") data[k] = v;
  rep.add(name, c.status, std::move(data));
  if (!c.confirmed() && t.all_confirmed) {
    t.all_confirmed = false;
    t.failed_stage = name;
    t.failed_reason = c.reason;
    t.failed_residual = c.residual;
  }
}

ojson halted(const Tally& t) {
  ojson v{{"conclusion", "halted at stage " + t.failed_stage + ": " + t.failed_reason}};
  if (!t.failed_residual.empty()) v["residual"] = t.failed_residual;
  return v;
}

}  // namespace

Report run_pipeline(const SystemDesc& desc, Scope scope) {
  Report rep;
  Tally tally;
  const VectorField& F = desc.field;
  const auto& names = desc.variables;
  size_t n = desc.dimension();

  // Stage 1: declared tensors.
  for (size_t k = 0; k < desc.integrals.size(); ++k)
    record(rep, tally, "first_integral", check_first_integral(F, desc.integrals[k], names),
           ojson{{"index", k + 1}, {"expression", desc.integral_text[k]}});
  for (size_t k = 0; k < desc.multipliers.size(); ++k)
    record(rep, tally, "multiplier", check_multiplier(F, desc.multipliers[k], names),
           ojson{{"index", k + 1}, {"expression", desc.multiplier_text[k]}});
  for (size_t k = 1; k < desc.multipliers.size(); ++k)
    record(rep, tally, "multiplier_ratio", check_multiplier_ratio(F, desc.multipliers[0], desc.multipliers[k], names),
           ojson{{"index", k + 1}, {"ratio", (desc.multipliers[k] / desc.multipliers[0]).to_string(names)}});
  for (size_t k = 0; k < desc.symmetry_fields.size(); ++k)
    record(rep, tally, "symmetry", check_symmetry(F, desc.symmetry_fields[k], names), ojson{{"index", k + 1}});
  if (desc.lax) record(rep, tally, "lax", check_lax(F, desc.lax->L, desc.lax->N, names), ojson::object());
  if (desc.poisson) {
    record(rep, tally, "poisson", check_poisson(desc.poisson->pi, names), ojson::object());
    record(rep, tally, "hamiltonian_realization",
           check_hamiltonian_realization(F, desc.poisson->pi, desc.poisson->hamiltonian, names),
           ojson{{"hamiltonian", desc.poisson->hamiltonian.to_string(names)}});
  }
  MPoly div = divergence(F);
  bool divergence_free = div.is_zero();
  rep.add("divergence", Status::Confirmed,
          ojson{{"divergence", div.to_string(names)}, {"divergence_free", divergence_free}});

  std::vector<MRatFn> family = desc.integrals;
  for (size_t k = 1; k < desc.multipliers.size(); ++k) family.push_back(desc.multipliers[k] / desc.multipliers[0]);
  size_t independent = sampled_rank(family, n);
  if (!family.empty())
    rep.add("independence", independent == family.size() ? Status::Confirmed : Status::Inconclusive,
            ojson{{"functions", family.size()}, {"jacobian_rank", independent}, {"independence", "spot-checked"}});

  if (!tally.all_confirmed) {
    rep.verdict = halted(tally);
    return rep;
  }
  size_t k_integrals = desc.integrals.size();
  if (scope == Scope::Verify || !desc.solution) {
    std::string conclusion = "declared tensors verified";
    if (k_integrals + 1 >= n && independent >= n - 1) conclusion = "completely integrable structure verified";
    rep.verdict = ojson{{"conclusion", conclusion}};
    return rep;
  }

  // Stages 2-4: solution, variational equations, linear integrals.
  const ParamSolution& sol = *desc.solution;
  const std::string& s = sol.param;
  record(rep, tally, "solution", check_solution(F, sol), ojson{{"param", s}, {"sigma", sol.sigma.to_string(s)}});
  if (!tally.all_confirmed) {
    rep.verdict = halted(tally);
    return rep;
  }
  LinSys L = variational_eq(F, sol);
  rep.add("variational_equations", Status::Confirmed, ojson{{"matrix", matrix_json(L.M, s)}});
  std::vector<std::vector<RatFn>> covectors;
  for (size_t k = 0; k < desc.integrals.size(); ++k) {
    LinearIntegral g = gradient_integral(desc.integrals[k], F, sol);
    ojson data{{"index", k + 1}, {"constant_zero", g.constant_zero}};
    if (!g.constant_zero) data["g"] = row_json(g.g, s);
    rep.add("gradient_integral", Status::Confirmed, std::move(data));
    covectors.push_back(g.g);
  }

  // Stage 5: declared reduction chain.
  bool chain = desc.reduction.has_value();
  try {
    if (chain) {
      const ReductionDesc& red = *desc.reduction;
      if (red.transform) {
        L = apply_transform(L, *red.transform);
        for (auto& g : covectors) g = transport(g, *red.transform);
        rep.add("transform", Status::Confirmed, ojson{{"matrix", matrix_json(L.M, s)}});
      }
      if (red.subsystem_indices) {
        const auto& ind = *red.subsystem_indices;
        L = extract_subsystem(L, ind);
        for (auto& g : covectors) {
          std::vector<RatFn> sub;
          for (size_t i : ind) sub.push_back(g[i]);
          std::vector<bool> chosen(g.size(), false);
          for (size_t i : ind) chosen[i] = true;
          bool restricts = true;
          for (size_t i = 0; i < g.size(); ++i) restricts = restricts && (chosen[i] || g[i].is_zero());
          g = restricts ? sub : std::vector<RatFn>{};
        }
        ojson list = ojson::array();
        for (size_t i : ind) list.push_back(i + 1);
        rep.add("subsystem", Status::Confirmed, ojson{{"indices", list}, {"matrix", matrix_json(L.M, s)}});
      }
      if (red.level_set_index) {
        const auto& g = covectors.at(*red.level_set_index);
        if (g.empty())
          throw InputError("integral " + std::to_string(*red.level_set_index + 1) +
                           " does not restrict to the subsystem");
        size_t k = eliminated_index(g);
        L = restrict_level_set(L, g);
        rep.add("level_set", Status::Confirmed,
                ojson{{"integral", *red.level_set_index + 1}, {"covector", row_json(g, s)},
                      {"eliminated_index", k + 1}, {"matrix", matrix_json(L.M, s)}});
      }
    }
  } catch (const InputError& e) {
    rep.add("reduction", Status::Refuted, ojson{{"reason", e.what()}});
    rep.verdict = ojson{{"conclusion", std::string("halted at stage reduction: ") + e.what()}};
    return rep;
  }

  ojson verdict = ojson::object();
  std::string hypothesis =
      divergence_free ? "divergence-free with (n-2)=" + std::to_string(n - 2) + " first integrals"
                      : "k first integrals and (n-1-k) Jacobian multipliers";
  verdict["hypothesis"] = hypothesis;
  verdict["declared_integrals"] = k_integrals;
  verdict["declared_multipliers"] = desc.multipliers.size();
  verdict["independence"] = "spot-checked";

  bool scalar = chain && L.dim() == 2;
  if (!scalar) {
    Structural st = structural_solvability(L);
    rep.add("structural_solvability", st == Structural::TriangularSolvable ? Status::Confirmed : Status::Inconclusive,
            ojson{{"provenance", L.provenance}, {"result", to_string(st)}, {"dimension", L.dim()}});
    verdict["classified_object"] = chain ? "reduced variational equations" : "variational equations";
    verdict["structural_solvability"] = to_string(st);
    verdict["conclusion"] = st == Structural::TriangularSolvable
                                ? "no obstruction detected: the linear system is solvable by quadrature"
                                : "inconclusive: no scalar reduction declared and the system is not triangular";
    rep.verdict = std::move(verdict);
    return rep;
  }

  const ReductionDesc& red = *desc.reduction;
  ScalarODE2 eq;
  try {
    eq = to_scalar2(L, red.scalar_rows.first, red.scalar_rows.second);
  } catch (const InputError& e) {
    rep.add("scalar_reduction", Status::Refuted, ojson{{"reason", e.what()}});
    rep.verdict = ojson{{"conclusion", std::string("halted at stage scalar_reduction: ") + e.what()}};
    return rep;
  }
  rep.add("scalar_reduction", Status::Confirmed,
          ojson{{"provenance", L.provenance},
                {"rows", {red.scalar_rows.first + 1, red.scalar_rows.second + 1}},
                {"a", eq.a.to_string(s)},
                {"b", eq.b.to_string(s)},
                {"r", eq.r.to_string(s)}});
  if (scope == Scope::Variational) {
    rep.verdict = ojson{{"conclusion", "reduction chain completed"}, {"r", eq.r.to_string(s)}};
    return rep;
  }

  verdict["classified_object"] = "normal form of a scalar reduction of the variational equations";
  KovacicReport kr;
  try {
    kr = kovacic_classify(eq.r);
  } catch (const UnsupportedError& e) {
    rep.add("kovacic", Status::Inconclusive, ojson{{"reason", e.what()}});
    verdict["conclusion"] = std::string("inconclusive: ") + e.what();
    rep.verdict = std::move(verdict);
    return rep;
  }
  ojson kdata = kr.to_json(s);
  kdata.erase("verdict");
  rep.add("kovacic", Status::Confirmed, std::move(kdata));
  ojson kverdict = kr.verdict_json(s);
  for (auto& [key, value] : kverdict.items()) verdict[key] = value;

  const KovacicVerdict& kv = kr.verdict;
  std::string conclusion;
  if (kv.solvable == Tri::No) {
    verdict["galois_finding"] = "non-solvable";
    std::string premise =
        "the identity component for the classified equation is SL(2,C), so the variational equations "
        "are not solvable; ";
    if (divergence_free) {
      size_t need = n - 2;
      if (need == 1) {
        conclusion = premise + "no meromorphic first integral exists, in particular no rational first integral";
      } else if (k_integrals + 1 == need) {
        conclusion = premise + "no " + std::string(ordinal(need)) +
                     " independent meromorphic first integral exists: the divergence-free field cannot have (n-2)=" +
                     std::to_string(need) + " functionally independent meromorphic first integrals, so the " +
                     std::to_string(k_integrals) + " declared integrals are maximal";
      } else {
        conclusion = premise + "the divergence-free field admits no (n-2)=" + std::to_string(need) +
                     " functionally independent meromorphic first integrals";
      }
    } else {
      conclusion = premise +
                   "for no 0 <= k < n does the field admit k meromorphic first integrals and n-1-k meromorphic "
                   "Jacobian multipliers with functionally independent integrals and multiplier ratios";
    }
  } else if (kv.abelian == Tri::No) {
    verdict["galois_finding"] = "non-abelian";
    conclusion =
        "no obstruction detected: the identity component is solvable but non-abelian, and the classified "
        "equation is a reduction of the variational equations rather than the normal variational equations";
  } else {
    verdict["galois_finding"] = kv.necessary_only ? "abelian (necessary conditions only)" : "abelian";
    conclusion = "no obstruction detected";
  }
  verdict["conclusion"] = conclusion;
  rep.verdict = std::move(verdict);
  return rep;
}

Report kovacic_report(const RatFn& r, const std::string& var) {
  Report rep;
  KovacicReport kr = kovacic_classify(r);
  ojson data = kr.to_json(var);
  data.erase("verdict");
  if (kr.polynomial_shortcut) data["polynomial_shortcut"] = polynomial_shortcut(r)->note;
  rep.add("kovacic", Status::Confirmed, std::move(data));
  rep.verdict = kr.verdict_json(var);
  return rep;
}

Report kovalevskaya_report(const SystemDesc& desc, const std::vector<GaussRat>& balance) {
  Report rep;
  CheckResult b = verify_balance(desc.field, balance);
  ojson c = ojson::array();
  for (const GaussRat& x : balance) c.push_back(x.to_string());
  ojson data{{"c", c}};
  Tally tally;
  record(rep, tally, "balance", b, data);
  if (!b.confirmed() || b.trivial) {
    rep.verdict = ojson{{"conclusion", b.trivial ? "trivial balance, no exponents" : "balance refuted"}};
    return rep;
  }
  KovalevskayaData kd = kovalevskaya(desc.field, balance);
  rep.add("kovalevskaya", Status::Confirmed, kd.to_json());
  bool rational = true;
  for (const auto& [e, m] : kd.linear_eigenvalues) rational = rational && e.is_real();
  if (!kd.residual_factors.empty()) rational = false;
  rep.verdict = ojson{{"exponents_rational", rational}, {"reconstruction_exact", kd.reconstruct() == kd.charpoly}};
  return rep;
}

}  // namespace galint
