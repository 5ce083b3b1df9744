/**
 * @file suite.hpp
 * @brief The nine acceptance checks, run against a loaded instance bundle.
 *
 * Shared by the `suite` CLI command and the acceptance binary. Every check
 * catches its own errors and reports failure instead of aborting, so a
 * perturbed corpus still produces a complete report. Randomized parts use a
 * fixed seed; wall-clock timings are kept out of the JSON payload so that the
 * report is byte-identical across runs.
 */

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "modend/endengine.hpp"
#include "modend/gauge.hpp"
#include "modend/io.hpp"
#include "modend/theorems.hpp"

namespace modend {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  json detail = json::object();
  double seconds = 0;  ///< not part of the JSON report
};

struct SuiteReport {
  std::vector<CriterionResult> criteria;
  double seconds = 0;

  bool pass() const {
    for (const auto& c : criteria)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json out = json::object();
    json arr = json::array();
    for (const auto& c : criteria) arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out["criteria"] = arr;
    out["status"] = pass() ? "ok" : "certificate_failure";
    return out;
  }
};

namespace detail {

inline bool is_regular(const ModuleCategory& M) {
  const auto& C = *M.base;
  if (M.right || M.simples != C.simples) return false;
  for (int x = 0; x < C.rank(); ++x)
    for (int i = 0; i < C.rank(); ++i)
      for (int j = 0; j < C.rank(); ++j)
        if (M.n(x, i, j) != C.N(x, i, j)) return false;
  return true;
}

/// Endofunctors of M present in the bundle, in key order.
inline std::vector<FunctorPtr> endofunctors(const InstanceBundle& b, const ModulePtr& M) {
  std::vector<FunctorPtr> out;
  for (const auto& [k, f] : b.functors)
    if (f->src == M && f->dst == M) out.push_back(f);
  return out;
}

inline std::vector<ModulePtr> regular_modules(const InstanceBundle& b) {
  std::vector<ModulePtr> out;
  for (const auto& [k, m] : b.modules)
    if (is_regular(*m)) out.push_back(m);
  return out;
}

inline FieldElement random_unit(std::mt19937& rng, const FieldPtr& k) {
  std::vector<Rational> c(k->degree());
  do {
    for (auto& q : c) q = Rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1);
  } while (std::all_of(c.begin(), c.end(), [](const Rational& q) { return sgn(q) == 0; }));
  return k->from_coeffs(c);
}

/// Random nonzero scalars on every fusion channel a⊗b -> c with a, b not the unit.
inline GaugeTable random_category_gauge(std::mt19937& rng, const FusionCategory& C) {
  GaugeTable u;
  for (int a = 0; a < C.rank(); ++a)
    for (int b = 0; b < C.rank(); ++b)
      if (a != C.unit && b != C.unit)
        for (int c : C.fusion.outputs(a, b)) u[{a, b, c}] = random_unit(rng, C.field);
  return u;
}

/// Random nonzero scalars on every action channel x▷m_i -> m_t with x not the unit.
inline GaugeTable random_module_gauge(std::mt19937& rng, const ModuleCategory& M) {
  GaugeTable v;
  for (int x = 0; x < M.base->rank(); ++x)
    if (x != M.base->unit)
      for (int i = 0; i < M.rank(); ++i)
        for (int t : M.act(x, i)) v[{x, i, t}] = random_unit(rng, M.field());
  return v;
}

/// Random invertible label-respecting automorphism of a sorted list object.
inline Matrix random_automorphism(std::mt19937& rng, const FieldPtr& k, const Obj& A) {
  for (;;) {
    Matrix g(k, A.size(), A.size());
    for (size_t r = 0; r < A.size(); ++r)
      for (size_t c = 0; c < A.size(); ++c)
        if (A[r] == A[c]) g(r, c) = k->from_rational(Rational(static_cast<long>(rng() % 7) - 3));
    if (g.rank() == A.size()) return g;
  }
}

inline CriterionResult run_criterion(int id, std::string name, const std::function<bool(json&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

/// 1: module end equals the direct natural-transformation equations on every endofunctor pair.
inline CriterionResult criterion_oracle(const InstanceBundle& b) {
  return detail::run_criterion(1, "oracle equivalence", [&](json& d) {
    bool ok = true;
    size_t pairs = 0;
    double worst = 0;
    json dims = json::object();
    for (const auto& M : detail::regular_modules(b)) {
      auto fs = detail::endofunctors(b, M);
      for (const auto& F : fs)
        for (const auto& G : fs) {
          auto t0 = std::chrono::steady_clock::now();
          NatResult r = nat_m_dim(*F, *G, NatMode::Both);
          worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
          ok = ok && r.oracle_agrees && r.dim == r.oracle_dim;
          dims[M->name + ":" + F->name + "," + G->name] = r.dim;
          ++pairs;
        }
    }
    d["pairs"] = pairs;
    d["dims"] = dims;
    d["within_time_budget"] = worst < 5.0;
    return ok && pairs >= 10 && worst < 5.0;
  });
}

/// 2: over a one-simple base, module and ordinary ends agree on randomized systems.
inline CriterionResult criterion_vec(std::uint32_t seed = 2) {
  return detail::run_criterion(2, "Vec coincidence", [&](json& d) {
    std::mt19937 rng(seed);
    auto k = Field::rationals();
    FusionCategory V = FusionCategory::make("vec", k, {"1"}, 0, {0}, {{0, 0, 0}});
    attach_duality(V);
    CategoryPtr Vp = std::make_shared<const FusionCategory>(V);
    size_t agree = 0;
    const size_t total = 50;
    for (size_t s = 0; s < total; ++s) {
      int n = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 3);
      auto mk = [&](int r, const std::string& nm) {
        std::vector<std::string> names;
        std::vector<std::array<int, 3>> tr;
        for (int i = 0; i < r; ++i) {
          names.push_back(nm + std::to_string(i));
          tr.push_back({0, i, i});
        }
        return std::make_shared<const ModuleCategory>(ModuleCategory::make(nm, Vp, names, false, tr));
      };
      ModulePtr A = mk(n, "a"), B = mk(m, "b");
      auto random_functor = [&](const std::string& nm) {
        std::vector<std::vector<int>> on(n, std::vector<int>(m));
        for (auto& row : on)
          for (auto& v : row) v = static_cast<int>(rng() % 3);
        ModuleFunctor F = functor_with_default_c(nm, A, B, on);
        std::vector<Matrix> g;
        for (int i = 0; i < n; ++i) g.push_back(detail::random_automorphism(rng, k, F.image(i)));
        return conjugate_functor(F, g);
      };
      ModuleFunctor F = random_functor("F"), G = random_functor("G");
      DinaturalSystem sys = build_nat_system(F, G);
      if (solve_end(sys).dim == solve_end(ordinary(sys)).dim) ++agree;
    }
    d["systems"] = total;
    d["agreeing"] = agree;
    return agree == total;
  });
}

/// 3: restricting to a tensor subcategory can only enlarge (co)ends; on vec_z4 with {0,2} and {0}.
inline CriterionResult criterion_restriction(const InstanceBundle& b) {
  return detail::run_criterion(3, "restriction monotonicity", [&](json& d) {
    ModulePtr M;
    for (const auto& R : detail::regular_modules(b))
      if (R->base->name == "vec_z4") M = R;
    if (!M) throw Error(ErrorKind::UnknownName, "no regular module over vec_z4 in the bundle");
    const auto& C = *M->base;
    std::vector<int> D{C.unit, C.label("2")}, U{C.unit};
    bool ok = true, strict = false;
    json rows = json::array();
    auto fs = detail::endofunctors(b, M);
    for (const auto& F : fs)
      for (const auto& G : fs) {
        DinaturalSystem e = build_nat_system(*F, *G), c = build_hom_coend_system(*F, *G);
        size_t eC = solve_end(e).dim, eD = solve_end(restrict_conditions(e, D)).dim,
               eU = solve_end(restrict_conditions(e, U)).dim, eV = solve_end(ordinary(e)).dim;
        size_t cC = solve_coend(c).dim, cD = solve_coend(restrict_conditions(c, D)).dim,
               cU = solve_coend(restrict_conditions(c, U)).dim, cV = solve_coend(ordinary(c)).dim;
        ok = ok && eC <= eD && eD <= eU && eU == eV && cC <= cD && cD <= cU && cU == cV;
        strict = strict || eC < eD || eD < eV;
        rows.push_back({{"pair", F->name + "," + G->name}, {"end", {eC, eD, eV}}, {"coend", {cC, cD, cV}}});
      }
    d["systems"] = rows;
    d["strict_case"] = strict;
    return ok && strict && !fs.empty();
  });
}

/// 4: the internal character of the identity is the unit; for the forgetful functor it is uhom(m, m).
inline CriterionResult criterion_peter_weyl(const InstanceBundle& b) {
  return detail::run_criterion(4, "Peter-Weyl", [&](json& d) {
    bool ok = true;
    size_t cats = 0;
    for (const auto& M : detail::regular_modules(b)) {
      const auto& C = *M->base;
      std::vector<int> v = internal_character(identity_functor(M));
      std::vector<int> unit(C.rank(), 0);
      unit[C.unit] = 1;
      ok = ok && v == unit;
      d[M->name] = mult_json(C.simples, v);
      ++cats;
    }
    bool found = false;
    for (const auto& [k, f] : b.functors) {
      if (f->name != "forget") continue;
      found = true;
      std::vector<int> v = internal_character(*f);
      InternalHomTable H = internal_hom(*f->src);
      std::vector<int> all1(f->dst->base->rank(), 1);
      ok = ok && v == all1 && f->src->rank() == 1 && v == H(0, 0);
      d[k] = mult_json(f->dst->base->simples, v);
    }
    return ok && found && cats >= 5;
  });
}

/// 5: the Serre functor of a regular module is the double-dual label map, with all certificates.
inline CriterionResult criterion_serre(const InstanceBundle& b) {
  return detail::run_criterion(5, "relative Serre functor", [&](json& d) {
    bool ok = true, single = false;
    for (const auto& [name, M] : b.modules) {
      if (M->right) continue;
      SerreResult s = serre_functor(*M);
      bool match = s.ok;
      if (detail::is_regular(*M)) {
        const auto& C = *M->base;
        for (int i = 0; i < C.rank(); ++i)
          for (int p = 0; p < C.rank(); ++p) match = match && s.on_simples[i][p] == (p == C.dual[C.dual[i]] ? 1 : 0);
      } else if (M->rank() == 1) {
        single = true;
      }
      ok = ok && match;
      d[name] = {{"certificates", s.certificates.size()}, {"ok", match}};
    }
    return ok && single;
  });
}

/// 6: Υ(x⊗−) is δ_x for every category and simple.
inline CriterionResult criterion_double_dual(const InstanceBundle& b) {
  return detail::run_criterion(6, "double dual", [&](json& d) {
    bool ok = true;
    for (const auto& [name, C] : b.categories) {
      bool all = true;
      for (int x = 0; x < C->rank(); ++x) {
        try {
          upsilon_regular(C, x);
        } catch (const Error& e) {
          all = false;
          d["errors"].push_back(e.what());
        }
      }
      d[name] = all;
      ok = ok && all;
    }
    return ok && !b.categories.empty();
  });
}

/// 7: both sides of the adjoint shift agree for every regular module and every y.
inline CriterionResult criterion_adjoint(const InstanceBundle& b) {
  return detail::run_criterion(7, "adjoint shift", [&](json& d) {
    bool ok = true;
    for (const auto& M : detail::regular_modules(b)) {
      json row = json::object();
      for (int y = 0; y < M->rank(); ++y) {
        AdjointShift a = adjoint_shift_check(M, y);
        ok = ok && a.equal;
        row[M->simples[y]] = a.equal;
      }
      d[M->name] = row;
    }
    return ok;
  });
}

namespace detail {

/// Every dimension the suite reports for one regular module, as a flat list.
inline std::vector<long> fingerprint(const ModulePtr& M, const std::vector<ModuleFunctor>& fs) {
  std::vector<long> out;
  for (const auto& F : fs)
    for (const auto& G : fs) {
      out.push_back(static_cast<long>(solve_end(build_nat_system(F, G)).dim));
      out.push_back(static_cast<long>(solve_coend(build_hom_coend_system(F, G)).dim));
    }
  for (int v : internal_character(identity_functor(M))) out.push_back(v);
  for (const auto& row : serre_functor(*M).on_simples)
    for (int v : row) out.push_back(v);
  for (int x = 0; x < M->rank(); ++x)
    for (int v : upsilon_regular(M->base, x)) out.push_back(v);
  for (int y = 0; y < M->rank(); ++y) {
    AdjointShift a = adjoint_shift_check(M, y);
    out.insert(out.end(), a.lhs.begin(), a.lhs.end());
    out.insert(out.end(), a.rhs.begin(), a.rhs.end());
  }
  return out;
}

}  // namespace detail

/// 8: composite conditions are redundant, and all outputs survive a random change of gauge.
inline CriterionResult criterion_guards(const InstanceBundle& b, std::uint32_t seed = 8) {
  return detail::run_criterion(8, "reduction guards", [&](json& d) {
    std::mt19937 rng(seed);
    bool ok = true;
    // Composite-condition redundancy.
    json red = json::object();
    for (const auto& [name, M] : b.modules) {
      if (M->right) continue;
      const auto& C = *M->base;
      std::vector<FunctorPtr> fs;
      for (const auto& [k, f] : b.functors)
        if (f->src == M) fs.push_back(f);
      if (fs.empty()) continue;
      size_t checked = 0;
      for (int trial = 0; trial < 20; ++trial) {
        const auto& F = fs[rng() % fs.size()];
        std::vector<FunctorPtr> gs;
        for (const auto& g : fs)
          if (g->dst == F->dst) gs.push_back(g);
        const auto& G = gs[rng() % gs.size()];
        int x = static_cast<int>(rng() % C.rank()), y = static_cast<int>(rng() % C.rank());
        Obj XY = tensor(C, {x}, {y});
        DinaturalSystem e = build_nat_system(*F, *G), c = build_hom_coend_system(*F, *G);
        size_t e0 = solve_end(e).dim, c0 = solve_coend(c).dim;
        for (int i = 0; i < M->rank(); ++i) {
          e.conditions.push_back({-1, i, nat_condition(*F, *G, e.carrier, XY, i)});
          c.conditions.push_back({-1, i, hom_coend_relations(*F, *G, c.carrier, XY, i)});
        }
        ok = ok && solve_end(e).dim == e0 && solve_coend(c).dim == c0;
        ++checked;
      }
      red[name] = checked;
    }
    d["composite_pairs"] = red;
    // Gauge perturbation on every regular module.
    json gauge = json::object();
    for (const auto& M : detail::regular_modules(b)) {
      std::vector<ModuleFunctor> fs;
      for (const auto& f : detail::endofunctors(b, M)) fs.push_back(*f);
      std::vector<long> before = detail::fingerprint(M, fs);
      GaugeTable u = detail::random_category_gauge(rng, *M->base);
      CategoryPtr C2 = std::make_shared<const FusionCategory>(gauge_category(*M->base, u));
      // The module gauge is drawn independently of u; functors are transported along it.
      GaugeTable v = detail::random_module_gauge(rng, *M);
      ModulePtr M2 = std::make_shared<const ModuleCategory>(gauge_module(*M, C2, u, v));
      std::vector<ModuleFunctor> fs2;
      for (const auto& f : fs) fs2.push_back(gauge_functor(f, M2, M2, v, v));
      std::vector<long> nat_after;
      for (const auto& F : fs2)
        for (const auto& G : fs2) {
          nat_after.push_back(static_cast<long>(solve_end(build_nat_system(F, G)).dim));
          nat_after.push_back(static_cast<long>(solve_coend(build_hom_coend_system(F, G)).dim));
        }
      // Outputs built from the regular structure use the gauged base with its own regular module.
      ModulePtr R2 = std::make_shared<const ModuleCategory>(regular_module(C2));
      std::vector<long> rest = detail::fingerprint(R2, {});
      std::vector<long> after = nat_after;
      after.insert(after.end(), rest.begin(), rest.end());
      bool same = before == after && validate_module(*M2).ok();
      ok = ok && same;
      gauge[M->name] = same;
    }
    for (const auto& [k, f] : b.functors) {
      if (f->name != "forget") continue;
      // Character systems read the target through the base category, so only the source is regauged.
      GaugeTable vs = detail::random_module_gauge(rng, *f->src);
      GaugeTable u, vt;
      ModulePtr S2 = std::make_shared<const ModuleCategory>(gauge_module(*f->src, f->src->base, u, vs));
      ModuleFunctor g = gauge_functor(*f, S2, f->dst, vs, vt);
      bool same = validate_functor(g).ok() && internal_character(g) == internal_character(*f);
      ok = ok && same;
      gauge[k] = same;
    }
    d["gauge_invariant"] = gauge;
    return ok;
  });
}

/// 9: every validator residual in the corpus is exactly zero and the whole suite ran within budget.
inline CriterionResult criterion_exactness(const InstanceBundle& b, double elapsed_before) {
  auto r = detail::run_criterion(9, "exactness", [&](json& d) {
    bool ok = true;
    json bad = json::object();
    for (const auto& [key, rep] : b.reports)
      if (!rep.ok()) {
        ok = false;
        bad[key] = rep.violations;
      }
    for (const auto& [name, M] : b.modules) {
      ValidationReport adj = check_internal_hom_adjunction(*M);
      ValidationReport lem = hom_lemma_suite(*M);
      adj.merge(lem);
      if (!adj.ok()) {
        ok = false;
        bad["internal_hom:" + name] = adj.violations;
      }
    }
    d["checked_instances"] = b.reports.size();
    d["violations"] = bad;
    return ok;
  });
  bool fast = elapsed_before + r.seconds < 60.0;
  r.detail["within_time_budget"] = fast;
  r.pass = r.pass && fast;
  return r;
}

inline SuiteReport run_suite(const InstanceBundle& b) {
  SuiteReport rep;
  auto t0 = std::chrono::steady_clock::now();
  rep.criteria.push_back(criterion_oracle(b));
  rep.criteria.push_back(criterion_vec());
  rep.criteria.push_back(criterion_restriction(b));
  rep.criteria.push_back(criterion_peter_weyl(b));
  rep.criteria.push_back(criterion_serre(b));
  rep.criteria.push_back(criterion_double_dual(b));
  rep.criteria.push_back(criterion_adjoint(b));
  rep.criteria.push_back(criterion_guards(b));
  double so_far = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.criteria.push_back(criterion_exactness(b, so_far));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace modend
