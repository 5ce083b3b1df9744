/**
 * @file cli.hpp
 * @brief Command dispatch over a loaded bundle, producing a JSON report and an exit code.
 *
 * Exit codes: 0 success, 1 validation or usage failure, 2 a theorem
 * certificate failed. Reports are nlohmann::json objects, whose keys are
 * emitted in sorted order, so identical inputs give identical bytes.
 */

#pragma once

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "modend/endengine.hpp"
#include "modend/io.hpp"
#include "modend/suite.hpp"
#include "modend/theorems.hpp"

namespace modend {

struct Command {
  std::string name;
  std::vector<std::string> args;
  bool oracle = false;
  bool both = false;
  bool hom = false;
  bool ordinary = false;
  std::string restrict_to;  ///< comma-separated labels
  std::string module_hint;  ///< disambiguates bare functor names
};

struct Report {
  json body = json::object();
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "nat",      "end",      "coend",    "serre",
                                              "character", "upsilon", "adjshift", "homsuite", "suite"};
  return names;
}

/// Expands directories into their *.json files (sorted); files are kept as given.
inline std::vector<std::string> expand_paths(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& p : in) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::string> files;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

namespace detail {

inline void need_args(const Command& c, size_t n, const std::string& usage) {
  if (c.args.size() != n) throw Error(ErrorKind::ParseError, "usage: " + usage);
}

inline std::vector<int> parse_subset(const FusionCategory& C, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(C.label(item));
  return out;
}

inline int category_label(const FusionCategory& C, const std::string& s) {
  try {
    return C.label(s);
  } catch (const Error&) {
    throw Error(ErrorKind::UnknownName, "no simple '" + s + "' in category " + C.name);
  }
}

inline ModulePtr regular_of(const InstanceBundle& b, const std::string& cat) {
  const CategoryPtr& C = b.category(cat);
  for (const auto& [k, m] : b.modules)
    if (m->base == C && is_regular(*m)) return m;
  throw Error(ErrorKind::UnknownName, "no regular module over " + cat + " in the bundle");
}

inline json hom_system_result(const DinaturalSystem& sys, bool coend) {
  EndResult r = coend ? solve_coend(sys) : solve_end(sys);
  return {{"dim", r.dim}};
}

inline Report run_hom(const Command& c, const InstanceBundle& b, bool coend) {
  std::string usage = std::string(coend ? "coend" : "end") + " --hom F G [--restrict LABELS|--ordinary]";
  need_args(c, 2, usage);
  if (!c.hom) throw Error(ErrorKind::ParseError, "only --hom systems are supported; usage: " + usage);
  const auto& F = b.functor(c.args[0], c.module_hint);
  const auto& G = b.functor(c.args[1], c.module_hint.empty() ? F->src->name : c.module_hint);
  DinaturalSystem sys = coend ? build_hom_coend_system(*F, *G) : build_nat_system(*F, *G);
  if (c.ordinary) sys = ordinary(sys);
  if (!c.restrict_to.empty()) sys = restrict_conditions(sys, parse_subset(*sys.base, c.restrict_to));
  return {hom_system_result(sys, coend), 0};
}

}  // namespace detail

/// Runs one command; Error exceptions propagate to the caller.
inline Report run_command(const Command& c, const InstanceBundle& b) {
  Report rep;
  json& out = rep.body;
  if (c.name == "validate") {
    json r = json::object();
    bool ok = true;
    for (const auto& [key, v] : b.reports) {
      r[key] = v.violations;
      ok = ok && v.ok();
    }
    out = {{"instances", r}, {"valid", ok}};
    rep.exit_code = ok ? 0 : 1;
  } else if (c.name == "nat") {
    detail::need_args(c, 2, "nat F G [--oracle|--both]");
    const auto& F = b.functor(c.args[0], c.module_hint);
    const auto& G = b.functor(c.args[1], c.module_hint.empty() ? F->src->name : c.module_hint);
    NatMode mode = c.both ? NatMode::Both : c.oracle ? NatMode::Oracle : NatMode::End;
    NatResult r = nat_m_dim(*F, *G, mode);
    out = {{"dim", r.dim}};
    if (mode == NatMode::Both) out["oracle_agrees"] = r.oracle_agrees;
  } else if (c.name == "end") {
    return detail::run_hom(c, b, false);
  } else if (c.name == "coend") {
    return detail::run_hom(c, b, true);
  } else if (c.name == "serre") {
    detail::need_args(c, 1, "serre M");
    const auto& M = b.module(c.args[0]);
    SerreResult s = serre_functor(*M);
    json on = json::object();
    for (int i = 0; i < M->rank(); ++i) on[M->simples[i]] = mult_json(M->simples, s.on_simples[i]);
    json certs = json::array();
    for (const auto& ct : s.certificates)
      certs.push_back({{"i", M->simples[ct.i]},
                       {"j", M->simples[ct.j]},
                       {"x", M->base->simples[ct.x]},
                       {"lhs", ct.lhs},
                       {"rhs", ct.rhs}});
    out = {{"on_simples", on}, {"certificates", certs}, {"certificates_pass", s.ok}};
  } else if (c.name == "character") {
    detail::need_args(c, 2, "character M U");
    const auto& M = b.module(c.args[0]);
    const auto& U = b.functor(c.args[1], M->name);
    if (!detail::is_regular(*U->dst))
      throw Error(ErrorKind::ValidationError, "character needs a functor into a regular module");
    out = {{"object", mult_json(U->dst->base->simples, internal_character(*U))}};
  } else if (c.name == "upsilon") {
    detail::need_args(c, 2, "upsilon C X");
    const auto& C = b.category(c.args[0]);
    int x = detail::category_label(*C, c.args[1]);
    try {
      out = {{"object", mult_json(C->simples, upsilon_regular(C, x))}, {"matches", true}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UpsilonMismatch) throw;
      out = {{"matches", false}, {"error", e.what()}};
      rep.exit_code = 2;
    }
  } else if (c.name == "adjshift") {
    detail::need_args(c, 2, "adjshift C Y");
    ModulePtr R = detail::regular_of(b, c.args[0]);
    int y = detail::category_label(*R->base, c.args[1]);
    AdjointShift a = adjoint_shift_check(R, y);
    out = {{"lhs", mult_json(R->base->simples, a.lhs)}, {"rhs", mult_json(R->base->simples, a.rhs)}, {"equal", a.equal}};
    rep.exit_code = a.equal ? 0 : 2;
  } else if (c.name == "homsuite") {
    detail::need_args(c, 1, "homsuite M");
    const auto& M = b.module(c.args[0]);
    ValidationReport v = hom_lemma_suite(*M);
    v.merge(check_internal_hom_adjunction(*M));
    InternalHomTable H = internal_hom(*M);
    json table = json::object();
    for (int i = 0; i < M->rank(); ++i)
      for (int j = 0; j < M->rank(); ++j) table[M->simples[i] + "," + M->simples[j]] = mult_json(M->base->simples, H(i, j));
    out = {{"internal_hom", table}, {"violations", v.violations}, {"pass", v.ok()}};
    rep.exit_code = v.ok() ? 0 : 2;
  } else if (c.name == "suite") {
    SuiteReport s = run_suite(b);
    out = s.to_json();
    rep.exit_code = s.pass() ? 0 : 2;
  } else {
    throw Error(ErrorKind::UnknownCommand, "unknown command '" + c.name + "'");
  }
  return rep;
}

/// Exit code for an error escaping run_command or load.
inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::OracleMismatch:
    case ErrorKind::SerreCertificateFailure:
    case ErrorKind::UpsilonMismatch:
      return 2;
    default:
      return 1;
  }
}

/// Full report: command echo, input digests, payload and status.
inline json wrap_report(const std::vector<std::string>& argv_echo, const InstanceBundle& b, const Report& r) {
  json inputs = json::object();
  for (const auto& [path, d] : b.digests) inputs[std::filesystem::path(path).filename().string()] = "fnv1a64:" + d;
  return {{"command", argv_echo},
          {"inputs", inputs},
          {"result", r.body},
          {"status", r.exit_code == 0 ? "ok" : r.exit_code == 1 ? "validation_failure" : "certificate_failure"}};
}

}  // namespace modend
