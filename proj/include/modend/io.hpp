/**
 * @file io.hpp
 * @brief JSON instance files: categories, module categories and module functors.
 *
 * A file holds one instance object or {"items": [...]}. Every instance has a
 * "kind" ("category", "module" or "functor") and a "name". Cross-references
 * are by name and may span files; all files are read before anything is
 * resolved. Rationals are written as "p/q" strings or JSON integers, and a
 * field element is either one rational or its coefficient array in the field
 * generator (constant first). The schema is documented in docs/format.md.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modend/errors.hpp"
#include "modend/field.hpp"
#include "modend/functor.hpp"
#include "modend/fusion.hpp"
#include "modend/module.hpp"

namespace modend {

using json = nlohmann::json;

/// Loaded instances with the validator output of each one.
struct InstanceBundle {
  std::map<std::string, CategoryPtr> categories;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, FunctorPtr> functors;  ///< keyed by "source_module/name"
  std::map<std::string, std::string> digests;  ///< path -> FNV-1a 64-bit hex
  std::map<std::string, ValidationReport> reports;  ///< "kind:name" -> violations

  bool valid() const {
    for (const auto& [k, r] : reports)
      if (!r.ok()) return false;
    return true;
  }

  const CategoryPtr& category(const std::string& name) const {
    auto it = categories.find(name);
    if (it == categories.end()) throw Error(ErrorKind::UnknownName, "no category named '" + name + "'");
    return it->second;
  }

  const ModulePtr& module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw Error(ErrorKind::UnknownName, "no module category named '" + name + "'");
    return it->second;
  }

  /// Looks up "module/name", or a bare name that is unique (optionally among functors on module `hint`).
  const FunctorPtr& functor(const std::string& name, const std::string& hint = "") const {
    if (auto it = functors.find(name); it != functors.end()) return it->second;
    const FunctorPtr* found = nullptr;
    int count = 0;
    for (const auto& [key, f] : functors) {
      if (f->name != name) continue;
      if (!hint.empty() && f->src->name != hint) continue;
      found = &f;
      ++count;
    }
    if (count == 0) throw Error(ErrorKind::UnknownName, "no functor named '" + name + "'");
    if (count > 1)
      throw Error(ErrorKind::UnknownName, "functor name '" + name + "' is ambiguous; write it as module/" + name);
    return *found;
  }
};

inline std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

inline const json& need(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) parse_fail(where, std::string("missing field '") + key + "'");
  return obj.at(key);
}

inline std::string need_string(const json& obj, const char* key, const std::string& where) {
  const json& v = need(obj, key, where);
  if (!v.is_string()) parse_fail(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline Rational read_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  parse_fail(where, "rationals must be integers or \"p/q\" strings, got " + v.dump());
}

inline FieldElement read_element(const FieldPtr& k, const json& v, const std::string& where) {
  if (!v.is_array()) return k->from_rational(read_rational(v, where));
  std::vector<Rational> c;
  for (const auto& e : v) c.push_back(read_rational(e, where));
  if (c.size() > static_cast<size_t>(k->degree())) parse_fail(where, "coefficient array longer than field degree");
  return k->from_coeffs(std::move(c));
}

inline std::vector<std::string> read_labels(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where, "expected an array of labels");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) parse_fail(where, "labels must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline int label_in(const std::vector<std::string>& simples, const std::string& s, const std::string& where) {
  for (size_t i = 0; i < simples.size(); ++i)
    if (simples[i] == s) return static_cast<int>(i);
  throw Error(ErrorKind::UnknownLabel, where + ": unknown label '" + s + "'");
}

inline std::vector<std::array<int, 3>> read_triples(const json& v, const std::vector<std::string>& a,
                                                    const std::vector<std::string>& b,
                                                    const std::vector<std::string>& c, const std::string& where) {
  std::vector<std::array<int, 3>> out;
  if (!v.is_array()) parse_fail(where, "expected an array of label triples");
  for (const auto& t : v) {
    auto l = read_labels(t, where);
    if (l.size() != 3) parse_fail(where, "triples must have 3 labels");
    out.push_back({label_in(a, l[0], where), label_in(b, l[1], where), label_in(c, l[2], where)});
  }
  return out;
}

inline FusionCategory read_category(const json& j) {
  std::string name = need_string(j, "name", "category");
  std::string where = "category " + name;
  std::vector<Rational> poly{Rational(0), Rational(1)};
  if (j.contains("field")) {
    const json& mp = need(j.at("field"), "min_poly", where);
    if (!mp.is_array()) parse_fail(where, "min_poly must be an array");
    poly.clear();
    for (const auto& e : mp) poly.push_back(read_rational(e, where));
  }
  FieldPtr k = Field::make(poly);
  auto simples = read_labels(need(j, "simples", where), where);
  int unit = label_in(simples, need_string(j, "unit", where), where);
  const int n = static_cast<int>(simples.size());
  std::vector<int> dual(n);
  for (int i = 0; i < n; ++i) dual[i] = i;
  if (j.contains("dual")) {
    for (const auto& [a, b] : j.at("dual").items()) {
      if (!b.is_string()) parse_fail(where, "dual entries must be labels");
      dual[label_in(simples, a, where)] = label_in(simples, b.get<std::string>(), where);
    }
  }
  auto triples = read_triples(need(j, "fusion", where), simples, simples, simples, where);
  for (int a = 0; a < n; ++a) {
    triples.push_back({unit, a, a});
    triples.push_back({a, unit, a});
  }
  FusionCategory C = FusionCategory::make(name, k, simples, unit, dual, triples);
  if (j.contains("f_symbols")) {
    for (const auto& e : j.at("f_symbols")) {
      auto l = read_labels(need(e, "labels", where), where);
      if (l.size() != 6) parse_fail(where, "F-symbol labels must have 6 entries");
      int t[6];
      for (int q = 0; q < 6; ++q) t[q] = label_in(simples, l[q], where);
      if (!C.admissible(t[0], t[1], t[2], t[3], t[4], t[5]))
        throw Error(ErrorKind::ValidationError, where + ": F-symbol given for non-admissible " +
                                                    C.tuple({t[0], t[1], t[2], t[3], t[4], t[5]}));
      C.F_ref(t[0], t[1], t[2], t[3], t[4], t[5]) = read_element(k, need(e, "value", where), where);
    }
  }
  return C;
}

inline ModuleCategory read_module(const json& j, const InstanceBundle& b) {
  std::string name = need_string(j, "name", "module");
  std::string where = "module " + name;
  std::string cat = need_string(j, "category", where);
  auto it = b.categories.find(cat);
  if (it == b.categories.end())
    throw Error(ErrorKind::ValidationError, where + ": refers to unknown category '" + cat + "'");
  CategoryPtr C = it->second;
  std::string construction = j.value("construction", std::string("explicit"));
  if (construction == "regular") {
    ModuleCategory M = regular_module(C);
    M.name = name;
    return M;
  }
  if (construction != "explicit") parse_fail(where, "unknown construction '" + construction + "'");
  auto simples = read_labels(need(j, "simples", where), where);
  bool right = j.value("right", false);
  const auto& cs = C->simples;
  auto triples = right ? read_triples(need(j, "action", where), simples, cs, simples, where)
                       : read_triples(need(j, "action", where), cs, simples, simples, where);
  const int nm = static_cast<int>(simples.size());
  // The unit acts trivially and is implied.
  for (int i = 0; i < nm; ++i) triples.push_back(right ? std::array<int, 3>{i, C->unit, i} : std::array<int, 3>{C->unit, i, i});
  ModuleCategory M = ModuleCategory::make(name, C, simples, right, triples);
  const FieldPtr& k = C->field;
  if (j.contains("l_symbols")) {
    for (const auto& e : j.at("l_symbols")) {
      auto l = read_labels(need(e, "labels", where), where);
      if (l.size() != 6) parse_fail(where, "L-symbol labels must have 6 entries");
      int x = label_in(cs, l[0], where), y = label_in(cs, l[1], where), i = label_in(simples, l[2], where),
          jj = label_in(simples, l[3], where), z = label_in(cs, l[4], where), t = label_in(simples, l[5], where);
      if (!M.l_admissible(x, y, i, jj, z, t))
        throw Error(ErrorKind::ValidationError, where + ": L-symbol given for non-admissible (" + l[0] + "," + l[1] +
                                                    "," + l[2] + "," + l[3] + "," + l[4] + "," + l[5] + ")");
      M.L_ref(x, y, i, jj, z, t) = read_element(k, need(e, "value", where), where);
    }
  }
  if (j.contains("unit_scalars")) {
    for (const auto& [lab, v] : j.at("unit_scalars").items())
      M.unit_scalars[label_in(simples, lab, where)] = read_element(k, v, where);
  }
  return M;
}

inline ModuleFunctor read_functor(const json& j, const InstanceBundle& b) {
  std::string name = need_string(j, "name", "functor");
  std::string where = "functor " + name;
  auto lookup = [&](const char* key) {
    std::string m = need_string(j, key, where);
    auto it = b.modules.find(m);
    if (it == b.modules.end())
      throw Error(ErrorKind::ValidationError, where + ": refers to unknown module category '" + m + "'");
    return it->second;
  };
  ModulePtr src = lookup("source");
  ModulePtr dst = j.contains("target") ? lookup("target") : src;
  if (src->right || dst->right) throw Error(ErrorKind::ValidationError, where + ": functors need left modules");
  if (src->base->name != dst->base->name)
    throw Error(ErrorKind::ValidationError, where + ": source and target have different base categories");
  std::string construction = j.value("construction", std::string("explicit"));
  ModuleFunctor F;
  if (construction == "identity") {
    if (src != dst) throw Error(ErrorKind::ValidationError, where + ": identity needs source == target");
    F = identity_functor(src);
  } else if (construction == "right_multiplication") {
    if (src != dst) throw Error(ErrorKind::ValidationError, where + ": right multiplication needs source == target");
    if (src->base->simples != src->simples)
      throw Error(ErrorKind::ValidationError, where + ": right multiplication needs a regular module");
    F = act_right_functor(src, label_in(src->base->simples, need_string(j, "y", where), where));
  } else if (construction == "composite") {
    auto part = [&](const char* key) {
      std::string f = need_string(j, key, where);
      auto it = b.functors.find(f);
      if (it == b.functors.end())
        throw Error(ErrorKind::ValidationError, where + ": refers to unknown functor '" + f + "'");
      return it->second;
    };
    F = compose_functors(*part("outer"), *part("inner"));
    if (F.src != src || F.dst != dst)
      throw Error(ErrorKind::ValidationError, where + ": composite does not match declared source/target");
  } else if (construction == "explicit") {
    const int ni = src->rank(), nj = dst->rank();
    std::vector<std::vector<int>> on(ni, std::vector<int>(nj, 0));
    for (const auto& [a, row] : need(j, "on_simples", where).items()) {
      int i = label_in(src->simples, a, where);
      for (const auto& [c, m] : row.items()) {
        if (!m.is_number_integer() || m.get<int>() < 0) parse_fail(where, "multiplicities must be non-negative integers");
        on[i][label_in(dst->simples, c, where)] = m.get<int>();
      }
    }
    F = functor_with_default_c(name, src, dst, on);
    if (j.contains("c_symbols")) {
      for (const auto& e : j.at("c_symbols")) {
        int x = label_in(src->base->simples, need_string(e, "x", where), where);
        int i = label_in(src->simples, need_string(e, "m", where), where);
        const json& mat = need(e, "matrix", where);
        Matrix& blk = F.c[x][i];
        if (!mat.is_array() || mat.size() != blk.rows())
          throw Error(ErrorKind::ValidationError, where + ": c block at (" + src->base->simples[x] + "," +
                                                      src->simples[i] + ") must have " + std::to_string(blk.rows()) +
                                                      " rows");
        for (size_t r = 0; r < blk.rows(); ++r) {
          if (!mat[r].is_array() || mat[r].size() != blk.cols())
            throw Error(ErrorKind::ValidationError, where + ": c block row of wrong length");
          for (size_t c = 0; c < blk.cols(); ++c) blk(r, c) = read_element(src->field(), mat[r][c], where);
        }
      }
    }
  } else {
    parse_fail(where, "unknown construction '" + construction + "'");
  }
  F.name = name;
  return F;
}

inline std::vector<json> split_items(const json& doc, const std::string& where) {
  if (doc.is_object() && doc.contains("items")) {
    if (!doc.at("items").is_array()) parse_fail(where, "'items' must be an array");
    return doc.at("items").get<std::vector<json>>();
  }
  if (!doc.is_object()) parse_fail(where, "expected a JSON object");
  return {doc};
}

}  // namespace detail

/// Resolves parsed documents into a bundle. With require_valid, the first violation raises ValidationError.
inline InstanceBundle load_documents(const std::vector<json>& docs, bool require_valid = true) {
  InstanceBundle b;
  std::vector<json> cats, mods, funs;
  for (const auto& doc : docs)
    for (auto& item : detail::split_items(doc, "instance file")) {
      std::string kind = detail::need_string(item, "kind", "instance");
      if (kind == "category")
        cats.push_back(item);
      else if (kind == "module")
        mods.push_back(item);
      else if (kind == "functor")
        funs.push_back(item);
      else
        detail::parse_fail("instance", "unknown kind '" + kind + "'");
    }
  auto record = [&](const std::string& key, ValidationReport rep) {
    if (require_valid && !rep.ok()) throw Error(ErrorKind::ValidationError, key + ": " + rep.violations.front());
    b.reports[key] = std::move(rep);
  };
  auto duplicate = [](const std::string& key) { throw Error(ErrorKind::ValidationError, "duplicate " + key); };
  for (const auto& j : cats) {
    FusionCategory C = detail::read_category(j);
    std::string key = "category:" + C.name;
    if (b.categories.count(C.name)) duplicate(key);
    ValidationReport rep = validate_fusion(C);
    if (rep.ok()) {
      try {
        attach_duality(C);
      } catch (const Error& e) {
        rep.add(e.what());
      }
    }
    record(key, rep);
    std::string name = C.name;
    b.categories[name] = std::make_shared<const FusionCategory>(std::move(C));
  }
  for (const auto& j : mods) {
    std::string name = detail::need_string(j, "name", "module");
    std::string key = "module:" + name;
    if (b.modules.count(name)) duplicate(key);
    ModuleCategory M = detail::read_module(j, b);
    record(key, validate_module(M));
    b.modules[name] = std::make_shared<const ModuleCategory>(std::move(M));
  }
  // Composite functors may refer to functors listed later, so resolve in passes.
  std::vector<json> pending = funs;
  while (!pending.empty()) {
    std::vector<json> next;
    for (const auto& j : pending) {
      if (j.value("construction", std::string()) == "composite") {
        bool ready = true;
        for (const char* k : {"outer", "inner"})
          if (!b.functors.count(detail::need_string(j, k, "functor"))) ready = false;
        if (!ready) {
          next.push_back(j);
          continue;
        }
      }
      ModuleFunctor F = detail::read_functor(j, b);
      std::string qual = F.src->name + "/" + F.name;
      std::string key = "functor:" + qual;
      if (b.functors.count(qual)) duplicate(key);
      record(key, validate_functor(F));
      b.functors[qual] = std::make_shared<const ModuleFunctor>(std::move(F));
    }
    if (next.size() == pending.size()) {
      std::string n = detail::need_string(next.front(), "name", "functor");
      throw Error(ErrorKind::ValidationError, "functor " + n + ": composite refers to unknown functors");
    }
    pending = std::move(next);
  }
  return b;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads and resolves instance files; digests are recorded per path.
inline InstanceBundle load(const std::vector<std::string>& paths, bool require_valid = true) {
  std::vector<json> docs;
  std::map<std::string, std::string> digests;
  for (const auto& p : paths) {
    std::string text = read_file(p);
    digests[p] = fnv1a64(text);
    try {
      docs.push_back(json::parse(text));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, p + ": " + e.what());
    }
  }
  InstanceBundle b = load_documents(docs, require_valid);
  b.digests = std::move(digests);
  return b;
}

/// Field element as its coefficient array of canonical "p/q" strings.
inline json element_json(const FieldElement& x) {
  json a = json::array();
  for (const auto& c : x.coeffs()) a.push_back(format_rational(c));
  return a;
}

/// Multiplicity vector as {label: count}.
inline json mult_json(const std::vector<std::string>& labels, const std::vector<int>& v) {
  json o = json::object();
  for (size_t i = 0; i < labels.size(); ++i) o[labels[i]] = v[i];
  return o;
}

}  // namespace modend
