/**
 * @file common.hpp
 * @brief Test helpers: the bundled corpus, lookups and random scalars.
 */

#pragma once

#include <random>
#include <string>

#include "modend/cli.hpp"

namespace modend::testing {

inline const InstanceBundle& corpus() {
  static const InstanceBundle b = load(expand_paths({MODEND_DATA_DIR}));
  return b;
}

inline CategoryPtr cat(const std::string& name) { return corpus().category(name); }
inline ModulePtr mod(const std::string& name) { return corpus().module(name); }
inline FunctorPtr fun(const std::string& module, const std::string& name) {
  return corpus().functor(module + "/" + name);
}

inline const std::vector<std::string>& category_names() {
  static const std::vector<std::string> names{"vec_z2_triv", "vec_z2_omega", "vec_z4", "fib", "ising"};
  return names;
}

inline const std::vector<std::string>& regular_names() {
  static const std::vector<std::string> names{"vec_z2_regular", "vec_z2_omega_regular", "vec_z4_regular",
                                              "fib_regular", "ising_regular"};
  return names;
}

inline Matrix mat(const FieldPtr& k, std::initializer_list<std::initializer_list<long>> rows) {
  size_t r = rows.size(), c = rows.begin()->size();
  Matrix m(k, r, c);
  size_t i = 0;
  for (const auto& row : rows) {
    size_t j = 0;
    for (long v : row) m(i, j++) = k->from_rational(Rational(v));
    ++i;
  }
  return m;
}

inline FieldElement random_element(std::mt19937& rng, const FieldPtr& k) {
  std::vector<Rational> c(k->degree());
  for (auto& q : c) q = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 5) + 1);
  return k->from_coeffs(c);
}

inline Matrix random_matrix(std::mt19937& rng, const FieldPtr& k, size_t r, size_t c, int zero_bias = 0) {
  Matrix m(k, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % (zero_bias + 1)) == 0) m(i, j) = random_element(rng, k);
  return m;
}

}  // namespace modend::testing
