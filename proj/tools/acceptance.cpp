/**
 * @file acceptance.cpp
 * @brief Runs the nine acceptance criteria on the bundled corpus, one PASS/FAIL line each.
 *
 * Tolerances: every comparison is exact (dimensions, multiplicity vectors and
 * subspaces over the instance field); criterion 1 allows 5 s per functor pair
 * and criterion 9 allows 60 s for the whole run. Exit status is 0 only if all
 * nine pass.
 */

#include <cstdio>
#include <iostream>
#include <string>

#include "modend/cli.hpp"
#include "modend/suite.hpp"

#ifndef MODEND_DATA_DIR
#define MODEND_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  using namespace modend;
  std::string dir = argc > 1 ? argv[1] : MODEND_DATA_DIR;
  InstanceBundle b;
  try {
    b = load(expand_paths({dir}), false);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (int i = 1; i <= 9; ++i) std::printf("criterion %d: FAIL (corpus could not be loaded)\n", i);
    return 1;
  }
  SuiteReport r = run_suite(b);
  for (const auto& c : r.criteria) {
    std::string detail = c.detail.dump();
    if (detail.size() > 160) detail = detail.substr(0, 157) + "...";
    std::printf("criterion %d: %s  %-26s %7.3fs  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                detail.c_str());
  }
  std::printf("total: %.3fs, %s\n", r.seconds, r.pass() ? "all criteria pass" : "some criteria fail");
  return r.pass() ? 0 : 1;
}
