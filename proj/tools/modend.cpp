/**
 * @file modend.cpp
 * @brief Command-line front end: loads instance files and runs one command.
 *
 * Usage: modend [--data PATH...] COMMAND ARGS...
 * PATH may be a file or a directory of *.json files; the bundled corpus is the
 * default. The JSON report goes to stdout, errors to stderr.
 */

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modend/cli.hpp"

#ifndef MODEND_DATA_DIR
#define MODEND_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  using namespace modend;
  CLI::App app{"Module ends and coends over skeletal fusion categories"};
  std::vector<std::string> data{MODEND_DATA_DIR};
  app.add_option("--data", data, "instance files or directories (default: bundled corpus)");
  app.require_subcommand(1);

  Command cmd;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", cmd.args, "positional arguments");
    sub->add_option("--module", cmd.module_hint, "module used to disambiguate bare functor names");
    return sub;
  };
  add("validate", "validate every instance");
  CLI::App* nat = add("nat", "nat F G: dimension of module natural transformations F => G");
  auto* oracle = nat->add_flag("--oracle", cmd.oracle, "use the direct equations only");
  nat->add_flag("--both", cmd.both, "solve both systems and compare the subspaces")->excludes(oracle);
  for (const char* n : {"end", "coend"}) {
    CLI::App* s = add(n, std::string(n) + " --hom F G: (co)end of Hom(F-, G-)");
    s->add_flag("--hom", cmd.hom, "the Hom(F-, G-) bifunctor");
    auto* ord = s->add_flag("--ordinary", cmd.ordinary, "drop every balancing condition");
    s->add_option("--restrict", cmd.restrict_to, "keep conditions for a tensor subcategory, e.g. 0,2")->excludes(ord);
  }
  add("serre", "serre M: relative Serre functor on simples");
  add("character", "character M U: end of *U(M)⊗U(M)");
  add("upsilon", "upsilon C X: double dual check for X");
  add("adjshift", "adjshift C Y: adjoint shift for right multiplication by Y");
  add("homsuite", "homsuite M: internal Hom identities");
  add("suite", "all acceptance checks");

  std::vector<std::string> echo(argv + 1, argv + argc);
  if (argc > 1) {
    std::string first = argv[1];
    bool known = first.rfind("-", 0) == 0;
    for (const auto& n : command_names()) known = known || n == first;
    if (!known) {
      std::cerr << "error: " << Error(ErrorKind::UnknownCommand, "unknown command '" + first + "'").what() << "\n";
      return 1;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cmd.name = app.get_subcommands().front()->get_name();

  InstanceBundle bundle;
  try {
    bundle = load(expand_paths(data), cmd.name != "suite" && cmd.name != "validate");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    Report r = run_command(cmd, bundle);
    std::cout << wrap_report(echo, bundle, r).dump(2) << "\n";
    return r.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
