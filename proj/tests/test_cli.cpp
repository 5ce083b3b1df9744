#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <sys/wait.h>

#include "common.hpp"

using namespace modend;
using namespace modend::testing;

namespace {

std::string data_file(const std::string& name) { return std::string(MODEND_DATA_DIR) + "/" + name; }

std::map<std::string, json> corpus_documents() {
  std::map<std::string, json> docs;
  for (const auto& p : expand_paths({MODEND_DATA_DIR}))
    docs[std::filesystem::path(p).filename().string()] = json::parse(read_file(p));
  return docs;
}

std::vector<json> values(const std::map<std::string, json>& docs) {
  std::vector<json> out;
  for (const auto& [k, v] : docs) out.push_back(v);
  return out;
}

json& f_entry(json& cat, const std::vector<std::string>& labels) {
  for (auto& e : cat["f_symbols"])
    if (e["labels"].get<std::vector<std::string>>() == labels) return e["value"];
  throw std::runtime_error("no such F entry");
}

Report run(const std::vector<std::string>& words, const InstanceBundle& b = corpus()) {
  Command c;
  c.name = words.front();
  for (size_t k = 1; k < words.size(); ++k) {
    const std::string& w = words[k];
    if (w == "--both") c.both = true;
    else if (w == "--oracle") c.oracle = true;
    else if (w == "--hom") c.hom = true;
    else if (w == "--ordinary") c.ordinary = true;
    else if (w == "--module") c.module_hint = words[++k];
    else if (w == "--restrict") c.restrict_to = words[++k];
    else c.args.push_back(w);
  }
  return run_command(c, b);
}

struct Process {
  int code;
  std::string out;
};

Process spawn(const std::string& args) {
  std::string cmd = std::string(MODEND_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Load, SingleCategoryFile) {
  InstanceBundle b = load({data_file("vec_z2.json")});
  EXPECT_EQ(b.categories.size(), 1u);
  EXPECT_TRUE(b.modules.empty());
  EXPECT_EQ(b.digests.size(), 1u);
}

TEST(Load, CategoryAndModule) {
  InstanceBundle b = load({data_file("fib.json"), data_file("fib_regular.json")});
  EXPECT_EQ(b.categories.size(), 1u);
  EXPECT_EQ(b.modules.size(), 1u);
  EXPECT_EQ(b.module("fib_regular")->base, b.category("fib"));
}

TEST(Load, DanglingCategoryReference) {
  try {
    load({data_file("fib_regular.json")});
    FAIL() << "expected ValidationError";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
    EXPECT_NE(std::string(e.what()).find("unknown category"), std::string::npos);
  }
}

TEST(Load, MalformedJsonIsParseError) {
  try {
    load_documents({json::parse(R"({"kind": "category"})")});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError);
  }
}

TEST(Load, InvalidInstanceRejectedWhenStrict) {
  auto docs = corpus_documents();
  f_entry(docs["vec_z2_omega.json"], {"s", "s", "s", "s", "e", "e"}) = "2";
  EXPECT_THROW(load_documents(values(docs)), Error);
  InstanceBundle lax = load_documents(values(docs), false);
  EXPECT_FALSE(lax.valid());
}

TEST(Run, SpecExamples) {
  EXPECT_EQ(run({"nat", "id", "id", "--both", "--module", "vec_z2_regular"}).body,
            json::parse(R"({"dim":1,"oracle_agrees":true})"));
  EXPECT_EQ(run({"end", "--hom", "id", "id", "--ordinary", "--module", "vec_z2_regular"}).body,
            json::parse(R"({"dim":2})"));
  EXPECT_EQ(run({"character", "vec_z2_regular", "id"}).body, json::parse(R"({"object":{"e":1,"s":0}})"));
}

TEST(Run, OtherCommands) {
  EXPECT_EQ(run({"end", "--hom", "id", "id", "--module", "vec_z4_regular"}).body["dim"], 1);
  EXPECT_EQ(run({"end", "--hom", "id", "id", "--restrict", "0,2", "--module", "vec_z4_regular"}).body["dim"], 2);
  EXPECT_EQ(run({"coend", "--hom", "id", "id", "--module", "vec_z2_regular"}).body["dim"], 1);
  Report s = run({"serre", "fib_regular"});
  EXPECT_EQ(s.body["on_simples"]["tau"], json::parse(R"({"1":0,"tau":1})"));
  EXPECT_TRUE(s.body["certificates_pass"].get<bool>());
  EXPECT_EQ(run({"upsilon", "vec_z2_omega", "s"}).body["object"], json::parse(R"({"e":0,"s":1})"));
  Report a = run({"adjshift", "fib", "tau"});
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.body["lhs"], a.body["rhs"]);
  Report h = run({"homsuite", "ising_regular"});
  EXPECT_EQ(h.exit_code, 0);
  EXPECT_EQ(h.body["internal_hom"]["sigma,sigma"], json::parse(R"({"1":1,"psi":1,"sigma":0})"));
  EXPECT_EQ(run({"validate"}).exit_code, 0);
}

TEST(Run, Errors) {
  try {
    run({"frobnicate"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCommand);
    EXPECT_EQ(exit_code_for(e), 1);
  }
  try {
    run({"nat", "nope", "id", "--module", "vec_z2_regular"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownName);
  }
  EXPECT_THROW(run({"upsilon", "fib", "sigma"}), Error);
  EXPECT_THROW(run({"end", "id", "id", "--module", "vec_z2_regular"}), Error);
}

TEST(Run, ByteIdenticalReports) {
  std::vector<std::string> words{"homsuite", "fib_regular"};
  std::string first = wrap_report(words, corpus(), run(words)).dump(2);
  InstanceBundle again = load(expand_paths({MODEND_DATA_DIR}));
  EXPECT_EQ(wrap_report(words, again, run(words, again)).dump(2), first);
  EXPECT_NE(first.find("fnv1a64:"), std::string::npos);
}

TEST(Suite, PristineCorpusPasses) {
  Report r = run({"suite"});
  EXPECT_EQ(r.exit_code, 0) << r.body.dump();
  EXPECT_EQ(r.body["criteria"].size(), 9u);
  EXPECT_EQ(r.body["status"], "ok");
}

// Each mutation changes exactly one bundled scalar.
TEST(Suite, SingleScalarMutationsAreCaught) {
  const std::vector<std::pair<std::string, std::function<void(std::map<std::string, json>&)>>> mutations{
      {"Z2 cocycle value -1 -> 2",
       [](auto& d) { f_entry(d["vec_z2_omega.json"], {"s", "s", "s", "s", "e", "e"}) = "2"; }},
      {"Fib F(tau^4; tau, tau) sign flipped",
       [](auto& d) { f_entry(d["fib.json"], {"tau", "tau", "tau", "tau", "tau", "tau"}) = json::array({"0", "0", "1"}); }},
      {"Fib F(tau^4; 1, tau) doubled",
       [](auto& d) { f_entry(d["fib.json"], {"tau", "tau", "tau", "tau", "1", "tau"}) = json::array({"0", "2"}); }},
      {"Ising F(sigma^4; psi, psi) sign flipped",
       [](auto& d) {
         auto& v = f_entry(d["ising.json"], {"sigma", "sigma", "sigma", "sigma", "psi", "psi"});
         v = json::array({"0", "1/2"});
       }},
      {"Ising F(sigma, psi, sigma, psi; sigma, sigma) -1 -> 1",
       [](auto& d) { f_entry(d["ising.json"], {"sigma", "psi", "sigma", "psi", "sigma", "sigma"}) = "1"; }},
      {"forgetful functor c entry 1 -> 2",
       [](auto& d) { d["vec_over_vec_z2.json"]["items"][2]["c_symbols"][0]["matrix"][0][1] = "2"; }},
  };
  for (const auto& [what, mutate] : mutations) {
    auto docs = corpus_documents();
    mutate(docs);
    InstanceBundle b = load_documents(values(docs), false);
    EXPECT_EQ(run({"suite"}, b).exit_code, 2) << what;
  }
}

TEST(Binary, ExitCodes) {
  Process ok = spawn("nat id id --both --module vec_z2_regular");
  EXPECT_EQ(ok.code, 0);
  json r = json::parse(ok.out);
  EXPECT_EQ(r["result"], json::parse(R"({"dim":1,"oracle_agrees":true})"));
  EXPECT_EQ(r["status"], "ok");
  EXPECT_EQ(spawn("frobnicate").code, 1);
  EXPECT_EQ(spawn("nat id id").code, 1);  // ambiguous bare name
  EXPECT_EQ(spawn("serre no_such_module").code, 1);
  EXPECT_EQ(spawn("--data " + data_file("fib_regular.json") + " validate").code, 1);
  EXPECT_EQ(spawn("character vec_z2_regular id").out, spawn("character vec_z2_regular id").out);
}
