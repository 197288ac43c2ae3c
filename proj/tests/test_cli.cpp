#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "nacech/cli.hpp"

using namespace nacech;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run_binary(const std::string& args) {
  std::string cmd = std::string("cd ") + FIXTURES + " && " + NACECH_CLI + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[512];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Result run_lib(RunConfig cfg) {
  std::ostringstream out;
  int code = run(cfg, out);
  return {code, out.str()};
}

bool has(const std::string& report, const std::string& line) {
  return report.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("classify report") {
  auto r = run_binary("classify --complex circle --cm star_to_s3 --strategy brute");
  CHECK(r.code == 0);
  CHECK(has(r.out, "classes: 3"));
  CHECK(r.out.rfind("command: classify\n", 0) == 0);
  CHECK(has(r.out, "exit: 0"));
}

TEST_CASE("abelian strategy through the library") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.complex = "boundary3";
  cfg.cm = "z3_to_star";
  cfg.strategy = Strategy::Abelian;
  auto r = run_lib(cfg);
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "classes: 3"));
  cfg.cm = "z2_trivial";
  r = run_lib(cfg);
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("REASON: ") != std::string::npos);
}

TEST_CASE("reports do not depend on the worker count") {
  RunConfig cfg;
  cfg.command = "classify";
  cfg.complex = "boundary3";
  cfg.cm = "z4_onto_z2";
  auto one = run_lib(cfg);
  cfg.workers = 4;
  auto four = run_lib(cfg);
  CHECK(one.out == four.out);
  CHECK(one.code == 0);
}

TEST_CASE("file inputs") {
  CHECK(run_binary("validate group --group z3.group").code == 0);
  auto bad = run_binary("validate group --group not_assoc.group");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("REASON: NotAssociative") != std::string::npos);
  CHECK(run_binary("validate cm --cm inversion.cm").code == 0);
  CHECK(run_binary("validate complex --complex square.complex").code == 0);
  CHECK(run_binary("classify --complex square.complex --cm inversion.cm").code == 0);
}

TEST_CASE("wrong-length beta is a parse error with its line") {
  auto r = run_binary("validate cm --cm bad_beta.cm");
  CHECK(r.code == 2);
  CHECK(r.out.find("bad_beta.cm:4:") != std::string::npos);
}

TEST_CASE("cocycle files") {
  auto same = run_binary("cohomologous --cocycle holonomy.cocycle --cocycle2 holonomy.cocycle");
  CHECK(same.code == 0);
  CHECK(has(same.out, "witness_gamma: 0 0 0"));
  CHECK(run_binary("cohomologous --cocycle holonomy.cocycle --cocycle2 moved.cocycle").code == 0);
  auto no = run_binary("cohomologous --cocycle holonomy.cocycle --cocycle2 empty.cocycle");
  CHECK(no.code == 1);
  CHECK(no.out.find("REASON: ") != std::string::npos);
  auto broken = run_binary("validate cocycle --cocycle broken.cocycle");
  CHECK(broken.code == 1);
  CHECK(broken.out.find("Cocyc1Failure") != std::string::npos);
  CHECK(run_binary("bundle-check --cocycle holonomy.cocycle").code == 0);
  CHECK(run_binary("band --cocycle holonomy.cocycle").code == 0);
}

TEST_CASE("lifting verdicts") {
  auto r = run_binary("lift --complex rp26 --cm z4_onto_z2 --cocycle nontrivial");
  CHECK(r.code == 1);
  CHECK(r.out.find("obstruction class nonvanishing") != std::string::npos);
  CHECK(has(r.out, "lift: no"));
  auto t = run_binary("lift --complex rp26 --cm z4_onto_z2 --cocycle trivial");
  CHECK(t.code == 0);
  CHECK(has(t.out, "lift: yes"));
}

TEST_CASE("budget exit code") {
  auto r = run_binary("classify --complex boundary3 --cm z4_over_z2 --budget 10");
  CHECK(r.code == 3);
  CHECK(r.out.find("SearchSpaceTooLarge") != std::string::npos);
}

TEST_CASE("other commands") {
  CHECK(has(run_binary("aut2group --cm conj_s3").out, "endofunctors: 6"));
  CHECK(has(run_binary("oracle-h --complex rp26 --coeff 2 --degree 2").out, "order: 2"));
  auto g = run_binary("gauge --complex point --cm z2_trivial");
  CHECK(g.code == 0);
  CHECK(has(g.out, "Gstar_order: 2"));
  CHECK(run_binary("quotient --complex circle --cm z4_over_z2").code == 0);
  CHECK(run_binary("stabilizer --cocycle holonomy.cocycle").code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_binary("").code == 2);
  CHECK(run_binary("classify --strategy sideways").code == 2);
  CHECK(run_binary("validate").code == 2);
}

TEST_CASE("classify writes representatives that load back") {
  const std::string dir = std::string(BUILD_DIR) + "/cli_reps";
  std::filesystem::remove_all(dir);
  auto r = run_binary("classify --complex circle --cm star_to_s3 --out " + dir);
  CHECK(r.code == 0);
  CHECK(has(r.out, "written: 3"));
  for (int i = 0; i < 3; ++i) {
    const std::string file = dir + "/class" + std::to_string(i) + ".cocycle";
    REQUIRE(std::filesystem::exists(file));
    CHECK(run_binary("validate cocycle --cocycle " + file).code == 0);
  }
  auto a = run_binary("cohomologous --cocycle " + dir + "/class0.cocycle --cocycle2 " + dir + "/class1.cocycle");
  CHECK(a.code == 1);
}
