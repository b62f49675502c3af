#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "residua/residua.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = RESIDUA_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() /
                 ("residua_cli_out_" + std::to_string(counter++) + ".txt");
  std::string cmd = kCli + " " + args + " > " + out.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  fs::remove(out);
  return r;
}

const fs::path& corpus_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "residua_cli_corpus";
    fs::remove_all(d);
    auto r = run("seed-corpus " + d.string());
    REQUIRE(r.exit_code == 0);
    return d;
  }();
  return dir;
}

std::string corpus(const std::string& name) {
  return (corpus_dir() / name).string();
}

}  // namespace

TEST_CASE("check: prelinearity failure exits 1 with a labeled witness") {
  auto r = run("check " + corpus("five_div_not_bl.json") + " --property prel");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("(a,b)") != std::string::npos);
  CHECK(r.output.find("c != 1") != std::string::npos);
}

TEST_CASE("check: the same file passes the divisibility gate") {
  auto r = run("check " + corpus("five_div_not_bl.json") + " --property div");
  CHECK(r.exit_code == 0);
}

TEST_CASE("check: diamond meet candidate reports ResiduumMissing") {
  auto r = run("check " + corpus("diamond_meet.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("ResiduumMissing") != std::string::npos);
}

TEST_CASE("check: the M2(Z2) left ideal candidate reports ResiduumMissing") {
  auto r = run("check " + corpus("m2z2_left.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("ResiduumMissing") != std::string::npos);
}

TEST_CASE("check: unreadable and malformed inputs exit 2") {
  CHECK(run("check /nonexistent/file.json").exit_code == 2);
  fs::path bad = fs::temp_directory_path() / "residua_bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run("check " + bad.string()).exit_code == 2);
  fs::remove(bad);
}

TEST_CASE("iso: Id(Z4) and Id(Z9) are isomorphic, exit 0") {
  auto r = run("iso " + corpus("id_z4.json") + " " + corpus("id_z9.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("isomorphic") != std::string::npos);
}

TEST_CASE("iso: different classes exit 1") {
  auto r = run("iso " + corpus("id_z4.json") + " " +
               corpus("five_div_not_bl.json"));
  CHECK(r.exit_code == 1);
}

TEST_CASE("is-multiplication verdicts and exit codes") {
  CHECK(run("is-multiplication " + corpus("zn8.json")).exit_code == 0);
  auto r = run("is-multiplication " + corpus("z2xy.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("(x,y)") != std::string::npos);
}

TEST_CASE("ring-ideals lists labeled ideals") {
  auto r = run("ring-ideals " + corpus("zn8.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(2)") != std::string::npos);
  CHECK(r.output.find("(4)") != std::string::npos);
  CHECK(r.output.find("principal ring: yes") != std::string::npos);

  auto left = run("ring-ideals " + corpus("m2z2.json") + " --sidedness left");
  CHECK(left.exit_code == 0);
  CHECK(left.output.find("5 left ideal(s)") != std::string::npos);
}

TEST_CASE("identities on a ring spec") {
  auto ok = run("identities " + corpus("zn12.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("c1: pass") != std::string::npos);
  CHECK(ok.output.find("c7: pass") != std::string::npos);

  auto bad = run("identities " + corpus("z2xy.json"));
  CHECK(bad.exit_code == 1);
}

TEST_CASE("ordinal-product from files and from an expression") {
  fs::path out = fs::temp_directory_path() / "residua_op_out.json";
  auto r = run("ordinal-product " + corpus("id_z4.json") + " " +
               corpus("id_z4.json") + " --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("size 5") != std::string::npos);
  auto loaded = residua::algebra_from_json(residua::load_json_file(out.string()));
  CHECK(loaded.size() == 5);
  fs::remove(out);

  auto e = run("ordinal-product --expr " + corpus("expr_div5.json"));
  CHECK(e.exit_code == 0);
  CHECK(e.output.find("bl: no") != std::string::npos);

  auto bad = run("ordinal-product " + corpus("five_div_not_bl.json") + " " +
                 corpus("id_z4.json"));
  CHECK(bad.exit_code == 1);
}

TEST_CASE("enumerate agrees across methods and prints counts") {
  auto r = run("enumerate --n 5 --filter divisible --method both");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("10 class(es)") != std::string::npos);
}

TEST_CASE("skeletons") {
  auto r = run("skeletons --n 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("5 bounded lattice(s)") != std::string::npos);
}

TEST_CASE("tables output matches the golden file") {
  auto r = run("tables --max 6");
  CHECK(r.exit_code == 0);
  std::ifstream golden(fs::path(RESIDUA_GOLDEN_DIR) / "tables.txt");
  REQUIRE(golden.good());
  std::stringstream ss;
  ss << golden.rdbuf();
  CHECK(r.output == ss.str());
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> cases = {
      "tables --max 5",
      "enumerate --n 4 --filter divisible --method both --format json",
      "check " + corpus("five_div_not_bl.json") + " --format json",
      "ring-ideals " + corpus("zn12.json") + " --format json"};
  for (const std::string& args : cases) {
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("json output parses and round-trips the documented schema") {
  auto r = run("enumerate --n 4 --filter bl --method both --format json");
  REQUIRE(r.exit_code == 0);
  auto j = residua::json::parse(r.output);
  CHECK(j["count"] == 5);
  for (const auto& rep : j["representatives"]) {
    auto alg = residua::algebra_from_json(rep["lattice"]);
    CHECK(alg.size() == 4);
  }
}
