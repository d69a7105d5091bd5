// Copyright 2026 The skewroot authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skewroot/cli.hpp"
#include "skewroot/errors.hpp"
#include "skewroot/families.hpp"
#include "skewroot/galgebra.hpp"

using namespace skw;
using namespace skw::cli;

namespace {

JobConfig parse_str(const std::string& text) {
  std::istringstream is(text);
  return parse_config(is);
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream f(path);
  f << text;
  return path;
}

int run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv(args);
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

const char* kExplicitValid =
    "[group]\n"
    "orders = 2 2\n"
    "[bicharacter]\n"
    "n = 2\n"
    "row = 1\n"
    "[rootsystem]\n"
    "kind = lie\n"
    "root = 0 1\n"
    "root = 1 0\n"
    "root = 1 1\n";

const char* kExplicitInvalid =
    "[group]\n"
    "orders = 2 2\n"
    "[bicharacter]\n"
    "n = 2\n"
    "row = 1\n"
    "[rootsystem]\n"
    "kind = lie\n"
    "root = 0 1\n"
    "root = 1 0\n";

}  // namespace

TEST_CASE("config parser: values, comments, strictness") {
  const JobConfig c = parse_str(
      "# job fixture\n"
      "[group]\n"
      "orders = 2 4\n"
      "[bicharacter]\n"
      "n = 4\n"
      "row = 2   # beta(e2, e1)\n"
      "[rootsystem]\n"
      "kind = jordan\n"
      "root = 0 1\n"
      "[run]\n"
      "analyze = trace homsemi\n"
      "out = /tmp/x\n"
      "budget = 4096\n"
      "jobs = 2\n");
  CHECK(c.orders == std::vector<long>{2, 4});
  CHECK(c.n == 4);
  REQUIRE(c.lower.size() == 1);
  CHECK(c.lower[0] == std::vector<long>{2});
  CHECK(c.kind == Kind::Jordan);
  REQUIRE(c.roots.size() == 1);
  CHECK(c.have_roots);
  CHECK_FALSE(c.family.has_value());
  CHECK(c.analyses == std::vector<std::string>{"trace", "homsemi"});
  CHECK(c.out == "/tmp/x");
  CHECK(c.budget == 4096);
  CHECK(c.jobs == 2);

  CHECK(parse_str("[run]\nfamily = clifford:3:lie\n").family == "clifford:3:lie");
  const JobConfig e = parse_str("[group]\norders = 2 2\n[run]\nenumerate = lie\n");
  CHECK(e.enumerate);
  CHECK(e.kind == Kind::Lie);

  CHECK_THROWS_AS(parse_str("orders = 2\n"), ParseError);               // key before section
  CHECK_THROWS_AS(parse_str("[nope]\n"), ParseError);                   // unknown section
  CHECK_THROWS_AS(parse_str("[group]\nfoo = 1\n"), ParseError);         // unknown key
  CHECK_THROWS_AS(parse_str("[group]\norders = 2 x\n"), ParseError);    // malformed int
  CHECK_THROWS_AS(parse_str("[run]\nanalyze = killing bogus\n"), ParseError);
  CHECK_THROWS_AS(parse_str("[run]\nbudget = 10\n"), ParseError);       // no source
  CHECK_THROWS_AS(parse_str(std::string(kExplicitValid) + "[run]\nfamily = clifford:3:lie\n"),
                  ParseError);                                          // two sources
  CHECK_THROWS_AS(
      parse_str("[rootsystem]\nkind = jordan\nroot = 0\n[run]\nenumerate = lie\n"),
      ParseError);                                                      // kind conflict
}

TEST_CASE("validate command: families and explicit witnesses") {
  JobConfig fam;
  fam.family = "nonsingular:2:lie";
  const CmdResult ok = cmd_validate(fam);
  CHECK(ok.exit_code == 0);
  CHECK(ok.report.find("result: VALID") != std::string::npos);
  CHECK(ok.report.find("|R| = 3") != std::string::npos);

  const CmdResult good = cmd_validate(parse_str(kExplicitValid));
  CHECK(good.exit_code == 0);

  const CmdResult bad = cmd_validate(parse_str(kExplicitInvalid));
  CHECK(bad.exit_code == 1);
  CHECK(bad.report.find("result: INVALID") != std::string::npos);
  CHECK(bad.report.find("SRSL2") != std::string::npos);
  CHECK(bad.report.find("witness") != std::string::npos);

  JobConfig broken;
  broken.family = "sl:3:lie";
  CHECK_THROWS_AS(cmd_validate(broken), ParseError);
}

TEST_CASE("analyze command: full panel on family fixtures") {
  JobConfig cfg;
  cfg.family = "quad:f1:2:lie";
  const CmdResult r = cmd_analyze(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("|R| = 10, dim = 10") != std::string::npos);
  CHECK(r.report.find("reduced = yes") != std::string::npos);
  CHECK(r.report.find("components = 1") != std::string::npos);
  CHECK(r.report.find("killing det = ") != std::string::npos);
  CHECK(r.report.find("killing det = 1:[0/1]") == std::string::npos);
  CHECK(r.report.find("centroid dim = 1") != std::string::npos);
  CHECK(r.report.find("graded simple = yes") != std::string::npos);
  CHECK(r.report.find("homogeneous semisimple = yes") != std::string::npos);
  CHECK(r.report.find("identification: sp(4), expected dim 10, actual dim 10, "
                      "dim match = yes, dictionary = verified") != std::string::npos);

  // the n = 4 orthogonal exception: valid, semisimple, but two summands
  JobConfig c4;
  c4.family = "clifford:4:lie";
  const CmdResult r4 = cmd_analyze(c4);
  CHECK(r4.exit_code == 0);
  CHECK(r4.report.find("centroid dim = 2") != std::string::npos);
  CHECK(r4.report.find("not simple") != std::string::npos);
  CHECK(r4.report.find("except n = 4") != std::string::npos);
  CHECK(r4.report.find("graded simple = yes") != std::string::npos);

  // Jordan panel: diagonal dim-pairing entries, all +-4 on the order-2 group
  JobConfig cj;
  cj.family = "nonsingular:2:jordan";
  const CmdResult rj = cmd_analyze(cj);
  CHECK(rj.exit_code == 0);
  CHECK(rj.report.find("trace det = ") != std::string::npos);
  CHECK(rj.report.find("trace pairing =") != std::string::npos);
  CHECK(rj.report.find("4/1]") != std::string::npos);
  CHECK(rj.report.find("identification: M(2)+") != std::string::npos);

  // non-reduced family gets the reduction line in the default panel
  JobConfig ch;
  ch.family = "quad:h:2:lie";
  const CmdResult rh = cmd_analyze(ch);
  CHECK(rh.report.find("reduced = no") != std::string::npos);
  CHECK(rh.report.find("|R| 15 -> 15, root map bijective = yes") != std::string::npos);
  CHECK(rh.report.find("identification: sl(4)") != std::string::npos);
}

TEST_CASE("analyze command: analysis selection and kind gates") {
  JobConfig cfg;
  cfg.family = "nonsingular:2:lie";
  cfg.analyses = {"killing"};
  const CmdResult r = cmd_analyze(cfg);
  CHECK(r.report.find("killing det = ") != std::string::npos);
  CHECK(r.report.find("centroid") == std::string::npos);
  CHECK(r.report.find("identification") == std::string::npos);

  cfg.analyses = {"trace"};
  CHECK_THROWS_AS(cmd_analyze(cfg), ParseError);
  cfg.family = "nonsingular:2:jordan";
  cfg.analyses = {"centroid"};
  CHECK_THROWS_AS(cmd_analyze(cfg), ParseError);

  CHECK_THROWS_AS(cmd_analyze(parse_str(kExplicitInvalid)), NotValidated);

  JobConfig expl = parse_str(kExplicitValid);
  expl.analyses = {"identify"};
  CHECK_THROWS_AS(cmd_analyze(expl), ParseError);  // no family target
}

TEST_CASE("analyze and export are deterministic") {
  JobConfig cfg;
  cfg.family = "quad:f0:2:jordan";
  const CmdResult a = cmd_analyze(cfg);
  const CmdResult b = cmd_analyze(cfg);
  CHECK(a.report == b.report);
  CHECK(a.exit_code == 0);

  const CmdResult x = cmd_export(cfg);
  const CmdResult y = cmd_export(cfg);
  CHECK(x.report == y.report);

  // export equals the library route byte for byte
  const FamilySystem fs = family_by_name("quad:f0:2:jordan");
  const GradedAlgebra alg = GradedAlgebra::build(fs.system, fs.xi);
  std::ostringstream direct;
  export_structure(alg, direct);
  CHECK(x.report == direct.str());
}

TEST_CASE("enumerate command: exhaustive census with family annotations") {
  JobConfig lie = parse_str(
      "[group]\norders = 2 2\n[bicharacter]\nn = 2\nrow = 1\n[run]\nenumerate = lie\n");
  const CmdResult rl = cmd_enumerate(lie);
  CHECK(rl.exit_code == 0);
  CHECK(rl.report.find("systems = 1") != std::string::npos);
  CHECK(rl.report.find("classes = 1") != std::string::npos);
  CHECK(rl.report.find("family = nonsingular:2:lie") != std::string::npos);
  CHECK(rl.report.find("roots = { (0,1) (1,0) (1,1) }") != std::string::npos);

  JobConfig jor = parse_str(
      "[group]\norders = 2 2\n[bicharacter]\nn = 2\nrow = 1\n[run]\nenumerate = jordan\n");
  const CmdResult rj = cmd_enumerate(jor);
  CHECK(rj.exit_code == 0);
  CHECK(rj.report.find("classes = 2") != std::string::npos);
  CHECK(rj.report.find("members = 3") != std::string::npos);
  CHECK(rj.report.find("family = clifford:2:jordan") != std::string::npos);
  CHECK(rj.report.find("family = nonsingular:2:jordan") != std::string::npos);

  const CmdResult again = cmd_enumerate(jor);
  CHECK(again.report == rj.report);

  jor.budget = 0;
  CHECK_THROWS_AS(cmd_enumerate(jor), BudgetExceeded);
}

TEST_CASE("family command: instance summaries") {
  JobConfig cfg;
  cfg.family = "quad:f1:1";
  const CmdResult r = cmd_family(cfg);
  CHECK(r.exit_code == 0);
  CHECK(r.report.find("lie: group = Z 2 x Z 2") != std::string::npos);
  CHECK(r.report.find("jordan: not defined") != std::string::npos);

  cfg.family = "quad:h:1";
  CHECK(cmd_family(cfg).report.find("reduction: projection onto Z 2 x Z 2") !=
        std::string::npos);
  cfg.family = "clifford:3";
  CHECK(cmd_family(cfg).report.find("embedding: lie system group into Z 2 x Z 2 x Z 2") !=
        std::string::npos);
  cfg.family = "nonsingular:2:lie";
  const CmdResult side = cmd_family(cfg);
  CHECK(side.report.find("lie: group = ") != std::string::npos);
  CHECK(side.report.find("jordan") == std::string::npos);

  cfg.family.reset();
  CHECK_THROWS_AS(cmd_family(cfg), ParseError);
}

TEST_CASE("front end exit codes") {
  CHECK(run({"skewroot", "validate", "--family", "nonsingular:2:lie"}) == 0);
  CHECK(run({"skewroot", "validate", "--family", "garbage"}) == 2);
  CHECK(run({"skewroot", "analyze", "--family", "quad:f0:1:lie"}) == 2);  // side not defined
  CHECK(run({"skewroot", "family", "--family", "quad:f0:2"}) == 0);
  CHECK(run({"skewroot", "analyze", "--no-such-flag"}) == 2);
  CHECK(run({"skewroot", "validate"}) == 2);  // no source at all
  CHECK(run({"skewroot", "--help"}) == 0);

  const std::string bad = temp_file("skw_cli_invalid.cfg", kExplicitInvalid);
  CHECK(run({"skewroot", "validate", "--config", bad.c_str()}) == 1);
  CHECK(run({"skewroot", "analyze", "--config", bad.c_str()}) == 1);

  const std::string enum_cfg = temp_file(
      "skw_cli_enum.cfg",
      "[group]\norders = 2 2\n[bicharacter]\nn = 2\nrow = 1\n[run]\nenumerate = jordan\n");
  const std::string census = (std::filesystem::temp_directory_path() / "skw_census.txt").string();
  CHECK(run({"skewroot", "enumerate", "--config", enum_cfg.c_str(), "--out", census.c_str()}) ==
        0);
  std::ifstream cf(census);
  std::stringstream buf;
  buf << cf.rdbuf();
  CHECK(buf.str().find("classes = 2") != std::string::npos);
  CHECK(run({"skewroot", "enumerate", "--config", enum_cfg.c_str(), "--budget", "0"}) == 3);

  const std::string out = (std::filesystem::temp_directory_path() / "skw_export.txt").string();
  CHECK(run({"skewroot", "export", "--family", "nonsingular:2:lie", "--out", out.c_str()}) == 0);
  std::ifstream xf(out);
  std::stringstream xbuf;
  xbuf << xf.rdbuf();
  const FamilySystem fs = family_by_name("nonsingular:2:lie");
  const GradedAlgebra alg = GradedAlgebra::build(fs.system, fs.xi);
  std::ostringstream direct;
  export_structure(alg, direct);
  CHECK(xbuf.str() == direct.str());

  CHECK(run({"skewroot", "validate", "--config", "/no/such/file.cfg"}) == 2);
}
