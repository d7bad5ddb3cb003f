#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "kit.hpp"
#include "lg/serialize.hpp"

using namespace lgt;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run lg_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = lg::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string corpus(const char* f) { return corpus_dir() + "/" + f; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lg_unit_" + name)).string();
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(lg_run({"check", corpus("prop1.lg")}).code == 0);
  CHECK(lg_run({"check", corpus("cuts.lg")}).code == 0);
  CHECK(lg_run({"check", corpus("defs.lg")}).code == 0);
  CHECK(lg_run({"check", corpus("bad_level.lg")}).code == 3);
  CHECK(lg_run({"check", corpus("q_nominal.lg")}).code == 3);
  CHECK(lg_run({"check", corpus("missing.lg")}).code == 2);
  CHECK(lg_run({"check", corpus("prop1.lg"), "--theorem", "nab_swap"}).code == 0);
  CHECK(lg_run({"frobnicate"}).code == 2);
}

TEST_CASE("check reports a broken proof with exit 1") {
  std::string path = temp_path("broken.lg");
  std::ofstream(path) << "nominal type nm.\nconst a, b : nm.\nconst p : nm -> o.\n"
                         "theorem t : p a |- p a.\nproof (id 0).\n";
  REQUIRE(lg_run({"check", path}).code == 0);
  // Write the derivation, break it, and check the file.
  std::string dj = temp_path("broken.json");
  REQUIRE(lg_run({"normalize", path, "--theorem", "t", "--out", dj}).code == 0);
  std::stringstream buf;
  buf << std::ifstream(dj).rdbuf();
  std::string text = buf.str();
  auto at = text.find("p a");
  REQUIRE(at != std::string::npos);
  text.replace(at, 3, "p b");
  std::ofstream(dj) << text;
  Run r = lg_run({"check", path, "--derivation", dj});
  CHECK(r.code == 1);
  std::filesystem::remove(path);
  std::filesystem::remove(dj);
}

TEST_CASE("normalize on a cut-free theorem writes it back unchanged") {
  std::string a = temp_path("n1.json"), b = temp_path("n2.json");
  REQUIRE(lg_run({"normalize", corpus("prop1.lg"), "--theorem", "nab_swap", "--out", a}).code == 0);
  REQUIRE(lg_run({"normalize", corpus("prop1.lg"), "--derivation", a, "--out", b}).code == 0);
  std::stringstream x, y;
  x << std::ifstream(a).rdbuf();
  y << std::ifstream(b).rdbuf();
  CHECK(x.str() == y.str());
  CHECK(x.str() == deriv_to_json(corpus_proof("prop1.lg", "nab_swap").d));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("normalize removes cuts and can write a trace") {
  std::string a = temp_path("c.json"), t = temp_path("c.trace");
  REQUIRE(lg_run({"normalize", corpus("cuts.lg"), "--theorem", "and_cut", "--out", a, "--trace", t}).code == 0);
  REQUIRE(lg_run({"check", corpus("cuts.lg"), "--derivation", a}).code == 0);
  std::stringstream x;
  x << std::ifstream(t).rdbuf();
  CHECK(x.str().find("essential(andR/andL)") != std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(t);
}

TEST_CASE("translate both ways") {
  std::string f = temp_path("t.folnb.json"), l = temp_path("t.lg.json");
  REQUIRE(lg_run({"translate", corpus("prop1.lg"), "--theorem", "nab_swap", "--to", "folnb", "--out", f}).code == 0);
  REQUIRE(lg_run({"translate", corpus("prop1.lg"), "--derivation", f, "--to", "lg", "--out", l}).code == 0);
  CHECK(lg_run({"check", corpus("prop1.lg"), "--derivation", l}).code == 0);
  // Outside the core fragment.
  CHECK(lg_run({"translate", corpus("defs.lg"), "--theorem", "even2", "--to", "folnb"}).code == 1);
  std::filesystem::remove(f);
  std::filesystem::remove(l);
}

TEST_CASE("unify") {
  Run r = lg_run({"unify", "\\c:nm. H c", "\\c:nm. f c c", "--nominal", "a"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f") != std::string::npos);
  CHECK(lg_run({"unify", "g X", "g (g X)", "--nominal", "a"}).code == 1);
  CHECK(lg_run({"unify", "a", "b", "--nominal", "a", "--nominal", "b"}).code == 1);
  CHECK(lg_run({"unify", "F (g k)", "g k", "--nominal", "a"}).code == 2);
  CHECK(lg_run({"unify", "g (", "g k", "--nominal", "a"}).code == 2);
  Run j = lg_run({"unify", "g X", "g k", "--nominal", "a", "--json"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"status\"") != std::string::npos);
}

TEST_CASE("level") {
  Run r = lg_run({"level", corpus("defs.lg")});
  CHECK(r.code == 0);
  CHECK(r.out.find("np") != std::string::npos);
  CHECK(lg_run({"level", corpus("bad_level.lg")}).code == 3);
  Run j = lg_run({"level", corpus("defs.lg"), "--json"});
  CHECK(j.out.find("\"level\"") != std::string::npos);
}
