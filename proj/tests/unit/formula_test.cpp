#include "doctest.h"
#include "kit.hpp"

using namespace lgt;

namespace {
bool free_name(Symbol) { return false; }
}  // namespace

TEST_CASE("levels of formulas") {
  Module m = load_module_text("nominal type nm.\ntype i.\nconst p : o.\nlevel p 0.\n");
  Signature sig;
  CHECK(m.th.level(f_bot()) == 0);
  CHECK(m.th.level(f_top()) == 0);
  CHECK(m.th.level(parse_formula(m, sig, "p => false")) == 1);
  CHECK(m.th.level(parse_formula(m, sig, "nabla x:nm, p")) == m.th.level(parse_formula(m, sig, "p")));
  auto lv = [](Symbol) { return 2; };
  CHECK(formula_level(parse_formula(m, sig, "p => p"), lv) == 3);
  CHECK(formula_level(parse_formula(m, sig, "p /\\ (false => p)"), lv) == 2);
}

TEST_CASE("p := p => false has no stratifying level") {
  for (int k = 0; k < 8; ++k) {
    Module m = parse_module("type i.\nconst p : o.\ndefine p := p => false.\n");
    m.th.declare_level(intern("p"), k);
    auto issues = m.th.stratify();
    REQUIRE(!issues.empty());
    CHECK(issues[0].message.find("level") != std::string::npos);
  }
  Module m = parse_module("type i.\nconst p : o.\ndefine p := p => false.\n");
  std::string why;
  CHECK(!m.th.infer_levels(&why));
  CHECK(!why.empty());
}

TEST_CASE("a nominal constant in a clause body is rejected") {
  Module m = parse_module("nominal type nm.\nconst a : nm.\nconst q : nm -> o.\ndefine q X := X = a.\n");
  REQUIRE(m.th.infer_levels());
  auto issues = m.th.stratify();
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].message.find("nominal") != std::string::npos);
}

TEST_CASE("list (A :: L) := list L is stratified") {
  Module m = load_module_text("type i.\nconst nil : i.\nconst cons : i -> i -> i.\nconst list : i -> o.\n"
                              "define list nil := true.\ndefine list (cons A L) := list L.\n");
  CHECK(m.th.stratify().empty());
  CHECK(m.th.clauses().size() == 2);
  CHECK(m.th.pred_level(intern("list")) == 0);
}

TEST_CASE("raising clauses") {
  Module m = load_module_text("nominal type nm.\ntype i.\nconst a, b : nm.\nconst nil : i.\n"
                              "const cons : i -> i -> i.\nconst list : i -> o.\n"
                              "define list (cons A L) := list L.\n");
  const Clause& cl = m.th.clause(0);
  NomId a = 0;
  REQUIRE(find_nominal("a", a));
  std::size_t counter = 0;
  RaisedClause r = raise_clause(cl, {a}, free_name, "H", &counter);
  REQUIRE(r.hs.size() == 2);
  Ty nm = m.types.at("nm"), i = m.types.at("i");
  for (const auto& h : r.hs) CHECK(ty_equal(h.ty, arrow(nm, i)));
  Signature sig(r.hs);
  std::string h0 = name_of(r.hs[0].name), h1 = name_of(r.hs[1].name);
  CHECK(term_equal(r.head, parse_formula(m, sig, "list (cons (" + h0 + " a) (" + h1 + " a))")));
  CHECK(term_equal(r.body, parse_formula(m, sig, "list (" + h1 + " a)")));
  CHECK(ty_equal(typecheck(r.head, m.th.env(&sig)), prop_type()));

  // Raising over nothing only renames.
  RaisedClause r0 = raise_clause(cl, {}, free_name, "H", &counter);
  for (const auto& h : r0.hs) CHECK(ty_equal(h.ty, i));
}

TEST_CASE("raising a higher-order clause head") {
  Module m = load_module_text("nominal type nm.\ntype tm.\nconst a : nm.\nconst abs : (tm -> tm) -> tm.\n"
                              "const eval : tm -> tm -> o.\ndefine eval (abs M) (abs M) := true.\n");
  NomId a = 0;
  REQUIRE(find_nominal("a", a));
  std::size_t counter = 0;
  RaisedClause r = raise_clause(m.th.clause(0), {a}, free_name, "H", &counter);
  REQUIRE(r.hs.size() == 1);
  Ty tm = m.types.at("tm");
  CHECK(ty_equal(r.hs[0].ty, arrows({m.types.at("nm"), tm}, tm)));
  Signature sig(r.hs);
  const std::string h = name_of(r.hs[0].name);
  CHECK(term_equal(r.head, parse_formula(m, sig, "eval (abs (" + h + " a)) (abs (" + h + " a))")));
}
