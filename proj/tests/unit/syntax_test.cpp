#include "doctest.h"
#include "kit.hpp"
#include "lg/serialize.hpp"

using namespace lgt;

TEST_CASE("a one-clause definition") {
  Module m = parse_module("type i.\nconst nil : i.\nconst list : i -> o.\ndefine list nil := true.\n");
  REQUIRE(m.th.clauses().size() == 1);
  const Clause& c = m.th.clause(0);
  CHECK(name_of(c.pred) == "list");
  CHECK(c.vars.empty());
  CHECK(view(c.body).kind == FKind::Top);
}

TEST_CASE("an empty file is an empty theory") {
  Module m = parse_module("");
  CHECK(m.th.consts().empty());
  CHECK(m.th.clauses().empty());
  CHECK(m.theorems.empty());
  Module c = parse_module("% only a comment\n");
  CHECK(c.theorems.empty());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_module("type i.\nconst p : o.\ntheorem t : (p /\\ p.\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col > 1);
  }
  try {
    parse_module("type i.\nconst p : o.\ntheorem t : p.\nproof (id 0.\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line >= 4);
  }
  try {
    parse_module("type i.\n  const $p : o.\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 9);
  }
}

TEST_CASE("script errors carry positions") {
  Module m = parse_module("type i.\nconst p : o.\ntheorem t : p |- p.\nproof (frob 0).\n");
  const TheoremDecl* t = m.theorem("t");
  REQUIRE(t);
  try {
    elaborate_script(m, t->seq, *t->proof);
    FAIL("no error");
  } catch (const ScriptError& e) {
    CHECK(e.line == 4);
    CHECK(std::string(e.what()).find("frob") != std::string::npos);
  }
}

TEST_CASE("corpus sequents print and parse back") {
  for (const auto& f : corpus_files()) {
    const Module& m = corpus_module(f);
    for (const auto& t : m.theorems) {
      std::string text = show_sequent(t.seq);
      INFO(f, ":", t.name, " ", text);
      CHECK(seq_equal(parse_sequent(m, text), t.seq));
    }
  }
}

TEST_CASE("printing of binders, application and connectives") {
  Module m = load_module_text("nominal type nm.\ntype i.\nconst a : nm.\nconst c : i.\nconst f : i -> i.\n"
                              "const p : nm -> o.\nconst r : i -> o.\n");
  auto round = [&](const char* src) { return show_formula(parse_formula(m, {}, src)); };
  CHECK(round("forall y:i, r (f y)") == "forall x1:i, r (f x1)");
  CHECK(round("p a => r c => false") == "p a => r c => false");
  CHECK(round("(p a => r c) => false") == "(p a => r c) => false");
  CHECK(round("p a /\\ r c \\/ true") == "p a /\\ r c \\/ true");
  CHECK(round("nabla y:nm, p y") == "nabla x1:nm, p x1");
}

TEST_CASE("invertible auto") {
  Module m = load_module_text("type i.\nconst p, q : o.\n"
                              "theorem t : p /\\ q |- q /\\ p.\nproof (auto).\n"
                              "theorem u : p \\/ q |- q.\nproof (auto).\n");
  Deriv d = theorem_deriv(m, "t");
  CHECK(!check(m.th, d));
  CHECK_THROWS_AS(theorem_deriv(m, "u"), ScriptError);
}

TEST_CASE("derivation JSON") {
  const Proof& p = corpus_proof("prop1.lg", "nab_swap");
  std::string j = deriv_to_json(p.d);
  CHECK(j.find("\"format\": 1") != std::string::npos);
  CHECK(deriv_to_json(deriv_from_json(*p.m, j)) == j);
  std::string v2 = j;
  v2.replace(v2.find("\"format\": 1"), 11, "\"format\": 2");
  CHECK_THROWS_AS(deriv_from_json(*p.m, v2), FormatError);
  CHECK_THROWS(deriv_from_json(*p.m, j.substr(0, j.size() / 2)));
}
