#include "doctest.h"
#include "kit.hpp"

using namespace lgt;

namespace {

const Module& kernel_module() {
  static const Module m = load_module_text(R"(nominal type nm.
type i.
const a, b : nm.
const k : i.
const p : nm -> o.
const q : nm -> nm -> o.
const r : i -> o.
const s0, t0 : o.

theorem rename : p a |- p b.
proof (id 0).

theorem swap2 : (nabla x, nabla y, q x y) => nabla y, nabla x, q x y.
proof (impR (nablaR (nablaR (nablaL 0 (nablaL 0 (id 0)))))).

theorem conj : s0, t0 |- s0 /\ t0.
proof (andR (id 0) (id 1)).

theorem all_i : {X:i} r X |- forall y:i, r X.
proof (allR (id 0)).
)");
  return m;
}

NomId nom(const char* name) {
  NomId c = 0;
  REQUIRE(find_nominal(name, c));
  return c;
}

Sequent seq(const std::string& src) { return parse_sequent(kernel_module(), src); }

const Theory& th() { return kernel_module().th; }

}  // namespace

TEST_CASE("id up to permutations: p a |- p b") {
  Rule r = Rule::make(RuleTag::IdPi);
  r.idx = 0;
  r.pi2 = Perm::swap(nom("a"), nom("b"));
  Deriv d = mk_node(seq("p a |- p b"), r, {});
  CHECK(!check(th(), d));
  CHECK(height(d) == 0);
  // The elaborator finds a permutation of its own.
  CHECK(!check(th(), theorem_deriv(kernel_module(), "rename")));
  // Without the permutation the formulas differ.
  Rule bad = Rule::make(RuleTag::IdPi);
  CHECK(check(th(), mk_node(seq("p a |- p b"), bad, {})));
  // Equivariance does not identify distinct names within one formula.
  Rule r2 = Rule::make(RuleTag::IdPi);
  CHECK(check(th(), mk_node(seq("q a b |- q a a"), r2, {})));
}

TEST_CASE("nabla exchange checks") {
  Deriv d = theorem_deriv(kernel_module(), "swap2");
  CHECK(!check(th(), d));
  CHECK(!check(corpus_proof("prop1.lg", "nab_swap").m->th, corpus_proof("prop1.lg", "nab_swap").d));
}

TEST_CASE("nablaR must pick a name outside the support") {
  Rule id = Rule::make(RuleTag::IdPi);
  Rule nr = Rule::make(RuleTag::NabR);
  nr.nom = nom("b");
  Deriv ok = mk_node(seq("q a b |- nabla x, q a x"), nr, {mk_node(seq("q a b |- q a b"), id, {})});
  CHECK(!check(th(), ok));
  nr.nom = nom("a");
  Deriv bad = mk_node(seq("q a a |- nabla x, q a x"), nr, {mk_node(seq("q a a |- q a a"), id, {})});
  auto v = check(th(), bad);
  REQUIRE(v);
  CHECK(v->path.empty());
  CHECK(v->rule == "nablaR");
}

TEST_CASE("violations report the path to the failing node") {
  Rule id0 = Rule::make(RuleTag::IdPi), id1 = Rule::make(RuleTag::IdPi);
  id1.idx = 1;
  Deriv good = mk_node(seq("s0, t0 |- s0 /\\ t0"), Rule::make(RuleTag::AndR),
                       {mk_node(seq("s0, t0 |- s0"), id0, {}), mk_node(seq("s0, t0 |- t0"), id1, {})});
  CHECK(!check(th(), good));
  Deriv bad = mk_node(seq("s0, t0 |- s0 /\\ t0"), Rule::make(RuleTag::AndR),
                      {mk_node(seq("s0, t0 |- s0"), id0, {}), mk_node(seq("s0, t0 |- t0"), id0, {})});
  auto v = check(th(), bad);
  REQUIRE(v);
  CHECK(v->path == std::vector<std::size_t>{1});
  // A premise that is not the expected sequent is caught at its parent.
  Deriv wrong = mk_node(seq("s0, t0 |- s0 /\\ t0"), Rule::make(RuleTag::AndR),
                        {mk_node(seq("s0, t0 |- s0"), id0, {}), mk_node(seq("t0 |- t0"), id0, {})});
  REQUIRE(check(th(), wrong));
  CHECK(check(th(), wrong)->path.empty());
}

TEST_CASE("allR needs a fresh variable raised over the exact support") {
  Deriv d = theorem_deriv(kernel_module(), "all_i");
  CHECK(!check(th(), d));
  Rule r = d->rule;
  r.var.name = intern("X");
  CHECK(check(th(), mk_node(d->concl, r, d->prem)));
  Sequent qs = seq("|- forall y:i, nabla x, q a x => q a x");
  Rule ar = Rule::make(RuleTag::AllR);
  ar.var = {intern("H"), raise_type(kernel_module().types.at("i"), {nom("a")})};
  ar.noms = {nom("a")};
  Expected e = expected_premises(th(), qs, ar);
  CHECK(e.ok);
  ar.noms = {};
  CHECK(!expected_premises(th(), qs, ar).ok);
}

TEST_CASE("conclusions built forward") {
  Deriv top = mk_node(seq("s0 |- true"), Rule::make(RuleTag::TopR), {});
  CHECK(!check(th(), top));
  CHECK(height(top) == 0);
  Deriv conj = theorem_deriv(kernel_module(), "conj");
  CHECK(!check(th(), conj));
  CHECK(height(conj) == 1);
  // A multicut with no cut formulas is just its right premise.
  Rule mc = Rule::make(RuleTag::Mc);
  mc.part = {0, 0};
  Deriv m0 = mk_node(conj->concl, mc, {conj});
  CHECK(!check(th(), m0));
  CHECK(!is_cut_free(m0));
  CHECK(is_cut_free(conj));
  CHECK(is_cut_free(top));
}

TEST_CASE("heights agree with an independent tree walk") {
  for (const auto& p : corpus_proofs()) {
    INFO(p.file, ":", p.name);
    CHECK(walk_height(p.d) == height(p.d));
  }
  const Proof& nf = corpus_proof("prop1.lg", "nab_forall");
  CHECK(height(nf.d) == walk_height(nf.d));
  CHECK(height(nf.d) > 0);
}

TEST_CASE("ill-formed sequents are rejected") {
  const Module& m = kernel_module();
  Signature sig({{intern("X"), m.types.at("i")}});
  Sequent s{{}, {parse_formula(m, sig, "r X")}, parse_formula(m, sig, "r X")};
  Rule id = Rule::make(RuleTag::IdPi);
  CHECK(check(th(), mk_node(s, id, {})));
  CHECK(sequent_well_formed(th(), s));
}

TEST_CASE("the checker is deterministic") {
  for (const auto& p : corpus_proofs("cuts.lg")) {
    auto a = check(p.m->th, p.d), b = check(p.m->th, p.d);
    CHECK(a.has_value() == b.has_value());
  }
}
