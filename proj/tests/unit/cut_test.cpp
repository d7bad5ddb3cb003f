#include "doctest.h"
#include "kit.hpp"
#include "lg/serialize.hpp"

using namespace lgt;

namespace {

const Module& cut_module() {
  static const Module m = load_module_text(R"(nominal type nm.
type i.
const a : nm.
const q : nm -> o.
const s0 : o.
define q X := true.

theorem top_and : true.
proof (cut "true /\ true" (andR (topR) (topR)) (andL 0 1 (id 0))).

theorem two_cuts : (nabla y, q y) /\ (nabla y, q y).
proof (cut "nabla x, q x" (nablaR (defR (topR)))
  (cut "nabla z, q z" (nablaR (nablaL 0 (id 0)))
    (andR (id 1) (id 1)))).

theorem plain : s0 |- s0 /\ true.
proof (andR (id 0) (topR)).
)");
  return m;
}

Deriv thm(const char* name) {
  Deriv d = theorem_deriv(cut_module(), name);
  REQUIRE(!check(cut_module().th, d));
  return d;
}

Deriv reduce(const Theory& th, const Deriv& d, Classification* cl = nullptr) {
  NameSupply ns(d);
  Deriv r = reduce_once(th, ns, d, cl);
  auto v = check(th, r);
  INFO((v ? v->reason : std::string()));
  REQUIRE(!v);
  REQUIRE(seq_equal(r->concl, d->concl));
  return r;
}

// The multicut under the contractions that tidy up a scripted cut.
const Deriv& first_mc(const Deriv& d) {
  const Deriv* n = &d;
  while ((*n)->rule.tag == RuleTag::CL) n = &(*n)->prem[0];
  return *n;
}

}  // namespace

TEST_CASE("a multicut with no cuts reduces to its right premise") {
  Deriv d = thm("plain");
  Rule mc = Rule::make(RuleTag::Mc);
  mc.part = {0};
  Deriv m0 = mk_node(d->concl, mc, {d});
  REQUIRE(!check(cut_module().th, m0));
  CHECK(classify(m0).kind == CutCase::Trivial);
  Deriv r = reduce(cut_module().th, m0);
  CHECK(deriv_to_json(r) == deriv_to_json(d));
  NormalizeResult n = normalize(cut_module().th, m0);
  REQUIRE(n.ok);
  CHECK(deriv_to_json(n.result) == deriv_to_json(d));
}

TEST_CASE("classification of the corpus cuts") {
  auto label = [](const char* file, const char* name) { return classify(first_mc(corpus_proof(file, name).d)).label; };
  CHECK(label("cuts.lg", "and_cut") == "right-commutative(andR)");
  CHECK(label("cuts.lg", "or_cut") == "essential(orR/orL)");
  CHECK(label("cuts.lg", "imp_cut2") == "axiom");
  CHECK(label("cuts.lg", "contract_cut") == "right-commutative(cL)");
  CHECK(label("defs.lg", "eq_cut") == "essential(eqR/eqL)");
  CHECK(label("defs.lg", "def_cut") == "essential(defR/defL)");
}

TEST_CASE("the essential and case keeps the chosen component") {
  const Theory& th = cut_module().th;
  Deriv d = thm("top_and");
  Classification cl;
  Deriv r = reduce(th, d, &cl);
  CHECK(cl.label == "essential(andR/andL)");
  REQUIRE(r->rule.tag == RuleTag::Mc);
  REQUIRE(r->rule.cuts.size() == 1);
  CHECK(term_equal(r->rule.cuts[0], f_top()));
}

TEST_CASE("every corpus cut reduces one step soundly") {
  int seen = 0;
  for (const auto& p : corpus_proofs()) {
    const Deriv& mc = first_mc(p.d);
    if (mc->rule.tag != RuleTag::Mc) continue;
    INFO(p.file, ":", p.name);
    bool inner_cut = false;
    for (const auto& q : mc->prem) inner_cut = inner_cut || !is_cut_free(q);
    if (inner_cut) continue;
    reduce(p.m->th, mc);
    ++seen;
  }
  CHECK(seen >= 10);
}

TEST_CASE("eqR against eqL uses the empty-substitution premise") {
  const Proof& p = corpus_proof("defs.lg", "eq_cut");
  Classification cl;
  reduce(p.m->th, first_mc(p.d), &cl);
  CHECK(cl.label == "essential(eqR/eqL)");
  NormalizeResult n = normalize(p.m->th, p.d);
  REQUIRE(n.ok);
  CHECK(is_cut_free(n.result));
  CHECK(seq_equal(n.result->concl, p.d->concl));
}

TEST_CASE("normalization") {
  const Theory& th = cut_module().th;
  Deriv plain = thm("plain");
  NormalizeResult a = normalize(th, plain);
  REQUIRE(a.ok);
  CHECK(a.trace.empty());
  CHECK(deriv_to_json(a.result) == deriv_to_json(plain));

  Deriv two = thm("two_cuts");
  NormalizeResult b = normalize(th, two);
  REQUIRE(b.ok);
  CHECK(is_cut_free(b.result));
  CHECK(seq_equal(b.result->concl, two->concl));
  CHECK(!check(th, b.result));
  CHECK(!b.trace.empty());
  // Same input, same trace.
  NormalizeResult c = normalize(th, two);
  REQUIRE(c.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < b.trace.size(); ++i) CHECK(b.trace[i].label == c.trace[i].label);
  CHECK(deriv_to_json(c.result) == deriv_to_json(b.result));
}

TEST_CASE("running out of fuel is reported") {
  NormalizeResult r = normalize(cut_module().th, thm("two_cuts"), 1);
  CHECK(!r.ok);
  CHECK(!r.why.empty());
}
