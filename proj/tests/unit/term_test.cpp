#include "doctest.h"
#include "kit.hpp"

using namespace lgt;

namespace {

const Module& terms_module() {
  static const Module m = load_module_text(R"(nominal type nm.
type tm.
const a, b, e : nm.
const n0 : tm.
const abs : (tm -> tm) -> tm.
const app : tm -> tm -> tm.
const f : tm -> tm.
const vr : nm -> tm.
const p : nm -> o.
const q : nm -> nm -> o.
const pt : tm -> o.
)");
  return m;
}

Term tt(const std::string& src, const Signature& sig = {}) { return parse_term(terms_module(), sig, src); }

NomId nom(const char* name) {
  NomId c = 0;
  REQUIRE(find_nominal(name, c));
  return c;
}

}  // namespace

TEST_CASE("typecheck") {
  const Module& m = terms_module();
  Ty o = prop_type();
  CHECK(ty_equal(typecheck(tt("p a"), m.th.env(nullptr)), o));
  CHECK(ty_equal(typecheck(tt("abs (\\x. x)"), m.th.env(nullptr)), m.types.at("tm")));
  CHECK_THROWS(tt("\\x:tm. x x"));
  CHECK_THROWS(tt("p n0"));
  CHECK_THROWS(tt("undeclared a"));
}

TEST_CASE("terms are kept beta-normal and eta-long") {
  const Module& m = terms_module();
  Ty t = m.types.at("tm");
  Signature sig({{intern("P"), arrow(t, t)}, {intern("N"), t}});
  CHECK(term_equal(tt("(\\x. f x) n0"), tt("f n0")));
  CHECK(term_equal(tt("abs f"), tt("abs (\\x. f x)")));
  // An instantiated variable applied to an argument reduces at the meta level.
  Subst th;
  th.bind({intern("P"), arrow(t, t)}, tt("\\x. app x x"));
  CHECK(term_equal(th.apply(tt("P N", sig)), tt("app N N", sig)));
  Term once = th.apply(tt("P N", sig));
  CHECK(term_equal(th.apply(once), once));
}

TEST_CASE("support") {
  Signature sig({{intern("X"), terms_module().types.at("nm")}});
  CHECK(support(tt("p X", sig)).empty());
  CHECK(support(tt("q a b")) == std::vector<NomId>{nom("a"), nom("b")});
  CHECK(support(tt("(\\y. y) a")) == std::vector<NomId>{nom("a")});
  // Enumerated in order of first occurrence.
  CHECK(support(tt("q b a")) == std::vector<NomId>{nom("b"), nom("a")});
}

TEST_CASE("permutations") {
  Signature sig({{intern("X"), terms_module().types.at("nm")}});
  Perm ab = Perm::swap(nom("a"), nom("b")), bc = Perm::swap(nom("b"), nom("e"));
  CHECK(term_equal(perm_apply(ab, tt("q a b")), tt("q b a")));
  CHECK(term_equal(perm_apply(ab, tt("p X", sig)), tt("p X", sig)));
  CHECK(term_equal(perm_apply(Perm(), tt("q a e")), tt("q a e")));
  CHECK(compose(ab, ab).is_identity());
  CHECK(ab.inverse() == ab);
  // Composition applies its first argument first: a -> b -> e.
  CHECK(compose(ab, bc)(nom("a")) == nom("e"));
  CHECK(compose(ab, bc)(nom("e")) == nom("b"));
  CHECK(compose(ab, bc)(nom("b")) == nom("a"));
}

TEST_CASE("swaps across nominal types are rejected") {
  Ty other = base_type("nm2", true);
  NomId d = nominal("d_other", other);
  CHECK_THROWS(Perm::swap(nom("a"), d));
}

TEST_CASE("substitution") {
  const Module& m = terms_module();
  Ty t = m.types.at("tm");
  Signature sig({{intern("X"), t}, {intern("H"), arrow(m.types.at("nm"), t)}});
  Subst th;
  th.bind({intern("X"), t}, tt("f n0"));
  CHECK(term_equal(th.apply(tt("pt X", sig)), tt("pt (f n0)")));
  // Images never mention nominal constants.
  Subst bad;
  CHECK_THROWS(bad.bind({intern("X"), t}, tt("vr a")));
  CHECK_THROWS(bad.bind({intern("X"), t}, tt("q a")));
}

TEST_CASE("raise_type") {
  const Module& m = terms_module();
  Ty t = m.types.at("tm"), nm = m.types.at("nm");
  CHECK(ty_equal(raise_type(t, {nom("a")}), arrow(nm, t)));
  CHECK(ty_equal(raise_type(t, {}), t));
  CHECK(ty_equal(raise_type(t, {nom("a"), nom("b")}), arrows({nm, nm}, t)));
}
