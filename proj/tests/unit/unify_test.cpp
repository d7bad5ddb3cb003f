#include "doctest.h"
#include "kit.hpp"

using namespace lgt;

namespace {

const Module& unify_module() {
  static const Module m = load_module_text(R"(nominal type nm.
type i.
const a, b : nm.
const f : nm -> nm -> i.
const g : i -> i.
const k : i.
)");
  return m;
}

struct Fixture {
  const Module& m = unify_module();
  Ty nm = m.types.at("nm"), i = m.types.at("i");
  Signature sig{{{intern("H"), arrow(nm, i)}, {intern("X"), nm}, {intern("Y"), i}, {intern("Z"), i}}};
  Term t(const std::string& src) const { return parse_term(m, sig, src); }
};

}  // namespace

TEST_CASE("pattern recognition") {
  Fixture fx;
  CHECK(is_pattern(fx.t("\\c:nm. H c")));
  CHECK(is_pattern(fx.t("g Y")));
  Signature s2{{{intern("G"), arrows({fx.nm, fx.nm}, fx.i)}, {intern("J"), arrow(fx.i, fx.i)}}};
  CHECK(!is_pattern(parse_term(fx.m, s2, "\\c:nm. G c c")));
  CHECK(!is_pattern(parse_term(fx.m, s2, "J (g k)")));
  CHECK(!is_pattern(parse_term(fx.m, s2, "\\c:nm. J (f c c)")));
}

TEST_CASE("a variable cannot take the value of an abstracted name") {
  Fixture fx;
  UnifyResult r = unify(fx.t("\\c:nm. X"), fx.t("\\c:nm. c"));
  CHECK(r.status == UnifyStatus::NoUnifier);
}

TEST_CASE("distinct names do not unify") {
  Fixture fx;
  CHECK(unify(fx.t("b"), fx.t("a")).status == UnifyStatus::NoUnifier);
  CHECK(unify(fx.t("a"), fx.t("a")).status == UnifyStatus::Unifier);
}

TEST_CASE("h c against f c c") {
  Fixture fx;
  UnifyResult r = unify(fx.t("\\c:nm. H c"), fx.t("\\c:nm. f c c"));
  REQUIRE(r.status == UnifyStatus::Unifier);
  const Term* img = r.theta.find(intern("H"));
  REQUIRE(img);
  CHECK(term_equal(*img, fx.t("\\u:nm. f u u")));
  CHECK(term_equal(r.theta.apply(fx.t("\\c:nm. H c")), fx.t("\\c:nm. f c c")));
}

TEST_CASE("occurs check") {
  Fixture fx;
  CHECK(unify(fx.t("Y"), fx.t("g Y")).status == UnifyStatus::NoUnifier);
  CHECK(unify(fx.t("Y"), fx.t("g Z")).status == UnifyStatus::Unifier);
}

TEST_CASE("non-patterns are reported") {
  Fixture fx;
  Signature s2{{{intern("J"), arrow(fx.i, fx.i)}}};
  UnifyResult r = unify(parse_term(fx.m, s2, "J k"), fx.t("g k"));
  CHECK(r.status == UnifyStatus::NotAPattern);
}

TEST_CASE("flex-flex with different arguments prunes to the common ones") {
  Fixture fx;
  Signature s{{{intern("G"), arrows({fx.nm, fx.nm}, fx.i)}}};
  Term l = parse_term(fx.m, s, "\\x:nm. \\y:nm. G x y");
  Term r = parse_term(fx.m, s, "\\x:nm. \\y:nm. G y x");
  UnifyResult u = unify(l, r);
  REQUIRE(u.status == UnifyStatus::Unifier);
  CHECK(term_equal(u.theta.apply(l), u.theta.apply(r)));
  const Term* img = u.theta.find(intern("G"));
  REQUIRE(img);
  // Neither argument survives, so G becomes a constant function.
  CHECK(free_vars(*img).size() == 1);
  CHECK(support(*img).empty());
}

TEST_CASE("fresh unification variables avoid the signature") {
  Fixture fx;
  Signature s{{{intern("G"), arrows({fx.nm, fx.nm}, fx.i)}, {intern("_u1"), fx.i}}};
  Term l = parse_term(fx.m, s, "\\x:nm. \\y:nm. G x y");
  Term r = parse_term(fx.m, s, "\\x:nm. \\y:nm. G y x");
  UnifyOptions o;
  o.taken = [&](Symbol x) { return s.contains(x); };
  UnifyResult u = unify(l, r, o);
  REQUIRE(u.status == UnifyStatus::Unifier);
  for (const auto& e : u.theta.entries())
    for (const auto& v : free_vars(e.image)) CHECK(!s.contains(v.name));
}

TEST_CASE("unification is symmetric") {
  Fixture fx;
  auto a = unify(fx.t("g Y"), fx.t("g (g Z)"));
  auto b = unify(fx.t("g (g Z)"), fx.t("g Y"));
  REQUIRE(a.status == UnifyStatus::Unifier);
  REQUIRE(b.status == UnifyStatus::Unifier);
  CHECK(term_equal(a.theta.apply(fx.t("g Y")), b.theta.apply(fx.t("g Y"))));
}

TEST_CASE("matching keeps the target fixed") {
  Fixture fx;
  UnifyResult r = match(fx.t("g Y"), fx.t("g Z"));
  REQUIRE(r.status == UnifyStatus::Unifier);
  REQUIRE(r.theta.find(intern("Y")));
  CHECK(!r.theta.find(intern("Z")));
}

TEST_CASE("factoring through an MGU") {
  Fixture fx;
  UnifyResult r = unify(fx.t("g Y"), fx.t("g Z"));
  REQUIRE(r.status == UnifyStatus::Unifier);
  Subst delta;
  delta.bind({intern("Y"), fx.i}, fx.t("k"));
  delta.bind({intern("Z"), fx.i}, fx.t("k"));
  Subst sigma;
  CHECK(factor_through(r.theta, delta, {{intern("Y"), fx.i}, {intern("Z"), fx.i}}, sigma));
  Subst bad;
  bad.bind({intern("Y"), fx.i}, fx.t("k"));
  bad.bind({intern("Z"), fx.i}, fx.t("g k"));
  CHECK(!factor_through(r.theta, bad, {{intern("Y"), fx.i}, {intern("Z"), fx.i}}, sigma));
}
