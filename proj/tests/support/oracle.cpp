#include <functional>
#include <map>

#include "kit.hpp"

namespace lgt {

// -------------------------------------------------- unification oracle

namespace {

struct Vocab {
  Ty nm = base_type("nm", true);
  Ty i = base_type("i");
  Ty gty = arrows({nm, i}, i);
  Ty xty = arrow(nm, i);
  Ty yty = arrows({nm, nm}, i);
  Symbol k = intern("k"), g = intern("g"), x = intern("X"), y = intern("Y");

  Term kt() const { return mk_app(Head::cnst(k, i), {}); }
  Term bd(std::uint32_t idx) const { return mk_app(Head::bound(idx), {}); }
  Term gt(Term n, Term t) const { return mk_app(Head::cnst(g, gty), {std::move(n), std::move(t)}); }
  Term xt(std::uint32_t a) const { return mk_app(Head::var(x, xty), {bd(a)}); }
  Term yt(std::uint32_t a, std::uint32_t b) const { return mk_app(Head::var(y, yty), {bd(a), bd(b)}); }
};

// `leaves`, then g over each of `names` and each term of `prev`.
std::vector<Term> grow(const Vocab& v, const std::vector<Term>& leaves, const std::vector<Term>& names,
                       const std::vector<Term>& prev) {
  std::vector<Term> out = leaves;
  for (const auto& n : names)
    for (const auto& t : prev) out.push_back(v.gt(n, t));
  return out;
}

// A ground term of type `ty`: lambdas over the argument types, then k.
Term ground_k(const Vocab& v, const Ty& ty) {
  if (!ty->arrow) return v.kt();
  return mk_lam(ty->dom, ground_k(v, ty->cod));
}

}  // namespace

UnifyOracleReport unify_oracle() {
  Vocab v;
  UnifyOracleReport rep;

  // Bodies under two binders a (index 1) and b (index 0). Y's arguments stay
  // distinct so every term is a pattern.
  const std::vector<Term> ab = {v.bd(1), v.bd(0)};
  const std::vector<Term> leaves = {v.kt(), v.xt(1), v.xt(0), v.yt(1, 0), v.yt(0, 1)};
  std::vector<Term> d3 = grow(v, leaves, ab, grow(v, leaves, ab, leaves));
  std::vector<Term> terms;
  for (const auto& b : d3) terms.push_back(mk_lam(v.nm, mk_lam(v.nm, b)));
  rep.terms = terms.size();

  // Ground candidates up to depth 4: X := \z. t over k, z and Y := \z w. t
  // over k, z, w, where g is the only way to use a name.
  std::vector<Term> xs = {v.kt()}, ys = {v.kt()};
  for (int d = 0; d < 3; ++d) {
    xs = grow(v, {v.kt()}, {v.bd(0)}, xs);
    ys = grow(v, {v.kt()}, ab, ys);
  }
  std::vector<Subst> cands;
  for (const auto& xb : xs)
    for (const auto& yb : ys) {
      Subst s;
      s.bind({v.x, v.xty}, mk_lam(v.nm, xb));
      s.bind({v.y, v.yty}, mk_lam(v.nm, mk_lam(v.nm, yb)));
      cands.push_back(s);
    }
  std::vector<std::vector<Term>> inst(cands.size());
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (const auto& t : terms) inst[c].push_back(cands[c].apply(t));

  const std::vector<Var> vars = {{v.x, v.xty}, {v.y, v.yty}};
  auto note = [&](const std::string& msg) {
    if (rep.failures.size() < 8) rep.failures.push_back(msg);
  };
  std::map<std::pair<std::string, std::size_t>, bool> factor_cache;

  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = 0; b < terms.size(); ++b) {
      ++rep.pairs;
      std::vector<std::size_t> sols;
      for (std::size_t c = 0; c < cands.size(); ++c)
        if (term_equal(inst[c][a], inst[c][b])) sols.push_back(c);
      UnifyResult r = unify(terms[a], terms[b]);
      const std::string pair = show(terms[a]) + " =?= " + show(terms[b]);
      if (!sols.empty()) ++rep.unifiable;
      rep.solutions += sols.size();
      if ((r.status == UnifyStatus::Unifier) != !sols.empty()) {
        ++rep.disagreements;
        note(pair + ": unify says " + status_name(r.status) + ", oracle found " + std::to_string(sols.size()));
        continue;
      }
      if (r.status != UnifyStatus::Unifier) continue;

      // The MGU grounded by k must itself be a candidate solution.
      Subst ground;
      for (const auto& e : r.theta.entries())
        for (const auto& fv : free_vars(e.image))
          if (!ground.find(fv.name)) ground.bind({fv.name, fv.ty}, ground_k(v, fv.ty));
      Subst g0;
      for (const auto& var : vars) {
        const Term* img = r.theta.find(var.name);
        g0.bind(var, img ? ground.apply(*img) : ground_k(v, var.ty));
      }
      bool found = false;
      for (std::size_t c : sols)
        if (term_equal(*cands[c].find(v.x), *g0.find(v.x)) && term_equal(*cands[c].find(v.y), *g0.find(v.y)))
          found = true;
      if (!found) {
        ++rep.outside_candidates;
        note(pair + ": grounded MGU " + show_subst(g0) + " is not among the oracle solutions");
      }

      const std::string key = show_subst(r.theta);
      for (std::size_t c : sols) {
        auto it = factor_cache.find({key, c});
        bool ok;
        if (it != factor_cache.end()) {
          ok = it->second;
        } else {
          Subst sigma;
          ok = factor_through(r.theta, cands[c], vars, sigma);
          factor_cache[{key, c}] = ok;
        }
        if (!ok) {
          ++rep.not_factoring;
          note(pair + ": solution " + show_subst(cands[c]) + " does not factor through " + key);
        }
      }
    }
  return rep;
}

// ------------------------------------------------------------ Robinson

namespace {

using FoSubst = std::vector<std::pair<std::string, FoTerm>>;

FoTerm fo_apply(const FoSubst& s, const FoTerm& t) {
  if (t.var) {
    for (const auto& [x, img] : s)
      if (x == t.name) return img;
    return t;
  }
  FoTerm o = t;
  for (auto& a : o.args) a = fo_apply(s, a);
  return o;
}

bool fo_occurs(const std::string& x, const FoTerm& t) {
  if (t.var) return t.name == x;
  for (const auto& a : t.args)
    if (fo_occurs(x, a)) return true;
  return false;
}

bool fo_equal(const FoTerm& a, const FoTerm& b) {
  if (a.var != b.var || a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!fo_equal(a.args[i], b.args[i])) return false;
  return true;
}

}  // namespace

std::optional<FoSubst> robinson(const FoTerm& s0, const FoTerm& t0) {
  FoSubst sub;
  std::vector<std::pair<FoTerm, FoTerm>> todo = {{s0, t0}};
  while (!todo.empty()) {
    auto [s, t] = todo.back();
    todo.pop_back();
    s = fo_apply(sub, s);
    t = fo_apply(sub, t);
    if (fo_equal(s, t)) continue;
    if (!s.var && t.var) std::swap(s, t);
    if (s.var) {
      if (fo_occurs(s.name, t)) return std::nullopt;
      FoSubst one = {{s.name, t}};
      for (auto& [x, img] : sub) img = fo_apply(one, img);
      sub.push_back({s.name, t});
      continue;
    }
    if (s.name != t.name || s.args.size() != t.args.size()) return std::nullopt;
    for (std::size_t i = 0; i < s.args.size(); ++i) todo.push_back({s.args[i], t.args[i]});
  }
  return sub;
}

std::string show_fo(const FoTerm& t) {
  if (t.args.empty()) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? "," : "") + show_fo(t.args[i]);
  return out + ")";
}

// ------------------------------------------------------------- levels

const char* const kLevelTheory = R"(nominal type nm.
type i.
const a : nm.
const c : i.
const p0 : o.
const p1, q1 : i -> o.
const p2 : nm -> o.
level p0 0.
level p1 1.
level q1 1.
level p2 2.
)";

const std::vector<LevelFixture>& level_fixtures() {
  static const std::vector<LevelFixture> f = {
      {"true", 0},
      {"false", 0},
      {"c = c", 0},
      {"nat z", 0},
      {"p0", 0},
      {"p1 c", 1},
      {"p2 a", 2},
      {"q1 c", 1},
      {"p0 /\\ p1 c", 1},
      {"p1 c \\/ p2 a", 2},
      {"p0 => false", 1},
      {"p1 c => false", 2},
      {"p2 a => false", 3},
      {"false => p0", 1},
      {"false => p2 a", 2},
      {"p0 => p1 c", 1},
      {"p1 c => p0", 2},
      {"(p0 => p0) => p0", 2},
      {"((p0 => p0) => p0) => p0", 3},
      {"p0 => p0 => p0", 1},
      {"forall x:i, p1 x", 1},
      {"exists x:i, p1 x => p2 a", 2},
      {"nabla x:nm, p2 x", 2},
      {"nabla x:nm, p2 x => false", 3},
      {"forall x:i, p1 x => q1 x", 2},
      {"(forall x:i, p1 x) => false", 2},
      {"true => true", 1},
      {"c = c => false", 1},
      {"nat z => nat (s z)", 1},
      {"(nat z => p0) => p0", 2},
      {"p0 /\\ (p2 a => p0)", 3},
      {"(p0 \\/ p1 c) => p0", 2},
      {"(p0 /\\ q1 c) => q1 c", 2},
      {"exists x:nm, p2 x /\\ p0", 2},
      {"forall x:nm, nabla y:nm, p2 x => p2 y", 3},
      {"true /\\ false", 0},
      {"false \\/ c = c", 0},
      {"(true => false) => false", 2},
      {"p1 c /\\ q1 c /\\ p0", 1},
      {"p0 => p1 c => p2 a => false", 3},
      {"((p1 c => p0) => p0) => p0", 4},
      {"nabla x:nm, forall y:i, p2 x \\/ q1 y", 2},
      {"(exists x:i, q1 x) \\/ (p0 => p0)", 1},
      {"(nabla x:nm, p2 x) => nabla x:nm, p2 x", 3},
      {"forall x:i, x = c => p1 x", 1},
      {"(forall x:i, x = c) => p0", 1},
      {"p2 a /\\ (p2 a => p2 a)", 3},
      {"(p0 => false) => false", 2},
      {"nat (s (s z)) /\\ p0", 0},
      {"(q1 c => q1 c) => p1 c => p1 c", 3},
  };
  return f;
}

}  // namespace lgt
