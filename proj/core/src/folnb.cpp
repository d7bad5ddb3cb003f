#include "lg/folnb.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "lg/cut.hpp"
#include "lg/printer.hpp"

namespace lg {

bool judgment_equal(const Judgment& a, const Judgment& b) {
  return a.sigma == b.sigma && term_equal(a.f, b.f);
}

namespace {

constexpr std::array<std::pair<FTag, const char*>, 26> kFNames{{
    {FTag::Id, "id"},       {FTag::Cut, "cut"},     {FTag::BotL, "botL"},   {FTag::TopR, "topR"},
    {FTag::AndL, "andL"},   {FTag::AndR, "andR"},   {FTag::OrL, "orL"},     {FTag::OrR, "orR"},
    {FTag::ImpL, "impL"},   {FTag::ImpR, "impR"},   {FTag::AllL, "allL"},   {FTag::AllR, "allR"},
    {FTag::ExL, "existsL"}, {FTag::ExR, "existsR"}, {FTag::NabL, "nablaL"}, {FTag::NabR, "nablaR"},
    {FTag::CL, "cL"},       {FTag::WL, "wL"},       {FTag::AlphaL, "alphaL"}, {FTag::AlphaR, "alphaR"},
    {FTag::PL, "pL"},       {FTag::PR, "pR"},       {FTag::SSL, "ssL"},     {FTag::SSR, "ssR"},
    {FTag::WSL, "wsL"},     {FTag::WSR, "wsR"},
}};

bool has(const std::vector<NomId>& v, NomId a) { return std::find(v.begin(), v.end(), a) != v.end(); }

std::optional<std::string> judgment_ok(const Theory& th, const Signature& sig, const Judgment& j) {
  std::set<NomId> seen;
  for (NomId a : j.sigma)
    if (!seen.insert(a).second) return "local signature repeats " + nominal_name(a);
  for (NomId a : support(j.f))
    if (!seen.count(a)) return nominal_name(a) + " is used but not in the local signature";
  if (auto e = sequent_well_formed(th, Sequent{sig, {}, j.f})) return e;
  return std::nullopt;
}

bool same_multiset(const std::vector<Judgment>& a, const std::vector<Judgment>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t k = 0; k < b.size() && !found; ++k)
      if (!used[k] && judgment_equal(x, b[k])) used[k] = found = true;
    if (!found) return false;
  }
  return true;
}

struct FExpected {
  bool ok = true;
  std::string why;
  std::vector<FSequent> prem;
};

FExpected ffail(std::string why) {
  FExpected e;
  e.ok = false;
  e.why = std::move(why);
  return e;
}

Judgment& slot_ref(FSequent& s, bool left, std::size_t j) { return left ? s.hyps[j] : s.goal; }

FExpected fexpected(const Theory& th, const FSequent& s, const FRule& r) {
  FExpected e;
  const std::size_t n = s.hyps.size();
  const bool left = ftag_is_left(r.tag);
  if ((left || r.tag == FTag::Id) && r.idx >= n) return ffail("hypothesis index out of range");
  const Judgment& pj = left ? s.hyps[r.idx] : s.goal;
  FView v = view(pj.f);
  auto with = [&](const Judgment& nj) {
    FSequent p = s;
    slot_ref(p, left, r.idx) = nj;
    return p;
  };
  switch (r.tag) {
    case FTag::Id:
      if (!judgment_equal(s.hyps[r.idx], s.goal)) return ffail("hypothesis and goal differ");
      return e;
    case FTag::Cut: {
      if (r.left.size() != n) return ffail("cut partition has wrong length");
      if (auto w = judgment_ok(th, s.sig, r.cut)) return ffail("cut judgment: " + *w);
      FSequent a{s.sig, {}, r.cut}, b{s.sig, {r.cut}, s.goal};
      for (std::size_t h = 0; h < n; ++h) (r.left[h] ? a : b).hyps.push_back(s.hyps[h]);
      e.prem = {a, b};
      return e;
    }
    case FTag::BotL:
      if (v.kind != FKind::Bot) return ffail("hypothesis is not bot");
      return e;
    case FTag::TopR:
      if (v.kind != FKind::Top) return ffail("goal is not top");
      return e;
    case FTag::AndL: {
      if (v.kind != FKind::And) return ffail("hypothesis is not a conjunction");
      FSequent p = with({pj.sigma, v.l});
      p.hyps.push_back({pj.sigma, v.r});
      e.prem.push_back(std::move(p));
      return e;
    }
    case FTag::AndR:
      if (v.kind != FKind::And) return ffail("goal is not a conjunction");
      e.prem = {with({pj.sigma, v.l}), with({pj.sigma, v.r})};
      return e;
    case FTag::OrL:
      if (v.kind != FKind::Or) return ffail("hypothesis is not a disjunction");
      e.prem = {with({pj.sigma, v.l}), with({pj.sigma, v.r})};
      return e;
    case FTag::OrR:
      if (v.kind != FKind::Or) return ffail("goal is not a disjunction");
      if (r.choice != 1 && r.choice != 2) return ffail("bad disjunct choice");
      e.prem.push_back(with({pj.sigma, r.choice == 1 ? v.l : v.r}));
      return e;
    case FTag::ImpL: {
      if (v.kind != FKind::Imp) return ffail("hypothesis is not an implication");
      FSequent p0 = s;
      p0.hyps.erase(p0.hyps.begin() + static_cast<std::ptrdiff_t>(r.idx));
      p0.goal = {pj.sigma, v.l};
      e.prem = {p0, with({pj.sigma, v.r})};
      return e;
    }
    case FTag::ImpR: {
      if (v.kind != FKind::Imp) return ffail("goal is not an implication");
      FSequent p = with({pj.sigma, v.r});
      p.hyps.push_back({pj.sigma, v.l});
      e.prem.push_back(std::move(p));
      return e;
    }
    case FTag::AllL:
    case FTag::ExR: {
      if (v.kind != (left ? FKind::Forall : FKind::Exists))
        return ffail(left ? "hypothesis is not universal" : "goal is not existential");
      if (!r.term) return ffail("missing witness");
      try {
        Ty t = typecheck(r.term, th.env(&s.sig));
        if (!ty_equal(t, v.qty)) return ffail("witness has the wrong type");
      } catch (const TypeError& ex) {
        return ffail(std::string("witness: ") + ex.what());
      }
      for (NomId a : support(r.term))
        if (!has(pj.sigma, a)) return ffail("witness uses " + nominal_name(a) + " outside the local signature");
      e.prem.push_back(with({pj.sigma, instantiate_body(v.l, r.term)}));
      return e;
    }
    case FTag::AllR:
    case FTag::ExL: {
      if (v.kind != (left ? FKind::Exists : FKind::Forall))
        return ffail(left ? "hypothesis is not existential" : "goal is not universal");
      if (s.sig.contains(r.var.name)) return ffail("eigenvariable is not fresh");
      if (!r.var.ty || !ty_equal(r.var.ty, raise_type(v.qty, pj.sigma)))
        return ffail("eigenvariable must be raised over the local signature");
      FSequent p = with({pj.sigma, instantiate_body(v.l, raised(r.var.name, r.var.ty, pj.sigma))});
      p.sig.add(r.var);
      e.prem.push_back(std::move(p));
      return e;
    }
    case FTag::NabL:
    case FTag::NabR: {
      if (v.kind != FKind::Nabla) return ffail("not a nabla formula");
      if (!ty_equal(nominal_type(r.nom), v.qty)) return ffail("local name has the wrong type");
      if (has(pj.sigma, r.nom)) return ffail("local name " + nominal_name(r.nom) + " is not new");
      std::vector<NomId> sg = pj.sigma;
      sg.push_back(r.nom);
      e.prem.push_back(with({sg, instantiate_body(v.l, nom_term(r.nom))}));
      return e;
    }
    case FTag::CL: {
      FSequent p = s;
      p.hyps.push_back(s.hyps[r.idx]);
      e.prem.push_back(std::move(p));
      return e;
    }
    case FTag::WL: {
      FSequent p = s;
      p.hyps.erase(p.hyps.begin() + static_cast<std::ptrdiff_t>(r.idx));
      e.prem.push_back(std::move(p));
      return e;
    }
    case FTag::AlphaL:
    case FTag::AlphaR:
      e.prem.push_back(with({perm_apply(r.pi, pj.sigma), perm_apply(r.pi, pj.f)}));
      return e;
    case FTag::PL:
    case FTag::PR: {
      if (r.pos + 1 >= pj.sigma.size()) return ffail("swap position out of range");
      std::vector<NomId> sg = pj.sigma;
      std::swap(sg[r.pos], sg[r.pos + 1]);
      e.prem.push_back(with({sg, pj.f}));
      return e;
    }
    case FTag::SSL:
    case FTag::SSR: {
      if (r.pos > pj.sigma.size()) return ffail("insert position out of range");
      if (has(pj.sigma, r.nom)) return ffail("inserted name " + nominal_name(r.nom) + " is already local");
      std::vector<NomId> sg = pj.sigma;
      sg.insert(sg.begin() + static_cast<std::ptrdiff_t>(r.pos), r.nom);
      e.prem.push_back(with({sg, pj.f}));
      return e;
    }
    case FTag::WSL:
    case FTag::WSR: {
      if (r.pos >= pj.sigma.size()) return ffail("remove position out of range");
      if (occurs_nom(pj.f, pj.sigma[r.pos]))
        return ffail("removed name " + nominal_name(pj.sigma[r.pos]) + " is in the support");
      std::vector<NomId> sg = pj.sigma;
      sg.erase(sg.begin() + static_cast<std::ptrdiff_t>(r.pos));
      e.prem.push_back(with({sg, pj.f}));
      return e;
    }
  }
  return ffail("unknown rule");
}

std::optional<Violation> fcheck_rec(const Theory& th, const FDeriv& d, std::vector<std::size_t>& path) {
  const char* rn = ftag_name(d->rule.tag);
  FExpected e;
  try {
    e = fexpected(th, d->concl, d->rule);
  } catch (const TypeError& ex) {
    return Violation{path, rn, ex.what()};
  }
  if (!e.ok) return Violation{path, rn, e.why};
  if (e.prem.size() != d->prem.size()) return Violation{path, rn, "wrong number of premises"};
  for (std::size_t i = 0; i < e.prem.size(); ++i) {
    const FSequent& want = e.prem[i];
    const FSequent& got = d->prem[i]->concl;
    if (!(want.sig == got.sig) || !judgment_equal(want.goal, got.goal) || !same_multiset(want.hyps, got.hyps))
      return Violation{path, rn,
                       "premise " + std::to_string(i) + " should be " + show_fsequent(want) + " but is " +
                           show_fsequent(got)};
  }
  for (std::size_t i = 0; i < d->prem.size(); ++i) {
    path.push_back(i);
    if (auto v = fcheck_rec(th, d->prem[i], path)) return v;
    path.pop_back();
  }
  return std::nullopt;
}

// ------------------------------------------------------- LG to local

Judgment& fslot(FSequent& s, std::size_t k) { return k == 0 ? s.goal : s.hyps[k - 1]; }

// Structural steps that take `from` to child's conclusion, which differs
// only in the local signatures: drop unused names, reorder, insert.
FDeriv bridge(const FSequent& from, const FDeriv& child) {
  const FSequent& to = child->concl;
  if (from.hyps.size() != to.hyps.size()) throw BridgeError("bridge: hypothesis counts differ");
  std::vector<std::pair<FSequent, FRule>> steps;
  FSequent cur = from;
  for (std::size_t k = 0; k <= cur.hyps.size(); ++k) {
    const std::vector<NomId>& want = k == 0 ? to.goal.sigma : to.hyps[k - 1].sigma;
    const bool left = k != 0;
    for (;;) {
      Judgment& j = fslot(cur, k);
      if (j.sigma == want) break;
      FRule r;
      r.idx = left ? k - 1 : 0;
      auto rank = [&](NomId a) {
        return static_cast<std::size_t>(std::find(want.begin(), want.end(), a) - want.begin());
      };
      std::size_t p = 0;
      while (p < j.sigma.size() && has(want, j.sigma[p])) ++p;
      if (p < j.sigma.size()) {
        r.tag = left ? FTag::WSL : FTag::WSR;
        r.pos = p;
        steps.push_back({cur, r});
        j.sigma.erase(j.sigma.begin() + static_cast<std::ptrdiff_t>(p));
        continue;
      }
      p = 0;
      while (p + 1 < j.sigma.size() && rank(j.sigma[p]) < rank(j.sigma[p + 1])) ++p;
      if (p + 1 < j.sigma.size()) {
        r.tag = left ? FTag::PL : FTag::PR;
        r.pos = p;
        steps.push_back({cur, r});
        std::swap(j.sigma[p], j.sigma[p + 1]);
        continue;
      }
      p = 0;
      while (p < want.size() && has(j.sigma, want[p])) ++p;
      r.tag = left ? FTag::SSL : FTag::SSR;
      r.pos = p;
      r.nom = want[p];
      steps.push_back({cur, r});
      j.sigma.insert(j.sigma.begin() + static_cast<std::ptrdiff_t>(p), want[p]);
    }
  }
  FDeriv d = child;
  for (std::size_t s = steps.size(); s-- > 0;) d = mk_fnode(steps[s].first, steps[s].second, {d});
  return d;
}

FDeriv to_f(const Theory& th, const Deriv& d) {
  const FSequent s = canonical(d->concl);
  const Rule& r = d->rule;
  const std::size_t j = r.idx;
  auto prem = [&](std::size_t m, const FSequent& want) { return bridge(want, to_f(th, d->prem[m])); };
  auto with_hyp = [&](const Judgment& nj) {
    FSequent p = s;
    p.hyps[j] = nj;
    return p;
  };
  auto with_goal = [&](const Judgment& nj) {
    FSequent p = s;
    p.goal = nj;
    return p;
  };
  switch (r.tag) {
    case RuleTag::IdPi: {
      std::vector<std::pair<FSequent, FRule>> steps;
      FSequent cur = s;
      if (!r.pi.is_identity()) {
        FRule a = FRule::make(FTag::AlphaL);
        a.idx = j;
        a.pi = r.pi;
        steps.push_back({cur, a});
        cur.hyps[j] = {perm_apply(r.pi, cur.hyps[j].sigma), perm_apply(r.pi, cur.hyps[j].f)};
      }
      if (!r.pi2.is_identity()) {
        FRule a = FRule::make(FTag::AlphaR);
        a.pi = r.pi2;
        steps.push_back({cur, a});
        cur.goal = {perm_apply(r.pi2, cur.goal.sigma), perm_apply(r.pi2, cur.goal.f)};
      }
      FRule id = FRule::make(FTag::Id);
      id.idx = j;
      FDeriv out = mk_fnode(cur, id, {});
      for (std::size_t k = steps.size(); k-- > 0;) out = mk_fnode(steps[k].first, steps[k].second, {out});
      return out;
    }
    case RuleTag::CL: {
      FSequent p = s;
      p.hyps.insert(p.hyps.begin() + static_cast<std::ptrdiff_t>(j) + 1, s.hyps[j]);
      FRule fr = FRule::make(FTag::CL);
      fr.idx = j;
      return mk_fnode(s, fr, {prem(0, p)});
    }
    case RuleTag::BotL: {
      FRule fr = FRule::make(FTag::BotL);
      fr.idx = j;
      return mk_fnode(s, fr, {});
    }
    case RuleTag::TopR: return mk_fnode(s, FRule::make(FTag::TopR), {});
    case RuleTag::AndL: {
      const Judgment& pj = s.hyps[j];
      FView v = view(pj.f);
      Term keep = r.choice == 1 ? v.l : v.r, drop = r.choice == 1 ? v.r : v.l;
      FSequent p1 = with_hyp({pj.sigma, keep});
      p1.hyps.push_back({pj.sigma, drop});
      FRule w = FRule::make(FTag::WL);
      w.idx = p1.hyps.size() - 1;
      FDeriv top = mk_fnode(p1, w, {prem(0, with_hyp({pj.sigma, keep}))});
      FRule fr = FRule::make(FTag::AndL);
      fr.idx = j;
      return mk_fnode(s, fr, {top});
    }
    case RuleTag::AndR: {
      FView v = view(s.goal.f);
      return mk_fnode(s, FRule::make(FTag::AndR),
                      {prem(0, with_goal({s.goal.sigma, v.l})), prem(1, with_goal({s.goal.sigma, v.r}))});
    }
    case RuleTag::OrL: {
      FView v = view(s.hyps[j].f);
      FRule fr = FRule::make(FTag::OrL);
      fr.idx = j;
      return mk_fnode(s, fr,
                      {prem(0, with_hyp({s.hyps[j].sigma, v.l})), prem(1, with_hyp({s.hyps[j].sigma, v.r}))});
    }
    case RuleTag::OrR: {
      FView v = view(s.goal.f);
      FRule fr = FRule::make(FTag::OrR);
      fr.choice = r.choice;
      return mk_fnode(s, fr, {prem(0, with_goal({s.goal.sigma, r.choice == 1 ? v.l : v.r}))});
    }
    case RuleTag::ImpL: {
      const Judgment& pj = s.hyps[j];
      FView v = view(pj.f);
      FSequent p0 = s;
      p0.hyps.erase(p0.hyps.begin() + static_cast<std::ptrdiff_t>(j));
      p0.goal = {pj.sigma, v.l};
      FRule fr = FRule::make(FTag::ImpL);
      fr.idx = j;
      return mk_fnode(s, fr, {prem(0, p0), prem(1, with_hyp({pj.sigma, v.r}))});
    }
    case RuleTag::ImpR: {
      FView v = view(s.goal.f);
      FSequent p = with_goal({s.goal.sigma, v.r});
      p.hyps.push_back({s.goal.sigma, v.l});
      return mk_fnode(s, FRule::make(FTag::ImpR), {prem(0, p)});
    }
    case RuleTag::AllL:
    case RuleTag::ExR: {
      const bool left = r.tag == RuleTag::AllL;
      std::vector<std::pair<FSequent, FRule>> steps;
      FSequent cur = s;
      Judgment& pj = left ? cur.hyps[j] : cur.goal;
      for (NomId a : support(r.term)) {
        if (has(pj.sigma, a)) continue;
        FRule ss = FRule::make(left ? FTag::SSL : FTag::SSR);
        ss.idx = left ? j : 0;
        ss.pos = pj.sigma.size();
        ss.nom = a;
        steps.push_back({cur, ss});
        pj.sigma.push_back(a);
      }
      FRule fr = FRule::make(left ? FTag::AllL : FTag::ExR);
      fr.idx = left ? j : 0;
      fr.term = r.term;
      FSequent p = cur;
      Judgment& pp = left ? p.hyps[j] : p.goal;
      pp.f = instantiate_body(view(pp.f).l, r.term);
      FDeriv out = mk_fnode(cur, fr, {prem(0, p)});
      for (std::size_t k = steps.size(); k-- > 0;) out = mk_fnode(steps[k].first, steps[k].second, {out});
      return out;
    }
    case RuleTag::AllR:
    case RuleTag::ExL: {
      const bool left = r.tag == RuleTag::ExL;
      const Judgment& pj = left ? s.hyps[j] : s.goal;
      FRule fr = FRule::make(left ? FTag::ExL : FTag::AllR);
      fr.idx = left ? j : 0;
      fr.var = r.var;
      Judgment nj{pj.sigma, instantiate_body(view(pj.f).l, raised(r.var.name, r.var.ty, pj.sigma))};
      FSequent p = left ? with_hyp(nj) : with_goal(nj);
      p.sig.add(r.var);
      return mk_fnode(s, fr, {prem(0, p)});
    }
    case RuleTag::NabL:
    case RuleTag::NabR: {
      const bool left = r.tag == RuleTag::NabL;
      const Judgment& pj = left ? s.hyps[j] : s.goal;
      FRule fr = FRule::make(left ? FTag::NabL : FTag::NabR);
      fr.idx = left ? j : 0;
      fr.nom = r.nom;
      std::vector<NomId> sg = pj.sigma;
      sg.push_back(r.nom);
      Judgment nj{sg, instantiate_body(view(pj.f).l, nom_term(r.nom))};
      return mk_fnode(s, fr, {prem(0, left ? with_hyp(nj) : with_goal(nj))});
    }
    default:
      throw BridgeError(std::string("rule ") + rule_name(r.tag) + " is outside the core fragment");
  }
}

// ------------------------------------------------------- local to LG

void reserve_f(NameSupply& ns, const FDeriv& d) {
  ns.reserve(d->concl.sig);
  if (d->rule.var.ty) ns.reserve(d->rule.var.name);
  for (const auto& p : d->prem) reserve_f(ns, p);
}

Deriv to_lg(const Ctx& c, const FDeriv& d) {
  const FSequent& fs = d->concl;
  const FRule& r = d->rule;
  const Sequent s = forget(fs);
  const std::size_t j = r.idx;
  auto sub = [&](std::size_t m) { return to_lg(c, d->prem[m]); };
  auto lr = [&](RuleTag t) {
    Rule x = Rule::make(t);
    x.idx = j;
    return x;
  };
  switch (r.tag) {
    case FTag::Id: return rebuild(c, s, lr(RuleTag::IdPi), {});
    case FTag::Cut: return fit(c, make_mc(c, {sub(0)}, {r.cut.f}, sub(1)), s);
    case FTag::BotL: return rebuild(c, s, lr(RuleTag::BotL), {});
    case FTag::TopR: return rebuild(c, s, lr(RuleTag::TopR), {});
    case FTag::AndL: {
      FView v = view(s.hyps[j]);
      Sequent s1 = s;  // after contraction
      s1.hyps.insert(s1.hyps.begin() + static_cast<std::ptrdiff_t>(j) + 1, s.hyps[j]);
      Sequent s2 = s1;
      s2.hyps[j] = v.l;
      Sequent s3 = s2;
      s3.hyps[j + 1] = v.r;
      Rule a1 = lr(RuleTag::AndL), a2 = lr(RuleTag::AndL);
      a2.idx = j + 1;
      a2.choice = 2;
      Deriv top = fit(c, sub(0), s3);
      Deriv d2 = rebuild(c, s2, a2, {top});
      Deriv d1 = rebuild(c, s1, a1, {d2});
      return rebuild(c, s, lr(RuleTag::CL), {d1});
    }
    case FTag::AndR: return rebuild(c, s, lr(RuleTag::AndR), {sub(0), sub(1)});
    case FTag::OrL: return rebuild(c, s, lr(RuleTag::OrL), {sub(0), sub(1)});
    case FTag::OrR: {
      Rule x = lr(RuleTag::OrR);
      x.choice = r.choice;
      return rebuild(c, s, x, {sub(0)});
    }
    case FTag::ImpL: return rebuild(c, s, lr(RuleTag::ImpL), {sub(0), sub(1)});
    case FTag::ImpR: return rebuild(c, s, lr(RuleTag::ImpR), {sub(0)});
    case FTag::AllL:
    case FTag::ExR: {
      Rule x = lr(r.tag == FTag::AllL ? RuleTag::AllL : RuleTag::ExR);
      x.term = r.term;
      return rebuild(c, s, x, {sub(0)});
    }
    case FTag::AllR:
    case FTag::ExL: {
      // Raised over the whole local signature there, over the support here.
      const bool left = r.tag == FTag::ExL;
      const Judgment& pj = left ? fs.hyps[j] : fs.goal;
      std::vector<NomId> ds = support(pj.f);
      Ty ty2 = raise_type(view(pj.f).qty, ds);
      Subst th;
      th.bind(r.var, abstract_noms(raised(r.var.name, ty2, ds), pj.sigma));
      Rule x = lr(left ? RuleTag::ExL : RuleTag::AllR);
      x.var = {r.var.name, ty2};
      x.noms = ds;
      return rebuild(c, s, x, {subst_derivation(c, sub(0), th)});
    }
    case FTag::NabL:
    case FTag::NabR: {
      Rule x = lr(r.tag == FTag::NabL ? RuleTag::NabL : RuleTag::NabR);
      x.nom = r.nom;
      return rebuild(c, s, x, {sub(0)});
    }
    case FTag::CL: return rebuild(c, s, lr(RuleTag::CL), {sub(0)});
    case FTag::WL: {
      Sequent p = s;
      p.hyps.erase(p.hyps.begin() + static_cast<std::ptrdiff_t>(j));
      return fit(c, weaken(c, fit(c, sub(0), p), {s.hyps[j]}), s);
    }
    case FTag::AlphaL:
    case FTag::AlphaR: {
      const bool left = r.tag == FTag::AlphaL;
      Sequent p = s;
      Term& f = left ? p.hyps[j] : p.goal;
      f = perm_apply(r.pi, f);
      std::vector<Perm> pv(s.hyps.size() + 1);
      pv[left ? j + 1 : 0] = r.pi.inverse();
      return perm_derivation(c, fit(c, sub(0), p), pv);
    }
    default: return fit(c, sub(0), s);  // local-signature bookkeeping only
  }
}

}  // namespace

const char* ftag_name(FTag t) {
  for (auto& [k, n] : kFNames)
    if (k == t) return n;
  return "?";
}

bool ftag_from_name(const std::string& s, FTag& out) {
  for (auto& [k, n] : kFNames)
    if (s == n) {
      out = k;
      return true;
    }
  return false;
}

bool ftag_is_left(FTag t) {
  switch (t) {
    case FTag::BotL: case FTag::AndL: case FTag::OrL: case FTag::ImpL: case FTag::AllL:
    case FTag::ExL: case FTag::NabL: case FTag::CL: case FTag::WL: case FTag::AlphaL:
    case FTag::PL: case FTag::SSL: case FTag::WSL: return true;
    default: return false;
  }
}

FDeriv mk_fnode(FSequent concl, FRule rule, std::vector<FDeriv> prem) {
  auto n = std::make_shared<FNode>();
  std::uint32_t h = 0;
  for (const auto& p : prem) h = std::max(h, p->height);
  n->concl = std::move(concl);
  n->rule = std::move(rule);
  n->prem = std::move(prem);
  n->height = n->prem.empty() ? 0 : h + 1;
  return n;
}

std::optional<std::string> fsequent_well_formed(const Theory& th, const FSequent& s) {
  for (std::size_t i = 0; i < s.hyps.size(); ++i)
    if (auto e = judgment_ok(th, s.sig, s.hyps[i])) return "hypothesis " + std::to_string(i) + ": " + *e;
  if (auto e = judgment_ok(th, s.sig, s.goal)) return "goal: " + *e;
  return std::nullopt;
}

std::optional<Violation> check_folnb(const Theory& th, const FDeriv& d) {
  if (auto w = fsequent_well_formed(th, d->concl))
    return Violation{{}, ftag_name(d->rule.tag), "ill-formed end sequent: " + *w};
  std::vector<std::size_t> path;
  return fcheck_rec(th, d, path);
}

Judgment canonical(const Term& f) { return {support(f), f}; }

FSequent canonical(const Sequent& s) {
  FSequent out;
  out.sig = s.sig;
  for (const auto& h : s.hyps) out.hyps.push_back(canonical(h));
  out.goal = canonical(s.goal);
  return out;
}

Sequent forget(const FSequent& s) {
  Sequent out;
  out.sig = s.sig;
  for (const auto& h : s.hyps) out.hyps.push_back(h.f);
  out.goal = s.goal.f;
  return out;
}

bool in_core_fragment(const Deriv& d) {
  switch (d->rule.tag) {
    case RuleTag::Mc: case RuleTag::EqL: case RuleTag::EqR: case RuleTag::DefL:
    case RuleTag::DefR: case RuleTag::NatL: case RuleTag::NatR: return false;
    default: break;
  }
  for (const auto& p : d->prem)
    if (!in_core_fragment(p)) return false;
  return true;
}

FDeriv lg_to_folnb(const Theory& th, const Deriv& d) { return to_f(th, d); }

Deriv folnb_to_lg(const Theory& th, const FDeriv& d) {
  NameSupply ns;
  reserve_f(ns, d);
  Ctx c{th, ns};
  try {
    return to_lg(c, d);
  } catch (const TransformError& e) {
    throw BridgeError(std::string("translation back failed: ") + e.what());
  }
}

std::string show_judgment(const Judgment& j) {
  std::string out = "(";
  for (std::size_t i = 0; i < j.sigma.size(); ++i) {
    if (i) out += ", ";
    out += nominal_name(j.sigma[i]);
  }
  return out + ") |> " + show_formula(j.f);
}

std::string show_fsequent(const FSequent& s) {
  std::string out = "{" + show_sig(s.sig) + "} ";
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += ", ";
    out += show_judgment(s.hyps[i]);
  }
  out += s.hyps.empty() ? "|- " : " |- ";
  return out + show_judgment(s.goal);
}

}  // namespace lg
