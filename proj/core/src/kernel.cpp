#include "lg/kernel.hpp"

#include <set>

#include "lg/printer.hpp"

namespace lg {

namespace {

Expected fail(std::string why) {
  Expected e;
  e.ok = false;
  e.why = std::move(why);
  return e;
}

Sequent replace_hyp(const Sequent& s, std::size_t j, const Term& b) {
  Sequent r = s;
  r.hyps[j] = b;
  return r;
}

Sequent drop_hyp(const Sequent& s, std::size_t j) {
  Sequent r = s;
  r.hyps.erase(r.hyps.begin() + static_cast<std::ptrdiff_t>(j));
  return r;
}

Sequent with_goal(const Sequent& s, const Term& g) {
  Sequent r = s;
  r.goal = g;
  return r;
}

bool same_noms(const std::vector<NomId>& a, const std::vector<NomId>& b) { return a == b; }

std::optional<std::string> witness_ok(const Theory& th, const Signature& sig, const Term& t,
                                      const Ty& want) {
  try {
    Ty got = typecheck(t, th.env(&sig));
    if (!ty_equal(got, want))
      return "witness has type " + show_type(got) + ", expected " + show_type(want);
  } catch (const TypeError& e) {
    return std::string("witness: ") + e.what();
  }
  return std::nullopt;
}

std::function<bool(Symbol)> in_sig(const Signature& s) {
  return [&s](Symbol x) { return s.contains(x); };
}

}  // namespace

std::string show_path(const std::vector<std::size_t>& path) {
  std::string s = "root";
  for (std::size_t i : path) s += "." + std::to_string(i);
  return s;
}

std::optional<std::string> sequent_well_formed(const Theory& th, const Sequent& s) {
  TypeEnv env = th.env(&s.sig);
  auto one = [&](const Term& f, const std::string& where) -> std::optional<std::string> {
    try {
      if (f->loose != 0) return where + ": loose bound variable";
      Ty t = typecheck(f, env);
      if (!ty_equal(t, prop_type())) return where + ": not a formula";
    } catch (const TypeError& e) {
      return where + ": " + e.what();
    }
    return std::nullopt;
  };
  for (const auto& v : s.sig)
    if (mentions_prop(v.ty)) return "eigenvariable '" + name_of(v.name) + "' has a type mentioning o";
  for (std::size_t i = 0; i < s.hyps.size(); ++i)
    if (auto e = one(s.hyps[i], "hypothesis " + std::to_string(i))) return e;
  return one(s.goal, "goal");
}

EqLInfo eql_unify(const Sequent& s, std::size_t j) {
  FView v = view(s.hyps[j]);
  EqLInfo info;
  info.cs = support(s.hyps[j]);
  UnifyOptions o;
  o.taken = in_sig(s.sig);
  o.stem = kUnifyStem;
  info.res = unify(abstract_noms(v.l, info.cs), abstract_noms(v.r, info.cs), o);
  return info;
}

DefLInfo defl_cases(const Theory& th, const Sequent& s, std::size_t j) {
  DefLInfo info;
  FView v = view(s.hyps[j]);
  info.cs = support(s.hyps[j]);
  for (std::size_t k : th.clauses_for(v.pred)) {
    std::size_t counter = 1;
    RaisedClause rc = raise_clause(th.clause(k), info.cs, in_sig(s.sig), kClauseStem, &counter);
    std::set<Symbol> taken;
    for (const auto& x : s.sig) taken.insert(x.name);
    for (const auto& h : rc.hs) taken.insert(h.name);
    UnifyOptions o;
    o.taken = [&](Symbol x) { return taken.count(x) != 0; };
    o.stem = kUnifyStem;
    UnifyResult r = unify(abstract_noms(s.hyps[j], info.cs), abstract_noms(rc.head, info.cs), o);
    if (r.status == UnifyStatus::NotAPattern) {
      info.not_a_pattern = true;
      info.why = "clause " + std::to_string(k) + ": " + r.why;
      return info;
    }
    if (r.status == UnifyStatus::Unifier) info.cases.push_back({k, std::move(rc), std::move(r.theta)});
  }
  return info;
}

RaisedClause defr_raised(const Theory& th, const Sequent& s, std::size_t clause) {
  std::size_t counter = 1;
  return raise_clause(th.clause(clause), support(s.goal), in_sig(s.sig), kClauseStem, &counter);
}

Sequent instantiate_case(const Sequent& s, std::size_t j, const Term* replace,
                         const Signature& extra, const Subst& theta) {
  Sequent r;
  r.sig = sig_apply(s.sig.merged(extra), theta);
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i == j) {
      if (replace) r.hyps.push_back(theta.apply(*replace));
    } else {
      r.hyps.push_back(theta.apply(s.hyps[i]));
    }
  }
  r.goal = theta.apply(s.goal);
  return r;
}

Expected expected_premises(const Theory& th, const Sequent& s, const Rule& r) {
  Expected e;
  const std::size_t n = s.hyps.size();
  if (is_left_rule(r.tag) && r.idx >= n)
    return fail("hypothesis index " + std::to_string(r.idx) + " out of range");
  auto hv = [&]() { return view(s.hyps[r.idx]); };
  FView g = view(s.goal);

  switch (r.tag) {
    case RuleTag::IdPi: {
      if (r.idx >= n) return fail("hypothesis index out of range");
      if (!term_equal(perm_apply(r.pi, s.hyps[r.idx]), perm_apply(r.pi2, s.goal)))
        return fail("permuted hypothesis and goal differ");
      return e;
    }
    case RuleTag::Mc: {
      const std::size_t k = r.cuts.size();
      if (r.part.size() != n) return fail("part vector has wrong length");
      for (std::size_t i = 0; i < k; ++i) {
        Sequent side{s.sig, {}, r.cuts[i]};
        if (auto w = sequent_well_formed(th, side)) return fail("cut formula " + *w);
      }
      for (std::size_t p : r.part)
        if (p > k) return fail("part entry out of range");
      for (std::size_t i = 0; i < k; ++i) {
        Sequent side{s.sig, {}, r.cuts[i]};
        for (std::size_t h = 0; h < n; ++h)
          if (r.part[h] == i) side.hyps.push_back(s.hyps[h]);
        e.prem.push_back(std::move(side));
      }
      Sequent right{s.sig, r.cuts, s.goal};
      for (std::size_t h = 0; h < n; ++h)
        if (r.part[h] == k) right.hyps.push_back(s.hyps[h]);
      e.prem.push_back(std::move(right));
      return e;
    }
    case RuleTag::CL: {
      Sequent p = s;
      p.hyps.insert(p.hyps.begin() + static_cast<std::ptrdiff_t>(r.idx) + 1, s.hyps[r.idx]);
      e.prem.push_back(std::move(p));
      return e;
    }
    case RuleTag::BotL:
      if (hv().kind != FKind::Bot) return fail("hypothesis is not bot");
      return e;
    case RuleTag::TopR:
      if (g.kind != FKind::Top) return fail("goal is not top");
      return e;
    case RuleTag::AndL: {
      FView v = hv();
      if (v.kind != FKind::And) return fail("hypothesis is not a conjunction");
      if (r.choice != 1 && r.choice != 2) return fail("bad conjunct choice");
      e.prem.push_back(replace_hyp(s, r.idx, r.choice == 1 ? v.l : v.r));
      return e;
    }
    case RuleTag::AndR:
      if (g.kind != FKind::And) return fail("goal is not a conjunction");
      e.prem.push_back(with_goal(s, g.l));
      e.prem.push_back(with_goal(s, g.r));
      return e;
    case RuleTag::OrL: {
      FView v = hv();
      if (v.kind != FKind::Or) return fail("hypothesis is not a disjunction");
      e.prem.push_back(replace_hyp(s, r.idx, v.l));
      e.prem.push_back(replace_hyp(s, r.idx, v.r));
      return e;
    }
    case RuleTag::OrR:
      if (g.kind != FKind::Or) return fail("goal is not a disjunction");
      if (r.choice != 1 && r.choice != 2) return fail("bad disjunct choice");
      e.prem.push_back(with_goal(s, r.choice == 1 ? g.l : g.r));
      return e;
    case RuleTag::ImpL: {
      FView v = hv();
      if (v.kind != FKind::Imp) return fail("hypothesis is not an implication");
      e.prem.push_back(with_goal(drop_hyp(s, r.idx), v.l));
      e.prem.push_back(replace_hyp(s, r.idx, v.r));
      return e;
    }
    case RuleTag::ImpR: {
      if (g.kind != FKind::Imp) return fail("goal is not an implication");
      Sequent p = with_goal(s, g.r);
      p.hyps.push_back(g.l);
      e.prem.push_back(std::move(p));
      return e;
    }
    case RuleTag::AllL:
    case RuleTag::ExR: {
      const bool left = r.tag == RuleTag::AllL;
      FView v = left ? hv() : g;
      if (v.kind != (left ? FKind::Forall : FKind::Exists))
        return fail(left ? "hypothesis is not universal" : "goal is not existential");
      if (!r.term) return fail("missing witness");
      if (auto w = witness_ok(th, s.sig, r.term, v.qty)) return fail(*w);
      Term inst = instantiate_body(v.l, r.term);
      e.prem.push_back(left ? replace_hyp(s, r.idx, inst) : with_goal(s, inst));
      return e;
    }
    case RuleTag::AllR:
    case RuleTag::ExL: {
      const bool left = r.tag == RuleTag::ExL;
      const Term& f = left ? s.hyps[r.idx] : s.goal;
      FView v = view(f);
      if (v.kind != (left ? FKind::Exists : FKind::Forall))
        return fail(left ? "hypothesis is not existential" : "goal is not universal");
      if (!same_noms(r.noms, support(f)))
        return fail("raising list is not the support of the principal formula");
      if (s.sig.contains(r.var.name))
        return fail("eigenvariable '" + name_of(r.var.name) + "' is not fresh");
      if (!r.var.ty || !ty_equal(r.var.ty, raise_type(v.qty, r.noms)))
        return fail("eigenvariable has the wrong raised type");
      Term inst = instantiate_body(v.l, raised(r.var.name, r.var.ty, r.noms));
      Sequent p = left ? replace_hyp(s, r.idx, inst) : with_goal(s, inst);
      p.sig.add(r.var);
      e.prem.push_back(std::move(p));
      return e;
    }
    case RuleTag::NabL:
    case RuleTag::NabR: {
      const bool left = r.tag == RuleTag::NabL;
      const Term& f = left ? s.hyps[r.idx] : s.goal;
      FView v = view(f);
      if (v.kind != FKind::Nabla) return fail(left ? "hypothesis is not nabla" : "goal is not nabla");
      if (!ty_equal(nominal_type(r.nom), v.qty)) return fail("nominal constant has the wrong type");
      if (occurs_nom(f, r.nom))
        return fail("nominal constant '" + nominal_name(r.nom) + "' is in the support");
      Term inst = instantiate_body(v.l, nom_term(r.nom));
      e.prem.push_back(left ? replace_hyp(s, r.idx, inst) : with_goal(s, inst));
      return e;
    }
    case RuleTag::EqR:
      if (g.kind != FKind::Eq) return fail("goal is not an equation");
      if (!term_equal(g.l, g.r)) return fail("equation sides differ");
      return e;
    case RuleTag::EqL: {
      if (hv().kind != FKind::Eq) return fail("hypothesis is not an equation");
      EqLInfo info = eql_unify(s, r.idx);
      if (info.res.status == UnifyStatus::NotAPattern)
        return fail("equation is not a pattern: " + info.res.why);
      if (info.res.status == UnifyStatus::Unifier)
        e.prem.push_back(instantiate_case(s, r.idx, nullptr, {}, info.res.theta));
      return e;
    }
    case RuleTag::DefL: {
      FView v = hv();
      if (v.kind != FKind::Atom) return fail("hypothesis is not an atom");
      DefLInfo info = defl_cases(th, s, r.idx);
      if (info.not_a_pattern) return fail("definition case is not a pattern: " + info.why);
      std::vector<std::size_t> ids;
      for (const auto& c : info.cases) ids.push_back(c.clause);
      if (ids != r.clauses) return fail("listed clauses differ from the unifiable clauses");
      for (const auto& c : info.cases)
        e.prem.push_back(instantiate_case(s, r.idx, &c.raised.body, Signature(c.raised.hs), c.theta));
      return e;
    }
    case RuleTag::DefR: {
      if (g.kind != FKind::Atom) return fail("goal is not an atom");
      if (r.clause >= th.clauses().size()) return fail("no such clause");
      const Clause& c = th.clause(r.clause);
      if (c.pred != g.pred) return fail("clause defines a different predicate");
      RaisedClause rc = defr_raised(th, s, r.clause);
      std::vector<NomId> cs = support(s.goal);
      for (const auto& h : rc.hs) {
        const Term* img = r.theta.find(h.name);
        if (!img) return fail("instance leaves '" + name_of(h.name) + "' unbound");
        if (auto w = witness_ok(th, s.sig, *img, h.ty)) return fail(*w);
      }
      if (r.theta.size() != rc.hs.size()) return fail("instance binds extra variables");
      if (!term_equal(r.theta.apply(abstract_noms(rc.head, cs)), abstract_noms(s.goal, cs)))
        return fail("clause head instance differs from the goal");
      e.prem.push_back(with_goal(s, r.theta.apply(rc.body)));
      return e;
    }
    case RuleTag::NatR: {
      if (g.kind != FKind::Nat) return fail("goal is not nat");
      const Term& t = g.l;
      if (t->lam || t->head.kind != HeadKind::Const) return fail("nat argument is not a numeral");
      if (t->head.id == zero_symbol() && t->args.empty()) return e;
      if (t->head.id == succ_symbol() && t->args.size() == 1) {
        e.prem.push_back(with_goal(s, f_nat(t->args[0])));
        return e;
      }
      return fail("nat argument is not z or s _");
    }
    case RuleTag::NatL: {
      FView v = hv();
      if (v.kind != FKind::Nat) return fail("hypothesis is not nat");
      const Term& D = r.term;
      if (!D) return fail("missing invariant");
      if (D->has_var || D->has_nom) return fail("invariant must be closed and nominal-free");
      try {
        Ty dt = typecheck(D, th.env(nullptr));
        if (!ty_equal(dt, arrow(nat_type(), prop_type()))) return fail("invariant is not nt -> o");
      } catch (const TypeError& ex) {
        return fail(std::string("invariant: ") + ex.what());
      }
      if (!r.var.ty || !ty_equal(r.var.ty, nat_type())) return fail("induction variable must be nt");
      Term jv = var_term(r.var.name, nat_type());
      e.prem.push_back(Sequent{Signature{}, {}, beta(D, nat_zero())});
      e.prem.push_back(Sequent{Signature({r.var}), {beta(D, jv)}, beta(D, nat_succ(jv))});
      e.prem.push_back(replace_hyp(s, r.idx, beta(D, v.l)));
      return e;
    }
  }
  return fail("unknown rule");
}

namespace {

std::optional<Violation> check_rec(const Theory& th, const Deriv& d,
                                   std::vector<std::size_t>& path) {
  const char* rn = rule_name(d->rule.tag);
  Expected e;
  try {
    e = expected_premises(th, d->concl, d->rule);
  } catch (const TypeError& ex) {
    return Violation{path, rn, ex.what()};
  }
  if (!e.ok) return Violation{path, rn, e.why};
  if (e.prem.size() != d->prem.size())
    return Violation{path, rn,
                     "rule yields " + std::to_string(e.prem.size()) + " premises, derivation has " +
                         std::to_string(d->prem.size())};
  for (std::size_t i = 0; i < e.prem.size(); ++i) {
    if (!seq_equal(e.prem[i], d->prem[i]->concl))
      return Violation{path, rn,
                       "premise " + std::to_string(i) + " should be " + show_sequent(e.prem[i]) +
                           " but is " + show_sequent(d->prem[i]->concl)};
  }
  for (std::size_t i = 0; i < d->prem.size(); ++i) {
    path.push_back(i);
    if (auto v = check_rec(th, d->prem[i], path)) return v;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check(const Theory& th, const Deriv& d) {
  if (auto w = sequent_well_formed(th, d->concl))
    return Violation{{}, rule_name(d->rule.tag), "ill-formed end sequent: " + *w};
  std::vector<std::size_t> path;
  return check_rec(th, d, path);
}

}  // namespace lg
