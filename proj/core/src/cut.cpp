#include "lg/cut.hpp"

#include "lg/printer.hpp"

namespace lg {

namespace {

// Multiset difference a - b, preserving the order of a.
std::vector<Term> minus(std::vector<Term> a, const std::vector<Term>& b) {
  for (const auto& x : b) {
    for (auto it = a.begin(); it != a.end(); ++it)
      if (term_equal(*it, x)) {
        a.erase(it);
        break;
      }
  }
  return a;
}

bool contains(const std::vector<Term>& a, const Term& x) {
  for (const auto& y : a)
    if (term_equal(x, y)) return true;
  return false;
}

// Position in the multicut conclusion of the k-th hypothesis with part p.
std::size_t conclusion_index(const Rule& mc, std::size_t p, std::size_t k) {
  for (std::size_t h = 0; h < mc.part.size(); ++h)
    if (mc.part[h] == p && k-- == 0) return h;
  throw TransformError("multicut part lookup out of range");
}

Deriv contract(const Ctx& c, const Deriv& d, const Sequent& target) {
  std::vector<Term> extra = minus(d->concl.hyps, target.hyps);
  if (extra.empty()) return fit(c, d, target);
  std::size_t j = 0;
  while (j < target.hyps.size() && !term_equal(target.hyps[j], extra[0])) ++j;
  if (j == target.hyps.size())
    throw TransformError("cannot contract " + show_formula(extra[0]) + ": not in the target");
  Sequent next = target;
  next.hyps.insert(next.hyps.begin() + static_cast<std::ptrdiff_t>(j) + 1, target.hyps[j]);
  Rule r = Rule::make(RuleTag::CL);
  r.idx = j;
  return rebuild(c, target, r, {contract(c, d, next)});
}

Subst theta_for(const Theory& th, const Deriv& d, std::size_t m) {
  if (d->rule.tag == RuleTag::EqL) return eql_unify(d->concl, d->rule.idx).res.theta;
  if (d->rule.tag == RuleTag::DefL) return defl_cases(th, d->concl, d->rule.idx).cases.at(m).theta;
  return {};
}

std::string tag(const Deriv& d) { return rule_name(d->rule.tag); }

}  // namespace

Deriv make_mc(const Ctx& c, const std::vector<Deriv>& sides, const std::vector<Term>& cuts,
              const Deriv& right) {
  if (sides.size() != cuts.size()) throw TransformError("make_mc: one side per cut");
  Signature sig = right->concl.sig;
  for (const auto& s : sides) sig = sig.merged(s->concl.sig);
  Sequent concl{sig, {}, right->concl.goal};
  Rule r = Rule::make(RuleTag::Mc);
  r.cuts = cuts;
  std::vector<Deriv> ps;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (const auto& h : sides[i]->concl.hyps) {
      concl.hyps.push_back(h);
      r.part.push_back(i);
    }
    ps.push_back(fit(c, sides[i], Sequent{sig, sides[i]->concl.hyps, cuts[i]}));
  }
  std::vector<Term> rest = minus(right->concl.hyps, cuts);
  if (rest.size() + cuts.size() != right->concl.hyps.size())
    throw TransformError("make_mc: right premise lacks a cut formula");
  for (const auto& h : rest) {
    concl.hyps.push_back(h);
    r.part.push_back(cuts.size());
  }
  std::vector<Term> rh = cuts;
  rh.insert(rh.end(), rest.begin(), rest.end());
  ps.push_back(fit(c, right, Sequent{sig, rh, right->concl.goal}));
  return rebuild(c, std::move(concl), std::move(r), std::move(ps));
}

Deriv finish(const Ctx& c, const Deriv& d, const Sequent& target) {
  std::vector<Term> missing = minus(target.hyps, d->concl.hyps);
  Deriv w = d;
  if (!missing.empty()) {
    for (const auto& m : missing)
      if (auto e = sequent_well_formed(c.th, Sequent{d->concl.sig.merged(target.sig), {}, m}))
        throw TransformError("finish: " + *e);
    w = weaken(c, extend_sig(c, d, [&] {
                 Signature extra;
                 for (const auto& v : target.sig)
                   if (!d->concl.sig.contains(v.name)) extra.add(v);
                 return extra;
               }()),
               missing);
  }
  for (const auto& e : minus(w->concl.hyps, target.hyps))
    if (!contains(target.hyps, e))
      throw TransformError("finish: extra hypothesis " + show_formula(e));
  return contract(c, w, target);
}

Classification classify(const Deriv& mc) {
  Classification out;
  const Rule& r = mc->rule;
  const std::size_t k = r.cuts.size();
  if (k == 0) {
    out.label = "trivial";
    return out;
  }
  const Deriv& right = mc->prem[k];
  const Rule& rr = right->rule;
  if (rr.tag == RuleTag::Mc) {
    out.kind = CutCase::Multicut;
    out.label = "multicut";
    return out;
  }
  const bool on_cut = (is_left_rule(rr.tag) || rr.tag == RuleTag::IdPi) && rr.idx < k;
  if (!on_cut) {
    out.kind = CutCase::RightCommutative;
    out.label = "right-commutative(" + tag(right) + ")";
    return out;
  }
  out.cut = rr.idx;
  if (rr.tag == RuleTag::IdPi) {
    out.kind = CutCase::Axiom;
    out.label = "axiom";
    return out;
  }
  if (rr.tag == RuleTag::CL) {
    out.kind = CutCase::Structural;
    out.label = "structural";
    return out;
  }
  const Deriv& side = mc->prem[rr.idx];
  if (side->rule.tag == RuleTag::IdPi) {
    out.kind = CutCase::LeftAxiom;
    out.label = "left-axiom";
  } else if (side->rule.tag == RuleTag::Mc) {
    out.kind = CutCase::Multicut;
    out.label = "multicut";
  } else if (is_left_rule(side->rule.tag)) {
    out.kind = CutCase::LeftCommutative;
    out.label = "left-commutative(" + tag(side) + ")";
  } else {
    out.kind = CutCase::Essential;
    out.label = "essential(" + tag(side) + "/" + tag(right) + ")";
  }
  return out;
}

Deriv reduce_once(const Theory& th, NameSupply& ns, const Deriv& mc, Classification* out) {
  Ctx c{th, ns};
  Classification cl = classify(mc);
  if (out) *out = cl;
  const Sequent& target = mc->concl;
  const Rule& r = mc->rule;
  const std::size_t k = r.cuts.size();
  std::vector<Deriv> sides(mc->prem.begin(), mc->prem.begin() + static_cast<std::ptrdiff_t>(k));
  const Deriv& right = mc->prem[k];
  const std::size_t i = cl.cut;

  auto without = [&](std::size_t drop, std::vector<Deriv>& ss, std::vector<Term>& cs) {
    for (std::size_t q = 0; q < k; ++q)
      if (q != drop) {
        ss.push_back(sides[q]);
        cs.push_back(r.cuts[q]);
      }
  };
  auto replaced = [&](const Deriv& side, const Term& cut, const Deriv& rt) {
    std::vector<Deriv> ss = sides;
    std::vector<Term> cs = r.cuts;
    ss[i] = side;
    cs[i] = cut;
    return make_mc(c, ss, cs, rt);
  };

  switch (cl.kind) {
    case CutCase::Trivial: return fit(c, right, target);
    case CutCase::Multicut: throw TransformError("multicut redex is not innermost");

    case CutCase::Axiom: {
      // pi . B_i = pi2 . C, so C = pi2^-1 . pi . B_i.
      std::vector<Perm> pv(sides[i]->concl.hyps.size() + 1);
      pv[0] = compose(right->rule.pi, right->rule.pi2.inverse());
      return finish(c, perm_derivation(c, sides[i], pv), target);
    }

    case CutCase::Structural: {
      std::vector<Deriv> ss = sides;
      std::vector<Term> cs = r.cuts;
      ss.insert(ss.begin() + static_cast<std::ptrdiff_t>(i) + 1, sides[i]);
      cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(i) + 1, r.cuts[i]);
      return finish(c, make_mc(c, ss, cs, right->prem[0]), target);
    }

    case CutCase::LeftAxiom: {
      // pi . D = pi2 . B_i: rename the cut formula back to the hypothesis D.
      const Rule& sr = sides[i]->rule;
      std::vector<Perm> pv(right->concl.hyps.size() + 1);
      pv[i + 1] = compose(sr.pi2, sr.pi.inverse());
      Deriv rt = perm_derivation(c, right, pv);
      std::vector<Deriv> ss;
      std::vector<Term> cs;
      without(i, ss, cs);
      return finish(c, make_mc(c, ss, cs, rt), target);
    }

    case CutCase::RightCommutative: {
      const Rule& rr = right->rule;
      Rule nr = rr;
      if (is_left_rule(rr.tag) || rr.tag == RuleTag::IdPi) nr.idx = conclusion_index(r, k, rr.idx - k);
      std::vector<Deriv> ps;
      for (std::size_t m = 0; m < right->prem.size(); ++m) {
        const Deriv& p = right->prem[m];
        if (rr.tag == RuleTag::NatL && m < 2) {
          ps.push_back(p);
          continue;
        }
        Subst th_m = theta_for(th, right, m);
        std::vector<Deriv> ss;
        std::vector<Term> cs(p->concl.hyps.begin(), p->concl.hyps.begin() + static_cast<std::ptrdiff_t>(k));
        for (const auto& s : sides) ss.push_back(th_m.empty() ? s : subst_derivation(c, s, th_m));
        ps.push_back(make_mc(c, ss, cs, p));
      }
      return rebuild(c, target, nr, ps);
    }

    case CutCase::LeftCommutative: {
      const Deriv& side = sides[i];
      const Rule& sr = side->rule;
      Rule nr = sr;
      nr.idx = conclusion_index(r, i, sr.idx);
      std::vector<Deriv> ps;
      for (std::size_t m = 0; m < side->prem.size(); ++m) {
        const Deriv& p = side->prem[m];
        if (sr.tag == RuleTag::NatL && m < 2) {
          ps.push_back(p);
          continue;
        }
        if (sr.tag == RuleTag::ImpL && m == 0) {
          ps.push_back(weaken(c, p, minus(target.hyps, side->concl.hyps)));
          continue;
        }
        Subst th_m = theta_for(th, side, m);
        std::vector<Deriv> ss;
        std::vector<Term> cs;
        for (std::size_t q = 0; q < k; ++q) {
          ss.push_back(q == i ? p : th_m.empty() ? sides[q] : subst_derivation(c, sides[q], th_m));
          cs.push_back(q == i ? p->concl.goal : th_m.apply(r.cuts[q]));
        }
        Deriv rt = th_m.empty() ? right : subst_derivation(c, right, th_m);
        ps.push_back(make_mc(c, ss, cs, rt));
      }
      return rebuild(c, target, nr, ps);
    }

    case CutCase::Essential: break;
  }

  const Deriv& side = sides[i];
  const Rule& sr = side->rule;
  const Rule& rr = right->rule;
  switch (rr.tag) {
    case RuleTag::AndL: {
      const Deriv& comp = side->prem[rr.choice == 1 ? 0 : 1];
      return finish(c, replaced(comp, comp->concl.goal, right->prem[0]), target);
    }
    case RuleTag::OrL: {
      const Deriv& comp = side->prem[0];
      const Deriv& rt = right->prem[sr.choice == 1 ? 0 : 1];
      return finish(c, replaced(comp, comp->concl.goal, rt), target);
    }
    case RuleTag::ImpL: {
      // Cut the antecedent first, then the consequent.
      FView v = view(r.cuts[i]);
      std::vector<Deriv> ss;
      std::vector<Term> cs;
      without(i, ss, cs);
      Deriv x1 = make_mc(c, ss, cs, right->prem[0]);
      Deriv x2 = make_mc(c, {x1}, {v.l}, side->prem[0]);
      return finish(c, replaced(x2, v.r, right->prem[1]), target);
    }
    case RuleTag::AllL:
    case RuleTag::ExL: {
      const bool all = rr.tag == RuleTag::AllL;
      const Rule& er = all ? sr : rr;         // the rule with the eigenvariable
      const Term& t = all ? rr.term : sr.term;  // the witness
      Deriv body = all ? side->prem[0] : right->prem[0];
      std::vector<NomId> ds;
      for (NomId n : support(t)) {
        bool in = false;
        for (NomId e : er.noms) in = in || e == n;
        if (!in) ds.push_back(n);
      }
      Var h2;
      body = support_extend(c, body, er.var, er.noms.size(), ds, h2);
      std::vector<NomId> all_noms = er.noms;
      all_noms.insert(all_noms.end(), ds.begin(), ds.end());
      Subst inst;
      inst.bind(h2, abstract_noms(t, all_noms));
      body = subst_derivation(c, body, inst);
      Term cut = instantiate_body(view(r.cuts[i]).l, t);
      if (all) return finish(c, replaced(body, cut, right->prem[0]), target);
      return finish(c, replaced(side->prem[0], cut, body), target);
    }
    case RuleTag::NabL: {
      std::vector<Perm> pv(side->prem[0]->concl.hyps.size() + 1);
      if (sr.nom != rr.nom) pv[0] = Perm::swap(sr.nom, rr.nom);
      Deriv s2 = perm_derivation(c, side->prem[0], pv);
      return finish(c, replaced(s2, s2->concl.goal, right->prem[0]), target);
    }
    case RuleTag::EqL: {
      if (right->prem.empty()) throw TransformError("eqL on a reflexive equation has no premise");
      EqLInfo info = eql_unify(right->concl, rr.idx);
      Subst sigma;
      if (!factor_through(info.res.theta, Subst(), right->concl.sig.vars(), sigma))
        throw TransformError("empty substitution does not factor through the unifier");
      Deriv rt = subst_derivation(c, right->prem[0], sigma);
      std::vector<Deriv> ss;
      std::vector<Term> cs;
      without(i, ss, cs);
      return finish(c, make_mc(c, ss, cs, rt), target);
    }
    case RuleTag::DefL: {
      DefLInfo info = defl_cases(th, right->concl, rr.idx);
      std::size_t pos = info.cases.size();
      for (std::size_t q = 0; q < info.cases.size(); ++q)
        if (info.cases[q].clause == sr.clause) pos = q;
      if (pos == info.cases.size()) throw TransformError("defR clause missing from defL cases");
      const DefLCase& dc = info.cases[pos];
      std::vector<Var> vars = right->concl.sig.vars();
      for (const auto& h : dc.raised.hs) vars.push_back(h);
      Subst sigma;
      if (!factor_through(dc.theta, sr.theta, vars, sigma))
        throw TransformError("defR instance does not factor through the defL unifier");
      Deriv rt = subst_derivation(c, right->prem[pos], sigma);
      return finish(c, replaced(side->prem[0], side->prem[0]->concl.goal, rt), target);
    }
    case RuleTag::NatL: {
      const Term& D = rr.term;
      const Deriv& base = right->prem[0];
      const Deriv& step = right->prem[1];
      const Deriv& use = right->prem[2];
      const Signature& sig = target.sig;
      const Term& t = view(r.cuts[i]).l;
      if (t->args.empty()) {
        // nat z: the base case proves D z.
        Deriv b = weaken(c, extend_sig(c, base, sig), side->concl.hyps);
        return finish(c, replaced(b, b->concl.goal, use), target);
      }
      const Term& t1 = t->args[0];
      // Sigma; nat t1 |- D t1 by induction with the same invariant.
      Sequent ind{sig, {f_nat(t1)}, beta(D, t1)};
      Rule nl = rr;
      nl.idx = 0;
      Rule idr = Rule::make(RuleTag::IdPi);
      Deriv leaf = rebuild(c, Sequent{sig, {beta(D, t1)}, beta(D, t1)}, idr, {});
      Deriv ind_d = rebuild(c, ind, nl, {base, step, leaf});
      Deriv x1 = make_mc(c, {side->prem[0]}, {f_nat(t1)}, ind_d);
      // The step derivation at j := t1, raised over the constants of t1.
      Var j = rr.var;
      Deriv st = step;
      if (sig.contains(j.name)) {
        Var j2{ns.fresh(j.name), j.ty};
        Subst ren;
        ren.bind(j, var_term(j2.name, j2.ty));
        st = subst_derivation(c, st, ren);
        j = j2;
      }
      st = extend_sig(c, st, sig);
      std::vector<NomId> cs = support(t1);
      Var j3;
      st = support_extend(c, st, j, 0, cs, j3);
      Subst inst;
      inst.bind(j3, abstract_noms(t1, cs));
      st = subst_derivation(c, st, inst);
      Deriv x2 = make_mc(c, {x1}, {beta(D, t1)}, st);
      return finish(c, replaced(x2, x2->concl.goal, use), target);
    }
    default: break;
  }
  throw TransformError("no reduction for " + cl.label);
}

std::size_t default_fuel(const Deriv& d) { return 1000 * static_cast<std::size_t>(d->size) + 10000; }

namespace {

bool innermost(const Deriv& d, std::vector<std::size_t>& path) {
  if (!d->has_mc) return false;
  for (std::size_t i = 0; i < d->prem.size(); ++i) {
    if (d->prem[i]->has_mc) {
      path.push_back(i);
      return innermost(d->prem[i], path);
    }
  }
  return d->rule.tag == RuleTag::Mc;
}

const Deriv& at(const Deriv& d, const std::vector<std::size_t>& path, std::size_t depth = 0) {
  if (depth == path.size()) return d;
  return at(d->prem[path[depth]], path, depth + 1);
}

Deriv replace_at(const Deriv& d, const std::vector<std::size_t>& path, std::size_t depth,
                 const Deriv& repl) {
  if (depth == path.size()) return repl;
  std::vector<Deriv> ps = d->prem;
  ps[path[depth]] = replace_at(ps[path[depth]], path, depth + 1, repl);
  return mk_node(d->concl, d->rule, std::move(ps));
}

}  // namespace

NormalizeResult normalize(const Theory& th, const Deriv& d, std::size_t fuel) {
  NormalizeResult out;
  if (fuel == 0) fuel = default_fuel(d);
  NameSupply ns(d);
  Deriv cur = d;
  for (std::size_t step = 0;; ++step) {
    std::vector<std::size_t> path;
    if (!innermost(cur, path)) break;
    if (step >= fuel) {
      out.why = "fuel exhausted after " + std::to_string(step) + " steps";
      out.result = cur;
      return out;
    }
    const Deriv& redex = at(cur, path);
    Classification cl;
    Deriv red;
    try {
      red = reduce_once(th, ns, redex, &cl);
    } catch (const TransformError& e) {
      out.why = "at " + show_path(path) + " (" + cl.label + "): " + e.what();
      out.result = cur;
      return out;
    } catch (const TypeError& e) {
      out.why = "at " + show_path(path) + " (" + cl.label + "): " + e.what();
      out.result = cur;
      return out;
    }
    out.trace.push_back({path, cl.label, redex->height, red->height});
    cur = replace_at(cur, path, 0, red);
  }
  out.ok = true;
  out.result = cur;
  return out;
}

}  // namespace lg
