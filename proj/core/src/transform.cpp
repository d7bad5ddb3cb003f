// Weakening, eigenvariable substitution, name permutation and name
// restriction on derivations. Each case rebuilds the node and lets `rebuild`
// check the rule instance, so a wrong case fails loudly instead of yielding a
// bad derivation.

#include "lg/printer.hpp"
#include "lg/transform.hpp"

namespace lg {

namespace {

// Where each slot of a premise comes from in the conclusion: 0 is the goal,
// i + 1 is hypothesis i, and -(k + 1) is cut formula k. `untouched` marks
// premises that do not share the conclusion's context.
struct Layout {
  bool untouched = false;
  std::vector<long> src;
};

std::vector<Layout> layout(const Sequent& s, const Rule& r, std::size_t nprem) {
  const long n = static_cast<long>(s.hyps.size());
  auto ident = [&]() {
    Layout l;
    for (long i = 0; i <= n; ++i) l.src.push_back(i);
    return l;
  };
  const long j = static_cast<long>(r.idx);
  std::vector<Layout> out;
  switch (r.tag) {
    case RuleTag::Mc: {
      const std::size_t k = r.cuts.size();
      for (std::size_t c = 0; c <= k; ++c) {
        Layout l;
        if (c < k) {
          l.src.push_back(-static_cast<long>(c) - 1);
        } else {
          l.src.push_back(0);
          for (std::size_t q = 0; q < k; ++q) l.src.push_back(-static_cast<long>(q) - 1);
        }
        for (long h = 0; h < n; ++h)
          if (r.part[static_cast<std::size_t>(h)] == c) l.src.push_back(h + 1);
        out.push_back(std::move(l));
      }
      return out;
    }
    case RuleTag::CL: {
      Layout l = ident();
      l.src.insert(l.src.begin() + j + 2, j + 1);
      out.push_back(std::move(l));
      return out;
    }
    case RuleTag::EqL: {
      if (nprem == 0) return out;
      Layout l = ident();
      l.src.erase(l.src.begin() + j + 1);
      out.push_back(std::move(l));
      return out;
    }
    case RuleTag::ImpL: {
      Layout l = ident();
      l.src.erase(l.src.begin() + j + 1);
      l.src[0] = j + 1;
      out.push_back(std::move(l));
      out.push_back(ident());
      return out;
    }
    case RuleTag::ImpR: {
      Layout l = ident();
      l.src.push_back(0);
      out.push_back(std::move(l));
      return out;
    }
    case RuleTag::NatL: {
      Layout u;
      u.untouched = true;
      out = {u, u, ident()};
      return out;
    }
    default:
      for (std::size_t i = 0; i < nprem; ++i) out.push_back(ident());
      return out;
  }
}

Term slot(const Sequent& s, std::size_t i) { return i == 0 ? s.goal : s.hyps[i - 1]; }

Term rename_var_to_nom(const Term& t, const Var& x, NomId a) {
  Subst s;
  s.bind_unchecked(x, nom_term(a));
  return s.apply(t);
}

std::vector<Term> nom_terms(const std::vector<NomId>& cs) {
  std::vector<Term> out;
  for (NomId c : cs) out.push_back(nom_term(c));
  return out;
}

// lambda cs_old. theta(h c_new...), the image of an old raised clause
// variable in terms of the recomputed case.
Term raised_image(const Var& h_new, const std::vector<Term>& args, const Subst& theta,
                  const std::vector<NomId>& cs_old) {
  Term t = apply_head(Head::var(h_new.name, h_new.ty), h_new.ty, args);
  return abstract_noms(theta.apply(t), cs_old);
}

Deriv via_factor(const Ctx& c, const Deriv& p, const Subst& old_theta, const Subst& delta,
                 const std::vector<Var>& vars) {
  Subst sigma;
  if (!factor_through(old_theta, delta, vars, sigma))
    throw TransformError("new unifier does not factor through the original");
  return subst_derivation(c, p, sigma);
}

const DefLCase* find_case(const DefLInfo& info, std::size_t clause, std::size_t* pos) {
  for (std::size_t i = 0; i < info.cases.size(); ++i)
    if (info.cases[i].clause == clause) {
      *pos = i;
      return &info.cases[i];
    }
  return nullptr;
}

// DefR's instance for a rewritten goal, found by matching.
Subst defr_instance(const Theory& th, const Sequent& nc, std::size_t clause) {
  RaisedClause rc = defr_raised(th, nc, clause);
  std::vector<NomId> cs = support(nc.goal);
  UnifyResult m = match(abstract_noms(rc.head, cs), abstract_noms(nc.goal, cs),
                        [&](Symbol x) { return nc.sig.contains(x); });
  if (m.status != UnifyStatus::Unifier)
    throw TransformError("defR instance lost: " + m.why);
  Subst out;
  for (const auto& h : rc.hs) {
    const Term* t = m.theta.find(h.name);
    if (!t) throw TransformError("defR instance leaves " + name_of(h.name) + " open");
    out.bind_unchecked(h, *t);
  }
  return out;
}

}  // namespace

NomId fresh_for(const std::vector<Term>& fs, const Ty& ty, const std::vector<NomId>& avoid) {
  return fresh_nominal(ty, [&](NomId c) {
    for (NomId a : avoid)
      if (a == c) return true;
    for (const auto& f : fs)
      if (occurs_nom(f, c)) return true;
    return false;
  });
}

// ---------------------------------------------------------------- weaken

Deriv weaken(const Ctx& c, const Deriv& d, const std::vector<Term>& delta) {
  if (delta.empty()) return d;
  Sequent nc = d->concl;
  for (const auto& f : delta) nc.hyps.push_back(f);
  Rule r = d->rule;
  if (r.tag == RuleTag::Mc)
    for (std::size_t i = 0; i < delta.size(); ++i) r.part.push_back(r.cuts.size());
  Expected e = expected_premises(c.th, nc, r);
  if (!e.ok || e.prem.size() != d->prem.size())
    throw TransformError("weakening broke rule " + std::string(rule_name(r.tag)));
  std::vector<Deriv> ps;
  for (std::size_t k = 0; k < d->prem.size(); ++k) {
    std::vector<Term> rest = e.prem[k].hyps;
    for (const auto& h : d->prem[k]->concl.hyps) {
      bool found = false;
      for (auto it = rest.begin(); it != rest.end() && !found; ++it)
        if (term_equal(*it, h)) {
          rest.erase(it);
          found = true;
        }
      if (!found) throw TransformError("weakened premise lost a hypothesis");
    }
    ps.push_back(weaken(c, d->prem[k], rest));
  }
  return rebuild(c, std::move(nc), std::move(r), std::move(ps));
}

// ---------------------------------------------------------------- subst

Deriv subst_derivation(const Ctx& c, const Deriv& d, const Subst& theta_in) {
  const Sequent& s = d->concl;
  Subst theta;
  for (const auto& e : theta_in.entries())
    if (s.sig.contains(e.var.name)) theta.bind_unchecked(e.var, e.image);
  if (theta.empty()) return d;
  c.ns.reserve(theta);

  Sequent nc;
  nc.sig = sig_apply(s.sig, theta);
  for (const auto& h : s.hyps) nc.hyps.push_back(theta.apply(h));
  nc.goal = theta.apply(s.goal);
  c.ns.reserve(nc.sig);

  Rule r = d->rule;
  std::vector<Deriv> ps;
  auto lifted = [&](const Subst& inner) {
    // theta followed by `inner` on the variables theta introduced.
    Subst out;
    for (const auto& v : s.sig) {
      const Term* t = theta.find(v.name);
      out.bind_unchecked(v, inner.apply(t ? *t : var_term(v.name, v.ty)));
    }
    return out;
  };

  switch (r.tag) {
    case RuleTag::Mc:
      for (auto& t : r.cuts) t = theta.apply(t);
      for (const auto& p : d->prem) ps.push_back(subst_derivation(c, p, theta));
      break;
    case RuleTag::AllL:
    case RuleTag::ExR:
      r.term = theta.apply(r.term);
      ps.push_back(subst_derivation(c, d->prem[0], theta));
      break;
    case RuleTag::NatL:
      ps = {d->prem[0], d->prem[1], subst_derivation(c, d->prem[2], theta)};
      break;
    case RuleTag::AllR:
    case RuleTag::ExL: {
      const Term& f = r.tag == RuleTag::ExL ? nc.hyps[r.idx] : nc.goal;
      FView v = view(f);
      std::vector<NomId> ds = support(f);
      Ty ty2 = raise_type(v.qty, ds);
      Symbol h2 = nc.sig.contains(r.var.name) ? c.ns.fresh(r.var.name) : r.var.name;
      Subst inner = theta;
      inner.bind(r.var, abstract_noms(raised(h2, ty2, ds), r.noms));
      ps.push_back(subst_derivation(c, d->prem[0], inner));
      r.var = {h2, ty2};
      r.noms = ds;
      break;
    }
    case RuleTag::EqL: {
      EqLInfo nw = eql_unify(nc, r.idx);
      if (nw.res.status == UnifyStatus::NotAPattern)
        throw TransformError("substituted equation is not a pattern: " + nw.res.why);
      if (nw.res.status == UnifyStatus::NoUnifier) break;
      EqLInfo old = eql_unify(s, r.idx);
      if (old.res.status != UnifyStatus::Unifier || d->prem.empty())
        throw TransformError("substitution made a failed equation unifiable");
      ps.push_back(via_factor(c, d->prem[0], old.res.theta, lifted(nw.res.theta), s.sig.vars()));
      break;
    }
    case RuleTag::DefL: {
      DefLInfo nw = defl_cases(c.th, nc, r.idx);
      if (nw.not_a_pattern) throw TransformError("substituted definition case: " + nw.why);
      DefLInfo old = defl_cases(c.th, s, r.idx);
      r.clauses.clear();
      for (const auto& ncase : nw.cases) {
        std::size_t pos = 0;
        const DefLCase* oc = find_case(old, ncase.clause, &pos);
        if (!oc) throw TransformError("substitution made a new definition case");
        Subst delta = lifted(ncase.theta);
        std::vector<Var> vars = s.sig.vars();
        for (std::size_t i = 0; i < oc->raised.hs.size(); ++i) {
          delta.bind_unchecked(oc->raised.hs[i], raised_image(ncase.raised.hs[i], nom_terms(nw.cs),
                                                              ncase.theta, old.cs));
          vars.push_back(oc->raised.hs[i]);
        }
        ps.push_back(via_factor(c, d->prem[pos], oc->theta, delta, vars));
        r.clauses.push_back(ncase.clause);
      }
      break;
    }
    case RuleTag::DefR:
      r.theta = defr_instance(c.th, nc, r.clause);
      ps.push_back(subst_derivation(c, d->prem[0], theta));
      break;
    default:
      for (const auto& p : d->prem) ps.push_back(subst_derivation(c, p, theta));
  }
  return rebuild(c, std::move(nc), std::move(r), std::move(ps));
}

// ---------------------------------------------------------------- perm

Deriv perm_derivation(const Ctx& c, const Deriv& d, std::vector<Perm> perms) {
  const Sequent& s = d->concl;
  const std::size_t n = s.hyps.size();
  perms.resize(n + 1);
  bool all_id = true;
  for (const auto& p : perms) all_id = all_id && p.is_identity();
  if (all_id) return d;

  Sequent nc = s;
  nc.goal = perm_apply(perms[0], s.goal);
  for (std::size_t i = 0; i < n; ++i) nc.hyps[i] = perm_apply(perms[i + 1], s.hyps[i]);
  Rule r = d->rule;
  const Perm& pj = is_left_rule(r.tag) || r.tag == RuleTag::IdPi ? perms[r.idx + 1] : perms[0];
  switch (r.tag) {
    case RuleTag::IdPi:
      r.pi = compose(perms[r.idx + 1].inverse(), r.pi);
      r.pi2 = compose(perms[0].inverse(), r.pi2);
      break;
    case RuleTag::AllL:
    case RuleTag::ExR: r.term = perm_apply(pj, r.term); break;
    case RuleTag::AllR:
    case RuleTag::ExL: r.noms = perm_apply(pj, r.noms); break;
    case RuleTag::NabL:
    case RuleTag::NabR: r.nom = pj(r.nom); break;
    default: break;
  }
  std::vector<Layout> ls = layout(s, d->rule, d->prem.size());
  std::vector<Deriv> ps;
  for (std::size_t k = 0; k < d->prem.size(); ++k) {
    if (ls[k].untouched) {
      ps.push_back(d->prem[k]);
      continue;
    }
    std::vector<Perm> sub;
    for (long src : ls[k].src) sub.push_back(src >= 0 ? perms[static_cast<std::size_t>(src)] : Perm());
    ps.push_back(perm_derivation(c, d->prem[k], std::move(sub)));
  }
  return rebuild(c, std::move(nc), std::move(r), std::move(ps));
}

// ---------------------------------------------------------------- restrict

Deriv restrict_derivation(const Ctx& c, const Deriv& d, Symbol xname,
                          const std::vector<NomId>& names) {
  const Sequent& s = d->concl;
  const std::size_t n = s.hyps.size();
  const Ty* xt = s.sig.type_of(xname);
  if (!xt) throw TransformError("restrict: " + name_of(xname) + " is not in the signature");
  if (!is_nominal_type(*xt)) throw TransformError("restrict: " + name_of(xname) + " is not of nominal type");
  if (names.size() != n + 1) throw TransformError("restrict: need one name per formula");
  const Var x{xname, *xt};
  for (std::size_t i = 0; i <= n; ++i) {
    if (!ty_equal(nominal_type(names[i]), x.ty))
      throw TransformError("restrict: name " + nominal_name(names[i]) + " has the wrong type");
    if (occurs_nom(slot(s, i), names[i]))
      throw TransformError("restrict: " + nominal_name(names[i]) + " is in the support of " +
                           show_formula(slot(s, i)));
  }

  Sequent nc;
  nc.sig = s.sig.without(xname);
  nc.goal = rename_var_to_nom(s.goal, x, names[0]);
  for (std::size_t i = 0; i < n; ++i) nc.hyps.push_back(rename_var_to_nom(s.hyps[i], x, names[i + 1]));

  Rule r = d->rule;
  const std::size_t sl = is_left_rule(r.tag) ? r.idx + 1 : 0;  // principal slot
  const NomId a = sl <= n ? names[sl] : names[0];
  std::vector<Layout> ls = layout(s, d->rule, d->prem.size());
  std::vector<NomId> cutnames;
  if (r.tag == RuleTag::Mc) {
    for (auto& cf : r.cuts) {
      NomId dn = fresh_for({cf}, x.ty);
      cutnames.push_back(dn);
      cf = rename_var_to_nom(cf, x, dn);
    }
  }
  auto sub_names = [&](std::size_t k) {
    std::vector<NomId> out;
    for (long src : ls[k].src)
      out.push_back(src >= 0 ? names[static_cast<std::size_t>(src)]
                             : cutnames[static_cast<std::size_t>(-src - 1)]);
    return out;
  };
  auto plain = [&](std::size_t k) {
    if (ls[k].untouched) return d->prem[k];
    return restrict_derivation(c, d->prem[k], xname, sub_names(k));
  };
  // Kernel-style fresh names in a recomputed unifier could collide with x.
  auto clash_free = [&](const Subst& th) {
    for (const auto& e : th.entries())
      for (const auto& v : free_vars(e.image))
        if (v.name == xname) return false;
    return true;
  };
  auto retry_renamed = [&]() {
    Symbol x2 = c.ns.fresh(xname);
    Subst ren;
    ren.bind(x, var_term(x2, x.ty));
    return restrict_derivation(c, subst_derivation(c, d, ren), x2, names);
  };

  std::vector<Deriv> ps;
  switch (r.tag) {
    case RuleTag::IdPi: {
      std::vector<NomId> avoid = {names[r.idx + 1], names[0]};
      for (NomId m : r.pi.moved()) avoid.push_back(m);
      for (NomId m : r.pi2.moved()) avoid.push_back(m);
      NomId dn = fresh_for({s.hyps[r.idx], s.goal}, x.ty, avoid);
      r.pi = compose(Perm::swap(names[r.idx + 1], dn), r.pi);
      r.pi2 = compose(Perm::swap(names[0], dn), r.pi2);
      break;
    }
    case RuleTag::AllL:
    case RuleTag::ExR: {
      if (!occurs_nom(r.term, a)) {
        r.term = rename_var_to_nom(r.term, x, a);
        ps.push_back(plain(0));
        break;
      }
      // The witness already names a: restrict to a fresh name, then swap.
      const Sequent& pc = d->prem[0]->concl;
      NomId dn = fresh_for({slot(pc, sl)}, x.ty, {a});
      std::vector<NomId> nm = sub_names(0);
      nm[sl] = dn;
      Deriv p1 = restrict_derivation(c, d->prem[0], xname, nm);
      std::vector<Perm> pv(pc.hyps.size() + 1);
      pv[sl] = Perm::swap(a, dn);
      ps.push_back(perm_derivation(c, p1, pv));
      r.term = perm_apply(Perm::swap(a, dn), rename_var_to_nom(r.term, x, dn));
      break;
    }
    case RuleTag::AllR:
    case RuleTag::ExL: {
      // Re-raise over the new support, with a standing in for x.
      const Term& f2 = slot(nc, sl);
      std::vector<NomId> es = support(f2);
      Ty ty2 = raise_type(view(f2).qty, es);
      if (es == r.noms) {
        ps.push_back(plain(0));
        break;
      }
      std::vector<Term> args;
      for (NomId e : es) args.push_back(e == a ? var_term(xname, x.ty) : nom_term(e));
      Subst inner;
      inner.bind(r.var, abstract_noms(apply_head(Head::var(r.var.name, ty2), ty2, args), r.noms));
      Deriv p1 = subst_derivation(c, d->prem[0], inner);
      ps.push_back(restrict_derivation(c, p1, xname, sub_names(0)));
      r.var.ty = ty2;
      r.noms = es;
      break;
    }
    case RuleTag::NabL:
    case RuleTag::NabR: {
      if (r.nom != a) {
        ps.push_back(plain(0));
        break;
      }
      const Term& f = slot(s, sl);
      NomId dn = fresh_for({f}, x.ty, {a});
      std::vector<Perm> pv(d->prem[0]->concl.hyps.size() + 1);
      pv[sl] = Perm::swap(r.nom, dn);
      Deriv p1 = perm_derivation(c, d->prem[0], pv);
      ps.push_back(restrict_derivation(c, p1, xname, sub_names(0)));
      r.nom = dn;
      break;
    }
    case RuleTag::EqL: {
      EqLInfo nw = eql_unify(nc, r.idx);
      if (nw.res.status == UnifyStatus::NotAPattern)
        throw TransformError("restricted equation is not a pattern: " + nw.res.why);
      if (nw.res.status == UnifyStatus::NoUnifier) break;
      if (!clash_free(nw.res.theta)) return retry_renamed();
      EqLInfo old = eql_unify(s, r.idx);
      if (old.res.status != UnifyStatus::Unifier || d->prem.empty())
        throw TransformError("restriction made a failed equation unifiable");
      Subst delta;
      for (const auto& v : nc.sig)
        if (const Term* t = nw.res.theta.find(v.name)) delta.bind_unchecked(v, *t);
      Deriv p1 = via_factor(c, d->prem[0], old.res.theta, delta, s.sig.vars());
      ps.push_back(restrict_derivation(c, p1, xname, sub_names(0)));
      break;
    }
    case RuleTag::DefL: {
      DefLInfo nw = defl_cases(c.th, nc, r.idx);
      if (nw.not_a_pattern) throw TransformError("restricted definition case: " + nw.why);
      for (const auto& ncase : nw.cases)
        if (!clash_free(ncase.theta)) return retry_renamed();
      DefLInfo old = defl_cases(c.th, s, r.idx);
      std::vector<Term> args;
      for (NomId e : nw.cs) args.push_back(e == a ? var_term(xname, x.ty) : nom_term(e));
      r.clauses.clear();
      for (const auto& ncase : nw.cases) {
        std::size_t pos = 0;
        const DefLCase* oc = find_case(old, ncase.clause, &pos);
        if (!oc) throw TransformError("restriction made a new definition case");
        Subst delta;
        for (const auto& v : nc.sig)
          if (const Term* t = ncase.theta.find(v.name)) delta.bind_unchecked(v, *t);
        std::vector<Var> vars = s.sig.vars();
        for (std::size_t i = 0; i < oc->raised.hs.size(); ++i) {
          delta.bind_unchecked(oc->raised.hs[i],
                               raised_image(ncase.raised.hs[i], args, ncase.theta, old.cs));
          vars.push_back(oc->raised.hs[i]);
        }
        Deriv p1 = via_factor(c, d->prem[pos], oc->theta, delta, vars);
        ps.push_back(restrict_derivation(c, p1, xname, sub_names(pos)));
        r.clauses.push_back(ncase.clause);
      }
      break;
    }
    case RuleTag::DefR:
      r.theta = defr_instance(c.th, nc, r.clause);
      ps.push_back(plain(0));
      break;
    default:
      for (std::size_t k = 0; k < d->prem.size(); ++k) ps.push_back(plain(k));
  }
  return rebuild(c, std::move(nc), std::move(r), std::move(ps));
}

// --------------------------------------------------------- support_extend

Deriv support_extend(const Ctx& c, const Deriv& d, const Var& h, std::size_t nargs,
                     const std::vector<NomId>& extra, Var& h_new) {
  h_new = h;
  if (extra.empty()) return d;
  std::vector<Ty> doms = arg_types(h.ty);
  if (nargs > doms.size()) throw TransformError("support_extend: too few arguments");
  Ty tau = arrows(std::vector<Ty>(doms.begin() + static_cast<std::ptrdiff_t>(nargs), doms.end()),
                  result_type(h.ty));
  std::vector<Ty> nd(doms.begin(), doms.begin() + static_cast<std::ptrdiff_t>(nargs));
  std::vector<Var> ys;
  for (NomId e : extra) {
    nd.push_back(nominal_type(e));
    ys.push_back({c.ns.fresh(intern("y")), nominal_type(e)});
  }
  h_new = {c.ns.fresh(h.name), arrows(nd, tau)};

  // \z1..zk. h' z1..zk y1..ym
  std::vector<Term> args;
  for (std::size_t i = 0; i < nargs; ++i)
    args.push_back(eta(Head::bound(static_cast<std::uint32_t>(nargs - 1 - i)), doms[i]));
  for (const auto& y : ys) args.push_back(var_term(y.name, y.ty));
  Term img = apply_head(Head::var(h_new.name, h_new.ty), h_new.ty, args);
  for (std::size_t i = nargs; i-- > 0;) img = mk_lam(doms[i], img);

  Deriv cur = d;
  {
    Subst th;
    th.bind(h, img);
    // The y's join the signature as the images' free variables.
    cur = subst_derivation(c, cur, th);
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const Sequent& s = cur->concl;
    std::vector<NomId> nm;
    for (std::size_t k = 0; k <= s.hyps.size(); ++k) {
      Term f = slot(s, k);
      if (occurs_var(f, ys[i].name)) {
        if (occurs_nom(f, extra[i]))
          throw TransformError("support_extend: " + nominal_name(extra[i]) + " already occurs");
        nm.push_back(extra[i]);
      } else {
        nm.push_back(fresh_for({f}, ys[i].ty));
      }
    }
    cur = restrict_derivation(c, cur, ys[i].name, nm);
  }
  return cur;
}

// --------------------------------------------------------------- driver

TransformOutcome apply_transform(const Theory& th, const Deriv& d, const std::vector<HPStep>& steps) {
  TransformOutcome out;
  NameSupply ns(d);
  Ctx c{th, ns};
  Deriv cur = d;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      const Sequent& s = cur->concl;
      if (auto* w = std::get_if<WeakenStep>(&steps[i])) {
        for (const auto& f : w->delta) {
          Sequent probe{s.sig, {}, f};
          if (auto e = sequent_well_formed(th, probe)) throw TransformError("weaken: " + *e);
        }
        cur = weaken(c, cur, w->delta);
      } else if (auto* st = std::get_if<SubstStep>(&steps[i])) {
        for (const auto& e : st->theta.entries()) {
          const Ty* t = s.sig.type_of(e.var.name);
          if (!t) throw TransformError("subst: " + name_of(e.var.name) + " is not in the signature");
          if (!ty_equal(*t, e.var.ty)) throw TransformError("subst: type mismatch on " + name_of(e.var.name));
        }
        ns.reserve(st->theta);
        cur = subst_derivation(c, cur, st->theta);
      } else if (auto* p = std::get_if<PermStep>(&steps[i])) {
        if (p->perms.size() > s.hyps.size() + 1) throw TransformError("perm: too many permutations");
        cur = perm_derivation(c, cur, p->perms);
      } else if (auto* r = std::get_if<RestrictStep>(&steps[i])) {
        cur = restrict_derivation(c, cur, r->x, r->names);
      }
    } catch (const TransformError& e) {
      out.ok = false;
      out.failed_step = i;
      out.why = e.what();
      return out;
    } catch (const TypeError& e) {
      out.ok = false;
      out.failed_step = i;
      out.why = e.what();
      return out;
    }
  }
  out.result = cur;
  return out;
}

}  // namespace lg
