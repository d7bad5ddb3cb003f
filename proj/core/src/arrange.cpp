// List bookkeeping for transformations: reordering hypotheses, growing the
// signature, and fitting a derivation to the sequent a rule expects.

#include <set>

#include "lg/printer.hpp"
#include "lg/transform.hpp"

namespace lg {

namespace {

void walk_reserve(NameSupply& ns, const Deriv& d, std::set<const DNode*>& seen) {
  if (!seen.insert(d.get()).second) return;
  ns.reserve(d->concl.sig);
  for (const auto& h : d->concl.hyps) ns.reserve(h);
  ns.reserve(d->concl.goal);
  const Rule& r = d->rule;
  if (r.var.ty) ns.reserve(r.var.name);
  if (r.term) ns.reserve(r.term);
  for (const auto& t : r.cuts) ns.reserve(t);
  ns.reserve(r.theta);
  for (const auto& p : d->prem) walk_reserve(ns, p, seen);
}

// order[i] = index in `from` of to[i], pairing equal formulas greedily.
bool match_order(const std::vector<Term>& from, const std::vector<Term>& to,
                 std::vector<std::size_t>& order) {
  if (from.size() != to.size()) return false;
  std::vector<bool> used(from.size(), false);
  order.assign(to.size(), 0);
  for (std::size_t i = 0; i < to.size(); ++i) {
    bool found = false;
    for (std::size_t k = 0; k < from.size() && !found; ++k) {
      if (!used[k] && term_equal(from[k], to[i])) {
        used[k] = true;
        order[i] = k;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_identity(const std::vector<std::size_t>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != i) return false;
  return true;
}

bool subst_equal(const Subst& a, const Subst& b) {
  auto ea = a.entries(), eb = b.entries();
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i].var.name != eb[i].var.name || !term_equal(ea[i].image, eb[i].image)) return false;
  return true;
}

// Rewrites a premise derived under the unifier `old_theta` into one under
// `delta`, which must be an instance of it on `vars`.
Deriv adapt(const Ctx& c, const Deriv& p, const Subst& old_theta, const Subst& delta,
            const std::vector<Var>& vars) {
  if (subst_equal(old_theta, delta)) return p;
  Subst sigma;
  if (!factor_through(old_theta, delta, vars, sigma))
    throw TransformError("recomputed unifier is not an instance of the original");
  return subst_derivation(c, p, sigma);
}

}  // namespace

void NameSupply::reserve(const Signature& s) {
  for (const auto& v : s) used_.insert(v.name);
}

void NameSupply::reserve(const Term& t) {
  for (const auto& v : free_vars(t)) used_.insert(v.name);
}

void NameSupply::reserve(const Subst& s) {
  for (const auto& e : s.entries()) {
    used_.insert(e.var.name);
    reserve(e.image);
  }
}

void NameSupply::reserve(const Deriv& d) {
  std::set<const DNode*> seen;
  walk_reserve(*this, d, seen);
}

Symbol NameSupply::fresh(Symbol base) {
  std::string root = name_of(base);
  root = root.substr(0, root.find('\''));
  if (root.empty()) root = "v";
  for (;;) {
    Symbol s = intern(root + "'" + std::to_string(++counter_));
    if (used_.insert(s).second) return s;
  }
}

Deriv rebuild(const Ctx& c, Sequent concl, Rule rule, std::vector<Deriv> prem) {
  Expected e = expected_premises(c.th, concl, rule);
  if (!e.ok) throw TransformError(std::string(rule_name(rule.tag)) + ": " + e.why);
  if (e.prem.size() != prem.size())
    throw TransformError(std::string(rule_name(rule.tag)) + ": premise count changed");
  for (std::size_t i = 0; i < prem.size(); ++i) prem[i] = fit(c, prem[i], e.prem[i]);
  return mk_node(std::move(concl), std::move(rule), std::move(prem));
}

Deriv arrange(const Theory& th, const Deriv& d, const std::vector<std::size_t>& order) {
  if (is_identity(order)) return d;
  const std::size_t n = d->concl.hyps.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[order[i]] = i;
  Sequent nc = d->concl;
  for (std::size_t i = 0; i < n; ++i) nc.hyps[i] = d->concl.hyps[order[i]];
  Rule r = d->rule;
  if (is_left_rule(r.tag) || r.tag == RuleTag::IdPi) r.idx = inv[r.idx];
  if (r.tag == RuleTag::Mc)
    for (std::size_t i = 0; i < n; ++i) r.part[i] = d->rule.part[order[i]];
  Expected e = expected_premises(th, nc, r);
  if (!e.ok || e.prem.size() != d->prem.size())
    throw TransformError("reordering broke rule " + std::string(rule_name(r.tag)));
  std::vector<Deriv> ps;
  for (std::size_t k = 0; k < d->prem.size(); ++k) {
    std::vector<std::size_t> o2;
    const Sequent& old = d->prem[k]->concl;
    if (!(old.sig == e.prem[k].sig) || !term_equal(old.goal, e.prem[k].goal) ||
        !match_order(old.hyps, e.prem[k].hyps, o2))
      throw TransformError("reordered premise does not match");
    ps.push_back(arrange(th, d->prem[k], o2));
  }
  return mk_node(std::move(nc), std::move(r), std::move(ps));
}

Deriv fit(const Ctx& c, const Deriv& d, const Sequent& target) {
  const Sequent& s = d->concl;
  if (seq_equal(s, target)) return d;
  if (!term_equal(s.goal, target.goal))
    throw TransformError("goal " + show_formula(s.goal) + " does not fit " +
                         show_formula(target.goal));
  Signature extra;
  for (const auto& v : target.sig) {
    if (const Ty* t = s.sig.type_of(v.name)) {
      if (!ty_equal(*t, v.ty)) throw TransformError("signature type clash on " + name_of(v.name));
    } else {
      extra.add(v);
    }
  }
  for (const auto& v : s.sig)
    if (!target.sig.contains(v.name))
      throw TransformError("cannot drop eigenvariable " + name_of(v.name) + " to fit " +
                           show_sequent(target));
  Deriv e = extra.empty() ? d : extend_sig(c, d, extra);
  std::vector<std::size_t> order;
  if (!match_order(e->concl.hyps, target.hyps, order))
    throw TransformError("hypotheses of " + show_sequent(s) + " do not fit " +
                         show_sequent(target));
  return arrange(c.th, e, order);
}

Deriv extend_sig(const Ctx& c, const Deriv& d, const Signature& extra) {
  if (extra.empty()) return d;
  Sequent nc = d->concl;
  nc.sig = d->concl.sig.merged(extra);
  Rule r = d->rule;
  std::vector<Deriv> ps;
  switch (r.tag) {
    case RuleTag::AllR:
    case RuleTag::ExL: {
      Deriv p = d->prem[0];
      if (extra.contains(r.var.name)) {
        Symbol h2 = c.ns.fresh(r.var.name);
        Subst s;
        s.bind(r.var, var_term(h2, r.var.ty));
        p = subst_derivation(c, p, s);
        r.var.name = h2;
      }
      ps.push_back(extend_sig(c, p, extra));
      break;
    }
    case RuleTag::NatL:
      ps = {d->prem[0], d->prem[1], extend_sig(c, d->prem[2], extra)};
      break;
    case RuleTag::EqL: {
      EqLInfo nw = eql_unify(nc, r.idx);
      if (nw.res.status != UnifyStatus::Unifier) throw TransformError("eqL changed under extension");
      EqLInfo old = eql_unify(d->concl, r.idx);
      Deriv p = adapt(c, d->prem[0], old.res.theta, nw.res.theta, d->concl.sig.vars());
      ps.push_back(extend_sig(c, p, extra));
      break;
    }
    case RuleTag::DefL: {
      DefLInfo old = defl_cases(c.th, d->concl, r.idx);
      DefLInfo nw = defl_cases(c.th, nc, r.idx);
      if (nw.not_a_pattern || nw.cases.size() != old.cases.size())
        throw TransformError("defL changed under extension");
      for (std::size_t k = 0; k < nw.cases.size(); ++k) {
        const DefLCase& oc = old.cases[k];
        const DefLCase& ncase = nw.cases[k];
        Subst delta;
        std::vector<Var> vars = d->concl.sig.vars();
        for (const auto& v : d->concl.sig)
          if (const Term* t = ncase.theta.find(v.name)) delta.bind_unchecked(v, *t);
        for (std::size_t i = 0; i < oc.raised.hs.size(); ++i) {
          const Var& hn = ncase.raised.hs[i];
          const Term* t = ncase.theta.find(hn.name);
          delta.bind_unchecked(oc.raised.hs[i], t ? *t : var_term(hn.name, hn.ty));
          vars.push_back(oc.raised.hs[i]);
        }
        Deriv p = adapt(c, d->prem[k], oc.theta, delta, vars);
        ps.push_back(extend_sig(c, p, extra));
      }
      break;
    }
    default:
      for (const auto& p : d->prem) ps.push_back(extend_sig(c, p, extra));
  }
  return rebuild(c, std::move(nc), std::move(r), std::move(ps));
}

}  // namespace lg
