#include <functional>

#include "kit.hpp"

namespace lgt {

namespace {

class Search {
 public:
  explicit Search(const Theory& th) : th_(th) {}

  std::optional<Deriv> prove(const Sequent& s, int depth) {
    if (auto d = closer(s)) return d;
    if (depth <= 0) return std::nullopt;
    for (Rule& r : candidates(s)) {
      Expected e = expected_premises(th_, s, r);
      if (!e.ok) continue;
      if (auto d = all(s, r, e.prem, depth - 1)) return d;
    }
    return std::nullopt;
  }

 private:
  std::optional<Deriv> all(const Sequent& s, const Rule& r, const std::vector<Sequent>& prem, int depth) {
    std::vector<Deriv> ps;
    for (const auto& p : prem) {
      auto d = prove(p, depth);
      if (!d) return std::nullopt;
      ps.push_back(*d);
    }
    return mk_node(s, r, std::move(ps));
  }

  std::optional<Deriv> closer(const Sequent& s) {
    FView g = view(s.goal);
    if (g.kind == FKind::Top) return mk_node(s, Rule::make(RuleTag::TopR), {});
    if (g.kind == FKind::Eq && term_equal(g.l, g.r)) return mk_node(s, Rule::make(RuleTag::EqR), {});
    for (std::size_t j = 0; j < s.hyps.size(); ++j) {
      if (view(s.hyps[j]).kind == FKind::Bot) {
        Rule r = Rule::make(RuleTag::BotL);
        r.idx = j;
        return mk_node(s, r, {});
      }
      Perm p;
      if (perm_match(s.hyps[j], s.goal, p)) {
        Rule r = Rule::make(RuleTag::IdPi);
        r.idx = j;
        r.pi = p;
        return mk_node(s, r, {});
      }
    }
    return std::nullopt;
  }

  Symbol fresh(const Signature& sig) {
    for (;;) {
      Symbol x = intern("S" + std::to_string(++counter_));
      if (!sig.contains(x) && !th_.const_type(x)) return x;
    }
  }

  // Closed witnesses of a quantifier type: signature variables of that type
  // and nullary constants.
  std::vector<Term> witnesses(const Signature& sig, const Ty& ty) {
    std::vector<Term> out;
    for (const auto& v : sig)
      if (ty_equal(v.ty, ty)) out.push_back(var_term(v.name, v.ty));
    if (ty->arrow) return out;
    if (ty_equal(ty, nat_type())) out.push_back(nat_zero());
    for (const auto& [c, t] : th_.consts())
      if (!t->arrow && ty_equal(t, ty) && !th_.is_predicate(c)) out.push_back(const_term(c, t));
    return out;
  }

  std::vector<Rule> candidates(const Sequent& s) {
    std::vector<Rule> out;
    FView g = view(s.goal);
    auto add = [&](RuleTag t) {
      out.push_back(Rule::make(t));
      return &out.back();
    };
    switch (g.kind) {
      case FKind::And: add(RuleTag::AndR); break;
      case FKind::Or:
        add(RuleTag::OrR);
        add(RuleTag::OrR)->choice = 2;
        break;
      case FKind::Imp: add(RuleTag::ImpR); break;
      case FKind::Nabla: add(RuleTag::NabR)->nom = fresh_nominal(g.qty, [&](NomId c) { return occurs_nom(s.goal, c); }); break;
      case FKind::Forall: {
        Rule* r = add(RuleTag::AllR);
        r->noms = support(s.goal);
        r->var = {fresh(s.sig), raise_type(g.qty, r->noms)};
        break;
      }
      case FKind::Exists:
        for (const auto& w : witnesses(s.sig, g.qty)) add(RuleTag::ExR)->term = w;
        break;
      case FKind::Nat: add(RuleTag::NatR); break;
      case FKind::Atom:
        for (std::size_t c : th_.clauses_for(g.pred)) {
          Rule r = Rule::make(RuleTag::DefR);
          if (defr_instance(s, c, r)) out.push_back(r);
        }
        break;
      default: break;
    }
    for (std::size_t j = 0; j < s.hyps.size(); ++j) {
      FView h = view(s.hyps[j]);
      auto left = [&](RuleTag t) {
        Rule* r = add(t);
        r->idx = j;
        return r;
      };
      switch (h.kind) {
        case FKind::And:
          left(RuleTag::AndL);
          left(RuleTag::AndL)->choice = 2;
          break;
        case FKind::Or: left(RuleTag::OrL); break;
        case FKind::Imp: left(RuleTag::ImpL); break;
        case FKind::Nabla:
          left(RuleTag::NabL)->nom =
              fresh_nominal(h.qty, [&](NomId c) { return occurs_nom(s.hyps[j], c); });
          break;
        case FKind::Exists: {
          Rule* r = left(RuleTag::ExL);
          r->noms = support(s.hyps[j]);
          r->var = {fresh(s.sig), raise_type(h.qty, r->noms)};
          break;
        }
        case FKind::Forall:
          for (const auto& w : witnesses(s.sig, h.qty)) left(RuleTag::AllL)->term = w;
          break;
        case FKind::Eq: left(RuleTag::EqL); break;
        case FKind::Atom: {
          DefLInfo info = defl_cases(th_, s, j);
          if (info.not_a_pattern || !th_.is_predicate(h.pred) || th_.clauses_for(h.pred).empty()) break;
          Rule* r = left(RuleTag::DefL);
          for (const auto& c : info.cases) r->clauses.push_back(c.clause);
          break;
        }
        default: break;
      }
    }
    return out;
  }

  bool defr_instance(const Sequent& s, std::size_t clause, Rule& r) {
    RaisedClause rc = defr_raised(th_, s, clause);
    std::vector<NomId> cs = support(s.goal);
    UnifyResult u = match(abstract_noms(rc.head, cs), abstract_noms(s.goal, cs),
                          [&](Symbol x) { return s.sig.contains(x); });
    if (u.status != UnifyStatus::Unifier) return false;
    r.clause = clause;
    for (const auto& h : rc.hs) {
      const Term* img = u.theta.find(h.name);
      if (!img) return false;
      r.theta.bind(h, *img);
    }
    return true;
  }

  const Theory& th_;
  std::size_t counter_ = 0;
};

}  // namespace

std::optional<Deriv> bounded_search(const Theory& th, const Sequent& s, int depth) {
  Search srch(th);
  for (int d = 0; d <= depth; ++d)
    if (auto r = srch.prove(s, d)) return r;
  return std::nullopt;
}

}  // namespace lgt
