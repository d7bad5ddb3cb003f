#include "lg/theory.hpp"

#include <algorithm>
#include <set>

namespace lg {

void Theory::declare_const(Symbol name, const Ty& ty) {
  if (is_logical_symbol(name) || name == zero_symbol() || name == succ_symbol())
    throw TypeError("'" + name_of(name) + "' is reserved");
  auto [it, ins] = consts_.emplace(name, ty);
  if (!ins && !ty_equal(it->second, ty))
    throw TypeError("constant '" + name_of(name) + "' redeclared at type " + show_type(ty));
}

void Theory::declare_level(Symbol pred, int level) {
  if (level < 0) throw TypeError("negative level for '" + name_of(pred) + "'");
  if (!is_predicate(pred)) throw TypeError("level for non-predicate '" + name_of(pred) + "'");
  if (!declared_.emplace(pred, level).second)
    throw TypeError("level of '" + name_of(pred) + "' declared twice");
}

std::size_t Theory::add_clause(Clause c) {
  c.id = clauses_.size();
  clauses_.push_back(std::move(c));
  return clauses_.back().id;
}

const Ty* Theory::const_type(Symbol name) const {
  auto it = consts_.find(name);
  return it == consts_.end() ? nullptr : &it->second;
}

bool Theory::is_predicate(Symbol name) const {
  const Ty* t = const_type(name);
  return t && ty_equal(result_type(*t), prop_type());
}

std::vector<std::size_t> Theory::clauses_for(Symbol pred) const {
  std::vector<std::size_t> out;
  for (const auto& c : clauses_)
    if (c.pred == pred) out.push_back(c.id);
  return out;
}

int Theory::pred_level(Symbol pred) const {
  if (auto it = declared_.find(pred); it != declared_.end()) return it->second;
  if (auto it = inferred_.find(pred); it != inferred_.end()) return it->second;
  return 0;
}

int formula_level(const Term& f, const std::function<int(Symbol)>& pl) {
  FView v = view(f);
  switch (v.kind) {
    case FKind::Bot:
    case FKind::Top:
    case FKind::Eq:
    case FKind::Nat: return 0;
    case FKind::Atom: return pl(v.pred);
    case FKind::And:
    case FKind::Or: return std::max(formula_level(v.l, pl), formula_level(v.r, pl));
    case FKind::Imp:
      return std::max(formula_level(v.l, pl) + 1, formula_level(v.r, pl));
    case FKind::Forall:
    case FKind::Exists:
    case FKind::Nabla: {
      // Levels ignore terms, so any instance of the body will do.
      Term inst = instantiate_body(v.l, eta(Head::var(intern("$lvl"), v.qty), v.qty));
      return formula_level(inst, pl);
    }
  }
  return 0;
}

int Theory::level(const Term& f) const {
  return formula_level(f, [this](Symbol p) { return pred_level(p); });
}

bool Theory::infer_levels(std::string* why) {
  std::map<Symbol, int> cur;
  std::set<Symbol> preds;
  for (const auto& c : clauses_) preds.insert(c.pred);
  for (Symbol p : preds)
    if (!declared_.count(p)) cur[p] = 0;
  int ceiling = 0, depth = 0;
  for (auto& [p, l] : declared_) ceiling = std::max(ceiling, l);
  for (const auto& c : clauses_)
    depth = std::max(depth, formula_level(c.body, [](Symbol) { return 0; }));
  // The least assignment never climbs more than `depth` per predicate along
  // a dependency chain, so exceeding this means a cycle through an
  // implication.
  const int bound = ceiling + static_cast<int>(preds.size() + 1) * (depth + 1);
  auto pl = [&](Symbol p) {
    if (auto it = declared_.find(p); it != declared_.end()) return it->second;
    if (auto it = cur.find(p); it != cur.end()) return it->second;
    return 0;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& c : clauses_) {
      if (declared_.count(c.pred)) continue;
      int need = formula_level(c.body, pl);
      if (need > cur[c.pred]) {
        cur[c.pred] = need;
        changed = true;
        if (need > bound) {
          if (why) *why = "no stratifying level exists for '" + name_of(c.pred) + "'";
          return false;
        }
      }
    }
  }
  inferred_ = std::move(cur);
  return true;
}

std::vector<StratIssue> Theory::stratify() const {
  std::vector<StratIssue> out;
  for (const auto& c : clauses_) {
    const std::string p = name_of(c.pred);
    if (c.head->has_nom || c.body->has_nom) {
      std::vector<NomId> s = support(c.head);
      support_into(c.body, s);
      out.push_back({c.id, "clause for '" + p + "' mentions nominal constant '" +
                               nominal_name(s.front()) + "'"});
    }
    for (const auto& x : c.vars)
      if (!occurs_var(c.head, x.name))
        out.push_back({c.id, "clause variable '" + name_of(x.name) +
                                 "' does not occur in the head of '" + p + "'"});
    int lb = level(c.body), lp = pred_level(c.pred);
    if (lb > lp)
      out.push_back({c.id, "clause for '" + p + "' has body level " + std::to_string(lb) +
                               " above the level " + std::to_string(lp) + " of '" + p + "'"});
  }
  return out;
}

TypeEnv Theory::env(const Signature* sig) const {
  TypeEnv e;
  if (sig) e.var = [sig](Symbol x) { return sig->type_of(x); };
  e.cnst = [this](Symbol x) -> const Ty* {
    if (x == zero_symbol() || x == succ_symbol()) {
      static const Ty z = nat_type(), s = arrow(nat_type(), nat_type());
      return x == zero_symbol() ? &z : &s;
    }
    return const_type(x);
  };
  return e;
}

RaisedClause raise_clause(const Clause& c, const std::vector<NomId>& cs,
                          const std::function<bool(Symbol)>& taken, const std::string& stem,
                          std::size_t* counter) {
  RaisedClause r;
  std::map<Symbol, Term> img;
  for (const auto& x : c.vars) {
    Symbol h;
    do {
      h = intern(stem + std::to_string((*counter)++));
    } while (taken(h));
    Ty hty = raise_type(x.ty, cs);
    r.hs.push_back({h, hty});
    std::vector<Term> args;
    for (NomId n : cs) args.push_back(nom_term(n));
    img[x.name] = apply_head(Head::var(h, hty), hty, std::move(args));
  }
  auto look = [&](Symbol s) -> const Term* {
    auto it = img.find(s);
    return it == img.end() ? nullptr : &it->second;
  };
  r.head = replace_vars(c.head, look);
  r.body = replace_vars(c.body, look);
  return r;
}

}  // namespace lg
