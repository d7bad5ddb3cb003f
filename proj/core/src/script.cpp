#include "lg/script.hpp"

#include "lg/cut.hpp"
#include "lg/printer.hpp"

#include <algorithm>

namespace lg {

namespace {

Symbol fresh_var(const Theory& th, const Signature& sig, const std::string& stem) {
  for (std::size_t k = 1;; ++k) {
    Symbol s = intern(stem + std::to_string(k));
    if (!sig.contains(s) && !th.const_type(s)) return s;
  }
}

NomId fresh_for(const Ty& ty, const Term& f) {
  return fresh_nominal(ty, [&](NomId c) { return occurs_nom(f, c); });
}

bool find_id(const Sequent& s, std::size_t j, Rule& r) {
  Perm p;
  if (j >= s.hyps.size() || !perm_match(s.hyps[j], s.goal, p)) return false;
  r = Rule::make(RuleTag::IdPi);
  r.idx = j;
  r.pi = p;
  return true;
}

class Elaborator {
 public:
  explicit Elaborator(const Module& m) : m_(m), ns_(), c_{m.th, ns_} {}

  Deriv run(const Sequent& s, const SExpr& e) {
    if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Sym)
      fail(e, "expected a rule application");
    Args a{e, 1};
    const std::string& cmd = e.items[0].text;
    const Theory& th = m_.th;

    if (cmd == "auto") {
      a.done(0);
      return auto_prove(th, s, e.line, e.col);
    }
    if (cmd == "cut") {
      Term b = formula(s.sig, a.str());
      a.done(2);
      Deriv l = run(Sequent{s.sig, s.hyps, b}, a.prem(0));
      Sequent rs = s;
      rs.hyps.push_back(b);
      Deriv r = run(rs, a.prem(1));
      ns_.reserve(l);
      ns_.reserve(r);
      try {
        return finish(c_, make_mc(c_, {l}, {b}, r), s);
      } catch (const TransformError& ex) {
        fail(e, std::string("cut: ") + ex.what());
      }
    }

    RuleTag tag;
    if (!rule_from_name(cmd, tag) || tag == RuleTag::Mc) fail(e, "unknown rule '" + cmd + "'");
    Rule r = Rule::make(tag);
    auto principal = [&]() -> const Term& {
      if (is_left_rule(tag)) {
        if (r.idx >= s.hyps.size()) fail(e, "hypothesis index out of range");
        return s.hyps[r.idx];
      }
      return s.goal;
    };

    switch (tag) {
      case RuleTag::IdPi: {
        if (a.has_int()) {
          std::size_t j = static_cast<std::size_t>(a.num());
          if (!find_id(s, j, r)) fail(e, "hypothesis " + std::to_string(j) + " does not match the goal");
        } else {
          bool ok = false;
          for (std::size_t j = 0; j < s.hyps.size() && !ok; ++j) ok = find_id(s, j, r);
          if (!ok) fail(e, "no hypothesis matches the goal");
        }
        break;
      }
      case RuleTag::AndL:
        r.idx = a.index();
        r.choice = static_cast<int>(a.num());
        break;
      case RuleTag::OrR: r.choice = static_cast<int>(a.num()); break;
      case RuleTag::AllL:
      case RuleTag::ExR: {
        if (tag == RuleTag::AllL) r.idx = a.index();
        FView v = view(principal());
        if (v.kind != (tag == RuleTag::AllL ? FKind::Forall : FKind::Exists)) fail(e, "not a quantifier");
        r.term = term(s.sig, a.str(), v.qty, a.last);
        break;
      }
      case RuleTag::AllR:
      case RuleTag::ExL: {
        if (tag == RuleTag::ExL) r.idx = a.index();
        const Term& f = principal();
        FView v = view(f);
        if (v.kind != (tag == RuleTag::AllR ? FKind::Forall : FKind::Exists)) fail(e, "not a quantifier");
        Symbol h = a.has_sym() ? intern(a.sym()) : fresh_var(th, s.sig, "H");
        r.noms = support(f);
        r.var = {h, raise_type(v.qty, r.noms)};
        break;
      }
      case RuleTag::NabL:
      case RuleTag::NabR: {
        if (tag == RuleTag::NabL) r.idx = a.index();
        const Term& f = principal();
        FView v = view(f);
        if (v.kind != FKind::Nabla) fail(e, "not a nabla formula");
        if (a.has_sym()) {
          std::string n = a.sym();
          if (!find_nominal(n, r.nom)) fail(a.last, "unknown nominal constant '" + n + "'");
        } else {
          r.nom = fresh_for(v.qty, f);
        }
        break;
      }
      case RuleTag::DefL: {
        r.idx = a.index();
        DefLInfo info = defl_cases(th, s, r.idx);
        if (info.not_a_pattern) fail(e, "definition case is not a pattern: " + info.why);
        for (const auto& c : info.cases) r.clauses.push_back(c.clause);
        break;
      }
      case RuleTag::DefR: {
        FView g = view(s.goal);
        if (g.kind != FKind::Atom) fail(e, "goal is not an atom");
        std::vector<std::size_t> ids = th.clauses_for(g.pred);
        bool given = a.has_int();
        std::size_t k = given ? static_cast<std::size_t>(a.num()) : 0;
        bool found = false;
        for (std::size_t i = given ? k : 0; i < ids.size() && !found; ++i) {
          found = defr_instance(s, ids[i], r);
          if (given) break;
        }
        if (!found) fail(e, given ? "clause " + std::to_string(k) + " does not match the goal"
                                  : "no clause matches the goal");
        break;
      }
      case RuleTag::NatL: {
        r.idx = a.index();
        Ty it = arrow(nat_type(), prop_type());
        r.term = term(Signature{}, a.str(), it, a.last);
        r.var = {a.has_sym() ? intern(a.sym()) : intern("n"), nat_type()};
        break;
      }
      default:
        if (is_left_rule(tag)) r.idx = a.index();
        break;
    }

    Expected ex = expected_premises(th, s, r);
    if (!ex.ok) fail(e, std::string(rule_name(tag)) + ": " + ex.why);
    a.done(ex.prem.size());
    std::vector<Deriv> prem;
    for (std::size_t i = 0; i < ex.prem.size(); ++i) prem.push_back(run(ex.prem[i], a.prem(i)));
    return mk_node(s, r, std::move(prem));
  }

 private:
  struct Args {
    const SExpr& e;
    std::size_t pos;
    SExpr last{};

    const SExpr* peek() const { return pos < e.items.size() ? &e.items[pos] : nullptr; }
    bool has_int() const { return peek() && peek()->kind == SExpr::Kind::Int; }
    bool has_sym() const { return peek() && peek()->kind == SExpr::Kind::Sym; }
    const SExpr& take(SExpr::Kind k, const char* what) {
      if (!peek() || peek()->kind != k) {
        const SExpr& at = peek() ? *peek() : e;
        throw ScriptError(std::string("expected ") + what, at.line, at.col);
      }
      last = e.items[pos];
      return e.items[pos++];
    }
    long long num() { return take(SExpr::Kind::Int, "an integer").num; }
    std::size_t index() {
      long long n = num();
      if (n < 0) throw ScriptError("negative index", last.line, last.col);
      return static_cast<std::size_t>(n);
    }
    std::string str() { return take(SExpr::Kind::Str, "a quoted term").text; }
    std::string sym() { return take(SExpr::Kind::Sym, "a name").text; }
    void done(std::size_t nprem) {
      std::size_t have = e.items.size() - pos;
      for (std::size_t i = pos; i < e.items.size(); ++i)
        if (e.items[i].kind != SExpr::Kind::List)
          throw ScriptError("unexpected argument", e.items[i].line, e.items[i].col);
      if (have != nprem)
        throw ScriptError("rule '" + e.items[0].text + "' has " + std::to_string(nprem) + " premises, script gives " +
                              std::to_string(have),
                          e.line, e.col);
    }
    const SExpr& prem(std::size_t i) const { return e.items[pos + i]; }
  };

  [[noreturn]] static void fail(const SExpr& at, const std::string& msg) {
    throw ScriptError(msg, at.line, at.col);
  }

  Term formula(const Signature& sig, const std::string& src) {
    try {
      return parse_formula(m_, sig, src);
    } catch (const ParseError& ex) {
      throw ScriptError(std::string("in quoted formula: ") + ex.what(), 0, 0);
    }
  }
  Term term(const Signature& sig, const std::string& src, const Ty& ty, const SExpr& at) {
    try {
      return parse_term(m_, sig, src, &ty);
    } catch (const ParseError& ex) {
      fail(at, std::string("in quoted term: ") + ex.what());
    }
  }

  bool defr_instance(const Sequent& s, std::size_t clause, Rule& r) {
    RaisedClause rc = defr_raised(m_.th, s, clause);
    std::vector<NomId> cs = support(s.goal);
    UnifyResult u = match(abstract_noms(rc.head, cs), abstract_noms(s.goal, cs),
                          [&](Symbol x) { return s.sig.contains(x); });
    if (u.status != UnifyStatus::Unifier) return false;
    r.clause = clause;
    r.theta = Subst{};
    for (const auto& h : rc.hs) {
      const Term* img = u.theta.find(h.name);
      if (!img) return false;
      r.theta.bind(h, *img);
    }
    return true;
  }

  const Module& m_;
  NameSupply ns_;
  Ctx c_;
};

// ------------------------------------------------------------ auto

class Auto {
 public:
  Auto(const Theory& th, int line, int col) : th_(th), line_(line), col_(col) {}

  Deriv prove(const Sequent& s, int depth) {
    if (depth > 256) stuck(s, "depth limit");
    Rule r;
    FView g = view(s.goal);
    if (g.kind == FKind::Top) return leaf(s, Rule::make(RuleTag::TopR));
    if (g.kind == FKind::Eq && term_equal(g.l, g.r)) return leaf(s, Rule::make(RuleTag::EqR));
    for (std::size_t j = 0; j < s.hyps.size(); ++j) {
      if (view(s.hyps[j]).kind == FKind::Bot) {
        r = Rule::make(RuleTag::BotL);
        r.idx = j;
        return leaf(s, r);
      }
      if (find_id(s, j, r)) return leaf(s, r);
    }
    switch (g.kind) {
      case FKind::Imp: return step(s, Rule::make(RuleTag::ImpR), depth);
      case FKind::And: return step(s, Rule::make(RuleTag::AndR), depth);
      case FKind::Forall: {
        r = Rule::make(RuleTag::AllR);
        r.noms = support(s.goal);
        r.var = {fresh_var(th_, s.sig, "H"), raise_type(g.qty, r.noms)};
        return step(s, r, depth);
      }
      case FKind::Nabla:
        r = Rule::make(RuleTag::NabR);
        r.nom = fresh_for(g.qty, s.goal);
        return step(s, r, depth);
      default: break;
    }
    for (std::size_t j = 0; j < s.hyps.size(); ++j) {
      FView v = view(s.hyps[j]);
      r = Rule::make(RuleTag::TopR);
      r.idx = j;
      switch (v.kind) {
        case FKind::And: {
          // Both components: contract, then take one from each copy.
          Sequent s1 = s;
          s1.hyps.insert(s1.hyps.begin() + static_cast<std::ptrdiff_t>(j) + 1, s.hyps[j]);
          Sequent s2 = s1;
          s2.hyps[j] = v.l;
          Sequent s3 = s2;
          s3.hyps[j + 1] = v.r;
          Rule a1 = Rule::make(RuleTag::AndL), a2 = a1, cl = Rule::make(RuleTag::CL);
          a1.idx = cl.idx = j;
          a2.idx = j + 1;
          a2.choice = 2;
          Deriv top = prove(s3, depth + 1);
          return mk_node(s, cl, {mk_node(s1, a1, {mk_node(s2, a2, {top})})});
        }
        case FKind::Or: r.tag = RuleTag::OrL; return step(s, r, depth);
        case FKind::Exists:
          r.tag = RuleTag::ExL;
          r.noms = support(s.hyps[j]);
          r.var = {fresh_var(th_, s.sig, "H"), raise_type(v.qty, r.noms)};
          return step(s, r, depth);
        case FKind::Nabla:
          r.tag = RuleTag::NabL;
          r.nom = fresh_for(v.qty, s.hyps[j]);
          return step(s, r, depth);
        case FKind::Eq: {
          r.tag = RuleTag::EqL;
          Expected ex = expected_premises(th_, s, r);
          if (ex.ok) return step(s, r, depth);
          break;
        }
        default: break;
      }
    }
    stuck(s, "no invertible rule applies");
  }

 private:
  Deriv leaf(const Sequent& s, const Rule& r) { return mk_node(s, r, {}); }
  Deriv step(const Sequent& s, const Rule& r, int depth) {
    Expected ex = expected_premises(th_, s, r);
    if (!ex.ok) stuck(s, ex.why);
    std::vector<Deriv> prem;
    for (const auto& p : ex.prem) prem.push_back(prove(p, depth + 1));
    return mk_node(s, r, std::move(prem));
  }
  [[noreturn]] void stuck(const Sequent& s, const std::string& why) {
    throw ScriptError("auto is stuck on " + show_sequent(s) + ": " + why, line_, col_);
  }

  const Theory& th_;
  int line_, col_;
};

}  // namespace

Deriv elaborate_script(const Module& m, const Sequent& goal, const SExpr& script) {
  Elaborator e(m);
  return e.run(goal, script);
}

Deriv auto_prove(const Theory& th, const Sequent& s, int line, int col) {
  return Auto(th, line, col).prove(s, 0);
}

}  // namespace lg
