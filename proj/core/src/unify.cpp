#include "lg/unify.hpp"

#include <deque>
#include <map>
#include <set>

namespace lg {

const char* status_name(UnifyStatus s) {
  switch (s) {
    case UnifyStatus::Unifier: return "unifier";
    case UnifyStatus::NoUnifier: return "no-unifier";
    case UnifyStatus::NotAPattern: return "not-a-pattern";
  }
  return "?";
}

bool as_bound(const Term& a, std::uint32_t& idx) {
  std::uint32_t m = 0;
  const TermNode* cur = a.get();
  while (cur->lam) {
    cur = cur->body.get();
    ++m;
  }
  if (cur->head.kind != HeadKind::Bound || cur->head.id < m || cur->args.size() != m)
    return false;
  for (std::uint32_t j = 0; j < m; ++j) {
    std::uint32_t k;
    if (!as_bound(cur->args[j], k) || k != m - 1 - j) return false;
  }
  idx = cur->head.id - m;
  return true;
}

namespace {

bool is_flex(const Term& t, const std::function<bool(Symbol)>& rigid) {
  return !t->lam && t->head.kind == HeadKind::Var && !(rigid && rigid(t->head.id));
}

bool pattern_args(const Term& t, std::vector<std::uint32_t>* out) {
  std::set<std::uint32_t> seen;
  for (const auto& a : t->args) {
    std::uint32_t i;
    if (!as_bound(a, i) || !seen.insert(i).second) return false;
    if (out) out->push_back(i);
  }
  return true;
}

enum class Build { Ok, Fail, Pruned };

class Solver {
 public:
  explicit Solver(const UnifyOptions& o) : opts_(o) {}

  void note_names(const Term& t) {
    for (const auto& v : free_vars(t)) {
      names_.insert(v.name);
      if (!(opts_.rigid && opts_.rigid(v.name))) problem_vars_.emplace(v.name, Var{v.name, v.ty});
    }
  }

  UnifyResult run(const std::vector<std::pair<Term, Term>>& eqs) {
    UnifyResult r;
    for (const auto& [s, t] : eqs) {
      if (!is_pattern(s, opts_.rigid) || !is_pattern(t, opts_.rigid)) {
        r.status = UnifyStatus::NotAPattern;
        r.why = "a flexible variable is applied to something other than distinct bound variables";
        return r;
      }
      work_.push_back({s, t, 0});
    }
    while (!work_.empty()) {
      Eq e = work_.front();
      work_.pop_front();
      std::string why;
      if (!step(e, why)) {
        r.status = UnifyStatus::NoUnifier;
        r.why = why;
        return r;
      }
    }
    r.status = UnifyStatus::Unifier;
    for (const auto& [name, v] : problem_vars_) {
      auto it = sol_.find(name);
      if (it != sol_.end()) r.theta.bind_unchecked(v, it->second);
    }
    return r;
  }

 private:
  struct Eq {
    Term s, t;
    std::uint32_t depth;
  };

  Term norm(const Term& t) const {
    if (sol_.empty()) return t;
    return replace_vars(t, [this](Symbol x) -> const Term* {
      auto it = sol_.find(x);
      return it == sol_.end() ? nullptr : &it->second;
    });
  }

  Var fresh(const Ty& ty) {
    for (;;) {
      Symbol s = intern(opts_.stem + std::to_string(++counter_));
      if (names_.count(s) || (opts_.taken && opts_.taken(s))) continue;
      names_.insert(s);
      return {s, ty};
    }
  }

  void bind(Symbol x, const Term& img) {
    Term im = norm(img);
    for (auto& [k, v] : sol_)
      v = replace_vars(v, [&](Symbol y) { return y == x ? &im : nullptr; });
    sol_[x] = im;
  }

  // lambda^n. H b_(keep[0]) ... where the lambdas bind F's arguments.
  Term projection(const Ty& fty, const std::vector<std::size_t>& keep, const Var& h) {
    std::vector<Ty> doms = arg_types(fty);
    const std::size_t n = doms.size();
    std::vector<Term> args;
    for (std::size_t p : keep)
      args.push_back(eta(Head::bound(static_cast<std::uint32_t>(n - 1 - p)), doms[p]));
    Term body = mk_app(Head::var(h.name, h.ty), std::move(args));
    for (std::size_t i = n; i-- > 0;) body = mk_lam(doms[i], body);
    return body;
  }

  Var restricted_var(const Ty& fty, const std::vector<std::size_t>& keep) {
    std::vector<Ty> doms = arg_types(fty), kept;
    for (std::size_t p : keep) kept.push_back(doms[p]);
    return fresh(arrows(kept, result_type(fty)));
  }

  bool step(Eq e, std::string& why) {
    Term s = norm(e.s), t = norm(e.t);
    std::uint32_t d = e.depth;
    while (s->lam && t->lam) {
      s = s->body;
      t = t->body;
      ++d;
    }
    if (s->lam || t->lam) throw TypeError("unification of terms of different types");
    const bool fs = is_flex(s, opts_.rigid), ft = is_flex(t, opts_.rigid);
    if (!fs && !ft) {
      if (!head_equal(s->head, t->head) || s->args.size() != t->args.size()) {
        why = "rigid heads differ";
        return false;
      }
      for (std::size_t i = 0; i < s->args.size(); ++i)
        work_.push_back({s->args[i], t->args[i], d});
      return true;
    }
    if (fs && ft) return flex_flex(s, t);
    const Term& f = fs ? s : t;
    const Term& r = fs ? t : s;
    return flex_rigid(f, r, d, e, why);
  }

  bool flex_flex(const Term& s, const Term& t) {
    std::vector<std::uint32_t> as, bs;
    pattern_args(s, &as);
    pattern_args(t, &bs);
    const Head& F = s->head;
    const Head& G = t->head;
    if (F.id == G.id) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < as.size(); ++i)
        if (as[i] == bs[i]) keep.push_back(i);
      if (keep.size() == as.size()) return true;
      Var h = restricted_var(F.ty, keep);
      bind(F.id, projection(F.ty, keep, h));
      return true;
    }
    std::vector<std::size_t> kf, kg;
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j)
        if (as[i] == bs[j]) {
          kf.push_back(i);
          kg.push_back(j);
        }
    Var h = restricted_var(F.ty, kf);
    bind(F.id, projection(F.ty, kf, h));
    bind(G.id, projection(G.ty, kg, h));
    return true;
  }

  bool flex_rigid(const Term& f, const Term& r, std::uint32_t d, const Eq& e,
                  std::string& why) {
    std::vector<std::uint32_t> as;
    pattern_args(f, &as);
    std::vector<int> pos(d, -1);
    for (std::size_t p = 0; p < as.size(); ++p) pos[as[p]] = static_cast<int>(p);
    Build st = Build::Ok;
    Term body = build(r, 0, pos, as.size(), f->head.id, st);
    if (st == Build::Fail) {
      why = "occurs check or escaping bound variable for '" + name_of(f->head.id) + "'";
      return false;
    }
    if (st == Build::Pruned) {
      work_.push_front(e);
      return true;
    }
    std::vector<Ty> doms = arg_types(f->head.ty);
    for (std::size_t i = doms.size(); i-- > 0;) body = mk_lam(doms[i], body);
    bind(f->head.id, body);
    return true;
  }

  Term build(const Term& t, std::uint32_t l, const std::vector<int>& pos, std::size_t n,
             Symbol F, Build& st) {
    if (st != Build::Ok) return t;
    if (t->lam) return mk_lam(t->bty, build(t->body, l + 1, pos, n, F, st));
    const Head& h = t->head;
    auto remap = [&](std::uint32_t i, std::uint32_t& out) {
      if (i < l) {
        out = i;
        return true;
      }
      int p = pos[i - l];
      if (p < 0) return false;
      out = l + static_cast<std::uint32_t>(n - 1 - static_cast<std::size_t>(p));
      return true;
    };
    if (is_flex(t, opts_.rigid)) {
      if (h.id == F) {
        st = Build::Fail;
        return t;
      }
      std::vector<std::uint32_t> bs;
      pattern_args(t, &bs);
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < bs.size(); ++k) {
        std::uint32_t dummy;
        if (remap(bs[k], dummy)) keep.push_back(k);
      }
      if (keep.size() != bs.size()) {
        Var g = restricted_var(h.ty, keep);
        bind(h.id, projection(h.ty, keep, g));
        st = Build::Pruned;
        return t;
      }
    }
    Head nh = h;
    if (h.kind == HeadKind::Bound && !remap(h.id, nh.id)) {
      st = Build::Fail;
      return t;
    }
    std::vector<Term> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) args.push_back(build(a, l, pos, n, F, st));
    return mk_app(std::move(nh), std::move(args));
  }

  const UnifyOptions& opts_;
  std::deque<Eq> work_;
  std::map<Symbol, Term> sol_;
  std::map<Symbol, Var> problem_vars_;
  std::set<Symbol> names_;
  std::size_t counter_ = 0;
};

}  // namespace

bool is_pattern(const Term& t, const std::function<bool(Symbol)>& rigid) {
  if (t->lam) return is_pattern(t->body, rigid);
  if (is_flex(t, rigid) && !pattern_args(t, nullptr)) return false;
  for (const auto& a : t->args)
    if (!is_pattern(a, rigid)) return false;
  return true;
}

UnifyResult unify_all(const std::vector<std::pair<Term, Term>>& eqs, const UnifyOptions& opts) {
  Solver s(opts);
  for (const auto& [a, b] : eqs) {
    s.note_names(a);
    s.note_names(b);
  }
  return s.run(eqs);
}

UnifyResult unify(const Term& s, const Term& t, const UnifyOptions& opts) {
  return unify_all({{s, t}}, opts);
}

UnifyResult match(const Term& pat, const Term& target,
                  const std::function<bool(Symbol)>& taken) {
  std::set<Symbol> fixed;
  for (const auto& v : free_vars(target)) fixed.insert(v.name);
  UnifyOptions o;
  o.rigid = [&](Symbol x) { return fixed.count(x) != 0; };
  o.taken = taken;
  return unify(pat, target, o);
}

bool factor_through(const Subst& theta, const Subst& delta, const std::vector<Var>& vars,
                    Subst& sigma, const std::function<bool(Symbol)>& taken) {
  // Rename every variable on the theta side so nothing is shared with delta.
  std::set<Symbol> used;
  for (const auto& v : vars) used.insert(v.name);
  for (const auto& e : delta.entries()) {
    used.insert(e.var.name);
    for (const auto& w : free_vars(e.image)) used.insert(w.name);
  }
  std::map<Symbol, Var> range;  // original name -> renamed
  std::map<Symbol, Term> ren;
  std::size_t k = 0;
  auto rename = [&](const Var& v) {
    if (range.count(v.name)) return;
    Symbol n;
    do {
      n = intern("_f" + std::to_string(++k));
    } while (used.count(n) || (taken && taken(n)));
    used.insert(n);
    range[v.name] = {n, v.ty};
    ren[v.name] = var_term(n, v.ty);
  };
  std::vector<std::pair<Term, Term>> eqs;
  std::vector<Term> lhs;
  for (const auto& v : vars) {
    const Term* ti = theta.find(v.name);
    Term l = ti ? *ti : var_term(v.name, v.ty);
    for (const auto& w : free_var_list(l)) rename(w);
    lhs.push_back(l);
  }
  auto look = [&](Symbol x) -> const Term* {
    auto it = ren.find(x);
    return it == ren.end() ? nullptr : &it->second;
  };
  std::set<Symbol> flexible;
  for (auto& [o, n] : range) flexible.insert(n.name);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Term* di = delta.find(vars[i].name);
    Term r = di ? *di : var_term(vars[i].name, vars[i].ty);
    eqs.emplace_back(replace_vars(lhs[i], look), r);
  }
  UnifyOptions o;
  o.rigid = [&](Symbol x) { return flexible.count(x) == 0; };
  o.taken = [&](Symbol x) { return used.count(x) != 0 || (taken && taken(x)); };
  UnifyResult res = unify_all(eqs, o);
  if (res.status != UnifyStatus::Unifier) return false;
  sigma = Subst();
  for (auto& [orig, nv] : range) {
    // Matching against a rigid side binds every flexible variable.
    if (const Term* img = res.theta.find(nv.name)) sigma.bind_unchecked({orig, nv.ty}, *img);
  }
  return true;
}

}  // namespace lg
