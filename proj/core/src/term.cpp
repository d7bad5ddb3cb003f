#include "lg/term.hpp"

#include <algorithm>
#include <unordered_set>

namespace lg {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t ty_hash(const Ty& t) {
  if (!t->arrow) return mix(t->base, t->nominal ? 17 : 3);
  return mix(mix(ty_hash(t->dom), 0x51), ty_hash(t->cod));
}

std::size_t head_hash(const Head& h) {
  return mix(static_cast<std::size_t>(h.kind) * 131, h.id);
}

[[noreturn]] void ill_typed(const char* what) {
  throw TypeError(std::string("ill-typed term: ") + what);
}

}  // namespace

bool head_equal(const Head& a, const Head& b) {
  if (a.kind != b.kind || a.id != b.id) return false;
  if (a.kind == HeadKind::Bound || a.kind == HeadKind::Nom) return true;
  return ty_equal(a.ty, b.ty);
}

Term mk_lam(Ty bty, Term body) {
  auto n = std::make_shared<TermNode>();
  n->lam = true;
  n->hash = mix(mix(0x1a1a, ty_hash(bty)), body->hash);
  n->loose = body->loose > 0 ? body->loose - 1 : 0;
  n->has_var = body->has_var;
  n->has_nom = body->has_nom;
  n->size = body->size + 1;
  n->bty = std::move(bty);
  n->body = std::move(body);
  return n;
}

Term mk_app(Head h, std::vector<Term> args) {
  auto n = std::make_shared<TermNode>();
  std::size_t hash = head_hash(h);
  std::uint32_t loose = h.kind == HeadKind::Bound ? h.id + 1 : 0;
  bool hv = h.kind == HeadKind::Var, hn = h.kind == HeadKind::Nom;
  std::uint32_t size = 1;
  for (const auto& a : args) {
    hash = mix(hash, a->hash);
    loose = std::max(loose, a->loose);
    hv = hv || a->has_var;
    hn = hn || a->has_nom;
    size += a->size;
  }
  n->head = std::move(h);
  n->args = std::move(args);
  n->hash = hash;
  n->loose = loose;
  n->has_var = hv;
  n->has_nom = hn;
  n->size = size;
  return n;
}

bool term_equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->lam != b->lam || a->size != b->size) return false;
  if (a->lam) return ty_equal(a->bty, b->bty) && term_equal(a->body, b->body);
  if (!head_equal(a->head, b->head) || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

// ---------------------------------------------------------- shifting

Term shift(const Term& t, std::int32_t d, std::uint32_t cutoff) {
  if (d == 0 || t->loose <= cutoff) return t;
  if (t->lam) return mk_lam(t->bty, shift(t->body, d, cutoff + 1));
  Head h = t->head;
  if (h.kind == HeadKind::Bound && h.id >= cutoff) {
    std::int64_t v = static_cast<std::int64_t>(h.id) + d;
    if (v < 0) throw std::logic_error("negative de Bruijn index");
    h.id = static_cast<std::uint32_t>(v);
  }
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(shift(a, d, cutoff));
  return mk_app(std::move(h), std::move(args));
}

// ------------------------------------------------ eta-long applications

Term apply_head(const Head& h, const Ty& hty, std::vector<Term> args) {
  std::vector<Ty> doms = arg_types(hty);
  if (args.size() > doms.size()) ill_typed("too many arguments");
  const std::uint32_t m = static_cast<std::uint32_t>(doms.size() - args.size());
  if (m == 0) return mk_app(h, std::move(args));
  Head hh = h;
  if (hh.kind == HeadKind::Bound) hh.id += m;
  for (auto& a : args) a = shift(a, static_cast<std::int32_t>(m));
  const std::size_t k = args.size();
  for (std::uint32_t i = 0; i < m; ++i)
    args.push_back(eta(Head::bound(m - 1 - i), doms[k + i]));
  Term body = mk_app(std::move(hh), std::move(args));
  for (std::uint32_t i = m; i-- > 0;) body = mk_lam(doms[k + i], body);
  return body;
}

Term eta(const Head& h, const Ty& hty) { return apply_head(h, hty, {}); }

Term var_term(Symbol name, const Ty& ty) { return eta(Head::var(name, ty), ty); }
Term const_term(Symbol name, const Ty& ty) { return eta(Head::cnst(name, ty), ty); }
Term nom_term(NomId c) { return mk_app(Head::nom(c), {}); }

// ------------------------------------------------ hereditary substitution

Term subst_bound(const Term& t, std::uint32_t k, const Term& s) {
  if (t->loose <= k) return t;
  if (t->lam) return mk_lam(t->bty, subst_bound(t->body, k + 1, s));
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(subst_bound(a, k, s));
  const Head& h = t->head;
  if (h.kind == HeadKind::Bound) {
    if (h.id == k) return beta(shift(s, static_cast<std::int32_t>(k)), args);
    if (h.id > k) return mk_app(Head::bound(h.id - 1), std::move(args));
  }
  return mk_app(h, std::move(args));
}

Term beta(const Term& f, const std::vector<Term>& args) {
  Term cur = f;
  for (const auto& a : args) {
    if (!cur->lam) ill_typed("application of a base-type term");
    cur = subst_bound(cur->body, 0, a);
  }
  return cur;
}

Term beta(const Term& f, const Term& arg) { return beta(f, std::vector<Term>{arg}); }

// ---------------------------------------------------------- abstraction

namespace {

Term abs_noms(const Term& t, const std::vector<NomId>& cs, std::uint32_t depth) {
  if (!t->has_nom) return t;
  if (t->lam) return mk_lam(t->bty, abs_noms(t->body, cs, depth + 1));
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(abs_noms(a, cs, depth));
  if (t->head.kind == HeadKind::Nom) {
    const std::size_t n = cs.size();
    for (std::size_t i = n; i-- > 0;) {
      if (cs[i] == t->head.id)
        return mk_app(Head::bound(depth + static_cast<std::uint32_t>(n - 1 - i)),
                      std::move(args));
    }
  }
  return mk_app(t->head, std::move(args));
}

Term abs_var(const Term& t, Symbol x, std::uint32_t depth) {
  if (!t->has_var) return t;
  if (t->lam) return mk_lam(t->bty, abs_var(t->body, x, depth + 1));
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(abs_var(a, x, depth));
  if (t->head.kind == HeadKind::Var && t->head.id == x)
    return mk_app(Head::bound(depth), std::move(args));
  return mk_app(t->head, std::move(args));
}

}  // namespace

Term abstract_noms(const Term& t, const std::vector<NomId>& cs) {
  if (cs.empty()) return t;
  Term body = abs_noms(shift(t, static_cast<std::int32_t>(cs.size())), cs, 0);
  for (std::size_t i = cs.size(); i-- > 0;) body = mk_lam(nominal_type(cs[i]), body);
  return body;
}

Term abstract_var(const Term& t, Symbol x, const Ty& ty) {
  return mk_lam(ty, abs_var(shift(t, 1), x, 0));
}

Term replace_vars(const Term& t, const std::function<const Term*(Symbol)>& image) {
  if (!t->has_var) return t;
  if (t->lam) return mk_lam(t->bty, replace_vars(t->body, image));
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(replace_vars(a, image));
  if (t->head.kind == HeadKind::Var) {
    if (const Term* img = image(t->head.id)) return beta(*img, args);
  }
  return mk_app(t->head, std::move(args));
}

Term rename_noms(const Term& t, const std::function<NomId(NomId)>& f) {
  if (!t->has_nom) return t;
  if (t->lam) return mk_lam(t->bty, rename_noms(t->body, f));
  std::vector<Term> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(rename_noms(a, f));
  Head h = t->head;
  if (h.kind == HeadKind::Nom) {
    NomId d = f(h.id);
    if (d != h.id) {
      if (!ty_equal(nominal_type(d), h.ty)) ill_typed("renaming changes a nominal type");
      h = Head::nom(d);
    }
  }
  return mk_app(std::move(h), std::move(args));
}

// ---------------------------------------------------------- inspection

namespace {

Ty infer(const Term& t, std::vector<Ty>& ctx, const TypeEnv* env) {
  if (t->lam) {
    ctx.push_back(t->bty);
    Ty b = infer(t->body, ctx, env);
    ctx.pop_back();
    return arrow(t->bty, b);
  }
  const Head& h = t->head;
  Ty hty;
  switch (h.kind) {
    case HeadKind::Bound:
      if (h.id >= ctx.size()) ill_typed("loose de Bruijn index");
      hty = ctx[ctx.size() - 1 - h.id];
      break;
    case HeadKind::Var:
      hty = h.ty;
      if (env && env->var) {
        const Ty* d = env->var(h.id);
        if (!d) throw TypeError("unknown eigenvariable '" + name_of(h.id) + "'");
        if (!ty_equal(*d, hty))
          throw TypeError("eigenvariable '" + name_of(h.id) + "' used at type " +
                          show_type(hty) + " but declared " + show_type(*d));
      }
      break;
    case HeadKind::Const:
      hty = h.ty;
      if (env && env->cnst && name_of(h.id)[0] != '$') {
        const Ty* d = env->cnst(h.id);
        if (!d) throw TypeError("unknown constant '" + name_of(h.id) + "'");
        if (!ty_equal(*d, hty))
          throw TypeError("constant '" + name_of(h.id) + "' used at type " +
                          show_type(hty) + " but declared " + show_type(*d));
      }
      break;
    case HeadKind::Nom:
      hty = nominal_type(h.id);
      break;
  }
  Ty cur = hty;
  for (const auto& a : t->args) {
    if (!cur->arrow) ill_typed("too many arguments");
    Ty at = infer(a, ctx, env);
    if (!ty_equal(at, cur->dom)) ill_typed("argument type mismatch");
    cur = cur->cod;
  }
  if (cur->arrow) ill_typed("spine is not eta-long");
  return cur;
}

}  // namespace

Ty type_of_closed(const Term& t) {
  std::vector<Ty> ctx;
  return infer(t, ctx, nullptr);
}

Ty typecheck(const Term& t, const TypeEnv& env) {
  std::vector<Ty> ctx;
  return infer(t, ctx, &env);
}

namespace {

void fv_rec(const Term& t, std::vector<VarRef>& out, std::unordered_set<Symbol>& seen) {
  if (!t->has_var) return;
  if (t->lam) return fv_rec(t->body, out, seen);
  if (t->head.kind == HeadKind::Var && seen.insert(t->head.id).second)
    out.push_back({t->head.id, t->head.ty});
  for (const auto& a : t->args) fv_rec(a, out, seen);
}

}  // namespace

std::vector<VarRef> free_vars(const Term& t) {
  std::vector<VarRef> out;
  std::unordered_set<Symbol> seen;
  fv_rec(t, out, seen);
  return out;
}

bool occurs_var(const Term& t, Symbol x) {
  if (!t->has_var) return false;
  if (t->lam) return occurs_var(t->body, x);
  if (t->head.kind == HeadKind::Var && t->head.id == x) return true;
  for (const auto& a : t->args)
    if (occurs_var(a, x)) return true;
  return false;
}

void support_into(const Term& t, std::vector<NomId>& acc) {
  if (!t->has_nom) return;
  if (t->lam) return support_into(t->body, acc);
  if (t->head.kind == HeadKind::Nom &&
      std::find(acc.begin(), acc.end(), t->head.id) == acc.end())
    acc.push_back(t->head.id);
  for (const auto& a : t->args) support_into(a, acc);
}

std::vector<NomId> support(const Term& t) {
  std::vector<NomId> acc;
  support_into(t, acc);
  return acc;
}

bool occurs_nom(const Term& t, NomId c) {
  if (!t->has_nom) return false;
  if (t->lam) return occurs_nom(t->body, c);
  if (t->head.kind == HeadKind::Nom && t->head.id == c) return true;
  for (const auto& a : t->args)
    if (occurs_nom(a, c)) return true;
  return false;
}

Ty raise_type(const Ty& tau, const std::vector<NomId>& cs) {
  std::vector<Ty> doms;
  doms.reserve(cs.size());
  for (NomId c : cs) doms.push_back(nominal_type(c));
  return arrows(doms, tau);
}

Term raised(Symbol h, const Ty& hty, const std::vector<NomId>& cs) {
  std::vector<Term> args;
  args.reserve(cs.size());
  for (NomId c : cs) args.push_back(nom_term(c));
  return apply_head(Head::var(h, hty), hty, std::move(args));
}

std::string debug_string(const Term& t) {
  if (t->lam) return "(\\:" + show_type(t->bty) + ". " + debug_string(t->body) + ")";
  std::string s;
  switch (t->head.kind) {
    case HeadKind::Bound: s = "#" + std::to_string(t->head.id); break;
    case HeadKind::Var: s = name_of(t->head.id); break;
    case HeadKind::Const: s = name_of(t->head.id); break;
    case HeadKind::Nom: s = nominal_name(t->head.id); break;
  }
  if (t->args.empty()) return s;
  s = "(" + s;
  for (const auto& a : t->args) s += " " + debug_string(a);
  return s + ")";
}

}  // namespace lg
