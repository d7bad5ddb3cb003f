#include "lg/formula.hpp"

namespace lg {

namespace {

struct Syms {
  Symbol bot = intern("$bot"), top = intern("$top"), conj = intern("$and"),
         disj = intern("$or"), imp = intern("$imp"), all = intern("$forall"),
         ex = intern("$exists"), nab = intern("$nabla"), eq = intern("$eq"),
         nat = intern("$nat"), z = intern("z"), s = intern("s");
};

const Syms& syms() {
  static const Syms s;
  return s;
}

Term logical(Symbol s, const Ty& ty, std::vector<Term> args) {
  return mk_app(Head::cnst(s, ty), std::move(args));
}

Ty binop_type() {
  static const Ty t = arrow(prop_type(), arrow(prop_type(), prop_type()));
  return t;
}

Term binder(Symbol s, const Ty& ty, const Term& body) {
  if (!body->lam || !ty_equal(body->bty, ty))
    throw TypeError("quantifier body must be a lambda over its bound type");
  if (mentions_prop(ty)) throw TypeError("quantification over a type mentioning o");
  return logical(s, arrow(arrow(ty, prop_type()), prop_type()), {body});
}

}  // namespace

bool is_logical_symbol(Symbol x) {
  const auto& s = syms();
  return x == s.bot || x == s.top || x == s.conj || x == s.disj || x == s.imp ||
         x == s.all || x == s.ex || x == s.nab || x == s.eq || x == s.nat;
}

const char* kind_name(FKind k) {
  switch (k) {
    case FKind::Bot: return "bot";
    case FKind::Top: return "top";
    case FKind::And: return "and";
    case FKind::Or: return "or";
    case FKind::Imp: return "imp";
    case FKind::Forall: return "forall";
    case FKind::Exists: return "exists";
    case FKind::Nabla: return "nabla";
    case FKind::Eq: return "eq";
    case FKind::Nat: return "nat";
    case FKind::Atom: return "atom";
  }
  return "?";
}

FView view(const Term& f) {
  FView v;
  if (f->lam) throw TypeError("not a formula: lambda");
  const Head& h = f->head;
  if (h.kind != HeadKind::Const) throw TypeError("not a formula: head is not a constant");
  const auto& s = syms();
  const auto& a = f->args;
  if (h.id == s.bot) v.kind = FKind::Bot;
  else if (h.id == s.top) v.kind = FKind::Top;
  else if (h.id == s.conj) v = {FKind::And, a[0], a[1], nullptr, 0};
  else if (h.id == s.disj) v = {FKind::Or, a[0], a[1], nullptr, 0};
  else if (h.id == s.imp) v = {FKind::Imp, a[0], a[1], nullptr, 0};
  else if (h.id == s.all) v = {FKind::Forall, a[0], nullptr, a[0]->bty, 0};
  else if (h.id == s.ex) v = {FKind::Exists, a[0], nullptr, a[0]->bty, 0};
  else if (h.id == s.nab) v = {FKind::Nabla, a[0], nullptr, a[0]->bty, 0};
  else if (h.id == s.eq) v = {FKind::Eq, a[0], a[1], h.ty->dom, 0};
  else if (h.id == s.nat) v = {FKind::Nat, a[0], nullptr, nullptr, 0};
  else {
    v.kind = FKind::Atom;
    v.pred = h.id;
  }
  return v;
}

Term f_bot() {
  static const Term t = logical(syms().bot, prop_type(), {});
  return t;
}

Term f_top() {
  static const Term t = logical(syms().top, prop_type(), {});
  return t;
}

Term f_and(const Term& a, const Term& b) { return logical(syms().conj, binop_type(), {a, b}); }
Term f_or(const Term& a, const Term& b) { return logical(syms().disj, binop_type(), {a, b}); }
Term f_imp(const Term& a, const Term& b) { return logical(syms().imp, binop_type(), {a, b}); }

Term f_forall(const Ty& ty, const Term& body) { return binder(syms().all, ty, body); }
Term f_exists(const Ty& ty, const Term& body) { return binder(syms().ex, ty, body); }
Term f_nabla(const Ty& ty, const Term& body) {
  if (!is_nominal_type(ty)) throw TypeError("nabla over a non-nominal type");
  return binder(syms().nab, ty, body);
}

Term f_eq(const Term& s, const Term& t) {
  Ty ty = type_of_closed(s);
  if (!ty_equal(ty, type_of_closed(t))) throw TypeError("equation sides differ in type");
  if (mentions_prop(ty)) throw TypeError("equation at a type mentioning o");
  return logical(syms().eq, arrow(ty, arrow(ty, prop_type())), {s, t});
}

Term f_nat(const Term& t) {
  static const Ty nty = arrow(nat_type(), prop_type());
  return logical(syms().nat, nty, {t});
}

Term f_atom(Symbol pred, const Ty& pty, std::vector<Term> args) {
  if (is_logical_symbol(pred)) throw TypeError("reserved predicate name");
  return apply_head(Head::cnst(pred, pty), pty, std::move(args));
}

Term f_bind(FKind k, Symbol x, const Ty& ty, const Term& body) {
  Term lam = abstract_var(body, x, ty);
  switch (k) {
    case FKind::Forall: return f_forall(ty, lam);
    case FKind::Exists: return f_exists(ty, lam);
    case FKind::Nabla: return f_nabla(ty, lam);
    default: throw std::logic_error("f_bind on a non-binder");
  }
}

Symbol zero_symbol() { return syms().z; }
Symbol succ_symbol() { return syms().s; }

Term nat_zero() {
  static const Term t = mk_app(Head::cnst(syms().z, nat_type()), {});
  return t;
}

Term nat_succ(const Term& t) {
  static const Ty sty = arrow(nat_type(), nat_type());
  return mk_app(Head::cnst(syms().s, sty), {t});
}

Term instantiate_body(const Term& lam, const Term& t) { return beta(lam, t); }

bool is_formula(const Term& t) {
  if (t->lam || t->loose != 0) return false;
  try {
    return ty_equal(type_of_closed(t), prop_type());
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace lg
