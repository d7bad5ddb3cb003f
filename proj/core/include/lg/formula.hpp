#pragma once

// Formulas are terms of type o over reserved logical constants. Quantifier
// bodies are kept as lambda terms so that instantiation is `apply`.

#include "lg/term.hpp"

namespace lg {

enum class FKind { Bot, Top, And, Or, Imp, Forall, Exists, Nabla, Eq, Nat, Atom };

struct FView {
  FKind kind = FKind::Atom;
  Term l, r;  // operands; quantifiers put their lambda body in l; eq sides
  Ty qty;     // bound type for quantifiers, side type for eq
  Symbol pred = 0;  // atoms
};

FView view(const Term& f);
bool is_logical_symbol(Symbol s);
const char* kind_name(FKind k);

Term f_bot();
Term f_top();
Term f_and(const Term& a, const Term& b);
Term f_or(const Term& a, const Term& b);
Term f_imp(const Term& a, const Term& b);
// `body` is a lambda of type ty -> o.
Term f_forall(const Ty& ty, const Term& body);
Term f_exists(const Ty& ty, const Term& body);
Term f_nabla(const Ty& ty, const Term& body);
Term f_eq(const Term& s, const Term& t);  // sides must share a type
Term f_nat(const Term& t);
Term f_atom(Symbol pred, const Ty& pty, std::vector<Term> args);
// Binder built by abstracting an eigenvariable.
Term f_bind(FKind k, Symbol x, const Ty& ty, const Term& body);

// Built-in naturals.
Term nat_zero();
Term nat_succ(const Term& t);
Symbol zero_symbol();
Symbol succ_symbol();

// B[t/x] for a quantifier body.
Term instantiate_body(const Term& lam, const Term& t);

bool is_formula(const Term& t);  // type o, no loose index

}  // namespace lg
