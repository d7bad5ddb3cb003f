#pragma once

// Simply typed terms in canonical (beta-normal, eta-long) spine form with
// de Bruijn indices. Every constructor here preserves canonicity, so
// structural equality is alpha-beta-eta equality.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lg {

using Symbol = std::uint32_t;

Symbol intern(std::string_view name);
const std::string& name_of(Symbol s);

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- types

struct TyNode;
using Ty = std::shared_ptr<const TyNode>;

struct TyNode {
  bool arrow = false;
  Symbol base = 0;       // base types only
  bool nominal = false;  // base types only
  Ty dom, cod;           // arrow types only
};

Ty base_type(std::string_view name, bool nominal = false);
Ty arrow(Ty dom, Ty cod);
Ty arrows(const std::vector<Ty>& doms, Ty cod);
Ty prop_type();  // o
Ty nat_type();   // nt, the type of the built-in naturals

bool ty_equal(const Ty& a, const Ty& b);
bool is_nominal_type(const Ty& t);
bool mentions_prop(const Ty& t);
std::vector<Ty> arg_types(const Ty& t);
Ty result_type(const Ty& t);
std::size_t arity(const Ty& t);
std::string show_type(const Ty& t);

// ---------------------------------------------------- nominal constants

using NomId = std::uint32_t;

// Nominal constants live in one process-wide table. Names are unique.
NomId nominal(std::string_view name, const Ty& ty);
const std::string& nominal_name(NomId c);
Ty nominal_type(NomId c);
bool find_nominal(std::string_view name, NomId& out);

// Least constant of type `ty` (in table order) rejected by `used`. A new
// one is created when the table runs out.
NomId fresh_nominal(const Ty& ty, const std::function<bool(NomId)>& used);

// ---------------------------------------------------------------- terms

enum class HeadKind : std::uint8_t { Bound, Var, Const, Nom };

struct Head {
  HeadKind kind = HeadKind::Bound;
  std::uint32_t id = 0;  // de Bruijn index, Symbol, or NomId
  Ty ty;                 // null for Bound heads

  static Head bound(std::uint32_t i) { return {HeadKind::Bound, i, nullptr}; }
  static Head var(Symbol s, Ty t) { return {HeadKind::Var, s, std::move(t)}; }
  static Head cnst(Symbol s, Ty t) { return {HeadKind::Const, s, std::move(t)}; }
  static Head nom(NomId c) { return {HeadKind::Nom, c, nominal_type(c)}; }
};

bool head_equal(const Head& a, const Head& b);

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  bool lam = false;
  Ty bty;     // binder type
  Term body;  // lambda body
  Head head;
  std::vector<Term> args;

  std::size_t hash = 0;
  std::uint32_t loose = 0;  // every loose index is below this
  bool has_var = false;
  bool has_nom = false;
  std::uint32_t size = 1;
};

Term mk_lam(Ty bty, Term body);
// No eta expansion: the caller supplies exactly the base-type spine.
Term mk_app(Head h, std::vector<Term> args);

bool term_equal(const Term& a, const Term& b);

struct TermHash {
  std::size_t operator()(const Term& t) const { return t->hash; }
};
struct TermEq {
  bool operator()(const Term& a, const Term& b) const { return term_equal(a, b); }
};

// Eta-long application of a head of type `hty` to canonical `args`
// (possibly fewer than its arity).
Term apply_head(const Head& h, const Ty& hty, std::vector<Term> args);
Term eta(const Head& h, const Ty& hty);
Term var_term(Symbol name, const Ty& ty);
Term const_term(Symbol name, const Ty& ty);
Term nom_term(NomId c);

// Hereditary application of a canonical function to canonical args.
Term beta(const Term& f, const std::vector<Term>& args);
Term beta(const Term& f, const Term& arg);

Term shift(const Term& t, std::int32_t d, std::uint32_t cutoff = 0);
// Replace index `k` by `s` (given at depth 0) and close the gap.
Term subst_bound(const Term& t, std::uint32_t k, const Term& s);

// lambda c1 ... cn. t, with c1 outermost. `t` must not have loose indices.
Term abstract_noms(const Term& t, const std::vector<NomId>& cs);
// lambda x. t where x is an eigenvariable of type `ty`.
Term abstract_var(const Term& t, Symbol x, const Ty& ty);

// Simultaneous replacement of eigenvariables by closed canonical terms, with
// no conditions on the images. Substitutions and raising are built on it.
Term replace_vars(const Term& t,
                  const std::function<const Term*(Symbol)>& image);
// Simultaneous replacement of nominal constants by nominal constants.
Term rename_noms(const Term& t, const std::function<NomId(NomId)>& f);

Ty type_of_closed(const Term& t);  // quick type for terms with no loose index

// Free eigenvariables in first-occurrence order.
struct VarRef {
  Symbol name;
  Ty ty;
};
std::vector<VarRef> free_vars(const Term& t);
bool occurs_var(const Term& t, Symbol x);

// Nominal constants in first-occurrence pre-order.
std::vector<NomId> support(const Term& t);
void support_into(const Term& t, std::vector<NomId>& acc);
bool occurs_nom(const Term& t, NomId c);

// iota1 -> ... -> iotan -> tau for the types of cs.
Ty raise_type(const Ty& tau, const std::vector<NomId>& cs);
// h c1 ... cn, eta-long.
Term raised(Symbol h, const Ty& hty, const std::vector<NomId>& cs);

// Type-checks against a lookup for eigenvariables and one for constants.
// Either lookup may be empty, in which case that head kind is accepted as
// annotated.
struct TypeEnv {
  std::function<const Ty*(Symbol)> var;
  std::function<const Ty*(Symbol)> cnst;
};
Ty typecheck(const Term& t, const TypeEnv& env);

// Raw debugging form; the syntax module has the real printer.
std::string debug_string(const Term& t);

}  // namespace lg
