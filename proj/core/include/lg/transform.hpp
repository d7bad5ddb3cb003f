#pragma once

// Height-preserving transformations of checked derivations.
//
// Every function takes a checked derivation and returns a checked derivation
// whose height is no greater. Hypothesis lists are ordered, so the helpers
// below also handle reordering and signature growth, which the kernel sees
// as different sequents.

#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lg/kernel.hpp"

namespace lg {

struct TransformError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fresh eigenvariable names for transformations. Generated names contain a
// prime, which kernel-generated names never do.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(const Deriv& d) { reserve(d); }

  void reserve(Symbol s) { used_.insert(s); }
  void reserve(const Signature& s);
  void reserve(const Term& t);
  void reserve(const Subst& s);
  void reserve(const Deriv& d);
  bool taken(Symbol s) const { return used_.count(s) != 0; }
  Symbol fresh(Symbol base);

 private:
  std::set<Symbol> used_;
  std::size_t counter_ = 0;
};

struct Ctx {
  const Theory& th;
  NameSupply& ns;
};

// Builds a node and fits each premise to what the rule expects, throwing
// TransformError if that is impossible.
Deriv rebuild(const Ctx& c, Sequent concl, Rule rule, std::vector<Deriv> prem);

// New hypothesis i is old hypothesis order[i].
Deriv arrange(const Theory& th, const Deriv& d, const std::vector<std::size_t>& order);
// `target` must have the same goal, a superset signature, and the same
// hypothesis multiset.
Deriv fit(const Ctx& c, const Deriv& d, const Sequent& target);
Deriv extend_sig(const Ctx& c, const Deriv& d, const Signature& extra);

// Gamma, Delta |- C from Gamma |- C. Delta is typed in the signature.
Deriv weaken(const Ctx& c, const Deriv& d, const std::vector<Term>& delta);
// Sigma theta ; Gamma theta |- C theta. Throws TransformError where a
// recomputed equation or definition case leaves the pattern fragment.
Deriv subst_derivation(const Ctx& c, const Deriv& d, const Subst& theta);
// perms[0] acts on the goal, perms[i+1] on hypothesis i. Missing entries are
// the identity.
Deriv perm_derivation(const Ctx& c, const Deriv& d, std::vector<Perm> perms);
// Replaces the nominal-typed eigenvariable x by names[0] in the goal and by
// names[i+1] in hypothesis i; each name must be outside its formula's
// support.
Deriv restrict_derivation(const Ctx& c, const Deriv& d, Symbol x, const std::vector<NomId>& names);

// Least name of type ty outside the support of every fs and outside `avoid`.
NomId fresh_for(const std::vector<Term>& fs, const Ty& ty, const std::vector<NomId>& avoid = {});

// Re-raises h, whose first `nargs` arguments are nominal positions, over
// `extra` as well: h becomes \z. h' z extra. Every formula mentioning h must
// avoid the extra constants. Returns the derivation and sets h_new.
Deriv support_extend(const Ctx& c, const Deriv& d, const Var& h, std::size_t nargs,
                     const std::vector<NomId>& extra, Var& h_new);

// Step lists for the `transform` entry point and the property tests.
struct WeakenStep {
  std::vector<Term> delta;
};
struct SubstStep {
  Subst theta;
};
struct PermStep {
  std::vector<Perm> perms;
};
struct RestrictStep {
  Symbol x;
  std::vector<NomId> names;
};
using HPStep = std::variant<WeakenStep, SubstStep, PermStep, RestrictStep>;

struct TransformOutcome {
  bool ok = true;
  Deriv result;
  std::size_t failed_step = 0;
  std::string why;
};

// Applies the steps in order, validating each precondition first.
TransformOutcome apply_transform(const Theory& th, const Deriv& d, const std::vector<HPStep>& steps);

}  // namespace lg
