#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lg/subst.hpp"

namespace lg {

enum class UnifyStatus { Unifier, NoUnifier, NotAPattern };
const char* status_name(UnifyStatus s);

struct UnifyOptions {
  // Variables that behave like constants. Matching makes one side rigid.
  std::function<bool(Symbol)> rigid;
  // Names fresh variables must avoid, in addition to every variable in the
  // problem.
  std::function<bool(Symbol)> taken;
  std::string stem = "_u";
};

struct UnifyResult {
  UnifyStatus status = UnifyStatus::NoUnifier;
  Subst theta;  // most general, idempotent, domain = solved problem variables
  std::string why;
};

// Higher-order pattern unification on closed canonical terms of one type.
// Solutions are deterministic: fresh names come from a per-call counter.
UnifyResult unify(const Term& s, const Term& t, const UnifyOptions& opts = {});
UnifyResult unify_all(const std::vector<std::pair<Term, Term>>& eqs,
                      const UnifyOptions& opts = {});

// True if every flexible subterm applies its head to distinct bound
// variables.
bool is_pattern(const Term& t, const std::function<bool(Symbol)>& rigid = {});

// Index of the (eta-expanded) bound variable `a` denotes, if it is one.
bool as_bound(const Term& a, std::uint32_t& idx);

// Is `pat` θ-equal to `target` for a substitution on the non-rigid
// variables of `pat` only? Everything in `target` is rigid.
UnifyResult match(const Term& pat, const Term& target, const std::function<bool(Symbol)>& taken = {});

// sigma with  (x theta) sigma = x delta  for every x in `vars`, if one
// exists. Fresh variables of theta's range are renamed away from `taken`
// first, so delta may mention any name.
bool factor_through(const Subst& theta, const Subst& delta, const std::vector<Var>& vars,
                    Subst& sigma,
                    const std::function<bool(Symbol)>& taken = {});

}  // namespace lg
