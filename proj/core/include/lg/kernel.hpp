#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lg/sequent.hpp"
#include "lg/unify.hpp"

namespace lg {

struct Expected {
  bool ok = true;
  std::string why;  // set when !ok
  std::vector<Sequent> prem;
};

// Premises a rule instance demands of a conclusion, in order. Pure and
// deterministic: any fresh names depend only on the arguments.
Expected expected_premises(const Theory& th, const Sequent& concl, const Rule& rule);

struct Violation {
  std::vector<std::size_t> path;  // premise indices from the root
  std::string rule;
  std::string reason;
};

std::string show_path(const std::vector<std::size_t>& path);

// Every formula is of type o under the signature and the theory's constants.
std::optional<std::string> sequent_well_formed(const Theory& th, const Sequent& s);

std::optional<Violation> check(const Theory& th, const Deriv& d);

// Pieces of the rule semantics the transformations reuse.
struct EqLInfo {
  std::vector<NomId> cs;  // support of the equation
  UnifyResult res;
};
EqLInfo eql_unify(const Sequent& s, std::size_t j);

struct DefLCase {
  std::size_t clause = 0;
  RaisedClause raised;
  Subst theta;  // on Sigma and the raised variables
};
struct DefLInfo {
  bool not_a_pattern = false;
  std::string why;
  std::vector<NomId> cs;
  std::vector<DefLCase> cases;  // unifiable clauses, theory order
};
DefLInfo defl_cases(const Theory& th, const Sequent& s, std::size_t j);

// The raised clause DefR checks against, for the goal of `s`.
RaisedClause defr_raised(const Theory& th, const Sequent& s, std::size_t clause);

// Premise sequent of an EqL or DefL case: Sigma' ; hyps ; goal under theta,
// with `replace` substituted for hypothesis j (or j dropped if null).
Sequent instantiate_case(const Sequent& s, std::size_t j, const Term* replace,
                         const Signature& extra, const Subst& theta);

}  // namespace lg
