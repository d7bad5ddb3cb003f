#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lg/formula.hpp"
#include "lg/subst.hpp"

namespace lg {

// forall vars. pred head_args := body
struct Clause {
  std::size_t id = 0;  // position in the theory
  Symbol pred = 0;
  std::vector<Var> vars;
  Term head;  // atom
  Term body;  // formula
};

// A clause instance whose variables were replaced by h_i c1..cn for fresh
// h_i (raising over the nominal constants c).
struct RaisedClause {
  std::vector<Var> hs;
  Term head;
  Term body;
};

struct StratIssue {
  std::size_t clause = 0;
  std::string message;
};

class Theory {
 public:
  // Declarations. Each throws TypeError on a clash.
  void declare_const(Symbol name, const Ty& ty);
  void declare_level(Symbol pred, int level);
  std::size_t add_clause(Clause c);  // returns the clause id

  const Ty* const_type(Symbol name) const;
  bool is_predicate(Symbol name) const;
  const std::map<Symbol, Ty>& consts() const { return consts_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t id) const { return clauses_.at(id); }
  std::vector<std::size_t> clauses_for(Symbol pred) const;
  bool has_declared_level(Symbol pred) const { return declared_.count(pred) != 0; }
  const std::map<Symbol, int>& declared_levels() const { return declared_; }

  // Declared level, else the inferred one, else 0.
  int pred_level(Symbol pred) const;
  int level(const Term& formula) const;

  // Fills missing levels with the least assignment that stratifies every
  // clause. Returns false (and leaves levels unchanged) if none exists.
  bool infer_levels(std::string* why = nullptr);
  const std::map<Symbol, int>& inferred_levels() const { return inferred_; }

  // Definition well-formedness: stratification plus the clause shape rules.
  std::vector<StratIssue> stratify() const;

  TypeEnv env(const Signature* sig) const;

 private:
  std::map<Symbol, Ty> consts_;
  std::map<Symbol, int> declared_;
  std::map<Symbol, int> inferred_;
  std::vector<Clause> clauses_;
};

// Level of a formula under an explicit level function; shared with tests.
int formula_level(const Term& f, const std::function<int(Symbol)>& pred_level);

// Raises `c` over `cs`. The new variable names avoid `avoid` and are drawn
// from `stem` followed by a counter starting at *counter.
RaisedClause raise_clause(const Clause& c, const std::vector<NomId>& cs,
                          const std::function<bool(Symbol)>& taken, const std::string& stem,
                          std::size_t* counter);

}  // namespace lg
