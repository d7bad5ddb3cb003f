#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lg/perm.hpp"
#include "lg/subst.hpp"
#include "lg/theory.hpp"

namespace lg {

// Sigma ; B1, ..., Bn |- B0. Hypotheses are an ordered list; rules name the
// hypothesis they act on by index.
struct Sequent {
  Signature sig;
  std::vector<Term> hyps;
  Term goal;
};

bool seq_equal(const Sequent& a, const Sequent& b);

enum class RuleTag {
  IdPi, Mc, CL, BotL, TopR,
  AndL, AndR, OrL, OrR, ImpL, ImpR,
  AllL, AllR, ExL, ExR, NabL, NabR,
  EqL, EqR, DefL, DefR, NatL, NatR,
};

const char* rule_name(RuleTag t);
bool rule_from_name(const std::string& s, RuleTag& out);
bool is_left_rule(RuleTag t);  // acts on a hypothesis named by `idx`

// Rule instance. Which fields matter depends on the tag.
struct Rule {
  RuleTag tag = RuleTag::TopR;
  std::size_t idx = 0;  // principal hypothesis of a left rule, IdPi's hyp
  int choice = 1;       // AndL, OrR: which component (1 or 2)
  Perm pi, pi2;         // IdPi: pi . hyp == pi2 . goal
  std::vector<Term> cuts;          // Mc: cut formulas
  std::vector<std::size_t> part;   // Mc: per hypothesis, side 0..n-1, or n for the rest
  Term term;                       // AllL, ExR witness; NatL invariant
  Var var;                         // AllR, ExL raised eigenvariable; NatL premise variable
  std::vector<NomId> noms;         // AllR, ExL raising list
  NomId nom = 0;                   // NabL, NabR
  std::size_t clause = 0;          // DefR
  std::vector<std::size_t> clauses;  // DefL: clauses giving a premise, in order
  Subst theta;                     // DefR: instance of the raised clause

  static Rule make(RuleTag t) {
    Rule r;
    r.tag = t;
    return r;
  }
};

struct DNode;
using Deriv = std::shared_ptr<const DNode>;

struct DNode {
  Sequent concl;
  Rule rule;
  std::vector<Deriv> prem;
  std::uint32_t height = 0;  // 0 for leaves
  std::uint32_t size = 1;
  bool has_mc = false;
};

Deriv mk_node(Sequent concl, Rule rule, std::vector<Deriv> prem);

inline std::uint32_t height(const Deriv& d) { return d->height; }
inline bool is_cut_free(const Deriv& d) { return !d->has_mc; }

// Stems for names the kernel invents. Transformations use a different
// alphabet (see NameSupply) so the two never meet.
inline constexpr const char* kUnifyStem = "_u";
inline constexpr const char* kClauseStem = "_h";

}  // namespace lg
