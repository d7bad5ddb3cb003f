#pragma once

// Shared fixtures for the unit, property and acceptance tests: corpus
// loading, random generators, oracles and the bounded prover.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lg/cut.hpp"
#include "lg/folnb.hpp"
#include "lg/printer.hpp"
#include "lg/script.hpp"
#include "lg/syntax.hpp"

namespace lgt {

using namespace lg;
using Rng = std::mt19937_64;

// ------------------------------------------------------------- corpus

std::string corpus_dir();
std::string read_text(const std::string& path);

// Parsed, level-inferred and stratified. Throws on any failure.
Module load_module_text(const std::string& text);
const Module& corpus_module(const std::string& file);  // cached, e.g. "prop1.lg"

struct Proof {
  std::string file, name;
  const Module* m = nullptr;
  Deriv d;
};

const std::vector<std::string>& corpus_files();  // the well-formed ones
// Every theorem of every corpus file, elaborated from its script.
const std::vector<Proof>& corpus_proofs();
std::vector<Proof> corpus_proofs(const std::string& file);
const Proof& corpus_proof(const std::string& file, const std::string& name);
// Elaborates a theorem's script without checking the result.
Deriv theorem_deriv(const Module& m, const std::string& name);

// -------------------------------------------------------- generators

// Vocabulary shared by the generators, in concrete syntax.
extern const char* const kGenTheory;
const Module& gen_module();

// Random formulas over the module's atoms. `sig` supplies eigenvariables.
class FormulaGen {
 public:
  FormulaGen(const Module& m, const Signature& sig);
  Term formula(Rng& rng, int depth) const;
  const std::vector<Term>& atoms() const { return atoms_; }

 private:
  std::vector<Term> atoms_;
  std::vector<NomId> names_;
  std::vector<Var> ivars_;
  Ty nm_, i_;
};

// Random checked derivations built from their leaves down, so every node is
// a correct rule instance by construction (the kernel still checks them).
// Core rules only: no multicut, equality, definitions or induction.
struct DerivGenOptions {
  int depth = 4;
  bool left_rules = true;
};
Deriv random_derivation(Rng& rng, const DerivGenOptions& o = {});

// Random permutation moving only names of `pool`.
Perm random_perm(Rng& rng, const std::vector<NomId>& pool);
std::vector<NomId> names_of_type(const Ty& ty, std::size_t at_least);

// Eta-expanded identity: Sigma; hyps |- hyps[j], decomposing hyps[j] fully.
Deriv expanded_identity(const Theory& th, const Signature& sig, const std::vector<Term>& hyps,
                        std::size_t j);

// Derivation of Sigma; hyps, extra |- C from one of Sigma; hyps |- C that
// does not use the extra formulas. Independent of the transformation module.
Deriv weaken_by_hand(const Deriv& d, const std::vector<Term>& extra);

// ---------------------------------------------------------- searching

// Depth-bounded backward proof search over every cut-free rule except natL.
// Returns nothing if no proof of at most `depth` rule applications deep is
// found.
std::optional<Deriv> bounded_search(const Theory& th, const Sequent& s, int depth);

// ------------------------------------------------------------ fuzzing

// One payload field of one node changed, with that node before and after.
struct Mutation {
  Deriv tree, before, after;
  std::string what;
};
// Returns nothing if the chosen nodes have no payload to change.
std::optional<Mutation> mutate(const Deriv& d, Rng& rng);
// True if the mutated rule demands exactly the premises the original did,
// so the rule instance did not change.
bool mutation_is_inert(const Theory& th, const Mutation& m);

// --------------------------------------------------------- unification

// Brute-force comparison of unify on every pair of pattern terms of depth
// at most 3 under two abstracted names, over constants k : i and
// g : nm -> i -> i and variables X : nm -> i and Y : nm -> nm -> i.
struct UnifyOracleReport {
  std::size_t terms = 0, pairs = 0, unifiable = 0, solutions = 0;
  std::size_t disagreements = 0, not_factoring = 0, outside_candidates = 0;
  std::vector<std::string> failures;  // first few, for the log
};
UnifyOracleReport unify_oracle();

// First-order terms over variables and function symbols, with textbook
// Robinson unification as an oracle for the first-order fragment.
struct FoTerm {
  bool var = false;
  std::string name;
  std::vector<FoTerm> args;
};
std::optional<std::vector<std::pair<std::string, FoTerm>>> robinson(const FoTerm& s, const FoTerm& t);
std::string show_fo(const FoTerm& t);

// ------------------------------------------------------------- levels

struct LevelFixture {
  const char* formula;
  int level;
};
// Formulas over preds p0 : o (level 0), p1, q1 : i -> o (level 1) and
// p2 : nm -> o (level 2); values derived by hand from the level clauses.
extern const char* const kLevelTheory;
const std::vector<LevelFixture>& level_fixtures();

// --------------------------------------------------------------- misc

bool same_multiset(const std::vector<Term>& a, const std::vector<Term>& b);
bool seq_equal_upto_order(const Sequent& a, const Sequent& b);
// Height recomputed by a tree walk; leaves are 0.
std::uint32_t walk_height(const Deriv& d);

// Synthesized multicuts for the cut-elimination properties: a checked side
// proof of B composed with a checked proof using B.
std::vector<Deriv> synthesized_multicuts(Rng& rng, std::size_t n);

}  // namespace lgt
