#pragma once

// The local-signature calculus: judgments sigma |> B where sigma lists the
// locally bound names. Local names are drawn from the nominal constants, so a
// judgment's formula is an ordinary formula whose support lies in sigma.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg/kernel.hpp"

namespace lg {

struct Judgment {
  std::vector<NomId> sigma;
  Term f;
};

bool judgment_equal(const Judgment& a, const Judgment& b);

// Hypotheses are a multiset. Lists are used for addressing only: premise
// hypotheses are compared up to reordering.
struct FSequent {
  Signature sig;
  std::vector<Judgment> hyps;
  Judgment goal;
};

enum class FTag {
  Id, Cut, BotL, TopR, AndL, AndR, OrL, OrR, ImpL, ImpR,
  AllL, AllR, ExL, ExR, NabL, NabR, CL, WL,
  AlphaL, AlphaR, PL, PR, SSL, SSR, WSL, WSR,
};

const char* ftag_name(FTag t);
bool ftag_from_name(const std::string& s, FTag& out);
bool ftag_is_left(FTag t);

struct FRule {
  FTag tag = FTag::Id;
  std::size_t idx = 0;   // hypothesis acted on
  int choice = 1;        // OrR
  std::size_t pos = 0;   // PL/PR: swap pos, pos+1; SS: insert at; WS: remove at
  NomId nom = 0;         // NabL/NabR new name; SS inserted name
  Perm pi;               // AlphaL/AlphaR
  Term term;             // AllL/ExR witness
  Var var;               // AllR/ExL eigenvariable
  Judgment cut;          // Cut formula
  std::vector<bool> left;  // Cut: hypotheses sent to the left premise

  static FRule make(FTag t) {
    FRule r;
    r.tag = t;
    return r;
  }
};

struct FNode;
using FDeriv = std::shared_ptr<const FNode>;

struct FNode {
  FSequent concl;
  FRule rule;
  std::vector<FDeriv> prem;
  std::uint32_t height = 0;  // 0 for leaves
};

FDeriv mk_fnode(FSequent concl, FRule rule, std::vector<FDeriv> prem);

std::optional<std::string> fsequent_well_formed(const Theory& th, const FSequent& s);
std::optional<Violation> check_folnb(const Theory& th, const FDeriv& d);

struct BridgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Each formula becomes supp(B) |> B with the support in occurrence order.
Judgment canonical(const Term& f);
FSequent canonical(const Sequent& s);
// Forgets local signatures.
Sequent forget(const FSequent& s);

// Core fragment only: no multicut, equality, definitions or induction.
FDeriv lg_to_folnb(const Theory& th, const Deriv& d);
Deriv folnb_to_lg(const Theory& th, const FDeriv& d);

bool in_core_fragment(const Deriv& d);

std::string show_judgment(const Judgment& j);
std::string show_fsequent(const FSequent& s);

}  // namespace lg
