#pragma once

// Multicut reduction and normalization to cut-free derivations.

#include <string>
#include <vector>

#include "lg/transform.hpp"

namespace lg {

enum class CutCase {
  Trivial,          // no cut formulas
  Axiom,            // right premise is id on a cut formula
  Structural,       // right premise contracts a cut formula
  LeftAxiom,        // a side premise is id
  Essential,        // side ends with the right rule matching the left rule
  LeftCommutative,  // side premise ends with a left rule
  RightCommutative, // right premise acts on a context formula
  Multicut,         // right premise is itself a multicut
};

struct Classification {
  CutCase kind = CutCase::Trivial;
  std::size_t cut = 0;  // the cut formula index involved, if any
  std::string label;    // e.g. "essential(andR/andL)"
};

Classification classify(const Deriv& mc);

// One reduction step on a multicut whose premises are cut-free. The reduct
// has the same end sequent. Throws TransformError on an internal failure.
Deriv reduce_once(const Theory& th, NameSupply& ns, const Deriv& mc, Classification* out = nullptr);

// Multicut over `sides` (one per cut formula) and `right`, whose hypotheses
// must contain the cut formulas. The conclusion lists the side contexts in
// order, then right's remaining hypotheses.
Deriv make_mc(const Ctx& c, const std::vector<Deriv>& sides, const std::vector<Term>& cuts,
              const Deriv& right);

// Derives `target` from d by weakening missing hypotheses and contracting
// extra copies of hypotheses that target already has.
Deriv finish(const Ctx& c, const Deriv& d, const Sequent& target);

struct TraceStep {
  std::vector<std::size_t> path;
  std::string label;
  std::uint32_t pre_height = 0;
  std::uint32_t post_height = 0;
};

struct NormalizeResult {
  bool ok = false;
  Deriv result;
  std::vector<TraceStep> trace;
  std::string why;  // set when !ok
};

// Default fuel: a multiple of the derivation size.
std::size_t default_fuel(const Deriv& d);

// Innermost-first, leftmost multicut first.
NormalizeResult normalize(const Theory& th, const Deriv& d, std::size_t fuel = 0);

}  // namespace lg
