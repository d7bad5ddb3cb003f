#pragma once

// Proof scripts: explicit derivation trees written as s-expressions. Each
// list names a rule, its parameters, then one sub-script per premise.
//
//   (id [j])  (cL j P)  (botL j)  (topR)
//   (andL j c P)  (andR P Q)  (orL j P Q)  (orR c P)  (impL j P Q)  (impR P)
//   (allL j "t" P)  (existsR "t" P)  (allR [h] P)  (existsL j [h] P)
//   (nablaL j [a] P)  (nablaR [a] P)
//   (eqL j [P])  (eqR)  (defL j P1 .. Pn)  (defR [k] P)
//   (natR [P])  (natL j "D" [n] Pbase Pstep Puse)
//   (cut "B" P Q)   P proves B, Q has B as its last hypothesis
//   (auto)          invertible rules only, fails when stuck
//
// Permutations of id, unifiers of eqL/defL and defR instances are computed.

#include <stdexcept>

#include "lg/syntax.hpp"

namespace lg {

struct ScriptError : std::runtime_error {
  int line = 0, col = 0;
  ScriptError(const std::string& msg, int l, int c)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

Deriv elaborate_script(const Module& m, const Sequent& goal, const SExpr& script);

// Deterministic invertible-rule search; not part of the kernel. Throws
// ScriptError if it gets stuck before closing every branch.
Deriv auto_prove(const Theory& th, const Sequent& s, int line = 0, int col = 0);

}  // namespace lg
