#pragma once

#include <string>

#include "lg/sequent.hpp"

namespace lg {

// Concrete syntax accepted back by the parser:
//   terms     \x:ty. t   |  h t1 ... tn  |  (t)
//   formulas  true | false | A /\ B | A \/ B | A => B | s = t | nat t
//             | forall x:ty, B | exists x:ty, B | nabla x:ty, B | atom
// Binder names are generated so they never capture a free name.
std::string show(const Term& t);
std::string show_formula(const Term& f);
std::string show_sig(const Signature& s);
std::string show_sequent(const Sequent& s);
std::string show_perm(const Perm& p);
std::string show_subst(const Subst& s);

}  // namespace lg
