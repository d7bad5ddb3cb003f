#pragma once

#include <map>
#include <vector>

#include "lg/term.hpp"

namespace lg {

struct Var {
  Symbol name = 0;
  Ty ty;
};

// Set of typed eigenvariables, kept sorted by name so printing is stable.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Var> vars);

  bool contains(Symbol x) const { return type_of(x) != nullptr; }
  const Ty* type_of(Symbol x) const;
  // Throws TypeError if x is present at a different type.
  void add(const Var& v);
  void remove(Symbol x);
  Signature with(const Var& v) const;
  Signature without(Symbol x) const;
  Signature merged(const Signature& o) const;

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  const std::vector<Var>& vars() const { return vars_; }
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }

  bool operator==(const Signature& o) const;

 private:
  std::vector<Var> vars_;
};

// Eigenvariable substitution. Images are canonical and have empty support.
class Subst {
 public:
  struct Entry {
    Var var;
    Term image;
  };

  // Throws TypeError if the image has the wrong type or mentions a nominal
  // constant.
  void bind(const Var& x, const Term& image);
  // Same, without the support check. Only raising and name substitution use
  // this.
  void bind_unchecked(const Var& x, const Term& image);

  const Term* find(Symbol x) const;
  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  std::vector<Entry> entries() const;  // sorted by variable name

  Term apply(const Term& t) const;

 private:
  std::map<Symbol, Entry> map_;
};

// x (a . b) = (x a) b
Subst compose(const Subst& a, const Subst& b);

// Sigma theta: unbound variables stay, bound ones contribute the free
// variables of their images.
Signature sig_apply(const Signature& sig, const Subst& th);

std::vector<Var> free_var_list(const Term& t);

}  // namespace lg
