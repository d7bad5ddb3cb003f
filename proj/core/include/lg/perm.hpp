#pragma once

#include <utility>
#include <vector>

#include "lg/term.hpp"

namespace lg {

// Finite, type-preserving permutation of nominal constants. Only the moved
// points are stored, sorted by source.
class Perm {
 public:
  Perm() = default;

  static Perm swap(NomId a, NomId b);
  // Throws TypeError unless `pairs` is a type-preserving bijection on its
  // domain.
  static Perm from_pairs(std::vector<std::pair<NomId, NomId>> pairs);

  NomId operator()(NomId a) const;
  bool is_identity() const { return map_.empty(); }
  const std::vector<std::pair<NomId, NomId>>& pairs() const { return map_; }
  std::vector<NomId> moved() const;

  Perm inverse() const;
  bool operator==(const Perm& o) const { return map_ == o.map_; }

 private:
  std::vector<std::pair<NomId, NomId>> map_;
};

// compose(p1, p2) acts as p1 first, then p2.
Perm compose(const Perm& p1, const Perm& p2);

Term perm_apply(const Perm& p, const Term& t);
std::vector<NomId> perm_apply(const Perm& p, const std::vector<NomId>& cs);

// Extends the injective partial map from[i] -> to[i] to a permutation on
// from ∪ to. Returns false if the map is not injective or not type-preserving.
bool complete_perm(const std::vector<NomId>& from, const std::vector<NomId>& to,
                   Perm& out);

// Some permutation p with p.a = b, if one exists.
bool perm_match(const Term& a, const Term& b, Perm& out);

}  // namespace lg
