#include "lg/perm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lg {

Perm Perm::swap(NomId a, NomId b) {
  if (a == b) return {};
  if (!ty_equal(nominal_type(a), nominal_type(b)))
    throw TypeError("swap of nominal constants of different types");
  Perm p;
  p.map_ = a < b ? std::vector<std::pair<NomId, NomId>>{{a, b}, {b, a}}
                 : std::vector<std::pair<NomId, NomId>>{{b, a}, {a, b}};
  return p;
}

Perm Perm::from_pairs(std::vector<std::pair<NomId, NomId>> pairs) {
  std::map<NomId, NomId> fwd;
  std::set<NomId> img;
  for (auto [a, b] : pairs) {
    if (!fwd.emplace(a, b).second) throw TypeError("permutation maps a point twice");
    if (!img.insert(b).second) throw TypeError("permutation is not injective");
    if (!ty_equal(nominal_type(a), nominal_type(b)))
      throw TypeError("permutation does not preserve types");
  }
  std::set<NomId> dom;
  for (auto& [a, b] : fwd) dom.insert(a);
  if (dom != img) throw TypeError("permutation is not a bijection on its domain");
  Perm p;
  for (auto& [a, b] : fwd)
    if (a != b) p.map_.emplace_back(a, b);
  return p;
}

NomId Perm::operator()(NomId a) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), std::make_pair(a, NomId{0}));
  if (it != map_.end() && it->first == a) return it->second;
  return a;
}

std::vector<NomId> Perm::moved() const {
  std::vector<NomId> out;
  for (auto& [a, b] : map_) out.push_back(a);
  return out;
}

Perm Perm::inverse() const {
  Perm p;
  for (auto [a, b] : map_) p.map_.emplace_back(b, a);
  std::sort(p.map_.begin(), p.map_.end());
  return p;
}

Perm compose(const Perm& p1, const Perm& p2) {
  std::set<NomId> dom;
  for (auto& [a, b] : p1.pairs()) dom.insert(a);
  for (auto& [a, b] : p2.pairs()) dom.insert(a);
  std::vector<std::pair<NomId, NomId>> out;
  for (NomId a : dom) {
    NomId b = p2(p1(a));
    if (a != b) out.emplace_back(a, b);
  }
  Perm r = Perm::from_pairs(out);
  return r;
}

Term perm_apply(const Perm& p, const Term& t) {
  if (p.is_identity()) return t;
  return rename_noms(t, [&](NomId c) { return p(c); });
}

std::vector<NomId> perm_apply(const Perm& p, const std::vector<NomId>& cs) {
  std::vector<NomId> out;
  out.reserve(cs.size());
  for (NomId c : cs) out.push_back(p(c));
  return out;
}

bool complete_perm(const std::vector<NomId>& from, const std::vector<NomId>& to,
                   Perm& out) {
  if (from.size() != to.size()) return false;
  std::map<NomId, NomId> fwd, bwd;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!ty_equal(nominal_type(from[i]), nominal_type(to[i]))) return false;
    auto [f, fi] = fwd.emplace(from[i], to[i]);
    if (!fi && f->second != to[i]) return false;
    auto [b, bi] = bwd.emplace(to[i], from[i]);
    if (!bi && b->second != from[i]) return false;
  }
  // Close each open chain back to its start: follow images that leave the
  // domain and map them to the chain's first point.
  std::vector<std::pair<NomId, NomId>> pairs(fwd.begin(), fwd.end());
  for (auto& [a, b] : fwd) {
    if (fwd.count(b)) continue;
    // b is an end of a chain; walk backwards to its start.
    NomId start = a;
    while (bwd.count(start)) start = bwd[start];
    pairs.emplace_back(b, start);
  }
  try {
    out = Perm::from_pairs(pairs);
  } catch (const TypeError&) {
    return false;
  }
  return true;
}

namespace {

bool match_rec(const Term& a, const Term& b, std::map<NomId, NomId>& fwd,
               std::map<NomId, NomId>& bwd) {
  if (a->lam != b->lam) return false;
  if (a->lam) return ty_equal(a->bty, b->bty) && match_rec(a->body, b->body, fwd, bwd);
  if (a->args.size() != b->args.size()) return false;
  const Head &ha = a->head, &hb = b->head;
  if (ha.kind == HeadKind::Nom && hb.kind == HeadKind::Nom) {
    if (!ty_equal(ha.ty, hb.ty)) return false;
    auto f = fwd.find(ha.id);
    if (f != fwd.end() && f->second != hb.id) return false;
    auto g = bwd.find(hb.id);
    if (g != bwd.end() && g->second != ha.id) return false;
    fwd[ha.id] = hb.id;
    bwd[hb.id] = ha.id;
  } else if (!head_equal(ha, hb)) {
    return false;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!match_rec(a->args[i], b->args[i], fwd, bwd)) return false;
  return true;
}

}  // namespace

bool perm_match(const Term& a, const Term& b, Perm& out) {
  std::map<NomId, NomId> fwd, bwd;
  if (!match_rec(a, b, fwd, bwd)) return false;
  std::vector<NomId> from, to;
  for (auto& [x, y] : fwd) {
    from.push_back(x);
    to.push_back(y);
  }
  return complete_perm(from, to, out);
}

}  // namespace lg
