#include "lg/term.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace lg {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::unordered_map<std::string, Symbol> ids;
  std::deque<std::string> names;  // stable references
};

SymbolTable& symbols() {
  static SymbolTable t;
  return t;
}

struct NominalTable {
  std::mutex mu;
  std::unordered_map<std::string, NomId> ids;
  std::deque<std::string> names;
  std::vector<Ty> types;
};

NominalTable& nominals() {
  static NominalTable t;
  return t;
}

}  // namespace

Symbol intern(std::string_view name) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  Symbol s = static_cast<Symbol>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(t.names.back(), s);
  return s;
}

const std::string& name_of(Symbol s) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  return t.names.at(s);
}

// ---------------------------------------------------------------- types

Ty base_type(std::string_view name, bool nominal) {
  auto n = std::make_shared<TyNode>();
  n->base = intern(name);
  n->nominal = nominal;
  return n;
}

Ty arrow(Ty dom, Ty cod) {
  auto n = std::make_shared<TyNode>();
  n->arrow = true;
  n->dom = std::move(dom);
  n->cod = std::move(cod);
  return n;
}

Ty arrows(const std::vector<Ty>& doms, Ty cod) {
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) cod = arrow(*it, cod);
  return cod;
}

Ty prop_type() {
  static const Ty o = base_type("o");
  return o;
}

Ty nat_type() {
  static const Ty nt = base_type("nt");
  return nt;
}

bool ty_equal(const Ty& a, const Ty& b) {
  if (a == b) return true;
  if (!a || !b || a->arrow != b->arrow) return false;
  if (!a->arrow) return a->base == b->base && a->nominal == b->nominal;
  return ty_equal(a->dom, b->dom) && ty_equal(a->cod, b->cod);
}

bool is_nominal_type(const Ty& t) { return !t->arrow && t->nominal; }

bool mentions_prop(const Ty& t) {
  if (!t->arrow) return t->base == prop_type()->base && !t->nominal;
  return mentions_prop(t->dom) || mentions_prop(t->cod);
}

std::vector<Ty> arg_types(const Ty& t) {
  std::vector<Ty> out;
  for (Ty c = t; c->arrow; c = c->cod) out.push_back(c->dom);
  return out;
}

Ty result_type(const Ty& t) {
  Ty c = t;
  while (c->arrow) c = c->cod;
  return c;
}

std::size_t arity(const Ty& t) {
  std::size_t n = 0;
  for (Ty c = t; c->arrow; c = c->cod) ++n;
  return n;
}

std::string show_type(const Ty& t) {
  if (!t->arrow) return name_of(t->base);
  std::string d = show_type(t->dom);
  if (t->dom->arrow) d = "(" + d + ")";
  return d + " -> " + show_type(t->cod);
}

// ---------------------------------------------------- nominal constants

NomId nominal(std::string_view name, const Ty& ty) {
  if (!is_nominal_type(ty))
    throw TypeError("nominal constant '" + std::string(name) +
                    "' needs a nominal type, got " + show_type(ty));
  auto& t = nominals();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) {
    if (!ty_equal(t.types[it->second], ty))
      throw TypeError("nominal constant '" + std::string(name) +
                      "' already has type " + show_type(t.types[it->second]));
    return it->second;
  }
  NomId c = static_cast<NomId>(t.names.size());
  t.names.emplace_back(name);
  t.types.push_back(ty);
  t.ids.emplace(t.names.back(), c);
  return c;
}

const std::string& nominal_name(NomId c) {
  auto& t = nominals();
  std::lock_guard lock(t.mu);
  return t.names.at(c);
}

Ty nominal_type(NomId c) {
  auto& t = nominals();
  std::lock_guard lock(t.mu);
  return t.types.at(c);
}

bool find_nominal(std::string_view name, NomId& out) {
  auto& t = nominals();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it == t.ids.end()) return false;
  out = it->second;
  return true;
}

NomId fresh_nominal(const Ty& ty, const std::function<bool(NomId)>& used) {
  auto& t = nominals();
  std::size_t n;
  {
    std::lock_guard lock(t.mu);
    n = t.names.size();
  }
  for (NomId c = 0; c < n; ++c) {
    Ty ct;
    {
      std::lock_guard lock(t.mu);
      ct = t.types[c];
    }
    if (ty_equal(ct, ty) && !used(c)) return c;
  }
  // Generated names carry a '#'. The lexer accepts it so printed terms re-parse.
  const std::string stem = name_of(ty->base) + "#";
  for (std::size_t k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    NomId dummy;
    if (!find_nominal(cand, dummy)) return nominal(cand, ty);
  }
}

}  // namespace lg
