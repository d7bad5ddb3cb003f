#include "lg/subst.hpp"

#include <algorithm>

namespace lg {

namespace {

bool name_less(const Var& a, const Var& b) { return name_of(a.name) < name_of(b.name); }

}  // namespace

Signature::Signature(std::vector<Var> vars) {
  for (auto& v : vars) add(v);
}

const Ty* Signature::type_of(Symbol x) const {
  for (const auto& v : vars_)
    if (v.name == x) return &v.ty;
  return nullptr;
}

void Signature::add(const Var& v) {
  if (const Ty* t = type_of(v.name)) {
    if (!ty_equal(*t, v.ty))
      throw TypeError("eigenvariable '" + name_of(v.name) + "' redeclared at type " +
                      show_type(v.ty));
    return;
  }
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v, name_less);
  vars_.insert(it, v);
}

void Signature::remove(Symbol x) {
  vars_.erase(std::remove_if(vars_.begin(), vars_.end(),
                             [&](const Var& v) { return v.name == x; }),
              vars_.end());
}

Signature Signature::with(const Var& v) const {
  Signature s = *this;
  s.add(v);
  return s;
}

Signature Signature::without(Symbol x) const {
  Signature s = *this;
  s.remove(x);
  return s;
}

Signature Signature::merged(const Signature& o) const {
  Signature s = *this;
  for (const auto& v : o) s.add(v);
  return s;
}

bool Signature::operator==(const Signature& o) const {
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || !ty_equal(vars_[i].ty, o.vars_[i].ty))
      return false;
  return true;
}

// ---------------------------------------------------------------- subst

void Subst::bind_unchecked(const Var& x, const Term& image) {
  Ty t = type_of_closed(image);
  if (!ty_equal(t, x.ty))
    throw TypeError("substitution for '" + name_of(x.name) + "' has type " +
                    show_type(t) + ", expected " + show_type(x.ty));
  map_[x.name] = Entry{x, image};
}

void Subst::bind(const Var& x, const Term& image) {
  if (image->has_nom)
    throw TypeError("substitution image for '" + name_of(x.name) +
                    "' mentions a nominal constant");
  bind_unchecked(x, image);
}

const Term* Subst::find(Symbol x) const {
  auto it = map_.find(x);
  return it == map_.end() ? nullptr : &it->second.image;
}

std::vector<Subst::Entry> Subst::entries() const {
  std::vector<Entry> out;
  for (const auto& [k, e] : map_) out.push_back(e);
  std::sort(out.begin(), out.end(),
            [](const Entry& a, const Entry& b) { return name_less(a.var, b.var); });
  return out;
}

Term Subst::apply(const Term& t) const {
  if (map_.empty()) return t;
  return replace_vars(t, [this](Symbol x) { return find(x); });
}

Subst compose(const Subst& a, const Subst& b) {
  Subst out;
  for (const auto& e : a.entries()) out.bind_unchecked(e.var, b.apply(e.image));
  for (const auto& e : b.entries())
    if (!a.find(e.var.name)) out.bind_unchecked(e.var, e.image);
  return out;
}

std::vector<Var> free_var_list(const Term& t) {
  std::vector<Var> out;
  for (const auto& r : free_vars(t)) out.push_back({r.name, r.ty});
  return out;
}

Signature sig_apply(const Signature& sig, const Subst& th) {
  Signature out;
  for (const auto& v : sig) {
    if (const Term* img = th.find(v.name)) {
      for (const auto& w : free_var_list(*img)) out.add(w);
    } else {
      out.add(v);
    }
  }
  return out;
}

}  // namespace lg
