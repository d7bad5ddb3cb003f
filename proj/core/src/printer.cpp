#include "lg/printer.hpp"

#include <set>

namespace lg {

namespace {

void collect_names(const Term& t, std::set<std::string>& out) {
  if (t->lam) return collect_names(t->body, out);
  switch (t->head.kind) {
    case HeadKind::Bound: break;
    case HeadKind::Var:
    case HeadKind::Const: out.insert(name_of(t->head.id)); break;
    case HeadKind::Nom: out.insert(nominal_name(t->head.id)); break;
  }
  for (const auto& a : t->args) collect_names(a, out);
}

class Printer {
 public:
  explicit Printer(const Term& root) { collect_names(root, avoid_); }

  // Term precedence: 0 top, 1 function position, 2 argument position.
  std::string term(const Term& t, int prec) {
    if (t->lam) {
      std::string n = bind();
      std::string s = "\\" + n + ":" + show_type(t->bty) + ". " + term(t->body, 0);
      unbind();
      return prec > 0 ? "(" + s + ")" : s;
    }
    // Formulas occurring inside terms, as in the body of an invariant.
    if (t->head.kind == HeadKind::Const && view(t).kind != FKind::Atom) {
      std::string s = formula(t, 0);
      return prec > 0 && !t->args.empty() ? "(" + s + ")" : s;
    }
    std::string s = head(t->head);
    if (t->args.empty()) return s;
    for (const auto& a : t->args) s += " " + term(a, 2);
    return prec > 1 ? "(" + s + ")" : s;
  }

  // Formula precedence: 0 binders, 1 =>, 2 \/, 3 /\, 4 operands of = and atoms.
  std::string formula(const Term& f, int prec) {
    FView v = view(f);
    auto wrap = [&](int mine, std::string s) { return prec > mine ? "(" + s + ")" : s; };
    switch (v.kind) {
      case FKind::Top: return "true";
      case FKind::Bot: return "false";
      case FKind::And: return wrap(3, formula(v.l, 4) + " /\\ " + formula(v.r, 3));
      case FKind::Or: return wrap(2, formula(v.l, 3) + " \\/ " + formula(v.r, 2));
      case FKind::Imp: return wrap(1, formula(v.l, 2) + " => " + formula(v.r, 1));
      case FKind::Forall:
      case FKind::Exists:
      case FKind::Nabla: {
        const char* kw = v.kind == FKind::Forall ? "forall" : v.kind == FKind::Exists ? "exists" : "nabla";
        std::string n = bind();
        std::string s = std::string(kw) + " " + n + ":" + show_type(v.qty) + ", " +
                        formula(v.l->body, 0);
        unbind();
        return wrap(0, s);
      }
      case FKind::Eq: return wrap(4, term(v.l, 1) + " = " + term(v.r, 1));
      case FKind::Nat: return wrap(4, "nat " + term(v.l, 2));
      case FKind::Atom: return wrap(4, term(f, 1));
    }
    return "?";
  }

 private:
  std::string head(const Head& h) {
    switch (h.kind) {
      case HeadKind::Bound:
        if (h.id >= stack_.size()) return "#" + std::to_string(h.id);
        return stack_[stack_.size() - 1 - h.id];
      case HeadKind::Var:
      case HeadKind::Const: return name_of(h.id);
      case HeadKind::Nom: return nominal_name(h.id);
    }
    return "?";
  }

  std::string bind() {
    std::string n = "x" + std::to_string(stack_.size() + 1);
    while (avoid_.count(n)) n += "'";
    stack_.push_back(n);
    return n;
  }
  void unbind() { stack_.pop_back(); }

  std::set<std::string> avoid_;
  std::vector<std::string> stack_;
};

}  // namespace

std::string show(const Term& t) { return Printer(t).term(t, 0); }

std::string show_formula(const Term& f) { return Printer(f).formula(f, 0); }

std::string show_sig(const Signature& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ", ";
    out += name_of(v.name) + ":" + show_type(v.ty);
  }
  return out;
}

std::string show_sequent(const Sequent& s) {
  std::string out = "{" + show_sig(s.sig) + "} ";
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += ", ";
    out += show_formula(s.hyps[i]);
  }
  out += s.hyps.empty() ? "|- " : " |- ";
  return out + show_formula(s.goal);
}

std::string show_perm(const Perm& p) {
  std::string out;
  for (auto [a, b] : p.pairs()) {
    if (!out.empty()) out += " ";
    out += nominal_name(a) + ">" + nominal_name(b);
  }
  return out;
}

std::string show_subst(const Subst& s) {
  std::string out;
  for (const auto& e : s.entries()) {
    if (!out.empty()) out += ", ";
    out += name_of(e.var.name) + " := " + show(e.image);
  }
  return "[" + out + "]";
}

}  // namespace lg
