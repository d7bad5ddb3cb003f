#include <cctype>
#include <functional>
#include <memory>
#include <set>

#include "lg/syntax.hpp"

namespace lg {

const TheoremDecl* Module::theorem(std::string_view name) const {
  for (const auto& t : theorems)
    if (t.name == name) return &t;
  return nullptr;
}

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> k{"forall", "exists", "nabla", "true", "false", "nat"};
  return k;
}

bool is_binder_kw(const Token& t) {
  return t.kind == Tok::Ident && (t.text == "forall" || t.text == "exists" || t.text == "nabla");
}

// ------------------------------------------------------------ raw syntax

enum class RK { Id, App, Lam, Top, Bot, And, Or, Imp, All, Ex, Nab, Eq, Nat };

struct Raw;
using RawP = std::unique_ptr<Raw>;

struct Raw {
  RK k = RK::Id;
  std::string name;  // Id, binder name
  Ty ann;            // binder annotation, may be null
  std::vector<RawP> kids;
  int line = 0, col = 0;
};

class Stream {
 public:
  explicit Stream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_kw(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool eat(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  Token expect(Tok k, const char* what = nullptr) {
    if (!at(k))
      fail(std::string("expected ") + (what ? what : tok_name(k)) + ", found " + describe(peek()));
    return next();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident) return "'" + t.text + "'";
    if (t.kind == Tok::End) return "end of input";
    return tok_name(t.kind);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Ty parse_type_in(const Module& m, Stream& s);

Ty type_atom(const Module& m, Stream& s) {
  if (s.eat(Tok::LParen)) {
    Ty t = parse_type_in(m, s);
    s.expect(Tok::RParen);
    return t;
  }
  Token t = s.expect(Tok::Ident, "a type");
  if (t.text == "o") return prop_type();
  if (t.text == "nt") return nat_type();
  auto it = m.types.find(t.text);
  if (it == m.types.end()) throw ParseError("unknown type '" + t.text + "'", t.line, t.col);
  return it->second;
}

Ty parse_type_in(const Module& m, Stream& s) {
  Ty d = type_atom(m, s);
  if (s.eat(Tok::Arrow)) return arrow(d, parse_type_in(m, s));
  return d;
}

class RawParser {
 public:
  RawParser(const Module& m, Stream& s) : m_(m), s_(s) {}

  RawP expr() {
    if (is_binder_kw(s_.peek()) || s_.at(Tok::Lambda)) return binder();
    RawP l = disj();
    if (s_.at(Tok::Imp)) {
      Token t = s_.next();
      return bin(RK::Imp, std::move(l), expr(), t);
    }
    return l;
  }

 private:
  RawP node(RK k, const Token& t) {
    auto r = std::make_unique<Raw>();
    r->k = k;
    r->line = t.line;
    r->col = t.col;
    return r;
  }
  RawP bin(RK k, RawP l, RawP r, const Token& t) {
    RawP n = node(k, t);
    n->kids.push_back(std::move(l));
    n->kids.push_back(std::move(r));
    return n;
  }

  RawP binder() {
    Token kw = s_.next();
    RK k = kw.kind == Tok::Lambda ? RK::Lam
           : kw.text == "forall"  ? RK::All
           : kw.text == "exists"  ? RK::Ex
                                  : RK::Nab;
    std::vector<std::pair<Token, Ty>> names;
    do {
      Token n = s_.expect(Tok::Ident, "a bound name");
      if (keywords().count(n.text)) throw ParseError("'" + n.text + "' is reserved", n.line, n.col);
      Ty ann;
      if (s_.eat(Tok::Colon)) ann = parse_type_in(m_, s_);
      names.push_back({n, ann});
    } while (s_.at(Tok::Ident));
    s_.expect(k == RK::Lam ? Tok::Dot : Tok::Comma);
    RawP body = expr();
    for (auto it = names.rbegin(); it != names.rend(); ++it) {
      RawP b = node(k, it->first);
      b->name = it->first.text;
      b->ann = it->second;
      b->kids.push_back(std::move(body));
      body = std::move(b);
    }
    return body;
  }

  RawP disj() {
    RawP l = conj();
    if (s_.at(Tok::Or)) {
      Token t = s_.next();
      return bin(RK::Or, std::move(l), operand_or(&RawParser::disj), t);
    }
    return l;
  }
  RawP conj() {
    RawP l = cmp();
    if (s_.at(Tok::And)) {
      Token t = s_.next();
      return bin(RK::And, std::move(l), operand_or(&RawParser::conj), t);
    }
    return l;
  }
  // A binder may close a chain of operators: A /\ forall x, B.
  RawP operand_or(RawP (RawParser::*f)()) {
    if (is_binder_kw(s_.peek()) || s_.at(Tok::Lambda)) return binder();
    return (this->*f)();
  }
  RawP cmp() {
    if (s_.at_kw("nat")) {
      Token t = s_.next();
      RawP n = node(RK::Nat, t);
      n->kids.push_back(arg());
      return n;
    }
    RawP l = app();
    if (s_.at(Tok::Eq)) {
      Token t = s_.next();
      return bin(RK::Eq, std::move(l), app(), t);
    }
    return l;
  }
  bool starts_arg() const {
    const Token& t = s_.peek();
    if (t.kind == Tok::LParen) return true;
    if (t.kind != Tok::Ident) return false;
    return !keywords().count(t.text) || t.text == "true" || t.text == "false";
  }
  RawP app() {
    if (is_binder_kw(s_.peek()) || s_.at(Tok::Lambda)) return binder();
    Token t0 = s_.peek();
    RawP f = arg();
    std::vector<RawP> args;
    for (;;) {
      if (is_binder_kw(s_.peek()) || s_.at(Tok::Lambda)) {
        args.push_back(binder());
        break;
      }
      if (!starts_arg()) break;
      args.push_back(arg());
    }
    if (args.empty()) return f;
    RawP n = node(RK::App, t0);
    n->kids.push_back(std::move(f));
    for (auto& a : args) n->kids.push_back(std::move(a));
    return n;
  }
  RawP arg() {
    if (s_.eat(Tok::LParen)) {
      RawP e = expr();
      s_.expect(Tok::RParen);
      return e;
    }
    Token t = s_.expect(Tok::Ident, "a term");
    if (t.text == "true") return node(RK::Top, t);
    if (t.text == "false") return node(RK::Bot, t);
    if (keywords().count(t.text)) throw ParseError("unexpected '" + t.text + "'", t.line, t.col);
    RawP n = node(RK::Id, t);
    n->name = t.text;
    return n;
  }

  const Module& m_;
  Stream& s_;
};

// ------------------------------------------------------ type inference

struct MT;
using MTp = std::shared_ptr<MT>;
struct MT {
  enum class K { Meta, Base, Arrow } k = K::Meta;
  Ty base;
  MTp dom, cod;
  MTp link;  // solved metas
};

MTp meta() { return std::make_shared<MT>(); }
MTp lift(const Ty& t) {
  auto m = std::make_shared<MT>();
  if (t->arrow) {
    m->k = MT::K::Arrow;
    m->dom = lift(t->dom);
    m->cod = lift(t->cod);
  } else {
    m->k = MT::K::Base;
    m->base = t;
  }
  return m;
}
MTp marrow(MTp a, MTp b) {
  auto m = std::make_shared<MT>();
  m->k = MT::K::Arrow;
  m->dom = std::move(a);
  m->cod = std::move(b);
  return m;
}
MTp find(MTp m) {
  while (m->k == MT::K::Meta && m->link) m = m->link;
  return m;
}
bool occurs(const MTp& v, MTp m) {
  m = find(m);
  if (m == v) return true;
  return m->k == MT::K::Arrow && (occurs(v, m->dom) || occurs(v, m->cod));
}
bool munify(MTp a, MTp b) {
  a = find(a);
  b = find(b);
  if (a == b) return true;
  if (a->k == MT::K::Meta) {
    if (occurs(a, b)) return false;
    a->link = b;
    return true;
  }
  if (b->k == MT::K::Meta) return munify(b, a);
  if (a->k != b->k) return false;
  if (a->k == MT::K::Base) return ty_equal(a->base, b->base);
  return munify(a->dom, b->dom) && munify(a->cod, b->cod);
}
// Null if a meta remains; with `dflt`, remaining metas are set to it.
Ty zonk(MTp m, const Ty* dflt) {
  m = find(m);
  switch (m->k) {
    case MT::K::Meta:
      if (!dflt) return nullptr;
      m->k = MT::K::Base;
      m->base = *dflt;
      return *dflt;
    case MT::K::Base: return m->base;
    case MT::K::Arrow: {
      Ty d = zonk(m->dom, dflt), c = zonk(m->cod, dflt);
      if (!d || !c) return nullptr;
      return arrow(d, c);
    }
  }
  return nullptr;
}
std::string mshow(MTp m) {
  m = find(m);
  if (m->k == MT::K::Meta) return "?";
  if (m->k == MT::K::Base) return show_type(m->base);
  std::string d = mshow(m->dom);
  if (find(m->dom)->k == MT::K::Arrow) d = "(" + d + ")";
  return d + " -> " + mshow(m->cod);
}

enum class Mode { Closed, Clause, Open };

class Elab {
 public:
  Elab(const Module& m, const Signature& sig, Mode mode) : m_(m), sig_(sig), mode_(mode) {}

  // Names the elaboration invented, in first-occurrence order.
  struct Free {
    std::string name;
    MTp mt;
    bool is_var = true;
    Ty ty;
    int line = 0, col = 0;
  };
  const std::vector<Free>& frees() const { return frees_; }

  MTp infer(const Raw& r) {
    auto err = [&](const std::string& msg) -> ParseError { return ParseError(msg, r.line, r.col); };
    auto expect = [&](const Raw& k, const MTp& want) {
      MTp got = infer(k);
      if (!munify(got, want))
        throw ParseError("type mismatch: expected " + mshow(want) + ", found " + mshow(got), k.line, k.col);
    };
    const MTp o = lift(prop_type());
    switch (r.k) {
      case RK::Id: return lookup(r).mt;
      case RK::App: {
        MTp f = infer(*r.kids[0]);
        for (std::size_t i = 1; i < r.kids.size(); ++i) {
          MTp a = infer(*r.kids[i]), res = meta();
          if (!munify(f, marrow(a, res)))
            throw ParseError("cannot apply a term of type " + mshow(f) + " to an argument of type " + mshow(a),
                             r.kids[i]->line, r.kids[i]->col);
          f = res;
        }
        return f;
      }
      case RK::Lam:
      case RK::All:
      case RK::Ex:
      case RK::Nab: {
        MTp bt = r.ann ? lift(r.ann) : meta();
        binder_mt_[&r] = bt;
        bound_.push_back({r.name, bt});
        MTp body = r.k == RK::Lam ? infer(*r.kids[0]) : nullptr;
        if (r.k != RK::Lam) expect(*r.kids[0], o);
        bound_.pop_back();
        return r.k == RK::Lam ? marrow(bt, body) : o;
      }
      case RK::Top:
      case RK::Bot: return o;
      case RK::And:
      case RK::Or:
      case RK::Imp:
        expect(*r.kids[0], o);
        expect(*r.kids[1], o);
        return o;
      case RK::Eq: {
        MTp a = infer(*r.kids[0]);
        expect(*r.kids[1], a);
        return o;
      }
      case RK::Nat: expect(*r.kids[0], lift(nat_type())); return o;
    }
    throw err("bad syntax");
  }

  // Resolves every open type, failing on what remains unless dflt is set.
  void close(const Ty* dflt) {
    for (auto& f : frees_) {
      f.ty = zonk(f.mt, dflt);
      if (!f.ty) throw ParseError("cannot infer the type of '" + f.name + "'", f.line, f.col);
    }
    for (auto& [r, mt] : binder_mt_) {
      Ty t = zonk(mt, dflt);
      if (!t) throw ParseError("cannot infer the type of bound '" + r->name + "'", r->line, r->col);
      binder_ty_[r] = t;
    }
  }

  Ty free_type(const std::string& n) const {
    for (const auto& f : frees_)
      if (f.name == n) return f.ty;
    return nullptr;
  }
  std::vector<std::pair<std::string, Ty>> free_list(bool vars) const {
    std::vector<std::pair<std::string, Ty>> out;
    for (const auto& f : frees_)
      if (f.is_var == vars) out.push_back({f.name, f.ty});
    return out;
  }

  Term build(const Raw& r) {
    try {
      return build_rec(r);
    } catch (const TypeError& e) {
      throw ParseError(e.what(), r.line, r.col);
    }
  }

 private:
  struct Res {
    MTp mt;
  };

  Res lookup(const Raw& r) {
    const std::string& n = r.name;
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (it->first == n) return {it->second};
    if (const Ty* t = sig_.type_of(intern(n))) return {lift(*t)};
    for (auto& f : frees_)
      if (f.name == n) return {f.mt};
    if (n == "z") return {lift(nat_type())};
    if (n == "s") return {lift(arrow(nat_type(), nat_type()))};
    if (const Ty* t = m_.th.const_type(intern(n))) return {lift(*t)};
    NomId c;
    if (find_nominal(n, c)) return {lift(nominal_type(c))};
    const bool upper = std::isupper(static_cast<unsigned char>(n[0]));
    if (mode_ == Mode::Clause || mode_ == Mode::Open) {
      Free f;
      f.name = n;
      f.mt = meta();
      f.is_var = mode_ == Mode::Clause || upper;
      f.line = r.line;
      f.col = r.col;
      frees_.push_back(f);
      return {f.mt};
    }
    throw ParseError("unknown identifier '" + n + "'", r.line, r.col);
  }

  struct Head2 {
    Head h;
    Ty ty;
  };
  Head2 resolve(const Raw& r) {
    const std::string& n = r.name;
    for (auto it = bnames_.rbegin(); it != bnames_.rend(); ++it)
      if (it->first == n) return {Head::var(it->second.first, it->second.second), it->second.second};
    Symbol s = intern(n);
    if (const Ty* t = sig_.type_of(s)) return {Head::var(s, *t), *t};
    for (const auto& f : frees_)
      if (f.name == n) return {f.is_var ? Head::var(s, f.ty) : Head::cnst(s, f.ty), f.ty};
    if (n == "z") return {Head::cnst(zero_symbol(), nat_type()), nat_type()};
    if (n == "s") {
      Ty t = arrow(nat_type(), nat_type());
      return {Head::cnst(succ_symbol(), t), t};
    }
    if (const Ty* t = m_.th.const_type(s)) return {Head::cnst(s, *t), *t};
    NomId c;
    if (find_nominal(n, c)) return {Head::nom(c), nominal_type(c)};
    throw ParseError("unknown identifier '" + n + "'", r.line, r.col);
  }

  Term build_rec(const Raw& r) {
    switch (r.k) {
      case RK::Id: {
        Head2 h = resolve(r);
        return apply_head(h.h, h.ty, {});
      }
      case RK::App: {
        std::vector<Term> args;
        for (std::size_t i = 1; i < r.kids.size(); ++i) args.push_back(build(*r.kids[i]));
        const Raw& f = *r.kids[0];
        if (f.k == RK::Id) {
          Head2 h = resolve(f);
          return apply_head(h.h, h.ty, std::move(args));
        }
        return beta(build(f), args);
      }
      case RK::Lam:
      case RK::All:
      case RK::Ex:
      case RK::Nab: {
        Ty bt = binder_ty_.at(&r);
        Symbol x = intern("$b" + std::to_string(counter_++));
        bnames_.push_back({r.name, {x, bt}});
        Term body = build(*r.kids[0]);
        bnames_.pop_back();
        if (r.k == RK::Lam) return abstract_var(body, x, bt);
        return f_bind(r.k == RK::All ? FKind::Forall : r.k == RK::Ex ? FKind::Exists : FKind::Nabla, x, bt,
                      body);
      }
      case RK::Top: return f_top();
      case RK::Bot: return f_bot();
      case RK::And: return f_and(build(*r.kids[0]), build(*r.kids[1]));
      case RK::Or: return f_or(build(*r.kids[0]), build(*r.kids[1]));
      case RK::Imp: return f_imp(build(*r.kids[0]), build(*r.kids[1]));
      case RK::Eq: return f_eq(build(*r.kids[0]), build(*r.kids[1]));
      case RK::Nat: return f_nat(build(*r.kids[0]));
    }
    throw ParseError("bad syntax", r.line, r.col);
  }

  const Module& m_;
  const Signature& sig_;
  Mode mode_;
  std::vector<std::pair<std::string, MTp>> bound_;
  std::vector<std::pair<std::string, std::pair<Symbol, Ty>>> bnames_;
  std::map<const Raw*, MTp> binder_mt_;
  std::map<const Raw*, Ty> binder_ty_;
  std::size_t counter_ = 0;

  std::vector<Free> frees_;
};

struct Elaborated {
  Term t;
  Ty ty;
};

Elaborated elaborate(const Module& m, const Signature& sig, const Raw& r, const Ty* expected,
                     Elab& e, const Ty* dflt) {
  MTp got = e.infer(r);
  if (expected && !munify(got, lift(*expected)))
    throw ParseError("expected type " + show_type(*expected) + ", found " + mshow(got), r.line, r.col);
  e.close(dflt);
  Ty ty = zonk(got, dflt);
  if (!ty) throw ParseError("cannot infer the type of this term", r.line, r.col);
  (void)m;
  (void)sig;
  return {e.build(r), ty};
}

Term closed_expr(const Module& m, const Signature& sig, Stream& s, const Ty* expected) {
  RawParser rp(m, s);
  RawP r = rp.expr();
  Elab e(m, sig, Mode::Closed);
  return elaborate(m, sig, *r, expected, e, nullptr).t;
}

Term formula_in(const Module& m, const Signature& sig, Stream& s) {
  Ty o = prop_type();
  return closed_expr(m, sig, s, &o);
}

Signature signature_in(const Module& m, Stream& s, Tok close) {
  Signature sig;
  if (s.at(close)) return sig;
  do {
    Token n = s.expect(Tok::Ident, "a variable name");
    s.expect(Tok::Colon);
    Ty t = parse_type_in(m, s);
    if (sig.contains(intern(n.text)))
      throw ParseError("variable '" + n.text + "' declared twice", n.line, n.col);
    if (mentions_prop(t)) throw ParseError("variable '" + n.text + "' has a type mentioning o", n.line, n.col);
    sig.add({intern(n.text), t});
  } while (s.eat(Tok::Comma));
  return sig;
}

Sequent sequent_in(const Module& m, Stream& s, Tok stop) {
  Sequent q;
  if (s.eat(Tok::LBrace)) {
    q.sig = signature_in(m, s, Tok::RBrace);
    s.expect(Tok::RBrace);
  }
  if (s.eat(Tok::Turnstile)) {
    q.goal = formula_in(m, q.sig, s);
    return q;
  }
  std::vector<Term> fs;
  fs.push_back(formula_in(m, q.sig, s));
  while (s.eat(Tok::Comma)) fs.push_back(formula_in(m, q.sig, s));
  if (s.eat(Tok::Turnstile)) {
    q.hyps = std::move(fs);
    q.goal = formula_in(m, q.sig, s);
  } else {
    if (fs.size() != 1) s.expect(Tok::Turnstile);
    q.goal = fs[0];
  }
  if (!s.at(stop)) s.expect(stop);
  return q;
}

SExpr sexpr_in(Stream& s) {
  const Token& t = s.peek();
  SExpr e;
  e.line = t.line;
  e.col = t.col;
  switch (t.kind) {
    case Tok::LParen: {
      s.next();
      e.kind = SExpr::Kind::List;
      while (!s.at(Tok::RParen)) {
        if (s.at(Tok::End)) s.expect(Tok::RParen);
        e.items.push_back(sexpr_in(s));
      }
      s.next();
      return e;
    }
    case Tok::Ident:
      e.kind = SExpr::Kind::Sym;
      e.text = s.next().text;
      return e;
    case Tok::Int:
      e.kind = SExpr::Kind::Int;
      e.text = s.next().text;
      e.num = std::stoll(e.text);
      return e;
    case Tok::Str:
      e.kind = SExpr::Kind::Str;
      e.text = s.next().text;
      return e;
    default: s.fail("unexpected " + Stream::describe(t) + " in proof script");
  }
}

void decl_type(Module& m, const Token& n, bool nominal) {
  if (n.text == "o" || n.text == "nt" || m.types.count(n.text))
    throw ParseError("type '" + n.text + "' already exists", n.line, n.col);
  m.types[n.text] = base_type(n.text, nominal);
}

void decl_const(Module& m, const Token& n, const Ty& t) {
  if (keywords().count(n.text) || n.text == "z" || n.text == "s")
    throw ParseError("'" + n.text + "' is reserved", n.line, n.col);
  try {
    if (is_nominal_type(t)) {
      if (m.th.const_type(intern(n.text)))
        throw ParseError("'" + n.text + "' is already a constant", n.line, n.col);
      nominal(n.text, t);
    } else {
      NomId c;
      if (find_nominal(n.text, c))
        throw ParseError("'" + n.text + "' is already a nominal constant", n.line, n.col);
      m.th.declare_const(intern(n.text), t);
    }
  } catch (const TypeError& e) {
    throw ParseError(e.what(), n.line, n.col);
  }
}

void definition(Module& m, Stream& s) {
  RawParser rp(m, s);
  RawP head = rp.expr();
  s.expect(Tok::Define);
  RawP body = rp.expr();
  const Raw& hf = head->k == RK::App ? *head->kids[0] : *head;
  if (hf.k != RK::Id) throw ParseError("definition head must be an atom", head->line, head->col);
  Symbol pred = intern(hf.name);
  if (!m.th.is_predicate(pred))
    throw ParseError("'" + hf.name + "' is not a declared predicate", hf.line, hf.col);
  const Signature none;
  Elab e(m, none, Mode::Clause);
  const Ty o = prop_type();
  MTp ht = e.infer(*head), bt = e.infer(*body);
  if (!munify(ht, lift(o))) throw ParseError("definition head is not a formula", head->line, head->col);
  if (!munify(bt, lift(o))) throw ParseError("definition body is not a formula", body->line, body->col);
  e.close(nullptr);
  Clause c;
  c.pred = pred;
  for (const auto& f : e.frees()) {
    if (mentions_prop(f.ty))
      throw ParseError("clause variable '" + f.name + "' has a type mentioning o", f.line, f.col);
    c.vars.push_back({intern(f.name), f.ty});
  }
  c.head = e.build(*head);
  c.body = e.build(*body);
  if (view(c.head).kind != FKind::Atom) throw ParseError("definition head must be an atom", head->line, head->col);
  m.th.add_clause(std::move(c));
}

void statement(Module& m, Stream& s) {
  Token kw = s.expect(Tok::Ident, "a declaration");
  if (kw.text == "nominal") {
    Token t = s.expect(Tok::Ident);
    if (t.text != "type") throw ParseError("expected 'type'", t.line, t.col);
    decl_type(m, s.expect(Tok::Ident, "a type name"), true);
  } else if (kw.text == "type") {
    decl_type(m, s.expect(Tok::Ident, "a type name"), false);
  } else if (kw.text == "const") {
    std::vector<Token> names{s.expect(Tok::Ident, "a constant name")};
    while (s.eat(Tok::Comma)) names.push_back(s.expect(Tok::Ident, "a constant name"));
    s.expect(Tok::Colon);
    Ty t = parse_type_in(m, s);
    for (const auto& n : names) decl_const(m, n, t);
  } else if (kw.text == "level") {
    Token p = s.expect(Tok::Ident, "a predicate");
    Token n = s.expect(Tok::Int, "a level");
    try {
      m.th.declare_level(intern(p.text), std::stoi(n.text));
    } catch (const TypeError& e) {
      throw ParseError(e.what(), p.line, p.col);
    }
  } else if (kw.text == "define") {
    definition(m, s);
  } else if (kw.text == "theorem") {
    Token n = s.expect(Tok::Ident, "a theorem name");
    if (m.theorem(n.text)) throw ParseError("theorem '" + n.text + "' declared twice", n.line, n.col);
    s.expect(Tok::Colon);
    TheoremDecl d;
    d.name = n.text;
    d.line = kw.line;
    d.seq = sequent_in(m, s, Tok::Dot);
    m.theorems.push_back(std::move(d));
  } else if (kw.text == "proof") {
    if (m.theorems.empty() || m.theorems.back().proof)
      throw ParseError("proof without a preceding theorem", kw.line, kw.col);
    m.theorems.back().proof = sexpr_in(s);
  } else {
    throw ParseError("unknown declaration '" + kw.text + "'", kw.line, kw.col);
  }
  s.expect(Tok::Dot);
}

template <class F>
auto whole(std::string_view src, F f) {
  Stream s(lex(src));
  auto out = f(s);
  if (!s.at(Tok::End)) s.fail("unexpected " + Stream::describe(s.peek()));
  return out;
}

}  // namespace

Module parse_module(std::string_view src) {
  Module m;
  Stream s(lex(src));
  while (!s.at(Tok::End)) statement(m, s);
  return m;
}

Ty parse_type(const Module& m, std::string_view src) {
  return whole(src, [&](Stream& s) { return parse_type_in(m, s); });
}

Term parse_term(const Module& m, const Signature& sig, std::string_view src, const Ty* expected) {
  return whole(src, [&](Stream& s) { return closed_expr(m, sig, s, expected); });
}

Term parse_formula(const Module& m, const Signature& sig, std::string_view src) {
  return whole(src, [&](Stream& s) { return formula_in(m, sig, s); });
}

Sequent parse_sequent(const Module& m, std::string_view src) {
  return whole(src, [&](Stream& s) { return sequent_in(m, s, Tok::End); });
}

Signature parse_signature(const Module& m, std::string_view src) {
  return whole(src, [&](Stream& s) { return signature_in(m, s, Tok::End); });
}

Term parse_open_term(const Module& m, std::string_view src, Signature& sig, std::map<Symbol, Ty>& consts,
                     const Ty& dflt, const Ty* expected) {
  // Earlier open names are visible as declared ones.
  Module ext;
  ext.types = m.types;
  ext.th = m.th;
  for (auto& [c, t] : consts)
    if (!ext.th.const_type(c)) ext.th.declare_const(c, t);
  return whole(src, [&](Stream& s) {
    RawParser rp(ext, s);
    RawP r = rp.expr();
    Elab e(ext, sig, Mode::Open);
    Term t = elaborate(ext, sig, *r, expected, e, &dflt).t;
    for (const auto& f : e.frees()) {
      if (f.is_var)
        sig.add({intern(f.name), f.ty});
      else
        consts[intern(f.name)] = f.ty;
    }
    return t;
  });
}

}  // namespace lg
