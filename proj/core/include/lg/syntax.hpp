#pragma once

// Theory files, terms, formulas and sequents in concrete syntax. The
// accepted forms are those the printer emits, plus untyped binders whose
// types are inferred.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lg/sequent.hpp"

namespace lg {

struct ParseError : std::runtime_error {
  int line = 0, col = 0;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

enum class Tok {
  Ident, Int, Str,
  LParen, RParen, LBrace, RBrace, LBrack, RBrack,
  Comma, Dot, Colon, Define, Turnstile, And, Or, Imp, Arrow, Eq, Lambda,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

// `%` starts a comment. Identifiers are [A-Za-z_][A-Za-z0-9_'#]*.
std::vector<Token> lex(std::string_view src);
const char* tok_name(Tok t);

// Proof scripts are s-expressions over symbols, integers and quoted strings.
struct SExpr {
  enum class Kind { Sym, Int, Str, List };
  Kind kind = Kind::List;
  std::string text;
  long long num = 0;
  std::vector<SExpr> items;
  int line = 0, col = 0;

  bool is_sym(std::string_view s) const { return kind == Kind::Sym && text == s; }
};

struct TheoremDecl {
  std::string name;
  Sequent seq;
  std::optional<SExpr> proof;
  int line = 0;
};

struct Module {
  Theory th;
  std::map<std::string, Ty> types;  // declared base types
  std::vector<TheoremDecl> theorems;

  const TheoremDecl* theorem(std::string_view name) const;
};

// Statements, each ending in '.':
//   nominal type nm.       type tm.        const c : ty.     level p 1.
//   define p t1 .. tn := B.
//   theorem name : {x:ty, ...} H1, ..., Hn |- C.     proof (rule ...).
// A const whose type is nominal declares a nominal constant. Identifiers a
// definition does not declare are its clause variables.
Module parse_module(std::string_view src);

Ty parse_type(const Module& m, std::string_view src);
Term parse_term(const Module& m, const Signature& sig, std::string_view src,
                const Ty* expected = nullptr);
Term parse_formula(const Module& m, const Signature& sig, std::string_view src);
// {x:ty, ...} H1, ..., Hn |- C, with both the signature and the turnstile
// optional.
Sequent parse_sequent(const Module& m, std::string_view src);
Signature parse_signature(const Module& m, std::string_view src);  // x:ty, ...

// For the unify command: unknown identifiers starting with an upper-case
// letter are eigenvariables, others are constants, and types that remain
// open default to `dflt`. New names are added to `sig` and `consts`.
Term parse_open_term(const Module& m, std::string_view src, Signature& sig,
                     std::map<Symbol, Ty>& consts, const Ty& dflt, const Ty* expected = nullptr);

}  // namespace lg
