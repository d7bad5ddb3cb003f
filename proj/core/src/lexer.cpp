#include <cctype>

#include "lg/syntax.hpp"

namespace lg {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '#';
}

}  // namespace

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Str: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Define: return "':='";
    case Tok::Turnstile: return "'|-'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Imp: return "'=>'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Lambda: return "'\\'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto at = [&](std::size_t k) { return i + k < src.size() ? src[i + k] : '\0'; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') adv(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      adv(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      adv(j - i);
    } else if (c == '"') {
      adv(1);
      while (i < src.size() && src[i] != '"') {
        if (src[i] == '\\' && i + 1 < src.size() && src[i + 1] == '"') {
          t.text += '"';
          adv(2);
          continue;
        }
        t.text += src[i];
        adv(1);
      }
      if (i >= src.size()) throw ParseError("unterminated string", t.line, t.col);
      adv(1);
      t.kind = Tok::Str;
    } else {
      auto two = [&](char a, char b) { return c == a && at(1) == b; };
      std::size_t n = 1;
      if (two(':', '=')) t.kind = Tok::Define, n = 2;
      else if (two('|', '-')) t.kind = Tok::Turnstile, n = 2;
      else if (two('/', '\\')) t.kind = Tok::And, n = 2;
      else if (two('\\', '/')) t.kind = Tok::Or, n = 2;
      else if (two('=', '>')) t.kind = Tok::Imp, n = 2;
      else if (two('-', '>')) t.kind = Tok::Arrow, n = 2;
      else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case '[': t.kind = Tok::LBrack; break;
          case ']': t.kind = Tok::RBrack; break;
          case ',': t.kind = Tok::Comma; break;
          case '.': t.kind = Tok::Dot; break;
          case ':': t.kind = Tok::Colon; break;
          case '=': t.kind = Tok::Eq; break;
          case '\\': t.kind = Tok::Lambda; break;
          default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
      }
      t.text = std::string(src.substr(i, n));
      adv(n);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

}  // namespace lg
