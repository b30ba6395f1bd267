#include "stlc/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "stlc/overload.hpp"

namespace stlc {

namespace {

enum class Tok {
  Lambda,
  Dot,
  Colon,
  Comma,
  Arrow,
  LParen,
  RParen,
  Ident,
  True,
  False,
  If,
  Then,
  Else,
  BoolTy,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_rest(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto push = [&](Tok kind, std::size_t end) {
      out.push_back(Token{kind, std::string(src.substr(start, end - start)), {start, end}});
      i = end;
    };
    if (c == '\\') {
      push(Tok::Lambda, i + 1);
      continue;
    }
    // U+03BB, accepted as an alias for '\'.
    if (static_cast<unsigned char>(c) == 0xCE && i + 1 < src.size() &&
        static_cast<unsigned char>(src[i + 1]) == 0xBB) {
      push(Tok::Lambda, i + 2);
      continue;
    }
    if (c == '.') {
      push(Tok::Dot, i + 1);
      continue;
    }
    if (c == ':') {
      push(Tok::Colon, i + 1);
      continue;
    }
    if (c == ',') {
      push(Tok::Comma, i + 1);
      continue;
    }
    if (c == '(') {
      push(Tok::LParen, i + 1);
      continue;
    }
    if (c == ')') {
      push(Tok::RParen, i + 1);
      continue;
    }
    if (c == '-') {
      if (i + 1 < src.size() && src[i + 1] == '>') {
        push(Tok::Arrow, i + 2);
        continue;
      }
      throw ParseError(SourceSpan{i, i + 1}, "expected '->'");
    }
    if (ident_start(c)) {
      std::size_t end = i + 1;
      while (end < src.size() && ident_rest(src[end])) ++end;
      std::string_view word = src.substr(start, end - start);
      Tok kind = Tok::Ident;
      if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (word == "if") kind = Tok::If;
      else if (word == "then") kind = Tok::Then;
      else if (word == "else") kind = Tok::Else;
      else if (word == "Bool") kind = Tok::BoolTy;
      push(kind, end);
      continue;
    }
    throw ParseError(SourceSpan{i, i + 1}, "unexpected character");
  }
  out.push_back(Token{Tok::End, "", {src.size(), src.size()}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  SurfacePtr term_all() {
    SurfacePtr t = term();
    expect(Tok::End, "trailing input after term");
    return t;
  }

  TyPtr type_all() {
    TyPtr ty = type();
    expect(Tok::End, "trailing input after type");
    return ty;
  }

  Ctx ctx_all() {
    Ctx ctx;
    if (peek().kind == Tok::End) return ctx;
    ctx.entries.push_back(binding());
    while (peek().kind == Tok::Comma) {
      advance();
      ctx.entries.push_back(binding());
    }
    expect(Tok::End, "trailing input after context");
    return ctx;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw ParseError(at.span, message);
  }

  Token expect(Tok kind, const std::string& message) {
    if (peek().kind != kind) fail(peek(), message);
    return advance();
  }

  SurfacePtr term() {
    switch (peek().kind) {
      case Tok::Lambda:
        return lambda();
      case Tok::If:
        return conditional();
      default:
        return app_chain();
    }
  }

  SurfacePtr lambda() {
    advance();  // '\'
    Token name = expect(Tok::Ident, "expected identifier after lambda");
    TyPtr ann;
    if (peek().kind == Tok::Colon) {
      advance();
      ann = type();
    }
    expect(Tok::Dot, "expected '.' after lambda binder");
    return surface::lam(name.text, std::move(ann), term());
  }

  SurfacePtr conditional() {
    advance();  // 'if'
    SurfacePtr cond = term();
    expect(Tok::Then, "expected 'then'");
    SurfacePtr then_branch = term();
    expect(Tok::Else, "expected 'else'");
    return surface::ite(std::move(cond), std::move(then_branch), term());
  }

  SurfacePtr app_chain() {
    SurfacePtr head = atom_or_fail();
    while (auto arg = atom()) head = surface::app(std::move(head), std::move(*arg));
    return head;
  }

  SurfacePtr atom_or_fail() {
    if (auto a = atom()) return *a;
    fail(peek(), "expected a term");
  }

  std::optional<SurfacePtr> atom() {
    switch (peek().kind) {
      case Tok::Ident:
        return surface::var(advance().text);
      case Tok::True:
        advance();
        return surface::lit(true);
      case Tok::False:
        advance();
        return surface::lit(false);
      case Tok::LParen: {
        advance();
        SurfacePtr t = term();
        expect(Tok::RParen, "expected ')'");
        return t;
      }
      default:
        return std::nullopt;
    }
  }

  TyPtr type() {
    TyPtr left = type_atom();
    if (peek().kind == Tok::Arrow) {
      advance();
      return ty_arrow(std::move(left), type());
    }
    return left;
  }

  TyPtr type_atom() {
    switch (peek().kind) {
      case Tok::BoolTy:
        advance();
        return ty_bool();
      case Tok::LParen: {
        advance();
        TyPtr ty = type();
        expect(Tok::RParen, "expected ')'");
        return ty;
      }
      default:
        fail(peek(), "expected a type");
    }
  }

  CtxEntry binding() {
    Token name = expect(Tok::Ident, "expected identifier in context");
    expect(Tok::Colon, "expected ':' in context binding");
    return CtxEntry{name.text, type()};
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

enum class Pos { Term, Fun, Atom };

std::string print_at(const SurfacePtr& t, Pos pos) {
  return std::visit(
      overloaded{
          [&](const SurfaceTerm::Var& v) { return v.name; },
          [&](const SurfaceTerm::Lam& l) {
            std::string s = "\\" + l.name;
            if (l.ann) s += ":" + print_type(l.ann);
            s += ". " + print_at(l.body, Pos::Term);
            return pos == Pos::Term ? s : "(" + s + ")";
          },
          [&](const SurfaceTerm::App& a) {
            std::string s = print_at(a.fun, Pos::Fun) + " " + print_at(a.arg, Pos::Atom);
            return pos == Pos::Atom ? "(" + s + ")" : s;
          },
          [&](const SurfaceTerm::Lit& l) { return std::string(l.value ? "true" : "false"); },
          [&](const SurfaceTerm::If& i) {
            std::string s = "if " + print_at(i.cond, Pos::Term) + " then " +
                            print_at(i.then_branch, Pos::Term) + " else " +
                            print_at(i.else_branch, Pos::Term);
            return pos == Pos::Term ? s : "(" + s + ")";
          },
      },
      t->node);
}

}  // namespace

SurfacePtr parse_term(std::string_view src) { return Parser(src).term_all(); }

TyPtr parse_type(std::string_view src) { return Parser(src).type_all(); }

Ctx parse_ctx(std::string_view src) { return Parser(src).ctx_all(); }

std::string print_term(const SurfacePtr& t) { return print_at(t, Pos::Term); }

std::string print_type(const TyPtr& ty) {
  return std::visit(
      overloaded{
          [&](const Ty::Bool&) { return std::string("Bool"); },
          [&](const Ty::Arrow& a) {
            std::string dom = print_type(a.dom);
            if (as_arrow(a.dom) != nullptr) dom = "(" + dom + ")";
            return dom + " -> " + print_type(a.cod);
          },
      },
      ty->node);
}

}  // namespace stlc
