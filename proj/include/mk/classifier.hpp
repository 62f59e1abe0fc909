#pragma once

// The classifier language: terms and formulas over hereditarily finite sets,
// set-builder comprehension {x : F} and {(u,v) : F}, and a bounded evaluator
// whose quantifiers range over a finite universe carrier.
//
// Grammar (loosest binding first):
//   formula := imp { ('<->' | '↔') imp }
//   imp     := disj [ ('->' | '→') imp ]
//   disj    := conj { ('\/' | '∨' | 'or') conj }
//   conj    := unary { ('/\' | '∧' | 'and') unary }
//   unary   := ('~' | '¬' | 'not') unary
//            | ('forall' | '∀' | 'exists' | '∃') var ['.' | ','] body
//            | '(' formula ')' | term rel term
//   rel     := ∈ \in in | ∉ | = | ≠ != | ⊆ \subseteq
//   term    := inter { (∪ \cup | ∼ ~ - \setminus) inter }
//   inter   := cart { (∩ \cap) cart }
//   cart    := post { (× \times) post }
//   post    := prim { '[' term ']' }                       (function value)
//   prim    := var | digits | ∅ | #<json> | op '(' term ')' | ⋃prim | ⋂prim
//            | '[' t ']' | '[' t '|' t ']' | '[' t ',' t ']' | ⟨t,t⟩ | <t,t>
//            | '{' x ':' formula '}' | '{' '(' u ',' v ')' ':' formula '}'
//            | '{' t, ... '}' | '(' term ')'
// with op ∈ {pow, fst, snd, dom, ran, bigcup, bigcap}. A quantifier body
// without '.' or ',' is a single unary formula; with one it extends as far
// right as possible.

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mk/error.hpp"
#include "mk/hfs.hpp"
#include "mk/json_io.hpp"

namespace mk::dsl {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermOp {
  Var,
  Literal,
  Union,
  Intersection,
  Difference,
  Cartesian,
  Power,
  Singleton,
  UnorderedPair,
  OrderedPair,
  Fst,
  Snd,
  BigUnion,
  BigIntersection,
  Domain,
  Range,
  Value,
  Comprehension,
  PairComprehension,
  Enumeration,
};

struct Term {
  TermOp op;
  std::string name;                   // Var
  HfSet literal;                      // Literal
  std::vector<TermPtr> args;          // operands, in order
  std::vector<std::string> binders;   // comprehension variables
  FormulaPtr body;                    // comprehension body
};

enum class FormulaOp { In, Eq, Subset, Not, And, Or, Implies, Iff, Forall, Exists };

struct Formula {
  FormulaOp op;
  std::vector<TermPtr> terms;       // atoms: lhs, rhs
  std::vector<FormulaPtr> subs;     // connectives and quantifier body
  std::string var;                  // quantifiers
};

using Expr = std::variant<TermPtr, FormulaPtr>;

// ---------------------------------------------------------------------------
// Construction helpers

inline TermPtr var(std::string name) {
  return std::make_shared<const Term>(Term{TermOp::Var, std::move(name), {}, {}, {}, {}});
}
inline TermPtr lit(HfSet value) {
  return std::make_shared<const Term>(Term{TermOp::Literal, {}, std::move(value), {}, {}, {}});
}
inline TermPtr apply(TermOp op, std::vector<TermPtr> args) {
  return std::make_shared<const Term>(Term{op, {}, {}, std::move(args), {}, {}});
}
inline TermPtr comprehension(std::vector<std::string> binders, FormulaPtr body) {
  auto op = binders.size() == 2 ? TermOp::PairComprehension : TermOp::Comprehension;
  return std::make_shared<const Term>(Term{op, {}, {}, {}, std::move(binders), std::move(body)});
}
inline FormulaPtr atom(FormulaOp op, TermPtr lhs, TermPtr rhs) {
  return std::make_shared<const Formula>(Formula{op, {std::move(lhs), std::move(rhs)}, {}, {}});
}
inline FormulaPtr connective(FormulaOp op, std::vector<FormulaPtr> subs) {
  return std::make_shared<const Formula>(Formula{op, {}, std::move(subs), {}});
}
inline FormulaPtr quantifier(FormulaOp op, std::string v, FormulaPtr body) {
  return std::make_shared<const Formula>(Formula{op, {}, {std::move(body)}, std::move(v)});
}

// ---------------------------------------------------------------------------
// Structural equality

inline bool same(const Formula& a, const Formula& b);

inline bool same(const Term& a, const Term& b) {
  if (a.op != b.op || a.name != b.name || !(a.literal == b.literal) || a.binders != b.binders ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same(*a.args[i], *b.args[i])) return false;
  if (bool(a.body) != bool(b.body)) return false;
  return !a.body || same(*a.body, *b.body);
}

inline bool same(const Formula& a, const Formula& b) {
  if (a.op != b.op || a.var != b.var || a.terms.size() != b.terms.size() ||
      a.subs.size() != b.subs.size())
    return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (!same(*a.terms[i], *b.terms[i])) return false;
  for (std::size_t i = 0; i < a.subs.size(); ++i)
    if (!same(*a.subs[i], *b.subs[i])) return false;
  return true;
}

inline bool same(const Expr& a, const Expr& b) {
  if (a.index() != b.index()) return false;
  if (auto* t = std::get_if<TermPtr>(&a)) return same(**t, *std::get<TermPtr>(b));
  return same(*std::get<FormulaPtr>(a), *std::get<FormulaPtr>(b));
}

// ---------------------------------------------------------------------------
// Printing (Unicode, fully parenthesized binary operators)

inline std::string print(const Formula& f);

inline std::string print(const Term& t) {
  auto unary_fn = [&](std::string_view fn) {
    return std::string(fn) + "(" + print(*t.args[0]) + ")";
  };
  auto binary = [&](std::string_view sym) {
    return "(" + print(*t.args[0]) + " " + std::string(sym) + " " + print(*t.args[1]) + ")";
  };
  switch (t.op) {
    case TermOp::Var: return t.name;
    case TermOp::Literal:
      if (auto n = as_numeral(t.literal)) return *n == 0 ? "∅" : std::to_string(*n);
      return "#" + serialize(t.literal);
    case TermOp::Union: return binary("∪");
    case TermOp::Intersection: return binary("∩");
    case TermOp::Difference: return binary("∼");
    case TermOp::Cartesian: return binary("×");
    case TermOp::Power: return unary_fn("pow");
    case TermOp::Fst: return unary_fn("fst");
    case TermOp::Snd: return unary_fn("snd");
    case TermOp::Domain: return unary_fn("dom");
    case TermOp::Range: return unary_fn("ran");
    case TermOp::BigUnion: return unary_fn("⋃");
    case TermOp::BigIntersection: return unary_fn("⋂");
    case TermOp::Singleton: return "[" + print(*t.args[0]) + "]";
    case TermOp::UnorderedPair: return "[" + print(*t.args[0]) + " | " + print(*t.args[1]) + "]";
    case TermOp::OrderedPair: return "⟨" + print(*t.args[0]) + ", " + print(*t.args[1]) + "⟩";
    case TermOp::Value: {
      std::string f = print(*t.args[0]);
      return f + "[" + print(*t.args[1]) + "]";
    }
    case TermOp::Comprehension: return "{" + t.binders[0] + " : " + print(*t.body) + "}";
    case TermOp::PairComprehension:
      return "{(" + t.binders[0] + ", " + t.binders[1] + ") : " + print(*t.body) + "}";
    case TermOp::Enumeration: {
      std::string out = "{";
      for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + print(*t.args[i]);
      return out + "}";
    }
  }
  return "?";
}

inline std::string print(const Formula& f) {
  auto binary = [&](std::string_view sym) {
    return "(" + print(*f.subs[0]) + " " + std::string(sym) + " " + print(*f.subs[1]) + ")";
  };
  switch (f.op) {
    case FormulaOp::In: return print(*f.terms[0]) + " ∈ " + print(*f.terms[1]);
    case FormulaOp::Eq: return print(*f.terms[0]) + " = " + print(*f.terms[1]);
    case FormulaOp::Subset: return print(*f.terms[0]) + " ⊆ " + print(*f.terms[1]);
    case FormulaOp::Not: return "¬" + print(*f.subs[0]);
    case FormulaOp::And: return binary("∧");
    case FormulaOp::Or: return binary("∨");
    case FormulaOp::Implies: return binary("→");
    case FormulaOp::Iff: return binary("↔");
    case FormulaOp::Forall: return "∀" + f.var + " (" + print(*f.subs[0]) + ")";
    case FormulaOp::Exists: return "∃" + f.var + " (" + print(*f.subs[0]) + ")";
  }
  return "?";
}

inline std::string print(const Expr& e) {
  if (auto* t = std::get_if<TermPtr>(&e)) return print(**t);
  return print(*std::get<FormulaPtr>(e));
}

// ---------------------------------------------------------------------------
// Lexer

namespace detail {

enum class Tok {
  Ident,
  Number,
  JsonLit,
  Empty,
  LParen, RParen, LBrack, RBrack, LBrace, RBrace, LAngle, RAngle,
  Comma, Colon, Dot, Bar,
  In, NotIn, Eq, Neq, Subset,
  Not, And, Or, Implies, Iff, Forall, Exists,
  Union, Inter, Diff, Times, BigUnion, BigInter,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<Token> lex(std::string_view src) {
  // Longest spelling first within each shared prefix.
  static const std::vector<std::pair<std::string_view, Tok>> symbols = {
      {"<->", Tok::Iff},        {"<=>", Tok::Iff},     {"->", Tok::Implies},
      {"=>", Tok::Implies},     {"/\\", Tok::And},     {"\\/", Tok::Or},
      {"!=", Tok::Neq},         {"\\in", Tok::In},     {"\\notin", Tok::NotIn},
      {"\\subseteq", Tok::Subset}, {"\\cup", Tok::Union}, {"\\cap", Tok::Inter},
      {"\\setminus", Tok::Diff}, {"\\times", Tok::Times}, {"\\emptyset", Tok::Empty},
      {"\\bigcup", Tok::BigUnion}, {"\\bigcap", Tok::BigInter},
      {"∈", Tok::In},  {"∉", Tok::NotIn}, {"≠", Tok::Neq},    {"⊆", Tok::Subset},
      {"¬", Tok::Not}, {"∧", Tok::And},   {"∨", Tok::Or},     {"→", Tok::Implies},
      {"↔", Tok::Iff}, {"∀", Tok::Forall}, {"∃", Tok::Exists}, {"∅", Tok::Empty},
      {"∪", Tok::Union}, {"∩", Tok::Inter}, {"∼", Tok::Diff},  {"×", Tok::Times},
      {"⋃", Tok::BigUnion}, {"⋂", Tok::BigInter}, {"⟨", Tok::LAngle}, {"⟩", Tok::RAngle},
      {"(", Tok::LParen}, {")", Tok::RParen}, {"[", Tok::LBrack}, {"]", Tok::RBrack},
      {"{", Tok::LBrace}, {"}", Tok::RBrace}, {"<", Tok::LAngle}, {">", Tok::RAngle},
      {",", Tok::Comma},  {":", Tok::Colon},  {".", Tok::Dot},    {"|", Tok::Bar},
      {"=", Tok::Eq},     {"~", Tok::Not},    {"-", Tok::Diff},
  };
  static const std::map<std::string, Tok, std::less<>> keywords = {
      {"forall", Tok::Forall}, {"exists", Tok::Exists}, {"and", Tok::And},
      {"or", Tok::Or},         {"not", Tok::Not},       {"in", Tok::In},
      {"empty", Tok::Empty},
  };

  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      unsigned char ch = static_cast<unsigned char>(src[i]);
      if (ch == '\n') {
        ++line;
        col = 1;
      } else if ((ch & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::SyntaxError,
                 "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  };

  while (i < src.size()) {
    unsigned char ch = static_cast<unsigned char>(src[i]);
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      std::string word(src.substr(i, j - i));
      auto kw = keywords.find(word);
      out.push_back({kw == keywords.end() ? Tok::Ident : kw->second, word, tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (ch == '#') {
      std::size_t j = i + 1;
      int depth = 0;
      do {
        if (j >= src.size()) throw fail("unterminated '#' literal");
        if (src[j] == '[') ++depth;
        else if (src[j] == ']') --depth;
        else if (depth == 0) throw fail("'#' must be followed by a JSON array");
        ++j;
      } while (depth > 0);
      out.push_back({Tok::JsonLit, std::string(src.substr(i + 1, j - i - 1)), tl, tc});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, kind] : symbols) {
      if (src.substr(i, spelling.size()) == spelling) {
        out.push_back({kind, std::string(spelling), tl, tc});
        advance(spelling.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw fail("unexpected character");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr formula() {
    FormulaPtr lhs = implication();
    while (accept(Tok::Iff)) lhs = connective(FormulaOp::Iff, {lhs, implication()});
    return lhs;
  }

  TermPtr term() {
    TermPtr lhs = intersection();
    for (;;) {
      if (accept(Tok::Union)) lhs = apply(TermOp::Union, {lhs, intersection()});
      else if (accept(Tok::Diff) || accept(Tok::Not)) lhs = apply(TermOp::Difference, {lhs, intersection()});
      else return lhs;
    }
  }

  void expect_end() {
    if (peek().kind != Tok::End) throw error("unexpected '" + peek().text + "'");
  }

  std::size_t position() const { return pos_; }
  const Token& token_at(std::size_t p) const { return toks_[std::min(p, toks_.size() - 1)]; }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  Error error(const std::string& what) const {
    const Token& t = peek();
    return Error(ErrorCode::SyntaxError, "line " + std::to_string(t.line) + ", column " +
                                             std::to_string(t.column) + ": " + what);
  }
  const Token& expect(Tok k, std::string_view what) {
    if (peek().kind != k)
      throw error("expected " + std::string(what) +
                  (peek().kind == Tok::End ? " at end of input" : ", found '" + peek().text + "'"));
    return toks_[pos_++];
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::Implies)) return connective(FormulaOp::Implies, {lhs, implication()});
    return lhs;
  }
  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (accept(Tok::Or)) lhs = connective(FormulaOp::Or, {lhs, conjunction()});
    return lhs;
  }
  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (accept(Tok::And)) lhs = connective(FormulaOp::And, {lhs, unary()});
    return lhs;
  }

  static bool continues_term(Tok k) {
    switch (k) {
      case Tok::In: case Tok::NotIn: case Tok::Eq: case Tok::Neq: case Tok::Subset:
      case Tok::Union: case Tok::Inter: case Tok::Diff: case Tok::Times: case Tok::LBrack:
        return true;
      default:
        return false;
    }
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return connective(FormulaOp::Not, {unary()});
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      FormulaOp op = peek().kind == Tok::Forall ? FormulaOp::Forall : FormulaOp::Exists;
      ++pos_;
      std::string v = expect(Tok::Ident, "a variable after the quantifier").text;
      if (accept(Tok::Dot) || accept(Tok::Comma)) return quantifier(op, v, formula());
      return quantifier(op, v, unary());
    }
    if (peek().kind == Tok::LParen) {
      // Either a parenthesized formula or the start of a parenthesized term.
      const std::size_t saved = pos_;
      try {
        ++pos_;
        FormulaPtr inner = formula();
        expect(Tok::RParen, "')'");
        if (!continues_term(peek().kind)) return inner;
      } catch (const Error&) {
      }
      pos_ = saved;
    }
    return relation();
  }

  FormulaPtr relation() {
    TermPtr lhs = term();
    switch (peek().kind) {
      case Tok::In: ++pos_; return atom(FormulaOp::In, lhs, term());
      case Tok::Eq: ++pos_; return atom(FormulaOp::Eq, lhs, term());
      case Tok::Subset: ++pos_; return atom(FormulaOp::Subset, lhs, term());
      case Tok::NotIn: ++pos_; return connective(FormulaOp::Not, {atom(FormulaOp::In, lhs, term())});
      case Tok::Neq: ++pos_; return connective(FormulaOp::Not, {atom(FormulaOp::Eq, lhs, term())});
      default: throw error("expected a relation (∈, =, ⊆)");
    }
  }

  TermPtr intersection() {
    TermPtr lhs = product();
    while (accept(Tok::Inter)) lhs = apply(TermOp::Intersection, {lhs, product()});
    return lhs;
  }
  TermPtr product() {
    TermPtr lhs = postfix();
    while (accept(Tok::Times)) lhs = apply(TermOp::Cartesian, {lhs, postfix()});
    return lhs;
  }
  TermPtr postfix() {
    TermPtr t = primary();
    while (accept(Tok::LBrack)) {
      TermPtr arg = term();
      expect(Tok::RBrack, "']'");
      t = apply(TermOp::Value, {t, arg});
    }
    return t;
  }

  TermPtr primary() {
    static const std::map<std::string, TermOp, std::less<>> functions = {
        {"pow", TermOp::Power},       {"fst", TermOp::Fst},
        {"snd", TermOp::Snd},         {"dom", TermOp::Domain},
        {"ran", TermOp::Range},       {"bigcup", TermOp::BigUnion},
        {"bigcap", TermOp::BigIntersection},
    };
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        ++pos_;
        auto fn = functions.find(t.text);
        if (fn != functions.end() && peek().kind == Tok::LParen) {
          ++pos_;
          TermPtr arg = term();
          expect(Tok::RParen, "')'");
          return apply(fn->second, {arg});
        }
        return var(t.text);
      }
      case Tok::Number: {
        ++pos_;
        if (t.text.size() > 2 || std::stoul(t.text) > 64) throw error("numeral too large");
        return lit(numeral(std::stoul(t.text)));
      }
      case Tok::Empty: ++pos_; return lit(HfSet());
      case Tok::JsonLit: {
        ++pos_;
        try {
          return lit(deserialize(t.text, ParseMode::Strict));
        } catch (const Error& e) {
          throw Error(ErrorCode::SyntaxError, "line " + std::to_string(t.line) + ", column " +
                                                  std::to_string(t.column) + ": " + e.what());
        }
      }
      case Tok::BigUnion: ++pos_; return apply(TermOp::BigUnion, {primary()});
      case Tok::BigInter: ++pos_; return apply(TermOp::BigIntersection, {primary()});
      case Tok::LParen: {
        ++pos_;
        TermPtr inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::LBrack: {
        ++pos_;
        TermPtr a = term();
        if (accept(Tok::RBrack)) return apply(TermOp::Singleton, {a});
        TermOp op = accept(Tok::Bar) ? TermOp::UnorderedPair
                    : (expect(Tok::Comma, "',', '|' or ']'"), TermOp::OrderedPair);
        TermPtr b = term();
        expect(Tok::RBrack, "']'");
        return apply(op, {a, b});
      }
      case Tok::LAngle: {
        ++pos_;
        TermPtr a = term();
        expect(Tok::Comma, "','");
        TermPtr b = term();
        expect(Tok::RAngle, "'⟩'");
        return apply(TermOp::OrderedPair, {a, b});
      }
      case Tok::LBrace: return brace();
      default:
        throw error(t.kind == Tok::End ? "expected a term at end of input"
                                       : "expected a term, found '" + t.text + "'");
    }
  }

  TermPtr brace() {
    expect(Tok::LBrace, "'{'");
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Colon) {
      std::string x = toks_[pos_].text;
      pos_ += 2;
      FormulaPtr body = formula();
      expect(Tok::RBrace, "'}'");
      return comprehension({x}, body);
    }
    if (peek().kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Comma &&
        peek(3).kind == Tok::Ident && peek(4).kind == Tok::RParen && peek(5).kind == Tok::Colon) {
      std::string u = peek(1).text, v = peek(3).text;
      if (u == v) throw error("pair comprehension needs two distinct variables");
      pos_ += 6;
      FormulaPtr body = formula();
      expect(Tok::RBrace, "'}'");
      return comprehension({u, v}, body);
    }
    std::vector<TermPtr> items;
    if (!accept(Tok::RBrace)) {
      do items.push_back(term());
      while (accept(Tok::Comma));
      expect(Tok::RBrace, "'}'");
    }
    return apply(TermOp::Enumeration, std::move(items));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FormulaPtr parse_formula(std::string_view text) {
  detail::Parser p(detail::lex(text));
  FormulaPtr f = p.formula();
  p.expect_end();
  return f;
}

inline TermPtr parse_term(std::string_view text) {
  detail::Parser p(detail::lex(text));
  TermPtr t = p.term();
  p.expect_end();
  return t;
}

/// Parses a formula, or a term when the text is not a formula.
inline Expr parse(std::string_view text) {
  auto tokens = detail::lex(text);
  std::optional<Error> formula_error;
  std::size_t formula_reach = 0;
  {
    detail::Parser p(tokens);
    try {
      FormulaPtr f = p.formula();
      p.expect_end();
      return f;
    } catch (const Error& e) {
      formula_error = e;
      formula_reach = p.position();
    }
  }
  detail::Parser p(tokens);
  try {
    TermPtr t = p.term();
    p.expect_end();
    return t;
  } catch (const Error& e) {
    // Report whichever reading got further into the input.
    if (p.position() > formula_reach) throw;
    throw *formula_error;
  }
}

// ---------------------------------------------------------------------------
// Evaluation

using Env = std::map<std::string, HfSet, std::less<>>;

struct Universe {
  HfSet carrier;
  std::size_t rank_cap = kDefaultRankCap;

  static Universe rank(std::size_t k, std::size_t cap = kDefaultRankCap) {
    return {rank_universe(k, cap), cap};
  }
  static Universe over(HfSet carrier) { return {std::move(carrier), kDefaultRankCap}; }
};

enum class ComprehensionKind { Single, Pair };

inline bool eval_formula(const Formula& f, const Env& env, const Universe& u);
inline HfSet comprehend(ComprehensionKind kind, const std::vector<std::string>& binders,
                 const Formula& body, const Env& env, const Universe& u);

inline HfSet eval_term(const Term& t, const Env& env, const Universe& u) {
  auto arg = [&](std::size_t i) { return eval_term(*t.args[i], env, u); };
  switch (t.op) {
    case TermOp::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw Error(ErrorCode::UnboundVariable, "variable '" + t.name + "'");
      return it->second;
    }
    case TermOp::Literal: return t.literal;
    case TermOp::Union: return set_union(arg(0), arg(1));
    case TermOp::Intersection: return set_intersection(arg(0), arg(1));
    case TermOp::Difference: return set_difference(arg(0), arg(1));
    case TermOp::Cartesian: return cartesian(arg(0), arg(1));
    case TermOp::Power: return power_set(arg(0));
    case TermOp::Singleton: return singleton(arg(0));
    case TermOp::UnorderedPair: return unordered_pair(arg(0), arg(1));
    case TermOp::OrderedPair: return ordered_pair(arg(0), arg(1));
    case TermOp::Fst: return fst(arg(0));
    case TermOp::Snd: return snd(arg(0));
    case TermOp::BigUnion: return big_union(arg(0));
    case TermOp::BigIntersection: return big_intersection(arg(0));
    case TermOp::Domain: return domain(arg(0));
    case TermOp::Range: return range(arg(0));
    case TermOp::Value: return value(arg(0), arg(1));
    case TermOp::Comprehension:
      return comprehend(ComprehensionKind::Single, t.binders, *t.body, env, u);
    case TermOp::PairComprehension:
      return comprehend(ComprehensionKind::Pair, t.binders, *t.body, env, u);
    case TermOp::Enumeration: {
      std::vector<HfSet> ms;
      for (std::size_t i = 0; i < t.args.size(); ++i) ms.push_back(arg(i));
      return HfSet::of(std::move(ms));
    }
  }
  throw Error(ErrorCode::MalformedInstance, "unknown term");
}

inline bool eval_formula(const Formula& f, const Env& env, const Universe& u) {
  switch (f.op) {
    case FormulaOp::In:
      return member(eval_term(*f.terms[0], env, u), eval_term(*f.terms[1], env, u));
    case FormulaOp::Eq:
      return eval_term(*f.terms[0], env, u) == eval_term(*f.terms[1], env, u);
    case FormulaOp::Subset:
      return subclass(eval_term(*f.terms[0], env, u), eval_term(*f.terms[1], env, u));
    case FormulaOp::Not: return !eval_formula(*f.subs[0], env, u);
    case FormulaOp::And: return eval_formula(*f.subs[0], env, u) && eval_formula(*f.subs[1], env, u);
    case FormulaOp::Or: return eval_formula(*f.subs[0], env, u) || eval_formula(*f.subs[1], env, u);
    case FormulaOp::Implies:
      return !eval_formula(*f.subs[0], env, u) || eval_formula(*f.subs[1], env, u);
    case FormulaOp::Iff: return eval_formula(*f.subs[0], env, u) == eval_formula(*f.subs[1], env, u);
    case FormulaOp::Forall:
    case FormulaOp::Exists: {
      const bool universal = f.op == FormulaOp::Forall;
      Env inner = env;
      for (const auto& b : u.carrier) {
        inner.insert_or_assign(f.var, b);
        if (eval_formula(*f.subs[0], inner, u) != universal) return !universal;
      }
      return universal;
    }
  }
  throw Error(ErrorCode::MalformedInstance, "unknown formula");
}

/// {b ∈ carrier : F(b)} or {⟨a,b⟩ : a,b ∈ carrier, F(a,b)}.
inline HfSet comprehend(ComprehensionKind kind, const std::vector<std::string>& binders,
                        const Formula& body, const Env& env, const Universe& u) {
  const std::size_t want = kind == ComprehensionKind::Single ? 1 : 2;
  if (binders.size() != want)
    throw Error(ErrorCode::MalformedInstance, "comprehension binder count mismatch");
  std::vector<HfSet> out;
  Env inner = env;
  if (kind == ComprehensionKind::Single) {
    for (const auto& b : u.carrier) {
      inner.insert_or_assign(binders[0], b);
      if (eval_formula(body, inner, u)) out.push_back(b);
    }
    return HfSet::from_sorted(std::move(out));
  }
  for (const auto& a : u.carrier) {
    inner.insert_or_assign(binders[0], a);
    for (const auto& b : u.carrier) {
      inner.insert_or_assign(binders[1], b);
      if (eval_formula(body, inner, u)) out.push_back(ordered_pair(a, b));
    }
  }
  return HfSet::of(std::move(out));
}

// ---------------------------------------------------------------------------
// Free variables and the classification scheme

inline void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out);

inline void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (t.op == TermOp::Var) {
    if (!bound.count(t.name)) out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_free(*a, bound, out);
  if (t.body) {
    std::set<std::string> inner = bound;
    inner.insert(t.binders.begin(), t.binders.end());
    collect_free(*t.body, inner, out);
  }
}

inline void collect_free(const Formula& f, std::set<std::string>& bound,
                         std::set<std::string>& out) {
  for (const auto& t : f.terms) collect_free(*t, bound, out);
  if (f.op == FormulaOp::Forall || f.op == FormulaOp::Exists) {
    std::set<std::string> inner = bound;
    inner.insert(f.var);
    collect_free(*f.subs[0], inner, out);
    return;
  }
  for (const auto& s : f.subs) collect_free(*s, bound, out);
}

inline std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

/// Checks b ∈ {x : F} ⟺ F(b) for every b in the carrier. The comprehension
/// variable is the body's free variable, or `x` for a closed body.
inline bool check_scheme(const Formula& body, const Universe& u) {
  auto fv = free_variables(body);
  if (fv.size() > 1)
    throw Error(ErrorCode::UnboundVariable, "scheme body has more than one free variable");
  const std::string x = fv.empty() ? "x" : *fv.begin();
  const HfSet klass = comprehend(ComprehensionKind::Single, {x}, body, {}, u);
  for (const auto& b : u.carrier) {
    Env env{{x, b}};
    if (member(b, klass) != eval_formula(body, env, u)) return false;
  }
  return true;
}

}  // namespace mk::dsl
