#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "elp/program.hpp"

namespace elp {

// A parsed source file: rules, extra sentences given with "#formula F." and
// subjective integrity constraints given with "#constraint F.".
struct Document {
  Program program;
  Theory formulas;
  Theory constraints;
};

namespace detail {

enum class Tok {
  Ident, Var, Number, Dot, Comma, Bar, Amp, If, Arrow, Colon, LPar, RPar, Minus,
  Const, True, False, FormulaDir, ConstraintDir, End
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t{Tok::End, "", line_, col_};
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) || std::isupper(static_cast<unsigned char>(c)) ||
          c == '_') {
        std::size_t b = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_' || src_[pos_] == '\'')) {
          advance();
        }
        t.text = std::string(src_.substr(b, pos_ - b));
        t.kind = std::isupper(static_cast<unsigned char>(c)) || c == '_' ? Tok::Var : Tok::Ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t b = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) { advance(); }
        t.text = std::string(src_.substr(b, pos_ - b));
        t.kind = Tok::Number;
      } else if (c == '#') {
        std::size_t b = pos_;
        advance();
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) { advance(); }
        t.text = std::string(src_.substr(b, pos_ - b));
        if (t.text == "#const") { t.kind = Tok::Const; }
        else if (t.text == "#true") { t.kind = Tok::True; }
        else if (t.text == "#false") { t.kind = Tok::False; }
        else if (t.text == "#formula") { t.kind = Tok::FormulaDir; }
        else if (t.text == "#constraint") { t.kind = Tok::ConstraintDir; }
        else { throw ParseError(t.line, t.column, "unknown directive '" + t.text + "'"); }
      } else if (c == ':' && peek(1) == '-') {
        advance(); advance();
        t.kind = Tok::If;
      } else if (c == '<' && peek(1) == '-') {
        advance(); advance();
        t.kind = Tok::Arrow;
      } else {
        advance();
        switch (c) {
          case '.': t.kind = Tok::Dot; break;
          case ',': t.kind = Tok::Comma; break;
          case '|': t.kind = Tok::Bar; break;
          case '&': t.kind = Tok::Amp; break;
          case ':': t.kind = Tok::Colon; break;
          case '(': t.kind = Tok::LPar; break;
          case ')': t.kind = Tok::RPar; break;
          case '-': t.kind = Tok::Minus; break;
          default:
            throw ParseError(t.line, t.column, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') { advance(); }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(Lexer(src).run()) {}

  Document document() {
    Document doc;
    while (!at(Tok::End)) {
      if (accept(Tok::Const)) {
        do {
          const Token& t = cur();
          if (!at(Tok::Ident) && !at(Tok::Number)) { fail("expected constant name"); }
          doc.program.constants.insert(t.text);
          ++pos_;
        } while (accept(Tok::Comma));
        expect(Tok::Dot, "'.'");
      } else if (accept(Tok::FormulaDir)) {
        doc.formulas.push_back(formula());
        expect(Tok::Dot, "'.'");
      } else if (accept(Tok::ConstraintDir)) {
        doc.constraints.push_back(formula());
        expect(Tok::Dot, "'.'");
      } else {
        doc.program.rules.push_back(rule());
      }
    }
    return doc;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }
  bool at_word(const char* w) const {
    return (at(Tok::Ident) || at(Tok::Var)) && cur().text == w;
  }
  bool accept(Tok k) {
    if (at(k)) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    std::string found = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
    throw ParseError(cur().line, cur().column, msg + ", found " + found);
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) { fail(std::string("expected ") + what); }
  }

  Rule rule() {
    Rule r;
    r.location = {cur().line, cur().column};
    if (!at(Tok::If)) {
      r.head.push_back(head_literal());
      while (accept(Tok::Bar)) { r.head.push_back(head_literal()); }
    }
    // ":- ." is the empty rule, plain falsity
    if (accept(Tok::If) && !(r.head.empty() && at(Tok::Dot))) {
      r.body.push_back(body_literal());
      while (accept(Tok::Comma)) { r.body.push_back(body_literal()); }
    }
    expect(Tok::Dot, "'.'");
    return r;
  }

  int nots(int limit) {
    int n = 0;
    while (at_word("not")) {
      if (++n > limit) { fail("more than two stacked default negations"); }
      ++pos_;
    }
    return n;
  }

  ObjectiveLiteral head_literal() {
    int d = nots(2);
    return normalize(core(d));
  }

  ObjectiveLiteral core(int depth) {
    if (accept(Tok::True)) { return normalize(ObjectiveLiteral{ObjectiveLiteral::Core::True, {}, depth}); }
    if (accept(Tok::False)) { return normalize(ObjectiveLiteral{ObjectiveLiteral::Core::False, {}, depth}); }
    bool neg = accept(Tok::Minus);
    return ObjectiveLiteral::of({atom(), neg}, depth);
  }

  Literal body_literal() {
    int d = nots(2);
    if (at_word("K") || at_word("M")) {
      Modality m = cur().text == "K" ? Modality::K : Modality::M;
      ++pos_;
      int e = nots(2);
      return normalize(SubjectiveLiteral{m, core(e), d});
    }
    if (at_word("enot")) {
      ++pos_;
      int e = nots(2);
      return normalize(SubjectiveLiteral{Modality::K, core(e), d + 1});
    }
    return normalize(core(d));
  }

  Atom atom() {
    if (!at(Tok::Ident) || is_keyword(cur().text)) { fail("expected atom"); }
    Atom a;
    a.predicate = cur().text;
    ++pos_;
    if (accept(Tok::LPar)) {
      do {
        if (at(Tok::Ident) && !is_keyword(cur().text)) {
          a.args.push_back(constant(cur().text));
        } else if (at(Tok::Number)) {
          a.args.push_back(constant(cur().text));
        } else if (at(Tok::Var)) {
          a.args.push_back(variable(cur().text));
        } else {
          fail("expected term");
        }
        ++pos_;
      } while (accept(Tok::Comma));
      expect(Tok::RPar, "')'");
    }
    return a;
  }

  static bool is_keyword(const std::string& s) {
    return s == "not" || s == "enot" || s == "exists" || s == "forall";
  }

  // formula := disj ["<-" disj]
  Formula formula() {
    Formula f = disjunction();
    if (accept(Tok::Arrow)) { f = Formula::implies(f, disjunction()); }
    return f;
  }
  Formula disjunction() {
    std::vector<Formula> fs{conjunction()};
    while (accept(Tok::Bar)) { fs.push_back(conjunction()); }
    return Formula::disj(fs);
  }
  Formula conjunction() {
    std::vector<Formula> fs{unary()};
    while (accept(Tok::Amp)) { fs.push_back(unary()); }
    return Formula::conj(fs);
  }
  Formula unary() {
    if (at_word("not")) {
      ++pos_;
      return Formula::dneg(unary());
    }
    if (at_word("enot")) {
      ++pos_;
      return Formula::dneg(Formula::k(unary()));
    }
    if (at_word("K")) {
      ++pos_;
      return Formula::k(unary());
    }
    if (at_word("M")) {
      ++pos_;
      return Formula::m(unary());
    }
    if (at_word("exists") || at_word("forall")) {
      bool ex = cur().text == "exists";
      ++pos_;
      if (!at(Tok::Var)) { fail("expected variable"); }
      std::string v = cur().text;
      ++pos_;
      expect(Tok::Colon, "':'");
      // the scope extends as far right as possible
      Formula g = formula();
      return ex ? Formula::exists(v, g) : Formula::forall(v, g);
    }
    if (accept(Tok::Minus)) { return Formula::strong_neg(unary()); }
    if (accept(Tok::True)) { return Formula::top(); }
    if (accept(Tok::False)) { return Formula::bot(); }
    if (accept(Tok::LPar)) {
      Formula f = formula();
      expect(Tok::RPar, "')'");
      return f;
    }
    return Formula::atom(atom());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Document parse_document(std::string_view text) { return detail::Parser(text).document(); }

// Rules and #const directives only.
inline Program parse_program(std::string_view text) {
  Document d = parse_document(text);
  if (!d.formulas.empty() || !d.constraints.empty()) {
    throw UnsupportedError("formula directives are not part of a program");
  }
  return std::move(d.program);
}

inline Formula parse_formula(std::string_view text) {
  std::string src = "#formula " + std::string(text) + ".";
  Document d = parse_document(src);
  if (d.formulas.size() != 1 || !d.program.rules.empty()) { throw ParseError(1, 1, "expected one formula"); }
  return d.formulas.front();
}

inline Theory parse_theory(std::string_view text) {
  Document d = parse_document(text);
  Theory t = program_to_theory(d.program);
  t.insert(t.end(), d.formulas.begin(), d.formulas.end());
  return t;
}

}  // namespace elp
