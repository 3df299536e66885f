// Copyright 2026 The rshacl Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "rshacl/snf.hpp"
#include "rshacl/textio.hpp"

namespace rshacl {

Graph parse_graph(const std::string& text, const std::string& filename) {
  Graph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() == 2) {
      if (tokens[0] != "node")
        throw ParseError(
            SourceSpan{filename, lineno, 1, static_cast<int>(line.size()) + 1},
            "expected `node NAME` or `subject predicate object`");
      g.add_node(tokens[1]);
    } else if (tokens.size() == 3) {
      g.add_edge(tokens[0], tokens[1], tokens[2]);
    } else {
      throw ParseError(
          SourceSpan{filename, lineno, 1, static_cast<int>(line.size()) + 1},
          "expected 2 or 3 whitespace-separated names, got " +
              std::to_string(tokens.size()));
    }
  }
  return g;
}

namespace {

enum class Tok {
  Name,
  Int,
  Define,     // :=
  Subset,     // <=
  Semi,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Pipe,
  Slash,
  Star,
  Question,
  Caret,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(const std::string& text, std::string filename)
      : text_(text), filename_(std::move(filename)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      char c = text_[pos_];
      SourceSpan sp = here(1);
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
          advance();
        sp.col_end = col_;
        out.push_back({Tok::Name, text_.substr(start, pos_ - start), sp});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
        sp.col_end = col_;
        out.push_back({Tok::Int, text_.substr(start, pos_ - start), sp});
      } else if (c == ':' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '=') {
        advance();
        advance();
        sp.col_end = col_;
        out.push_back({Tok::Define, ":=", sp});
      } else if (c == '<' && pos_ + 1 < text_.size() &&
                 text_[pos_ + 1] == '=') {
        advance();
        advance();
        sp.col_end = col_;
        out.push_back({Tok::Subset, "<=", sp});
      } else {
        Tok kind;
        switch (c) {
          case ';': kind = Tok::Semi; break;
          case '(': kind = Tok::LParen; break;
          case ')': kind = Tok::RParen; break;
          case '{': kind = Tok::LBrace; break;
          case '}': kind = Tok::RBrace; break;
          case ',': kind = Tok::Comma; break;
          case '|': kind = Tok::Pipe; break;
          case '/': kind = Tok::Slash; break;
          case '*': kind = Tok::Star; break;
          case '?': kind = Tok::Question; break;
          case '^': kind = Tok::Caret; break;
          default:
            throw ParseError(sp, std::string("unexpected character '") + c +
                                     "'");
        }
        advance();
        sp.col_end = col_;
        out.push_back({kind, std::string(1, c), sp});
      }
    }
    out.push_back({Tok::End, "", here(1)});
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan here(int width) const {
    return SourceSpan{filename_, line_, col_, col_ + width};
  }

  const std::string& text_;
  std::string filename_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& s) {
  return s == "shape" || s == "target" || s == "top" || s == "not" ||
         s == "and" || s == "or" || s == "geq" || s == "forall" ||
         s == "eq" || s == "disjoint" || s == "closed";
}

class SchemaParser {
 public:
  SchemaParser(std::vector<Token> tokens, ParseOptions options)
      : tokens_(std::move(tokens)), options_(options) {}

  Schema run() {
    struct RawRule {
      Token head;
      ShapePtr body;
    };
    struct RawTarget {
      ShapePtr query;
      Token shape;
    };
    std::vector<RawRule> rules;
    std::vector<RawTarget> targets;
    std::map<std::string, SourceSpan> heads;

    while (peek().kind != Tok::End) {
      const Token& head = peek();
      if (head.kind == Tok::Name && head.text == "shape") {
        next();
        Token name_tok = expect_name("shape name");
        if (auto it = heads.find(name_tok.text); it != heads.end())
          throw ParseError(name_tok.span,
                           "shape '" + name_tok.text +
                               "' already defined at " +
                               it->second.to_string());
        heads.emplace(name_tok.text, name_tok.span);
        expect(Tok::Define, "':='");
        ShapePtr body = parse_shape();
        expect(Tok::Semi, "';'");
        rules.push_back({std::move(name_tok), std::move(body)});
      } else if (head.kind == Tok::Name && head.text == "target") {
        next();
        ShapePtr query = parse_shape();
        expect(Tok::Subset, "'<='");
        Token name_tok = expect_name("target shape name");
        expect(Tok::Semi, "';'");
        targets.push_back({std::move(query), std::move(name_tok)});
      } else {
        throw ParseError(head.span, "expected 'shape' or 'target', got '" +
                                        head.text + "'");
      }
    }

    auto each_name = [](const ShapeExpr& e, auto&& fn) -> void {
      auto walk = [&fn](const ShapeExpr& x, auto&& self) -> void {
        if (x.kind == ShapeExpr::Kind::Name) fn(x);
        if (x.sub1) self(*x.sub1, self);
        if (x.sub2) self(*x.sub2, self);
      };
      walk(e, walk);
    };
    for (const auto& r : rules)
      each_name(*r.body, [&](const ShapeExpr& n) {
        if (!heads.count(n.text))
          throw ParseError(n.span, "shape name '" + n.text +
                                       "' has no defining rule");
      });
    for (const auto& t : targets) {
      each_name(*t.query, [&](const ShapeExpr& n) {
        if (heads.count(n.text))
          throw ParseError(n.span, "target query mentions shape name '" +
                                       n.text + "'");
        throw ParseError(n.span, "target query mentions undefined name '" +
                                     n.text + "'");
      });
      if (!heads.count(t.shape.text))
        throw ParseError(t.shape.span, "target refers to undefined shape '" +
                                           t.shape.text + "'");
    }

    SchemaBuilder builder;
    for (auto& r : rules) builder.rule(r.head.text, std::move(r.body));
    for (auto& t : targets) builder.target(std::move(t.query), t.shape.text);
    return std::move(builder).build();
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError(peek().span,
                       "expected " + what + ", got '" + peek().text + "'");
    return next();
  }

  Token expect_name(const std::string& what) {
    if (peek().kind != Tok::Name || is_keyword(peek().text))
      throw ParseError(peek().span,
                       "expected " + what + ", got '" + peek().text + "'");
    Token t = next();
    if (!options_.allow_reserved_names &&
        t.text.rfind(kSnfPrefix, 0) == 0)
      throw ParseError(t.span, "names starting with '" +
                                   std::string(kSnfPrefix) +
                                   "' are reserved");
    return t;
  }

  std::uint32_t expect_int() {
    if (peek().kind != Tok::Int)
      throw ParseError(peek().span,
                       "expected a number, got '" + peek().text + "'");
    Token t = next();
    unsigned long v = std::stoul(t.text);
    if (v == 0)
      throw ParseError(t.span, "cardinality bound must be at least 1");
    if (v > 0xffffffffUL)
      throw ParseError(t.span, "cardinality bound is out of range");
    return static_cast<std::uint32_t>(v);
  }

  ShapePtr parse_shape() {  // or-expr
    ShapePtr lhs = parse_and();
    while (peek().kind == Tok::Name && peek().text == "or") {
      SourceSpan sp = next().span;
      lhs = or_(std::move(lhs), parse_and(), sp);
    }
    return lhs;
  }

  ShapePtr parse_and() {
    ShapePtr lhs = parse_unary();
    while (peek().kind == Tok::Name && peek().text == "and") {
      SourceSpan sp = next().span;
      lhs = and_(std::move(lhs), parse_unary(), sp);
    }
    return lhs;
  }

  ShapePtr parse_unary() {
    if (peek().kind == Tok::Name && peek().text == "not") {
      SourceSpan sp = next().span;
      return not_(parse_unary(), sp);
    }
    return parse_atom();
  }

  ShapePtr parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      ShapePtr inner = parse_shape();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::LBrace) {
      next();
      Token c = expect_name("constant name");
      expect(Tok::RBrace, "'}'");
      return nominal(c.text, c.span);
    }
    if (t.kind != Tok::Name)
      throw ParseError(t.span,
                       "expected a shape expression, got '" + t.text + "'");
    if (t.text == "top") {
      SourceSpan sp = next().span;
      return top(sp);
    }
    if (t.text == "geq") {
      SourceSpan sp = next().span;
      std::uint32_t n = expect_int();
      expect(Tok::LParen, "'('");
      PathPtr path = parse_path();
      expect(Tok::Comma, "','");
      ShapePtr sub = parse_shape();
      expect(Tok::RParen, "')'");
      return geq(n, std::move(path), std::move(sub), sp);
    }
    if (t.text == "forall") {
      SourceSpan sp = next().span;
      expect(Tok::LParen, "'('");
      PathPtr path = parse_path();
      expect(Tok::Comma, "','");
      ShapePtr sub = parse_shape();
      expect(Tok::RParen, "')'");
      return forall(std::move(path), std::move(sub), sp);
    }
    if (t.text == "eq" || t.text == "disjoint") {
      bool is_eq = t.text == "eq";
      SourceSpan sp = next().span;
      expect(Tok::LParen, "'('");
      PathPtr p1 = parse_path();
      expect(Tok::Comma, "','");
      PathPtr p2 = parse_path();
      expect(Tok::RParen, "')'");
      return is_eq ? eq(std::move(p1), std::move(p2), sp)
                   : disj(std::move(p1), std::move(p2), sp);
    }
    if (t.text == "closed") {
      SourceSpan sp = next().span;
      expect(Tok::LParen, "'('");
      std::vector<std::string> allowed;
      if (peek().kind != Tok::RParen) {
        allowed.push_back(expect_name("property name").text);
        while (peek().kind == Tok::Comma) {
          next();
          allowed.push_back(expect_name("property name").text);
        }
      }
      expect(Tok::RParen, "')'");
      return closed(std::move(allowed), sp);
    }
    Token nm = expect_name("a shape expression");
    return name(nm.text, nm.span);
  }

  PathPtr parse_path() {  // union of sequences
    PathPtr lhs = parse_seq();
    while (peek().kind == Tok::Pipe) {
      SourceSpan sp = next().span;
      lhs = path_union(std::move(lhs), parse_seq(), sp);
    }
    return lhs;
  }

  PathPtr parse_seq() {
    PathPtr lhs = parse_postfix();
    while (peek().kind == Tok::Slash) {
      SourceSpan sp = next().span;
      lhs = path_compose(std::move(lhs), parse_postfix(), sp);
    }
    return lhs;
  }

  PathPtr parse_postfix() {
    PathPtr base = parse_base();
    while (true) {
      if (peek().kind == Tok::Star) {
        base = star(std::move(base), next().span);
      } else if (peek().kind == Tok::Question) {
        base = optional(std::move(base), next().span);
      } else {
        return base;
      }
    }
  }

  PathPtr parse_base() {
    const Token& t = peek();
    if (t.kind == Tok::Caret) {
      SourceSpan sp = next().span;
      Token nm = expect_name("property name");
      return inverse(prop(nm.text, nm.span), sp);
    }
    if (t.kind == Tok::LParen) {
      next();
      PathPtr inner = parse_path();
      expect(Tok::RParen, "')'");
      return inner;
    }
    Token nm = expect_name("property name");
    return prop(nm.text, nm.span);
  }

  std::vector<Token> tokens_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

Schema parse_schema(const std::string& text, const std::string& filename,
                    const ParseOptions& options) {
  Lexer lexer(text, filename);
  return SchemaParser(lexer.run(), options).run();
}

void check_constants(const Schema& schema, const Graph& g) {
  auto check_expr = [&](const ShapeExpr& e, auto&& self) -> void {
    if (e.kind == ShapeExpr::Kind::Nominal && !g.find_node(e.text))
      throw EvalError("constant '" + e.text + "' does not name a graph node" +
                      (e.span.line ? " (" + e.span.to_string() + ")" : ""));
    if (e.sub1) self(*e.sub1, self);
    if (e.sub2) self(*e.sub2, self);
  };
  for (const auto& r : schema.rules()) check_expr(*r.body, check_expr);
  for (const auto& t : schema.targets()) check_expr(*t.query, check_expr);
}

}  // namespace rshacl
