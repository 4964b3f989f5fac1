#include "parse.hpp"

#include <cctype>

namespace polycert::cli {

parse_error::parse_error(std::string message, std::size_t position,
                         std::vector<std::string> expected)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum Kind { Integer, VarX, VarY, Plus, Minus, Star, Caret, LParen, RParen,
              End } kind;
  Int value;         // for Integer
  std::size_t pos;   // byte offset in the input
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Integer: return "integer";
    case Token::VarX: return "x";
    case Token::VarY: return "y";
    case Token::Plus: return "'+'";
    case Token::Minus: return "'-'";
    case Token::Star: return "'*'";
    case Token::Caret: return "'^'";
    case Token::LParen: return "'('";
    case Token::RParen: return "')'";
    default: return "end of input";
  }
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      out.push_back({Token::Integer, Int(text.substr(start, i - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case 'x': kind = Token::VarX; break;
      case 'y': kind = Token::VarY; break;
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '^': kind = Token::Caret; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", i,
                          {"integer", "x", "y", "'+'", "'-'", "'*'", "'^'",
                           "'('", "')'"});
    }
    out.push_back({kind, 0, i});
    ++i;
  }
  out.push_back({Token::End, 0, text.size()});
  return out;
}

}  // namespace

PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr r = a;
  for (const auto& [key, c] : b.terms_) {
    auto it = r.terms_.find(key);
    if (it == r.terms_.end()) {
      r.terms_.emplace(key, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr neg;
  for (const auto& [key, c] : b.terms_) neg.terms_.emplace(key, -c);
  return a + neg;
}

PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
  PolyExpr r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      std::pair<unsigned, unsigned> key{ka.first + kb.first,
                                        ka.second + kb.second};
      Int prod = ca * cb;
      auto it = r.terms_.find(key);
      if (it == r.terms_.end()) {
        if (prod != 0) r.terms_.emplace(key, std::move(prod));
      } else {
        it->second += prod;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

PolyExpr PolyExpr::pow(unsigned e) const {
  PolyExpr acc;
  acc.terms_.emplace(std::pair<unsigned, unsigned>{0, 0}, Int(1));
  PolyExpr base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  PolyExpr run() {
    PolyExpr e = expr();
    if (peek().kind != Token::End)
      throw parse_error("expected operator or end of input", peek().pos,
                        {"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t at_ = 0;

  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  PolyExpr expr() {
    PolyExpr acc = term();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      Token op = take();
      PolyExpr rhs = term();
      acc = op.kind == Token::Plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  PolyExpr term() {
    PolyExpr acc = unary();
    while (peek().kind == Token::Star) {
      take();
      acc = acc * unary();
    }
    return acc;
  }

  PolyExpr unary() {
    bool negate = false;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      if (take().kind == Token::Minus) negate = !negate;
    }
    PolyExpr p = primary();
    if (!negate) return p;
    PolyExpr zero;
    return zero - p;
  }

  PolyExpr primary() {
    const Token& t = peek();
    PolyExpr p;
    switch (t.kind) {
      case Token::Integer: {
        Token tok = take();
        if (tok.value != 0)
          p.terms_.emplace(std::pair<unsigned, unsigned>{0, 0}, tok.value);
        break;
      }
      case Token::VarX:
        take();
        p.terms_.emplace(std::pair<unsigned, unsigned>{1, 0}, Int(1));
        break;
      case Token::VarY:
        take();
        p.terms_.emplace(std::pair<unsigned, unsigned>{0, 1}, Int(1));
        break;
      case Token::LParen: {
        take();
        p = expr();
        if (peek().kind != Token::RParen)
          throw parse_error("expected ')'", peek().pos, {"')'"});
        take();
        break;
      }
      default:
        throw parse_error(std::string("expected a value, found ") +
                              token_name(t.kind),
                          t.pos, {"integer", "x", "y", "'('"});
    }
    if (peek().kind == Token::Caret) {
      take();
      if (peek().kind != Token::Integer)
        throw parse_error("expected a nonnegative integer exponent",
                          peek().pos, {"integer"});
      Token e = take();
      if (e.value > 4096)
        throw parse_error("exponent too large (limit 4096)", e.pos,
                          {"integer"});
      p = p.pow(e.value.convert_to<unsigned>());
    }
    return p;
  }
};

}  // namespace

PolyExpr PolyExpr::parse(const std::string& text) {
  return Parser(text).run();
}

bool PolyExpr::uses_x() const {
  for (const auto& [key, c] : terms_)
    if (key.first > 0) return true;
  return false;
}

bool PolyExpr::uses_y() const {
  for (const auto& [key, c] : terms_)
    if (key.second > 0) return true;
  return false;
}

UniPoly PolyExpr::to_unipoly() const {
  if (uses_y())
    throw precondition_error("polynomial must be univariate in x");
  std::vector<Int> c;
  for (const auto& [key, coeff] : terms_) {
    if (c.size() <= key.first) c.resize(key.first + 1, Int(0));
    c[key.first] = coeff;
  }
  return UniPoly(std::move(c));
}

FieldPoly PolyExpr::to_fieldpoly(const Field& field) const {
  if (uses_y())
    throw precondition_error("substitution polynomial must be univariate in x");
  std::vector<Int> c;
  for (const auto& [key, coeff] : terms_) {
    if (c.size() <= key.first) c.resize(key.first + 1, Int(0));
    c[key.first] = coeff;
  }
  return FieldPoly::from_ints(field, std::move(c));
}

BiPoly PolyExpr::to_bipoly(const Field& field) const {
  std::vector<std::vector<Int>> rows;
  for (const auto& [key, coeff] : terms_) {
    if (rows.size() <= key.second) rows.resize(key.second + 1);
    auto& row = rows[key.second];
    if (row.size() <= key.first) row.resize(key.first + 1, Int(0));
    row[key.first] = coeff;
  }
  std::vector<FieldPoly> cy;
  cy.reserve(rows.size());
  for (auto& row : rows) cy.push_back(FieldPoly::from_ints(field, std::move(row)));
  return BiPoly(field, std::move(cy));
}

std::string PolyExpr::str() const {
  if (terms_.empty()) return "0";
  if (!uses_y()) return to_unipoly().str();
  return to_bipoly(Field::rationals()).str();
}

}  // namespace polycert::cli
