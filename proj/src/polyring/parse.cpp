#include "planesing/polyring/parse.hpp"

#include <cctype>
#include <optional>

namespace planesing {

namespace {

struct Token {
  enum class Kind { Number, Var, Gen, Op, End };
  Kind kind;
  std::string text;
  size_t pos;
};

[[noreturn]] void fail(const std::string& msg, size_t pos) {
  throw Error(ErrorCode::ParseError, msg + " at position " + std::to_string(pos));
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == 'z') {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) fail("generator symbol needs a level, e.g. z1", i);
      out.push_back({Token::Kind::Gen, std::string(s.substr(i + 1, j - i - 1)), i});
      i = j;
    } else if (std::string_view("xytXYZ").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Var, std::string(1, c), i});
      ++i;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, std::string(1, c), i});
      ++i;
    } else {
      fail(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, FieldPtr field, VarSet vars)
      : toks_(std::move(toks)), field_(std::move(field)), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  const Token& take() { return toks_[idx_++]; }

  MultiPoly expr() {
    MultiPoly acc = signed_term();
    while (is_op("+") || is_op("-")) {
      const bool minus = take().text == "-";
      MultiPoly t = signed_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly signed_term() {
    if (is_op("-")) {
      take();
      return -signed_term();
    }
    if (is_op("+")) {
      take();
      return signed_term();
    }
    return term();
  }

  bool starts_primary() const {
    const auto k = peek().kind;
    return k == Token::Kind::Number || k == Token::Kind::Var || k == Token::Kind::Gen || is_op("(");
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (is_op("*")) {
        take();
        acc = acc * factor();
      } else if (is_op("/")) {
        const size_t pos = take().pos;
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants", pos);
        acc = acc * d.constant_term().inverse();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  // An operand after '*' or '/' may carry its own sign, as in "x*-y".
  MultiPoly factor() {
    if (is_op("-")) {
      take();
      return -factor();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (!is_op("^")) return base;
    take();
    if (peek().kind != Token::Kind::Number) fail("exponent must be a nonnegative integer", peek().pos);
    const Token& t = take();
    if (t.text.size() > 6) fail("exponent too large", t.pos);
    if (is_op("^")) fail("chained exponents are ambiguous; add parentheses", peek().pos);
    return base.pow(std::stoi(t.text));
  }

  MultiPoly primary() {
    const Token& t = take();
    switch (t.kind) {
      case Token::Kind::Number:
        return MultiPoly::constant(Scalar::from_mpz(field_, mpz_class(t.text)), vars_);
      case Token::Kind::Var: return MultiPoly::variable(field_, vars_, var_index(t));
      case Token::Kind::Gen: return MultiPoly::constant(generator(t), vars_);
      case Token::Kind::Op:
        if (t.text == "(") {
          MultiPoly inner = expr();
          if (!is_op(")")) fail("missing ')'", peek().pos);
          take();
          return inner;
        }
        fail("unexpected '" + t.text + "'", t.pos);
      case Token::Kind::End: fail("unexpected end of input", t.pos);
    }
    fail("unexpected token", t.pos);
  }

  int var_index(const Token& t) const {
    const char c = t.text[0];
    switch (c) {
      case 'x':
      case 'X': return 0;
      case 'y':
      case 't':
      case 'Y': return 1;
      default: return 2;
    }
  }

  Scalar generator(const Token& t) const {
    const int level = std::stoi(t.text);
    if (level < 1 || level > field_->level())
      fail("field " + field_->to_string() + " has no generator z" + t.text, t.pos);
    FieldPtr f = field_;
    while (f->level() > level) f = f->base();
    return Scalar::generator(f).embed(field_);
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
  FieldPtr field_;
  VarSet vars_;
};

VarSet detect_varset(const std::vector<Token>& toks, VarSet fallback) {
  std::string seen;
  for (const auto& t : toks) {
    if (t.kind == Token::Kind::Var && seen.find(t.text) == std::string::npos) seen += t.text;
  }
  if (seen.empty()) return fallback;
  const bool upper = seen.find_first_of("XYZ") != std::string::npos;
  const bool lower = seen.find_first_of("xyt") != std::string::npos;
  if (upper && lower) throw Error(ErrorCode::ParseError, "mixed affine and projective variables: " + seen);
  if (upper) return VarSet::Projective;
  const bool has_y = seen.find('y') != std::string::npos, has_t = seen.find('t') != std::string::npos;
  if (has_y && has_t) throw Error(ErrorCode::ParseError, "mixed affine (x,y) and chart (x,t) variables");
  if (has_t) return VarSet::Chart;
  return VarSet::Affine;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, const FieldPtr& field, VarSet fallback) {
  std::vector<Token> toks = tokenize(text);
  if (toks.size() == 1) throw Error(ErrorCode::ParseError, "empty polynomial");
  const VarSet vars = detect_varset(toks, fallback);
  return Parser(std::move(toks), field, vars).parse();
}

}  // namespace planesing
