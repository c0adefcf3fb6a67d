#include "gradsym/expr_parser.hpp"

#include <cctype>
#include <vector>

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

constexpr int kMaxExponent = 64;

enum class Tok { number, ident, op, end };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based within the parsed text
};

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> coords, int line, int column_offset)
      : coords_(coords), n_(static_cast<int>(coords.size())), line_(line), offset_(column_offset) {
    tokenize(text);
  }

  Form parse() {
    if (peek().kind == Tok::end) fail("empty expression", peek());
    Form f = sum();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'", peek());
    return f;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, line_, offset_ + at.column);
  }

 private:
  void tokenize(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
      const char c = s[i];
      const int col = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        tokens_.push_back({Tok::number, std::string(s.substr(i, j - i)), col});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        tokens_.push_back({Tok::ident, std::string(s.substr(i, j - i)), col});
        i = j;
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        tokens_.push_back({Tok::op, std::string(1, c), col});
        ++i;
      } else {
        throw ParseError(std::string("malformed token '") + c + "'", line_, offset_ + col);
      }
    }
    tokens_.push_back({Tok::end, "end of input", static_cast<int>(s.size()) + 1});
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at_op(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Tok::op && t.text[0] == c;
  }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  void expect(char c) {
    if (!at_op(c)) fail(std::string("expected '") + c + "'", peek());
    take();
  }

  Form sum() {
    Form out = product();
    while (at_op('+') || at_op('-')) {
      const bool minus = take().text[0] == '-';
      Form rhs = product();
      if (minus) out -= rhs; else out += rhs;
    }
    return out;
  }

  Form product() {
    Form out = unary();
    while (at_op('*') || at_op('/')) {
      const Token op = take();
      const Token& start = peek();
      Form rhs = unary();
      if (op.text[0] == '*') {
        out = wedge(out, rhs);
      } else {
        if (!is_function(rhs)) fail("division by a form of positive degree", start);
        if (rhs.is_zero()) fail("division by zero", start);
        out *= rhs.function_part().inverse();
      }
    }
    return out;
  }

  Form unary() {
    if (at_op('-')) {
      take();
      return -unary();
    }
    if (at_op('+')) {
      take();
      return unary();
    }
    return wedge_chain();
  }

  // '^' followed by an integer (optionally negative) is a power, otherwise a wedge.
  bool power_follows() const {
    if (!at_op('^')) return false;
    if (peek(1).kind == Tok::number) return true;
    return peek(1).kind == Tok::op && peek(1).text[0] == '-' && peek(2).kind == Tok::number;
  }

  Form wedge_chain() {
    Form out = power();
    while (at_op('^') && !power_follows()) {
      take();
      out = wedge(out, power());
    }
    return out;
  }

  Form power() {
    const Token& start = peek();
    Form base = primary();
    while (power_follows()) {
      take();
      bool negative = false;
      if (at_op('-')) {
        take();
        negative = true;
      }
      const Token& num = take();
      if (num.text.size() > 3 || std::stoi(num.text) > kMaxExponent)
        fail("exponent too large (limit " + std::to_string(kMaxExponent) + ")", num);
      const int e = std::stoi(num.text);
      if (!is_function(base)) fail("power of a form of positive degree", start);
      if (negative && base.is_zero()) fail("division by zero", start);
      if (base.is_zero()) {
        base = e == 0 ? Form(n_, Scalar(n_, Rational(1))) : Form(n_);
        continue;
      }
      base = Form(n_, base.function_part().pow(negative ? -e : e));
    }
    return base;
  }

  Form primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      take();
      return Form(n_, Scalar(n_, Rational(mpz_class(t.text))));
    }
    if (at_op('(')) {
      take();
      Form inner = sum();
      expect(')');
      return inner;
    }
    if (t.kind == Tok::ident) {
      const Token tok = take();
      if (const int i = coordinate(tok.text); i >= 0) return Form::coordinate(n_, i);
      if (tok.text == "d" && at_op('(')) {
        take();
        Form inner = sum();
        expect(')');
        return exterior_derivative(inner);
      }
      if (tok.text.size() > 1 && tok.text[0] == 'd') {
        if (const int i = coordinate(tok.text.substr(1)); i >= 0) return Form::dx(n_, i);
      }
      fail("unknown coordinate '" + tok.text + "'", tok);
    }
    fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
  }

  int coordinate(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
      if (coords_[i] == name) return i;
    return -1;
  }

  static bool is_function(const Form& f) {
    const auto ds = f.degrees();
    return ds.empty() || (ds.size() == 1 && ds[0] == 0);
  }

  std::span<const std::string> coords_;
  int n_;
  int line_;
  int offset_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form_expr(std::string_view text, std::span<const std::string> coords, int line, int column_offset) {
  Parser p(text, coords, line, column_offset);
  return p.parse();
}

Scalar parse_scalar_expr(std::string_view text, std::span<const std::string> coords, int line, int column_offset) {
  Form f = parse_form_expr(text, coords, line, column_offset);
  for (int p : f.degrees())
    if (p != 0) throw ParseError("expected a function, got a form of degree " + std::to_string(p), line, column_offset + 1);
  return f.function_part();
}

}  // namespace gradsym
