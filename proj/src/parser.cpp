#include "moyal/parser.hpp"

#include <cctype>

namespace moyal {

namespace {

struct Token {
  enum class Kind { number, ident, op, end } kind = Kind::end;
  std::string text;
  int line = 1, column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        num += text_[pos_];
        bump();
      }
      if (pos_ < text_.size() && text_[pos_] == '.')
        throw SyntaxError("decimal literals are not allowed; use exact rationals like 3/2",
                          current_.line, current_.column, "integer");
      current_.kind = Token::Kind::number;
      current_.text = num;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        name += text_[pos_];
        bump();
      }
      current_.kind = Token::Kind::ident;
      current_.text = name;
      return;
    }
    static const std::string ops = "+-*/^(){},";
    if (ops.find(c) != std::string::npos) {
      current_.kind = Token::Kind::op;
      current_.text = std::string(1, c);
      bump();
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    if (lex_.peek().kind != Token::Kind::end)
      throw SyntaxError("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().line,
                        lex_.peek().column, "end of input");
    return e;
  }

 private:
  static std::shared_ptr<HamiltonianExpr> node(HamiltonianExpr::Kind kind, const Token& at) {
    auto n = std::make_shared<HamiltonianExpr>();
    n->kind = kind;
    n->line = at.line;
    n->column = at.column;
    return n;
  }

  bool at_op(const char* text) const {
    return lex_.peek().kind == Token::Kind::op && lex_.peek().text == text;
  }

  Token expect_op(const char* text) {
    if (!at_op(text))
      throw SyntaxError("expected '" + std::string(text) + "', found '" + lex_.peek().text + "'",
                        lex_.peek().line, lex_.peek().column, text);
    return lex_.next();
  }

  ExprPtr parse_sum() {
    Token first = lex_.peek();
    auto sum = node(HamiltonianExpr::Kind::sum, first);
    int sign = 1;
    if (at_op("+") || at_op("-")) {
      sign = at_op("-") ? -1 : 1;
      lex_.next();
    }
    sum->args.push_back(parse_term());
    sum->signs.push_back(sign);
    while (at_op("+") || at_op("-")) {
      sign = at_op("-") ? -1 : 1;
      lex_.next();
      sum->args.push_back(parse_term());
      sum->signs.push_back(sign);
    }
    if (sum->args.size() == 1 && sum->signs[0] == 1) return sum->args[0];
    return sum;
  }

  bool starts_factor() const {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::number || t.kind == Token::Kind::ident) return true;
    return t.kind == Token::Kind::op && (t.text == "(" || t.text == "{");
  }

  ExprPtr parse_term() {
    Token first = lex_.peek();
    auto prod = node(HamiltonianExpr::Kind::product, first);
    prod->args.push_back(parse_factor());
    prod->divides.push_back(false);
    while (true) {
      if (at_op("*") || at_op("/")) {
        bool div = at_op("/");
        lex_.next();
        prod->args.push_back(parse_factor());
        prod->divides.push_back(div);
      } else if (starts_factor()) {  // juxtaposition
        prod->args.push_back(parse_factor());
        prod->divides.push_back(false);
      } else {
        break;
      }
    }
    if (prod->args.size() == 1) return prod->args[0];
    return prod;
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (at_op("^")) {
      Token caret = lex_.next();
      const Token& t = lex_.peek();
      if (t.kind != Token::Kind::number)
        throw SyntaxError("exponent must be a nonnegative integer literal", t.line, t.column,
                          "integer");
      Token num = lex_.next();
      auto pw = node(HamiltonianExpr::Kind::power, caret);
      pw->args.push_back(base);
      pw->exponent = std::stoi(num.text);
      return pw;
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::number) {
      Token num = lex_.next();
      auto n = node(HamiltonianExpr::Kind::number, num);
      n->value = rational_from_string(num.text);
      return n;
    }
    if (t.kind == Token::Kind::ident) {
      Token name = lex_.next();
      if (name.text == "i") return node(HamiltonianExpr::Kind::imag_unit, name);
      if (name.text == "X") return node(HamiltonianExpr::Kind::sym_x, name);
      if (name.text == "P") return node(HamiltonianExpr::Kind::sym_p, name);
      if (name.text == "G") return node(HamiltonianExpr::Kind::sym_g, name);
      if (name.text == "S" && at_op("(")) {
        expect_op("(");
        auto read_int = [this]() {
          const Token& tok = lex_.peek();
          if (tok.kind != Token::Kind::number)
            throw SyntaxError("S(m,n) needs integer arguments", tok.line, tok.column, "integer");
          return std::stoi(lex_.next().text);
        };
        auto s = node(HamiltonianExpr::Kind::symmetric, name);
        s->sm = read_int();
        expect_op(",");
        s->sn = read_int();
        expect_op(")");
        return s;
      }
      auto p = node(HamiltonianExpr::Kind::param, name);
      p->name = name.text;
      return p;
    }
    if (at_op("(")) {
      lex_.next();
      ExprPtr inner = parse_sum();
      expect_op(")");
      return inner;
    }
    if (at_op("{")) {
      Token brace = lex_.next();
      auto ac = node(HamiltonianExpr::Kind::anticomm, brace);
      ac->args.push_back(parse_sum());
      expect_op(",");
      ac->args.push_back(parse_sum());
      expect_op("}");
      return ac;
    }
    throw SyntaxError("expected a number, symbol, '(' or '{', found '" +
                          (t.kind == Token::Kind::end ? "end of input" : t.text) + "'",
                      t.line, t.column, "number|symbol|(|{");
  }

  Lexer lex_;
};

// Shared lowering skeleton; Algebra supplies the concrete ring.
template <typename Algebra>
typename Algebra::Value lower(const HamiltonianExpr& e, const ParamMap& params) {
  using Value = typename Algebra::Value;
  switch (e.kind) {
    case HamiltonianExpr::Kind::number:
      return Algebra::constant(GaussianRational(e.value));
    case HamiltonianExpr::Kind::imag_unit:
      return Algebra::constant(GaussianRational::imaginary_unit());
    case HamiltonianExpr::Kind::sym_x:
      return Algebra::x();
    case HamiltonianExpr::Kind::sym_p:
      return Algebra::p();
    case HamiltonianExpr::Kind::sym_g:
      return Algebra::g();
    case HamiltonianExpr::Kind::param: {
      auto it = params.find(e.name);
      if (it == params.end())
        throw SyntaxError("unknown parameter '" + e.name + "'; pass --param " + e.name +
                              "=<rational>",
                          e.line, e.column);
      return Algebra::constant(GaussianRational(it->second));
    }
    case HamiltonianExpr::Kind::sum: {
      Value acc = Algebra::zero();
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        Value v = lower<Algebra>(*e.args[k], params);
        if (e.signs[k] < 0) v = Algebra::negate(v);
        acc = Algebra::add(acc, v);
      }
      return acc;
    }
    case HamiltonianExpr::Kind::product: {
      Value acc = Algebra::one();
      for (std::size_t k = 0; k < e.args.size(); ++k) {
        Value v = lower<Algebra>(*e.args[k], params);
        if (e.divides[k]) {
          GaussianRational c;
          if (!Algebra::as_constant(v, c) || c.is_zero())
            throw SyntaxError("division is only defined by nonzero rational constants", e.args[k]->line,
                              e.args[k]->column);
          acc = Algebra::scale(acc, GaussianRational(1) / c);
        } else {
          acc = Algebra::mul(acc, v);
        }
      }
      return acc;
    }
    case HamiltonianExpr::Kind::power: {
      Value base = lower<Algebra>(*e.args[0], params);
      Value acc = Algebra::one();
      for (int k = 0; k < e.exponent; ++k) acc = Algebra::mul(acc, base);
      return acc;
    }
    case HamiltonianExpr::Kind::anticomm: {
      Value a = lower<Algebra>(*e.args[0], params);
      Value b = lower<Algebra>(*e.args[1], params);
      return Algebra::add(Algebra::mul(a, b), Algebra::mul(b, a));
    }
    case HamiltonianExpr::Kind::symmetric:
      return Algebra::symmetric(e.sm, e.sn);
  }
  throw std::logic_error("unhandled expression node");
}

struct OperatorAlgebra {
  using Value = OperatorPoly;
  static Value zero() { return OperatorPoly(); }
  static Value one() { return OperatorPoly::one(); }
  static Value constant(const GaussianRational& c) { return OperatorPoly(c); }
  static Value x() { return OperatorPoly::x(); }
  static Value p() { return OperatorPoly::p(); }
  static Value g() { return OperatorPoly::g(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return op_mul(a, b); }
  static Value negate(const Value& a) { return -a; }
  static Value scale(const Value& a, const GaussianRational& c) { return a * c; }
  static Value symmetric(int m, int n) { return symmetrized_product(m, n); }
  static bool as_constant(const Value& v, GaussianRational& out) {
    if (v.is_zero()) {
      out = GaussianRational(0);
      return true;
    }
    if (v.term_count() != 1) return false;
    const auto& [m, c] = *v.terms().begin();
    if (!(m == OperatorMonomial{})) return false;
    out = c;
    return true;
  }
};

struct SymbolAlgebra {
  using Value = PhasePoly;
  static Value zero() { return PhasePoly(); }
  static Value one() { return PhasePoly::one(); }
  static Value constant(const GaussianRational& c) { return PhasePoly(c); }
  static Value x() { return PhasePoly::x(); }
  static Value p() { return PhasePoly::p(); }
  static Value g() { return PhasePoly::g(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value negate(const Value& a) { return -a; }
  static Value scale(const Value& a, const GaussianRational& c) { return a * c; }
  static Value symmetric(int m, int n) { return PhasePoly::monomial({n, m, 0}); }
  static bool as_constant(const Value& v, GaussianRational& out) {
    if (!v.is_constant()) return false;
    out = v.constant_term();
    return true;
  }
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

OperatorPoly lower_to_operator(const ExprPtr& expr, const ParamMap& params) {
  return lower<OperatorAlgebra>(*expr, params);
}

PhasePoly lower_to_symbol(const ExprPtr& expr, const ParamMap& params) {
  return lower<SymbolAlgebra>(*expr, params);
}

HamiltonianSplit parse_hamiltonian(const std::string& text, const ParamMap& params,
                                   InputMode mode) {
  ExprPtr ast = parse(text);
  if (mode == InputMode::operator_mode)
    return split_operator(lower_to_operator(ast, params), params);
  return split_weyl_symbol(lower_to_symbol(ast, params), params);
}

}  // namespace moyal
