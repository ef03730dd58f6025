#include "hartogs/dsl.hpp"

#include <cctype>

namespace hartogs {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Ast parse_expr() {
    skip_ws();
    Ast ast;
    if (peek_word("hartogs")) {
      ast.is_hartogs = true;
      expect_word("hartogs");
      expect('(');
      const char* labels[4] = {"X", "X0", "Y", "Y0"};
      for (int i = 0; i < 4; ++i) {
        if (i) expect(',');
        expect_word(labels[i]);
        expect('=');
        ast.parts.push_back(parse_domain());
      }
      expect(')');
    } else {
      ast.domain = parse_domain();
    }
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
    return ast;
  }

 private:
  DomainAst parse_domain() {
    DomainAst first = parse_atom();
    skip_ws();
    if (!peek_word("x")) return first;
    DomainAst prod;
    prod.kind = DomainAst::Kind::Product;
    prod.factors.push_back(std::move(first));
    while (peek_word("x")) {
      expect_word("x");
      prod.factors.push_back(parse_atom());
      skip_ws();
    }
    return prod;
  }

  DomainAst parse_atom() {
    skip_ws();
    DomainAst d;
    if (peek_word("disc")) {
      expect_word("disc");
      expect('(');
      d.kind = DomainAst::Kind::Disc;
      d.a = parse_num();
      expect(')');
    } else if (peek_word("annulus")) {
      expect_word("annulus");
      expect('(');
      d.kind = DomainAst::Kind::Annulus;
      d.a = parse_num();
      expect(',');
      d.b = parse_num();
      expect(')');
    } else {
      fail("expected 'disc', 'annulus' or 'hartogs'");
    }
    return d;
  }

  Rational parse_num() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      advance();
    }
    long long ip = parse_digits();
    Rational r(ip);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      advance();
      long long den = parse_digits();
      if (den == 0) fail("zero denominator");
      r = Rational(ip, den);
    } else if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      long long num = ip;
      long long den = 1;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected digits after decimal point");
      }
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        num = num * 10 + (text_[pos_] - '0');
        den *= 10;
        advance();
      }
      r = Rational(num, den);
    }
    return neg ? -r : r;
  }

  long long parse_digits() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      advance();
    }
    return v;
  }

  bool peek_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t end = pos_ + w.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])))) {
      return false;
    }
    return true;
  }

  void expect_word(const std::string& w) {
    if (!peek_word(w)) fail("expected '" + w + "'");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
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

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Ast parse(const std::string& text) { return Parser(text).parse_expr(); }

std::string print(const DomainAst& d) {
  switch (d.kind) {
    case DomainAst::Kind::Disc:
      return "disc(" + to_string(d.a) + ")";
    case DomainAst::Kind::Annulus:
      return "annulus(" + to_string(d.a) + ", " + to_string(d.b) + ")";
    case DomainAst::Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i) s += " x ";
        s += print(d.factors[i]);
      }
      return s;
    }
  }
  return "";
}

std::string print(const Ast& ast) {
  if (!ast.is_hartogs) return print(ast.domain);
  return "hartogs(X=" + print(ast.parts[0]) + ", X0=" + print(ast.parts[1]) +
         ", Y=" + print(ast.parts[2]) + ", Y0=" + print(ast.parts[3]) + ")";
}

ReinhardtBoxDomain to_domain(const DomainAst& d) {
  ReinhardtBoxDomain out;
  switch (d.kind) {
    case DomainAst::Kind::Disc:
      if (d.a <= Rational(0)) throw ValidationError("radius must be positive");
      out.factors.push_back(Factor1D::disc(Radius::finite(d.a)));
      break;
    case DomainAst::Kind::Annulus:
      if (d.a <= Rational(0)) throw ValidationError("radius must be positive");
      if (!(d.a < d.b)) throw ValidationError("annulus requires inner < outer");
      out.factors.push_back(
          Factor1D::annulus(Radius::finite(d.a), Radius::finite(d.b)));
      break;
    case DomainAst::Kind::Product:
      for (const DomainAst& f : d.factors) {
        ReinhardtBoxDomain sub = to_domain(f);
        out.factors.insert(out.factors.end(), sub.factors.begin(),
                           sub.factors.end());
      }
      break;
  }
  return out;
}

HartogsFigure to_figure(const Ast& ast) {
  if (!ast.is_hartogs) throw ValidationError("expected a hartogs(...) expression");
  HartogsFigure h{to_domain(ast.parts[0]), to_domain(ast.parts[1]),
                  to_domain(ast.parts[2]), to_domain(ast.parts[3])};
  h.check_valid();
  return h;
}

}  // namespace hartogs
