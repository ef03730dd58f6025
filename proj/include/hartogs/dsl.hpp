#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartogs/domains.hpp"

namespace hartogs {

/// Syntax error with 1-based position information.
struct ParseError : Error {
  int line;
  int column;
  ParseError(std::string msg, int line_, int column_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(column_)),
        line(line_),
        column(column_) {}
};

/// AST for the surface syntax. Grammar:
///   expr    := hartogs | domain
///   domain  := disc '(' num ')'
///            | annulus '(' num ',' num ')'
///            | domain ('x' domain)+
///   hartogs := 'hartogs' '(' 'X=' domain ',' 'X0=' domain ','
///                            'Y=' domain ',' 'Y0=' domain ')'
///   num     := fraction | decimal
/// Radii parse exactly as rationals; products are flattened left to right.
struct DomainAst {
  enum class Kind { Disc, Annulus, Product };

  Kind kind = Kind::Disc;
  Rational a;                      // disc radius / annulus inner
  Rational b;                      // annulus outer
  std::vector<DomainAst> factors;  // product only

  friend bool operator==(const DomainAst&, const DomainAst&) = default;
};

struct Ast {
  bool is_hartogs = false;
  DomainAst domain;                // when !is_hartogs
  std::vector<DomainAst> parts;    // X, X0, Y, Y0 when is_hartogs

  friend bool operator==(const Ast&, const Ast&) = default;
};

Ast parse(const std::string& text);

/// Canonical rendering; parse(print(ast)) == ast.
std::string print(const Ast& ast);
std::string print(const DomainAst& d);

/// Semantic checks happen here, after the parse.
ReinhardtBoxDomain to_domain(const DomainAst& d);
HartogsFigure to_figure(const Ast& ast);

}  // namespace hartogs
