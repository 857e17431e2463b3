#pragma once

#include <memory>
#include <string>
#include <vector>

#include "moyal/errors.hpp"
#include "moyal/hamiltonian.hpp"
#include "moyal/ordering.hpp"

namespace moyal {

/// AST for Hamiltonian expressions. Products are kept in source order so
/// that operator-mode lowering is noncommutative.
struct HamiltonianExpr {
  enum class Kind {
    number,      // rational literal
    imag_unit,   // i
    sym_x,       // X
    sym_p,       // P
    sym_g,       // G
    param,       // named rational parameter
    sum,         // args with signs
    product,     // args with div flags (division only by constants)
    power,       // args[0] ^ exponent
    anticomm,    // {args[0], args[1]}
    symmetric,   // S(m, n)
  };

  Kind kind = Kind::number;
  Rational value{0};
  std::string name;
  std::vector<std::shared_ptr<const HamiltonianExpr>> args;
  std::vector<int> signs;      // sum: +1/-1 per argument
  std::vector<bool> divides;   // product: true if the factor divides
  int exponent = 0;            // power
  int sm = 0, sn = 0;          // symmetric
  int line = 1, column = 1;
};

using ExprPtr = std::shared_ptr<const HamiltonianExpr>;

/// Parses UTF-8 text; throws SyntaxError with line/column and the expected
/// token set. Precedence: ^ over implicit/explicit multiplication over ±;
/// juxtaposition multiplies.
ExprPtr parse(const std::string& text);

/// Lowers to a normal-ordered operator polynomial (noncommutative product).
/// Unknown parameter names raise SyntaxError pointing at their position.
OperatorPoly lower_to_operator(const ExprPtr& expr, const ParamMap& params);

/// Lowers with commuting X, P, taking the result as the Weyl symbol.
PhasePoly lower_to_symbol(const ExprPtr& expr, const ParamMap& params);

enum class InputMode { operator_mode, symbol_mode };

/// parse + lower + split into H = h0 + i g h1.
HamiltonianSplit parse_hamiltonian(const std::string& text, const ParamMap& params,
                                   InputMode mode = InputMode::operator_mode);

}  // namespace moyal
