#pragma once

// Named equations and Lax pairs, as text in the expression grammar.

#include "sympma/grassmann.hpp"
#include "sympma/laxpair.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sma {

struct BuiltinEquation {
  std::string name;
  int n;
  std::string expression;
  std::string description;
};

const std::vector<BuiltinEquation>& builtin_equations();
/// Throws Error(PreconditionViolation) for an unknown name.
const BuiltinEquation& find_builtin(std::string_view name);
MAEquation builtin_equation(std::string_view name);

struct BuiltinLaxPair {
  std::string name;
  int n;
  std::string equation;
  std::string x1;
  std::string x2;
  LaxMode mode;
};

const std::vector<BuiltinLaxPair>& builtin_lax_pairs();
const BuiltinLaxPair& find_builtin_lax_pair(std::string_view name);

struct ParsedLaxPair {
  Polynomial equation;  ///< over jet_vars(n)
  LaxField x1;
  LaxField x2;
};

/// Parses the equation over the jet ring and the fields over
/// lax_input_vars(n).
ParsedLaxPair parse_lax_pair(int n, std::string_view equation, std::string_view x1, std::string_view x2);

}  // namespace sma
