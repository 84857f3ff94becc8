#include "sympma/builtins.hpp"

#include "sympma/parser.hpp"

namespace sma {

const std::vector<BuiltinEquation>& builtin_equations() {
  static const std::vector<BuiltinEquation> table = {
      {"linear-wave", 4, "u11 - u22 - u33 - u44", "linear wave equation"},
      {"second-heavenly", 4, "u13 + u24 + u11*u22 - u12^2", "second heavenly equation"},
      {"modified-heavenly", 4, "u13 - u12*u44 + u14*u24", "modified heavenly equation"},
      {"first-heavenly", 4, "u13*u24 - u14*u23 - 1", "first heavenly equation"},
      {"husain", 4, "u11 + u22 + u13*u24 - u14*u23", "Husain equation"},
      {"general-heavenly", 4, "u12*u34 + 2*u13*u24 - 3*u14*u23",
       "general heavenly equation, (alpha, beta, gamma) = (1, 2, -3)"},
      {"hess4", 4, "HESS - 1", "Hess u = 1 in four dimensions"},
      {"laplace4", 4, "u11 + u22 + u33 + u44", "4D Laplace equation"},
      {"hess3", 3, "HESS - 1", "Hess u = 1 in three dimensions"},
      {"hess3-plus", 3, "HESS - u11 - u22 - u33", "Hess u = u11 + u22 + u33"},
      {"hess3-mixed", 3, "HESS - u11 - u22 + u33", "Hess u = u11 + u22 - u33"},
      {"laplace3", 3, "u11 + u22 + u33", "3D Laplace equation"},
      {"kahler", 3, "u33*(1 + u11 + u22) - u13^2 - u23^2 - 1",
       "Kahler potential evolution, t = x3, epsilon = 1"},
  };
  return table;
}

const BuiltinEquation& find_builtin(std::string_view name) {
  for (const auto& b : builtin_equations())
    if (b.name == name) return b;
  throw Error(ErrorCode::PreconditionViolation, "unknown builtin equation '" + std::string(name) + "'");
}

MAEquation builtin_equation(std::string_view name) {
  const BuiltinEquation& b = find_builtin(name);
  return parse_equation(b.expression, b.n);
}

const std::vector<BuiltinLaxPair>& builtin_lax_pairs() {
  static const std::vector<BuiltinLaxPair> table = {
      {"second-heavenly", 4, "u13 + u24 + u11*u22 - u12^2", "d4 + u11*d2 - u12*d1 + lam*d1",
       "d3 - u12*d2 + u22*d1 - lam*d2", LaxMode::Strict},
      {"modified-heavenly", 4, "u13 - u12*u44 + u14*u24", "u14*d2 - u12*d4 + lam*d1",
       "-d3 + u44*d2 - u24*d4 + lam*d4", LaxMode::Strict},
      {"first-heavenly", 4, "u13*u24 - u14*u23 - 1", "u13*d4 - u14*d3 + lam*d1", "-u23*d4 + u24*d3 - lam*d2",
       LaxMode::Strict},
      {"husain", 4, "u11 + u22 + u13*u24 - u14*u23", "d2 + u13*d4 - u14*d3 + lam*d1",
       "d1 - u23*d4 + u24*d3 - lam*d2", LaxMode::Strict},
      {"general-heavenly", 4, "u12*u34 + 2*u13*u24 - 3*u14*u23", "u34*d1 - u13*d4 - 3*lam*(u34*d1 - u14*d3)",
       "u23*d4 - u34*d2 + 2*lam*(u34*d2 - u24*d3)", LaxMode::ModSpan},
      {"second-heavenly-6d", 6, "u15 + u26 + u13*u24 - u14*u23", "d6 + u13*d4 - u14*d3 + lam*d1",
       "d5 - u23*d4 + u24*d3 - lam*d2", LaxMode::Strict},
  };
  return table;
}

const BuiltinLaxPair& find_builtin_lax_pair(std::string_view name) {
  for (const auto& b : builtin_lax_pairs())
    if (b.name == name) return b;
  throw Error(ErrorCode::PreconditionViolation, "unknown builtin Lax pair '" + std::string(name) + "'");
}

ParsedLaxPair parse_lax_pair(int n, std::string_view equation, std::string_view x1, std::string_view x2) {
  const Vars& input = lax_input_vars(n);
  ParsedLaxPair pair;
  pair.equation = parse_polynomial(equation, jet_vars(n), n);
  pair.x1 = LaxField::from_linear_form(n, parse_polynomial(x1, input));
  pair.x2 = LaxField::from_linear_form(n, parse_polynomial(x2, input));
  return pair;
}

}  // namespace sma
