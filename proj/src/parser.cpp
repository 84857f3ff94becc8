#include "sympma/parser.hpp"

#include <algorithm>
#include <cctype>

namespace sma {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vars& ring, int hess_n) : text_(text), ring_(ring), hess_n_(hess_n) {}

  Polynomial parse() {
    Polynomial p = expression(0);
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError,
                why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static int binding(char op) {
    switch (op) {
      case '+':
      case '-': return 10;
      case '*': return 20;
      case '^': return 40;
      default: return -1;
    }
  }

  Polynomial expression(int min_binding) {
    Polynomial left = prefix();
    while (true) {
      const char op = peek();
      const int bp = binding(op);
      if (bp < 0 || bp <= min_binding) break;
      ++pos_;
      if (op == '^') {
        left = left.pow(exponent());
        continue;
      }
      const Polynomial right = expression(bp);
      if (op == '+') left += right;
      else if (op == '-') left -= right;
      else left = left * right;
    }
    return left;
  }

  unsigned exponent() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 3) fail("exponent too large");
    unsigned e = static_cast<unsigned>(std::stoul(digits));
    if (peek() == '^') {
      ++pos_;
      const unsigned next = exponent();
      unsigned total = 1;
      for (unsigned i = 0; i < next; ++i) total *= e;
      e = total;
    }
    return e;
  }

  Polynomial prefix() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      ++pos_;
      return -expression(30);
    }
    if (c == '+') {
      ++pos_;
      return expression(30);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression(0);
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    const std::string_view literal = text_.substr(start, pos_ - start);
    try {
      return Polynomial::constant(ring_, parse_rational(literal));
    } catch (const Error&) {
      pos_ = start;
      fail("bad number '" + std::string(literal) + "'");
    }
  }

  Polynomial name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string word(text_.substr(start, pos_ - start));
    if (word == "HESS") {
      if (hess_n_ <= 0) {
        pos_ = start;
        fail("HESS is not available here");
      }
      return poly_determinant(symbolic_hessian(hess_n_)).rebase(ring_);
    }
    if (word.size() >= 3 && word.size() <= 4 && word[0] == 'u' &&
        std::all_of(word.begin() + 1, word.end(), [](char ch) { return ch >= '1' && ch <= '9'; })) {
      std::sort(word.begin() + 1, word.end());
    }
    const int index = find_var(ring_, word);
    if (index < 0) {
      pos_ = start;
      fail("unknown name '" + word + "'");
    }
    return Polynomial::variable(ring_, static_cast<std::size_t>(index));
  }

  std::string_view text_;
  const Vars& ring_;
  int hess_n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const Vars& ring, int hess_n) {
  return Parser(text, ring, hess_n).parse();
}

MAEquation parse_equation(std::string_view text, int n) {
  require_supported_dimension(n);
  const Polynomial p = parse_polynomial(text, hessian_vars(n), n);
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the expression is identically zero");
  if (decompose(p, minor_basis(n))) return MAEquation::from_polynomial(n, p);
  const MinorBasis& basis = minor_basis(n);
  Polynomial residual = p;
  for (Index k = 0; k < basis.size(); ++k) {
    const Rational c = residual.coefficient(basis.pivot[k]);
    if (!c.is_zero()) residual -= basis.polys[k] * c;
  }
  std::string monomials;
  for (const auto& [m, c] : residual.terms()) {
    if (!monomials.empty()) monomials += ", ";
    monomials += format_monomial(hessian_vars(n), m);
  }
  throw Error(ErrorCode::NotInSpan, "not a combination of Hessian minors; offending monomials: " + monomials);
}

}  // namespace sma
