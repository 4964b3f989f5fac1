#ifndef POLYCERT_CLI_PARSE_HPP
#define POLYCERT_CLI_PARSE_HPP

#include <polycert/bivar.hpp>
#include <polycert/unipoly.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycert::cli {

// Polynomial expression error with the byte offset and the tokens that
// would have been accepted there.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, std::size_t position,
              std::vector<std::string> expected);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Expression grammar: integer literals, variables x and y, operators
// + - * ^ and parentheses; ^ takes a nonnegative integer literal;
// implicit multiplication is rejected; whitespace is ignored.
class PolyExpr {
 public:
  static PolyExpr parse(const std::string& text);

  bool uses_x() const;
  bool uses_y() const;
  bool is_zero() const { return terms_.empty(); }

  // Conversions; to_unipoly and to_fieldpoly require a y-free expression.
  UniPoly to_unipoly() const;
  FieldPoly to_fieldpoly(const Field& field) const;
  BiPoly to_bipoly(const Field& field) const;

  // Canonical text: univariate descending powers, bivariate ascending in
  // y with parenthesized x-coefficients.  Reparses to the same value.
  std::string str() const;

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

 private:
  // (x degree, y degree) -> coefficient, zero coefficients absent.
  std::map<std::pair<unsigned, unsigned>, Int> terms_;

  friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b);
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b);
  PolyExpr pow(unsigned e) const;
  friend class Parser;
};

}  // namespace polycert::cli

#endif  // POLYCERT_CLI_PARSE_HPP
