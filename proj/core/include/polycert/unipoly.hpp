#ifndef POLYCERT_UNIPOLY_HPP
#define POLYCERT_UNIPOLY_HPP

#include <polycert/rat.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace polycert {

// Dense integer-coefficient univariate polynomial.  coeff(i) is the
// coefficient of X^i; the stored vector never has trailing zeros, so
// degree() is size-1 (-1 for the zero polynomial).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Int> coeffs);
  UniPoly(std::initializer_list<long long> coeffs);  // ascending powers
  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Int& c);
  static UniPoly monomial(const Int& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;
  const Int& constant_term() const;

  Int operator()(const Int& x) const;  // Horner
  Rat operator()(const Rat& x) const;

  UniPoly derivative() const;
  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator*(const Int& s) const;
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  // Exact division in Z[X]: returns f/g when the division leaves no
  // remainder and every quotient coefficient is an integer.
  std::optional<UniPoly> divide_exact(const UniPoly& g) const;

  Int content() const;         // gcd of coefficients (0 for zero poly)
  UniPoly primitive_part() const;  // content removed, leading coeff > 0

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Int> c_;
  void trim();
};

// Rational-coefficient polynomial; the output type of shift().
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  static RatPoly from(const UniPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;

  // Multiplies by the lcm of denominators and divides out the content;
  // roots are unchanged.
  UniPoly cleared() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  std::vector<Rat> c_;
  void trim();
};

// The exact rational roots of f (f != 0), ascending, without multiplicity.
// Candidates are +-p/q with p | constant term and q | leading coefficient,
// each verified by exact evaluation.
std::vector<Rat> rational_roots(const UniPoly& f);

// Exact test |a_n| R^n > sum_{i<n} |a_i| R^i.  True forces every complex
// root of f to have modulus strictly below R.  Requires deg f >= 1, R > 0.
bool rouche_all_roots_inside(const UniPoly& f, const Rat& radius);

// |a_n| > 2|a_{n-1}| + 4|a_{n-2}| + ... + 2^n |a_0|, the cleared form of
// the radius-1/2 dominance test above.
bool leading_coeff_dominates_half(const UniPoly& f);

// B = 1 + max_{i<n} |a_i| / |a_n|; all roots have modulus < B (strict).
Rat cauchy_root_bound(const UniPoly& f);

// 0 <= a_0 <= a_1 <= ... <= a_n.  True implies all roots have modulus <= 1
// (not strict).
bool is_enestrom_kakeya(const UniPoly& f);

enum class Stability { Stable, NotStable, Inconclusive };
std::string to_string(Stability s);

// Exact Routh table.  Stable: all roots have negative real part.
// NotStable: a first-column sign change (at least one root with
// nonnegative real part).  Inconclusive: a zero pivot or zero row; no
// epsilon perturbation is applied.
Stability routh_hurwitz(const RatPoly& f);

// f(X + c) by exact Taylor shift.
RatPoly shift(const UniPoly& f, const Rat& c);

// X^n f(1/X).  Requires a nonzero constant term.
UniPoly reciprocal(const UniPoly& f);

}  // namespace polycert

#endif  // POLYCERT_UNIPOLY_HPP
