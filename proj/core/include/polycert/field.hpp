#ifndef POLYCERT_FIELD_HPP
#define POLYCERT_FIELD_HPP

#include <polycert/rat.hpp>
#include <polycert/unipoly.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

// Coefficient field: the rationals or a prime field GF(p).  Elements are
// carried as Rat values; GF(p) elements are canonical integers in [0, p).
class Field {
 public:
  static Field rationals();
  static Field gfp(const Int& p);  // validates that p is prime

  bool is_rationals() const { return !p_.has_value(); }
  bool is_prime_field() const { return p_.has_value(); }
  const Int& modulus() const;

  Rat canon(const Rat& x) const;
  Rat from_int(const Int& n) const { return canon(Rat(n)); }
  Rat add(const Rat& x, const Rat& y) const { return canon(x + y); }
  Rat sub(const Rat& x, const Rat& y) const { return canon(x - y); }
  Rat mul(const Rat& x, const Rat& y) const { return canon(x * y); }
  Rat neg(const Rat& x) const { return canon(-x); }
  Rat inv(const Rat& x) const;
  Rat div(const Rat& x, const Rat& y) const { return mul(x, inv(y)); }

  std::string str() const;
  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::optional<Int> p_;
};

// Univariate polynomial over a Field; canonical (no trailing zeros).
class FieldPoly {
 public:
  explicit FieldPoly(Field field) : field_(std::move(field)) {}
  FieldPoly(Field field, std::vector<Rat> coeffs);
  static FieldPoly from_ints(const Field& field, std::vector<Int> coeffs);
  static FieldPoly constant(const Field& field, const Rat& c);
  static FieldPoly monomial(const Field& field, const Rat& c, std::size_t k);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& leading() const;
  bool is_one() const { return degree() == 0 && c_[0] == Rat(1); }

  FieldPoly operator-() const;
  friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  FieldPoly scaled(const Rat& s) const;
  friend bool operator==(const FieldPoly&, const FieldPoly&) = default;

  FieldPoly monic() const;
  FieldPoly derivative() const;
  // Field division with remainder: *this = q v + r, deg r < deg v.
  std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& v) const;
  std::optional<FieldPoly> divide_exact(const FieldPoly& v) const;
  FieldPoly mod(const FieldPoly& v) const { return divmod(v).second; }
  // (*this)^e mod m by binary exponentiation.
  FieldPoly pow_mod(const Int& e, const FieldPoly& m) const;

  std::string str(const std::string& var = "x") const;

  // Deterministic order: degree, then coefficients from the constant term
  // up.  Used to normalize factor lists.
  static bool less(const FieldPoly& a, const FieldPoly& b);

 private:
  Field field_;
  std::vector<Rat> c_;
  void trim();
  void check_same_field(const FieldPoly& o) const;
};

// Monic gcd by the Euclidean remainder sequence; over the rationals the
// sequence is run fraction-free on primitive integer parts.
FieldPoly poly_gcd(const FieldPoly& u, const FieldPoly& v);

struct FieldFactorization {
  Rat unit;
  std::vector<std::pair<FieldPoly, unsigned>> factors;  // monic irreducible

  FieldPoly multiply_out(const Field& field) const;
  bool is_irreducible() const {
    return factors.size() == 1 && factors[0].second == 1;
  }
  bool is_prime_power() const { return factors.size() == 1; }
};

inline constexpr std::uint64_t kGfpSplitSeed = 0x5eed5eed5eedULL;

// Complete factorization over GF(p): squarefree decomposition (with p-th
// power extraction), distinct-degree splitting, then equal-degree
// splitting driven by a fixed-seed generator.  Deterministic across runs.
FieldFactorization factor_gfp(const FieldPoly& f,
                              std::uint64_t seed = kGfpSplitSeed);

// Factorization over Q: clears denominators and content, then splits the
// primitive integer part completely with the interpolation oracle.
// Throws budget_error when the oracle budget runs out.
FieldFactorization factor_q(const FieldPoly& f,
                            std::uint64_t oracle_budget = 50'000'000);

// Dispatches on the field of f.
FieldFactorization factor_over_field(const FieldPoly& f,
                                     std::uint64_t oracle_budget = 50'000'000);

// One attainable divisor degree together with the exponent vector (indexed
// like FieldFactorization::factors) that realizes it.
struct DegreeWitness {
  int degree;
  std::vector<unsigned> exponents;
};

// Attainable degrees of unitary divisors: each irreducible factor enters
// either not at all or with its full exponent.  Sorted by degree.
std::vector<DegreeWitness> divisor_degrees_unitary(
    const FieldFactorization& f);

// Attainable degrees of admissible divisors d: gcd(d, f/d) must divide
// admissible_gcd.  Sorted by degree.  Throws budget_error beyond 2^20
// exponent vectors.
std::vector<DegreeWitness> divisor_degrees_admissible(
    const FieldFactorization& f, const FieldPoly& admissible_gcd);

}  // namespace polycert

#endif  // POLYCERT_FIELD_HPP
