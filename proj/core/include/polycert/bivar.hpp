#ifndef POLYCERT_BIVAR_HPP
#define POLYCERT_BIVAR_HPP

#include <polycert/certificate.hpp>
#include <polycert/field.hpp>

#include <optional>
#include <string>
#include <vector>

namespace polycert {

// Polynomial in Y whose coefficients are polynomials in X over a field.
// coeff_y(i) is the coefficient of Y^i; the top coefficient is nonzero.
class BiPoly {
 public:
  explicit BiPoly(Field field) : field_(std::move(field)) {}
  BiPoly(Field field, std::vector<FieldPoly> coeffs_by_y);

  const Field& field() const { return field_; }
  bool is_zero() const { return cy_.empty(); }
  int degree_y() const { return static_cast<int>(cy_.size()) - 1; }
  int degree_x() const;  // max degree over the coefficients (-1 if zero)
  FieldPoly coeff_y(std::size_t i) const;
  const std::vector<FieldPoly>& coeffs_y() const { return cy_; }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string str() const;  // canonical text, ascending powers of y

 private:
  Field field_;
  std::vector<FieldPoly> cy_;
  void trim();
};

// Exact composition f(X, s(X)).
FieldPoly substitute(const BiPoly& f, const FieldPoly& s);

// Formal derivative in Y.
BiPoly partial_y(const BiPoly& f);

// max over i < n with a_i != 0 of (deg a_i - deg a_n) / (n - i).
// nullopt encodes -infinity (every lower coefficient zero).
std::optional<Rat> lambda_bound(const BiPoly& f);

// Exact maximum of deg d2 - deg d1 <= delta over the chosen divisor-degree
// sets, with the witness degree pair.  q >= 0 since (unit, unit) is
// always feasible.
struct DegreeQuotient {
  int value = 0;
  int d1_degree = 0;
  int d2_degree = 0;
  DivisorKind kind = DivisorKind::Admissible;
  std::size_t da_size = 0;
  std::size_t db_size = 0;
};

// Substituted values with the quantities the criteria need.
struct BivarContext {
  FieldPoly a, b;    // oriented so deg f(X,a) <= deg f(X,b)
  FieldPoly fa, fb;  // f(X,a(X)), f(X,b(X))
  bool swapped = false;
  Rat delta;                  // (deg fb - deg fa) / 2
  std::optional<Rat> lambda;  // nullopt = -infinity
  FieldPoly ga, gb;           // gcd(f(X,s), dY f(X,s)) for s = a, b
  FieldFactorization fa_factors, fb_factors;
};

BivarContext make_bivar_context(const BiPoly& f, const FieldPoly& a,
                                const FieldPoly& b,
                                std::uint64_t oracle_budget);

DegreeQuotient compute_q_bivar(const BivarContext& ctx, DivisorKind kind);

struct BivarCertificate {
  Verdict verdict = Verdict::Inconclusive;
  FailureKind failure = FailureKind::None;
  std::string failure_detail;
  std::string criterion;

  Field field = Field::rationals();
  BiPoly f = BiPoly(Field::rationals());
  FieldPoly a_input = FieldPoly(Field::rationals());
  FieldPoly b_input = FieldPoly(Field::rationals());
  FieldPoly a = FieldPoly(Field::rationals());
  FieldPoly b = FieldPoly(Field::rationals());
  bool swapped = false;
  FieldPoly fa = FieldPoly(Field::rationals());
  FieldPoly fb = FieldPoly(Field::rationals());
  std::optional<Rat> delta;
  std::optional<Rat> lambda;
  std::optional<DegreeQuotient> q;
  std::optional<DegreeQuotient> q_unitary;
  std::vector<CheckRecord> checks;

  std::size_t passed_count() const;
};

struct BivarOptions {
  std::uint64_t oracle_budget = 50'000'000;
};

// Irreducibility over K(X): fast paths through the shape of f(X,b(X))
// (irreducible, or a prime power coprime to the Y-derivative value), then
// the exact degree-gap criterion deg b > max(deg a, lambda) + q.
BivarCertificate certify_bivar(const BiPoly& f, const FieldPoly& a,
                               const FieldPoly& b,
                               const BivarOptions& options = {});

// Primitive-integer Eisenstein test at p: p | a_i for i < n, p does not
// divide a_n, p^2 does not divide a_0.  Accepts rational input and clears
// denominators and content first.
bool eisenstein_check(const FieldPoly& f, const Int& p);

}  // namespace polycert

#endif  // POLYCERT_BIVAR_HPP
