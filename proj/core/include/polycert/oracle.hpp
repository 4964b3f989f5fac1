#ifndef POLYCERT_ORACLE_HPP
#define POLYCERT_ORACLE_HPP

#include <polycert/bivar.hpp>
#include <polycert/unipoly.hpp>

#include <cstdint>
#include <string>

namespace polycert {

enum class OracleStatus { Irreducible, Factored, BudgetExceeded };
std::string to_string(OracleStatus s);

struct OracleStats {
  std::uint64_t points_used = 0;
  std::uint64_t tuples_tried = 0;        // divisor-tuple extensions examined
  std::uint64_t candidates_built = 0;    // full interpolants constructed
  std::uint64_t divisions_attempted = 0;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

// Complete interpolation-based factor search over Z[X].  The content is
// split off first and reported; g and h are primitive with positive
// leading coefficients, content * g * h = f, 1 <= deg g <= deg h.
// Irreducible is a proof for the primitive part when the search finishes
// inside its budget: a factor of degree m is determined by its values at
// m+1 points, each of which divides the corresponding value of f.
struct FactorizationResult {
  OracleStatus status = OracleStatus::Irreducible;
  UniPoly g, h;
  Int content = 1;
  OracleStats stats;
};

FactorizationResult kronecker_factor(const UniPoly& f,
                                     std::uint64_t budget = kDefaultOracleBudget);

// Exhaustive factor search in GF(p)[X][Y]: candidate factors g with
// 1 <= deg_Y g <= deg_Y F / 2 and coefficient degrees <= degx_cap, tested
// by exact division.  With degx_cap >= deg_X F (the default, passed as -1)
// a clean Irreducible outcome proves irreducibility over GF(p)(X).
struct BivarFactorResult {
  OracleStatus status = OracleStatus::Irreducible;
  BiPoly g, h;
  FieldPoly content;  // gcd of the Y-coefficients, divided out first
  int degx_cap = 0;
  OracleStats stats;

  BivarFactorResult(const Field& field)
      : g(field), h(field), content(field) {}
};

BivarFactorResult exhaustive_bivar_factor(
    const BiPoly& f, int degx_cap = -1,
    std::uint64_t budget = kDefaultOracleBudget);

}  // namespace polycert

#endif  // POLYCERT_ORACLE_HPP
