#ifndef POLYCERT_CERTIFICATE_HPP
#define POLYCERT_CERTIFICATE_HPP

#include <polycert/factor.hpp>
#include <polycert/unipoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

enum class Verdict { Irreducible, Inconclusive };
enum class FailureKind { None, PreconditionViolated, BudgetExceeded };

std::string to_string(Verdict v);
std::string to_string(FailureKind f);

enum class DivisorKind { Admissible, Unitary };
std::string to_string(DivisorKind k);

// Criterion and pattern identifiers emitted in certificates.  The catalog
// is documented in the README; tests and the CLI treat these as stable
// protocol tokens.
namespace criterion {
inline constexpr const char* kDegree1 = "DEGREE_1";
inline constexpr const char* kThm0I = "THM0_I";
inline constexpr const char* kThm0II = "THM0_II";
inline constexpr const char* kThm0III = "THM0_III";
inline constexpr const char* kThm1I = "THM1_I";
inline constexpr const char* kThm1II = "THM1_II";
inline constexpr const char* kThm1III = "THM1_III";
inline constexpr const char* kThm0uI = "THM0U_I";
inline constexpr const char* kThm0uII = "THM0U_II";
inline constexpr const char* kThm0uIII = "THM0U_III";
inline constexpr const char* kThm3I = "THM3_I";
inline constexpr const char* kThm3II = "THM3_II";
inline constexpr const char* kThm3III = "THM3_III";
inline constexpr const char* kThm5 = "THM5";
inline constexpr const char* kThm7 = "THM7";
inline constexpr const char* kCoro6 = "COR_CORO6";
inline constexpr const char* kCoro8 = "COR_CORO8";
// q = 1 fast-path patterns.
inline constexpr const char* kPatCoro1MainI = "COR_CORO1MAIN_I";
inline constexpr const char* kPatCoro1MainII = "COR_CORO1MAIN_II";
inline constexpr const char* kPatCoro3MainI = "COR_CORO3MAIN_I";
inline constexpr const char* kPatCoro3MainII = "COR_CORO3MAIN_II";
inline constexpr const char* kPatCoro3MainIII = "COR_CORO3MAIN_III";
inline constexpr const char* kPatCoro3MainIV = "COR_CORO3MAIN_IV";
inline constexpr const char* kPatCoroVechi = "COR_COROVECHI";
// Prime-value routes.
inline constexpr const char* kRouteCoro2 = "COR_CORO2";
inline constexpr const char* kRouteEk2 = "COR_EK2";
}  // namespace criterion

// One exact comparison.  lhs and rhs are decimal integer or "p/q" rational
// strings; rel is one of < <= > >= == != | !| (divides / does not divide),
// stable / not_stable (Routh verdict on lhs, rhs unused).
struct CheckRecord {
  std::string id;
  std::string lhs;
  std::string rel;
  std::string rhs;
  bool passed = false;
};

// Re-evaluates a single record from its own strings.
bool reevaluate(const CheckRecord& check);

// Largest divisor quotient d2/d1 not exceeding sqrt(|f(b)|/|f(a)|), with
// the witness pair realizing it.  The defining constraint is kept in the
// squared form d2^2 |f(a)| <= d1^2 |f(b)|.
struct QuotientBound {
  Rat value;
  Int d1;
  Int d2;
  DivisorKind kind = DivisorKind::Admissible;
  // |D(f(a))|, |D(f(b))|; (0, 0) when a fast-path pattern fixed q = 1
  // without enumeration.
  std::size_t da_size = 0;
  std::size_t db_size = 0;
  bool from_pattern = false;
};

// A certified upper bound B on root moduli: |root| < value when strict,
// |root| <= value otherwise.
struct RootBound {
  Rat value;
  bool strict = true;
  std::string source;  // "cauchy", "rouche", "enestrom_kakeya"
  std::vector<std::pair<Rat, bool>> rouche_radii;  // (radius, holds)
};

// Self-contained, re-verifiable verdict for one (f, a, b) instance.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  FailureKind failure = FailureKind::None;
  std::string failure_detail;

  std::string criterion;  // firing criterion token; empty if none
  std::string pattern;    // matched q=1 pattern token; empty if none
  std::string route;      // prime-value corollary route token; empty if none

  UniPoly f;
  Int a_input = 0, b_input = 0;  // as supplied
  Int a = 0, b = 0;              // oriented so 0 < |f(a)| < |f(b)|
  bool swapped = false;

  Int fa = 0, fb = 0;    // f(a), f(b)
  Int dfa = 0, dfb = 0;  // f'(a), f'(b)
  Int ga = 0, gb = 0;    // gcd(f(a), f'(a)), gcd(f(b), f'(b))
  std::optional<IntegerFactorization> fa_factorization;
  std::optional<IntegerFactorization> fb_factorization;

  std::optional<QuotientBound> q;
  std::optional<QuotientBound> q_unitary;
  std::optional<RootBound> bound;

  // Irreducible: exactly the supporting chain, all passed.
  // Inconclusive: everything attempted, passed and failed.
  std::vector<CheckRecord> checks;

  std::string primality_method;
  std::uint64_t divisor_pairs_scanned = 0;

  std::size_t passed_count() const;
};

// Re-evaluates every recorded check from the certificate's own strings and
// confirms the verdict they support.  Irreducible certificates must have a
// criterion and every check passing.
bool reverify(const Certificate& cert);

}  // namespace polycert

#endif  // POLYCERT_CERTIFICATE_HPP
