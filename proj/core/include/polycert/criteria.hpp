#ifndef POLYCERT_CRITERIA_HPP
#define POLYCERT_CRITERIA_HPP

#include <polycert/certificate.hpp>

#include <optional>
#include <vector>

namespace polycert {

enum class KindMode { Auto, AdmissibleOnly, UnitaryOnly };
std::string to_string(KindMode m);

struct CertifyOptions {
  KindMode kind = KindMode::Auto;
  FactorOptions factor{};
};

// Exact maximum of d2/d1 over the chosen divisor sets of |f(a)| and
// |f(b)|, subject to d2^2 |f(a)| <= d1^2 |f(b)|.  ga and gb are
// gcd(f(a), f'(a)) and gcd(f(b), f'(b)); they select the admissible sets.
// Requires 0 < |f(a)| < |f(b)|.  Ties resolve to the smallest d1, then d2.
QuotientBound max_divisor_quotient(const IntegerFactorization& fa,
                                   const Int& ga,
                                   const IntegerFactorization& fb,
                                   const Int& gb, DivisorKind kind,
                                   std::uint64_t* pairs_scanned = nullptr);

// Convenience form: evaluates and factors f at a and b first.
QuotientBound compute_quotient_bound(const UniPoly& f, const Int& a,
                                     const Int& b, DivisorKind kind,
                                     const FactorOptions& options = {});

// True iff the closed disk |z| <= B lies strictly inside the Apollonius
// region |b - z| > sqrt(t) |a - z|, decided by the closed form
// (1 - t) B^2 - 2 |b - t a| B + (b^2 - t a^2) > 0.  Requires t > 1 exactly.
bool disk_in_apollonius(const Int& a, const Int& b, const Rat& t,
                        const Rat& disk_radius);

// A factorization-shape fast path that pins q = 1 without enumeration.
struct PatternWitness {
  std::string id;
  std::vector<CheckRecord> evidence;
};

// Matches the value-shape patterns that force q = 1.  ga and gb are the
// derivative gcds; every divisibility side condition is tested against
// them.  Requires 0 < |f(a)| < |f(b)| (the caller's orientation).
std::optional<PatternWitness> match_pattern(const IntegerFactorization& fa,
                                            const IntegerFactorization& fb,
                                            const Int& ga, const Int& gb);

// Certified root-modulus bound: the minimum of the Cauchy bound, the best
// radius the coefficient-dominance test proves (candidate radii plus a
// halving scan from the Cauchy bound), and 1 for an Enestrom-Kakeya
// polynomial (non-strict).  extra_radii adds candidates such as |a+b|/2.
RootBound best_root_bound(const UniPoly& f,
                          const std::vector<Rat>& extra_radii = {});

// Full certification of one (f, a, b) instance: orientation, pattern fast
// paths, quotient maxima, then the bound and disk criteria in a fixed
// order.  Never throws for value-level failures; they are reported in the
// certificate (failure kind + failed checks).
Certificate certify(const UniPoly& f, const Int& a, const Int& b,
                    const CertifyOptions& options = {});

// Prime-value routes: the radius-1/2 dominance route with a = 0, and the
// Enestrom-Kakeya route with a = sign(b).  Requires f(b) != 0.
Certificate certify_prime_value(const UniPoly& f, const Int& b,
                                const CertifyOptions& options = {});

// Deterministic sweep (a ascending, then b ascending, a != b).  Returns
// the first Irreducible certificate, otherwise the Inconclusive one with
// the most passed checks.
Certificate search(const UniPoly& f, const Int& a_lo, const Int& a_hi,
                   const Int& b_lo, const Int& b_hi,
                   const CertifyOptions& options = {});

}  // namespace polycert

#endif  // POLYCERT_CRITERIA_HPP
