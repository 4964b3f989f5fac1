#ifndef POLYCERT_FACTOR_HPP
#define POLYCERT_FACTOR_HPP

#include <polycert/ints.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace polycert {

struct PrimePower {
  Int prime;
  unsigned exp;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactorOptions {
  // Step budget for the rho stage; one budget unit is one rho iteration.
  std::uint64_t effort = 4'000'000;
  // All primes below this bound are removed by trial division first.
  std::uint64_t trial_bound = 100'000;
  // Fixed xorshift seed for the rho stage, recorded in certificates.
  std::uint64_t rho_seed = 0x9e3779b97f4a7c15ULL;
};

// Prime-exponent decomposition of a nonzero integer.  Primes are sorted
// ascending, exponents are >= 1, and sign * prod(p^e) reproduces the value.
class IntegerFactorization {
 public:
  IntegerFactorization() : sign_(1) {}
  IntegerFactorization(int sign, std::vector<PrimePower> factors);

  int sign() const { return sign_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t distinct_primes() const { return factors_.size(); }

  Int value() const;      // signed
  Int abs_value() const;  // |value|
  Int divisor_count() const;
  // Exponent of p in |value| (0 when p does not occur).
  unsigned exponent_of(const Int& p) const;

  std::string str() const;  // e.g. "2^4 * 13 * 233" (sign prefixed if negative)

  friend bool operator==(const IntegerFactorization&,
                         const IntegerFactorization&) = default;

 private:
  int sign_;
  std::vector<PrimePower> factors_;
};

// Deterministic primality test.  Below a fixed threshold this is exact
// (fixed Miller-Rabin witness set); above it a fixed 64-witness round is
// used and is_prime_method() reports which regime applied.
bool is_prime(const Int& n);
std::string is_prime_method(const Int& n);

// Trial division up to options.trial_bound, then Brent's rho with a fixed
// seed.  Deterministic for fixed options.  Throws budget_error if a
// composite cofactor survives the step budget.
IntegerFactorization factorize(const Int& n, const FactorOptions& options = {});

// Enumeration guardrail shared by every divisor-set constructor.
inline constexpr std::uint64_t kMaxDivisors = std::uint64_t{1} << 20;

// All positive divisors, ascending.  Throws budget_error if the divisor
// count exceeds kMaxDivisors.
std::vector<Int> all_divisors(const IntegerFactorization& f);

// Positive d with gcd(d, |n|/d) = 1, ascending.
std::vector<Int> unitary_divisors(const IntegerFactorization& f);

// Positive d | |n| with gcd(d, |n|/d) dividing g, ascending.  g = 0 places
// no constraint (gcd(n, 0) = |n|, so every divisor qualifies).
std::vector<Int> admissible_divisors(const IntegerFactorization& f,
                                     const Int& g);

}  // namespace polycert

#endif  // POLYCERT_FACTOR_HPP
