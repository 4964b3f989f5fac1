#include <doctest.h>

#include <polycert/factor.hpp>

#include <algorithm>
#include <random>

using namespace polycert;

namespace {

// Independent oracle: trial division to completion.
std::vector<std::pair<Int, unsigned>> trial_factor(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  n = abs_int(n);
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      ++e;
      n /= p;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Independent oracle: divisors by scanning 1..|n|.
std::vector<Int> scan_divisors(const Int& n) {
  std::vector<Int> out;
  Int m = abs_int(n);
  for (Int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("is_prime basics") {
  CHECK(is_prime(127));
  CHECK_FALSE(is_prime(16129));  // 127^2
  CHECK_FALSE(is_prime(3029));   // 13 * 233
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(-7));
  CHECK(is_prime(2));
  CHECK(is_prime(Int("1000000007")));
  CHECK_FALSE(is_prime(Int("1000000007") * Int("998244353")));
}

TEST_CASE("is_prime agrees with trial division up to 20000") {
  for (int n = 2; n < 20000; ++n) {
    bool expect = trial_factor(n).size() == 1 && trial_factor(n)[0].second == 1;
    CHECK_MESSAGE(is_prime(n) == expect, "n = ", n);
  }
}

TEST_CASE("factorize worked examples") {
  auto f = factorize(16129);
  REQUIRE(f.factors().size() == 1);
  CHECK(f.factors()[0].prime == 127);
  CHECK(f.factors()[0].exp == 2);
  CHECK(f.sign() == 1);

  auto one = factorize(1);
  CHECK(one.factors().empty());
  CHECK(one.sign() == 1);
  CHECK(one.value() == 1);

  auto g = factorize(48464);
  REQUIRE(g.factors().size() == 3);
  CHECK(g.factors()[0] == PrimePower{2, 4});
  CHECK(g.factors()[1] == PrimePower{13, 1});
  CHECK(g.factors()[2] == PrimePower{233, 1});

  auto neg = factorize(-12);
  CHECK(neg.sign() == -1);
  CHECK(neg.value() == -12);
  CHECK(neg.abs_value() == 12);

  CHECK_THROWS_AS(factorize(0), precondition_error);
}

TEST_CASE("factorize round-trips and matches trial division") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 400; ++i) {
    Int n = Int(rng() % 1000000) + 2;
    if (rng() % 2) n = -n;
    auto f = factorize(n);
    CHECK(f.value() == n);
    auto expect = trial_factor(n);
    REQUIRE(f.factors().size() == expect.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
      CHECK(f.factors()[k].prime == expect[k].first);
      CHECK(f.factors()[k].exp == expect[k].second);
      CHECK(is_prime(f.factors()[k].prime));
    }
  }
}

TEST_CASE("factorize uses rho beyond the trial bound") {
  Int p("1000003"), q("1000033");
  auto f = factorize(p * q);
  REQUIRE(f.factors().size() == 2);
  CHECK(f.factors()[0].prime == p);
  CHECK(f.factors()[1].prime == q);
  // Deterministic across runs.
  auto g = factorize(p * q);
  CHECK(f == g);
}

TEST_CASE("all_divisors examples") {
  CHECK(all_divisors(factorize(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(all_divisors(factorize(16129)) == std::vector<Int>{1, 127, 16129});
  CHECK(all_divisors(factorize(128)) ==
        std::vector<Int>{1, 2, 4, 8, 16, 32, 64, 128});
  CHECK(all_divisors(factorize(1)) == std::vector<Int>{1});
}

TEST_CASE("unitary_divisors examples") {
  CHECK(unitary_divisors(factorize(12)) == std::vector<Int>{1, 3, 4, 12});
  // Squarefree: every divisor is unitary.
  CHECK(unitary_divisors(factorize(30)) == scan_divisors(30));
  CHECK(unitary_divisors(factorize(343)) == std::vector<Int>{1, 343});
}

TEST_CASE("admissible_divisors examples") {
  // gcd(16129, 48464) = 1, so only the unitary divisors survive.
  CHECK(admissible_divisors(factorize(16129), 1) ==
        std::vector<Int>{1, 16129});
  // g = n: no constraint.
  CHECK(admissible_divisors(factorize(36), 36) == scan_divisors(36));
  // g = 0 encodes gcd(f(a), 0) = |f(a)|: also no constraint.
  CHECK(admissible_divisors(factorize(36), 0) == scan_divisors(36));
  // Enumerated by hand: gcd(d, 36/d) must divide 2, which removes 3, 6,
  // and 12 (gcds 3, 6, 3).
  CHECK(admissible_divisors(factorize(36), 2) ==
        std::vector<Int>{1, 2, 4, 9, 18, 36});
}

TEST_CASE("divisor set properties") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 200; ++i) {
    Int n = Int(rng() % 20000) + 2;
    Int g = Int(rng() % 50);
    auto fac = factorize(n);
    auto all = all_divisors(fac);
    auto uni = unitary_divisors(fac);
    auto adm = admissible_divisors(fac, g);

    // Unitary within admissible within all.
    CHECK(std::includes(all.begin(), all.end(), adm.begin(), adm.end()));
    CHECK(std::includes(adm.begin(), adm.end(), uni.begin(), uni.end()));

    // Oracle re-check of membership definitions.
    for (const Int& d : all) {
      bool unit = gcd_int(d, n / d) == 1;
      bool admis = g == 0 || divides(gcd_int(d, n / d), g);
      CHECK(std::binary_search(uni.begin(), uni.end(), d) == unit);
      CHECK(std::binary_search(adm.begin(), adm.end(), d) == admis);
      // Complementary divisor symmetry.
      CHECK(std::binary_search(adm.begin(), adm.end(), d) ==
            std::binary_search(adm.begin(), adm.end(), n / d));
    }

    // Reduction of the constraint modulo n.
    CHECK(admissible_divisors(fac, gcd_int(g, n)) == adm);
    // Cardinalities.
    CHECK(Int(all.size()) == fac.divisor_count());
    CHECK(Int(uni.size()) == pow_int(2, fac.distinct_primes()));
  }
}

TEST_CASE("divisor enumeration budget guardrail") {
  // 2^21 divisors from a product of 21 distinct primes.
  std::vector<PrimePower> pps;
  int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                  37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
  for (int p : primes) pps.push_back({p, 1});
  IntegerFactorization big(1, pps);
  CHECK_THROWS_AS(all_divisors(big), budget_error);
}
