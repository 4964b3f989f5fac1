#include <polycert/factor.hpp>

#include <algorithm>
#include <map>

namespace polycert {

namespace {

// Below this bound the fixed witness set is a proven deterministic test.
const Int kDeterministicBound("3317044064679887385961981");

constexpr int kSmallWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// First 64 primes, used as fixed witnesses above the deterministic bound.
constexpr int kWidePrimes[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
    43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
    173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
    241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
  Int x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

template <typename Witnesses>
bool miller_rabin(const Int& n, const Witnesses& witnesses) {
  Int d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int w : witnesses) {
    Int a(w);
    if (a % n == 0) continue;
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

std::uint64_t xorshift64(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

// Brent's cycle-finding variant of the rho method.  Deterministic: the
// polynomial offset and starting point come from a fixed xorshift stream.
// Returns a nontrivial factor of composite odd n, or 0 on budget exhaustion.
Int brent_rho(const Int& n, std::uint64_t& seed, std::uint64_t& budget) {
  while (budget > 0) {
    Int y = Int(xorshift64(seed) % 0xffffffffULL) % n;
    Int c = Int(xorshift64(seed) % 0xffffffffULL) % n;
    if (c == 0) c = 1;
    Int m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1 && budget > 0) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          if (budget == 0) break;
          --budget;
          y = (y * y + c) % n;
          q = q * abs_int(x - y) % n;
        }
        g = gcd_int(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time to split the batched gcd.
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd_int(abs_int(x - ys), n);
      }
    }
    if (g != n && g > 1) return g;
    // g == n: retry with a fresh (y, c) pair.
  }
  return 0;
}

void factor_into(const Int& n, std::uint64_t& seed, std::uint64_t& budget,
                 std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = brent_rho(n, seed, budget);
  if (d == 0)
    throw budget_error("factorize: unfactored composite cofactor " + n.str());
  factor_into(d, seed, budget, out);
  factor_into(n / d, seed, budget, out);
}

}  // namespace

IntegerFactorization::IntegerFactorization(int sign,
                                           std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.prime < b.prime;
            });
}

Int IntegerFactorization::value() const {
  Int v = sign_;
  for (const auto& [p, e] : factors_) v *= pow_int(p, e);
  return v;
}

Int IntegerFactorization::abs_value() const { return abs_int(value()); }

Int IntegerFactorization::divisor_count() const {
  Int c = 1;
  for (const auto& pp : factors_) c *= Int(pp.exp) + 1;
  return c;
}

unsigned IntegerFactorization::exponent_of(const Int& p) const {
  for (const auto& pp : factors_)
    if (pp.prime == p) return pp.exp;
  return 0;
}

std::string IntegerFactorization::str() const {
  std::string s = sign_ < 0 ? "-" : "";
  if (factors_.empty()) return s + "1";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " * ";
    s += factors_[i].prime.str();
    if (factors_[i].exp > 1) s += "^" + std::to_string(factors_[i].exp);
  }
  return s;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int p : kSmallWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < kDeterministicBound) return miller_rabin(n, kSmallWitnesses);
  return miller_rabin(n, kWidePrimes);
}

std::string is_prime_method(const Int& n) {
  if (n < kDeterministicBound) return "miller_rabin_deterministic_12";
  return "miller_rabin_fixed_64";
}

IntegerFactorization factorize(const Int& n, const FactorOptions& options) {
  if (n == 0) throw precondition_error("factorize: n must be nonzero");
  if (options.effort == 0) throw precondition_error("factorize: effort must be positive");
  int sign = sign_of(n);
  Int m = abs_int(n);
  std::map<Int, unsigned> primes;
  for (std::uint64_t p = 2; p <= options.trial_bound && Int(p) * p <= m; ++p) {
    while (m % p == 0) {
      ++primes[Int(p)];
      m /= p;
    }
  }
  if (m > 1) {
    if (m < Int(options.trial_bound) * Int(options.trial_bound) || is_prime(m)) {
      ++primes[m];
    } else {
      std::uint64_t seed = options.rho_seed;
      std::uint64_t budget = options.effort;
      factor_into(m, seed, budget, primes);
    }
  }
  std::vector<PrimePower> out;
  out.reserve(primes.size());
  for (const auto& [p, e] : primes) out.push_back({p, e});
  return IntegerFactorization(sign, std::move(out));
}

namespace {

void check_divisor_budget(const IntegerFactorization& f) {
  if (f.divisor_count() > kMaxDivisors)
    throw budget_error("divisor enumeration: more than 2^20 divisors for " +
                       f.str());
}

// Walks all exponent vectors; keep(vector of chosen exponents) filters.
template <typename Keep>
std::vector<Int> enumerate_divisors(const IntegerFactorization& f, Keep keep) {
  check_divisor_budget(f);
  const auto& pps = f.factors();
  std::vector<Int> out;
  std::vector<unsigned> expv(pps.size(), 0);
  while (true) {
    if (keep(expv)) {
      Int d = 1;
      for (std::size_t i = 0; i < pps.size(); ++i)
        d *= pow_int(pps[i].prime, expv[i]);
      out.push_back(d);
    }
    std::size_t i = 0;
    while (i < pps.size() && expv[i] == pps[i].exp) expv[i++] = 0;
    if (i == pps.size()) break;
    ++expv[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Int> all_divisors(const IntegerFactorization& f) {
  return enumerate_divisors(f, [](const std::vector<unsigned>&) { return true; });
}

std::vector<Int> unitary_divisors(const IntegerFactorization& f) {
  const auto& pps = f.factors();
  return enumerate_divisors(f, [&](const std::vector<unsigned>& expv) {
    for (std::size_t i = 0; i < expv.size(); ++i)
      if (expv[i] != 0 && expv[i] != pps[i].exp) return false;
    return true;
  });
}

std::vector<Int> admissible_divisors(const IntegerFactorization& f,
                                     const Int& g) {
  if (g == 0) return all_divisors(f);
  const auto& pps = f.factors();
  Int ga = abs_int(g);
  // gcd(d, n/d) = prod p^min(v, e-v); it divides g iff every prime's
  // min(v, e-v) is at most the exponent of p in g.
  std::vector<unsigned> cap(pps.size(), 0);
  for (std::size_t i = 0; i < pps.size(); ++i) {
    Int t = ga;
    while (t % pps[i].prime == 0) {
      ++cap[i];
      t /= pps[i].prime;
    }
  }
  return enumerate_divisors(f, [&](const std::vector<unsigned>& expv) {
    for (std::size_t i = 0; i < expv.size(); ++i) {
      unsigned v = expv[i];
      unsigned co = pps[i].exp - v;
      if (std::min(v, co) > cap[i]) return false;
    }
    return true;
  });
}

}  // namespace polycert
