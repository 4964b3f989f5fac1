#include <polycert/criteria.hpp>

#include <algorithm>
#include <optional>

namespace polycert {

namespace {

CheckRecord make_check(std::string id, const Rat& lhs, std::string rel,
                       const Rat& rhs) {
  CheckRecord c{std::move(id), lhs.str(), std::move(rel), rhs.str(), false};
  c.passed = reevaluate(c);
  return c;
}

CheckRecord make_check(std::string id, const Int& lhs, std::string rel,
                       const Int& rhs) {
  return make_check(std::move(id), Rat(lhs), std::move(rel), Rat(rhs));
}

CheckRecord stability_check(std::string id, Stability s) {
  CheckRecord c{std::move(id), to_string(s), "stable", "", false};
  c.passed = reevaluate(c);
  return c;
}

void fail_precondition(Certificate& cert, std::string detail) {
  cert.verdict = Verdict::Inconclusive;
  cert.failure = FailureKind::PreconditionViolated;
  cert.failure_detail = std::move(detail);
}

Rat apollonius_margin(const Int& a, const Int& b, const Rat& t, const Rat& B) {
  // min over |z| <= B of |b-z|^2 - t |a-z|^2, in closed form.
  Rat lin = (Rat(b) - t * Rat(a)).abs();
  return (Rat(1) - t) * B.square() - Rat(2) * lin * B +
         (Rat(b * b) - t * Rat(a * a));
}

// ---------------------------------------------------------------------
// q = 1 fast-path patterns
// ---------------------------------------------------------------------

std::optional<PatternWitness> pat_step_prime_power(
    const IntegerFactorization& fa, const IntegerFactorization& fb) {
  // |f(a)| = p^k r, |f(b)| = p^{k+1}, 0 < r < p.
  if (fb.distinct_primes() != 1) return std::nullopt;
  const Int& p = fb.factors()[0].prime;
  unsigned k = fb.factors()[0].exp - 1;
  if (fa.exponent_of(p) != k) return std::nullopt;
  Int r = fa.abs_value() / pow_int(p, k);
  if (!(r < p)) return std::nullopt;
  PatternWitness w{criterion::kPatCoro1MainI, {}};
  w.evidence.push_back(
      make_check("pattern_fa_shape", fa.abs_value(), "==", pow_int(p, k) * r));
  w.evidence.push_back(
      make_check("pattern_fb_shape", fb.abs_value(), "==", pow_int(p, k + 1)));
  w.evidence.push_back(make_check("pattern_r_positive", Int(0), "<", r));
  w.evidence.push_back(make_check("pattern_r_below_p", r, "<", p));
  return w;
}

std::optional<PatternWitness> pat_prime_times_power(
    const IntegerFactorization& fa, const IntegerFactorization& fb) {
  // |f(a)| = p^k, |f(b)| = p^k r, primes r < p, k >= 1.
  if (fa.distinct_primes() != 1 || fb.distinct_primes() != 2)
    return std::nullopt;
  const Int& p = fa.factors()[0].prime;
  unsigned k = fa.factors()[0].exp;
  if (fb.exponent_of(p) != k) return std::nullopt;
  const auto& other = fb.factors()[0].prime == p ? fb.factors()[1]
                                                 : fb.factors()[0];
  if (other.exp != 1 || !(other.prime < p)) return std::nullopt;
  PatternWitness w{criterion::kPatCoro1MainII, {}};
  w.evidence.push_back(
      make_check("pattern_fa_shape", fa.abs_value(), "==", pow_int(p, k)));
  w.evidence.push_back(make_check("pattern_fb_shape", fb.abs_value(), "==",
                                  pow_int(p, k) * other.prime));
  w.evidence.push_back(make_check("pattern_r_below_p", other.prime, "<", p));
  return w;
}

std::optional<PatternWitness> pat_unitary_step(const IntegerFactorization& fa,
                                               const IntegerFactorization& fb,
                                               const Int& ga, const Int& gb) {
  // |f(a)| = p^{k1} r, |f(b)| = p^{k2}, k1 < k2, 0 < r < p,
  // p coprime to both derivative gcds, r not dividing gcd(f(a), f'(a)).
  if (fb.distinct_primes() != 1) return std::nullopt;
  const Int& p = fb.factors()[0].prime;
  unsigned k2 = fb.factors()[0].exp;
  unsigned k1 = fa.exponent_of(p);
  if (!(k1 < k2)) return std::nullopt;
  Int r = fa.abs_value() / pow_int(p, k1);
  if (!(r > 0 && r < p)) return std::nullopt;
  if (divides(p, ga) || divides(p, gb) || divides(r, ga)) return std::nullopt;
  PatternWitness w{criterion::kPatCoro3MainI, {}};
  w.evidence.push_back(
      make_check("pattern_fa_shape", fa.abs_value(), "==", pow_int(p, k1) * r));
  w.evidence.push_back(
      make_check("pattern_fb_shape", fb.abs_value(), "==", pow_int(p, k2)));
  w.evidence.push_back(make_check("pattern_exponent_gap", Int(k1), "<", Int(k2)));
  w.evidence.push_back(make_check("pattern_r_below_p", r, "<", p));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_a", p, "!|", ga));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_b", p, "!|", gb));
  w.evidence.push_back(make_check("pattern_r_ndiv_gcd_a", r, "!|", ga));
  return w;
}

std::optional<PatternWitness> pat_unitary_two_primes(
    const IntegerFactorization& fa, const IntegerFactorization& fb,
    const Int& ga, const Int& gb) {
  // |f(a)| = p^k, |f(b)| = p^k r^j with p^k > r^j.
  if (fa.distinct_primes() != 1 || fb.distinct_primes() != 2)
    return std::nullopt;
  const Int& p = fa.factors()[0].prime;
  unsigned k = fa.factors()[0].exp;
  if (fb.exponent_of(p) != k) return std::nullopt;
  const auto& other = fb.factors()[0].prime == p ? fb.factors()[1]
                                                 : fb.factors()[0];
  Int pk = pow_int(p, k);
  Int rj = pow_int(other.prime, other.exp);
  if (!(pk > rj)) return std::nullopt;
  if (divides(p, ga) || divides(p, gb) || divides(other.prime, gb))
    return std::nullopt;
  PatternWitness w{criterion::kPatCoro3MainII, {}};
  w.evidence.push_back(make_check("pattern_fa_shape", fa.abs_value(), "==", pk));
  w.evidence.push_back(
      make_check("pattern_fb_shape", fb.abs_value(), "==", pk * rj));
  w.evidence.push_back(make_check("pattern_pk_above_rj", rj, "<", pk));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_a", p, "!|", ga));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_b", p, "!|", gb));
  w.evidence.push_back(make_check("pattern_r_ndiv_gcd_b", other.prime, "!|", gb));
  return w;
}

std::optional<PatternWitness> pat_unitary_three_primes(
    const IntegerFactorization& fa, const IntegerFactorization& fb,
    const Int& ga, const Int& gb) {
  // |f(a)| = p^u, |f(b)| = q^v r^t, p^u above both parts but below their
  // product.
  if (fa.distinct_primes() != 1 || fb.distinct_primes() != 2)
    return std::nullopt;
  const Int& p = fa.factors()[0].prime;
  if (fb.exponent_of(p) != 0) return std::nullopt;
  Int pu = fa.abs_value();
  Int qv = pow_int(fb.factors()[0].prime, fb.factors()[0].exp);
  Int rt = pow_int(fb.factors()[1].prime, fb.factors()[1].exp);
  if (!(pu > qv && pu > rt && pu < qv * rt)) return std::nullopt;
  if (divides(p, ga) || divides(fb.factors()[0].prime, gb) ||
      divides(fb.factors()[1].prime, gb))
    return std::nullopt;
  PatternWitness w{criterion::kPatCoro3MainIII, {}};
  w.evidence.push_back(make_check("pattern_fa_shape", fa.abs_value(), "==", pu));
  w.evidence.push_back(
      make_check("pattern_fb_shape", fb.abs_value(), "==", qv * rt));
  w.evidence.push_back(make_check("pattern_pu_above_qv", qv, "<", pu));
  w.evidence.push_back(make_check("pattern_pu_above_rt", rt, "<", pu));
  w.evidence.push_back(make_check("pattern_pu_below_product", pu, "<", qv * rt));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_a", p, "!|", ga));
  w.evidence.push_back(
      make_check("pattern_q_ndiv_gcd_b", fb.factors()[0].prime, "!|", gb));
  w.evidence.push_back(
      make_check("pattern_r_ndiv_gcd_b", fb.factors()[1].prime, "!|", gb));
  return w;
}

std::optional<PatternWitness> pat_unitary_four_primes(
    const IntegerFactorization& fa, const IntegerFactorization& fb,
    const Int& ga, const Int& gb) {
  // |f(a)| = p^u q^v, |f(b)| = r^k s^l, with p^u > r^k > s^l > q^v and
  // p^u q^v < r^k s^l; all four primes distinct.
  if (fa.distinct_primes() != 2 || fb.distinct_primes() != 2)
    return std::nullopt;
  for (const auto& pp : fa.factors())
    if (fb.exponent_of(pp.prime) != 0) return std::nullopt;
  Int a1 = pow_int(fa.factors()[0].prime, fa.factors()[0].exp);
  Int a2 = pow_int(fa.factors()[1].prime, fa.factors()[1].exp);
  const Int& pa1 = fa.factors()[0].prime;
  const Int& pa2 = fa.factors()[1].prime;
  Int pu = std::max(a1, a2);
  Int qv = std::min(a1, a2);
  const Int& p_prime = a1 > a2 ? pa1 : pa2;
  const Int& q_prime = a1 > a2 ? pa2 : pa1;
  Int b1 = pow_int(fb.factors()[0].prime, fb.factors()[0].exp);
  Int b2 = pow_int(fb.factors()[1].prime, fb.factors()[1].exp);
  Int rk = std::max(b1, b2);
  Int sl = std::min(b1, b2);
  const Int& r_prime = b1 > b2 ? fb.factors()[0].prime : fb.factors()[1].prime;
  const Int& s_prime = b1 > b2 ? fb.factors()[1].prime : fb.factors()[0].prime;
  if (!(pu > rk && rk > sl && sl > qv)) return std::nullopt;
  if (!(pu * qv < rk * sl)) return std::nullopt;
  if (divides(p_prime, ga) || divides(q_prime, ga) || divides(r_prime, gb) ||
      divides(s_prime, gb))
    return std::nullopt;
  PatternWitness w{criterion::kPatCoro3MainIV, {}};
  w.evidence.push_back(make_check("pattern_fa_shape", fa.abs_value(), "==", pu * qv));
  w.evidence.push_back(make_check("pattern_fb_shape", fb.abs_value(), "==", rk * sl));
  w.evidence.push_back(make_check("pattern_chain_rk_below_pu", rk, "<", pu));
  w.evidence.push_back(make_check("pattern_chain_sl_below_rk", sl, "<", rk));
  w.evidence.push_back(make_check("pattern_chain_qv_below_sl", qv, "<", sl));
  w.evidence.push_back(make_check("pattern_products", pu * qv, "<", rk * sl));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_a", p_prime, "!|", ga));
  w.evidence.push_back(make_check("pattern_q_ndiv_gcd_a", q_prime, "!|", ga));
  w.evidence.push_back(make_check("pattern_r_ndiv_gcd_b", r_prime, "!|", gb));
  w.evidence.push_back(make_check("pattern_s_ndiv_gcd_b", s_prime, "!|", gb));
  return w;
}

std::optional<PatternWitness> pat_prime_power_value(
    const IntegerFactorization& fb, const Int& gb) {
  // |f(b)| = p^k with p not dividing f'(b); any |f(a)| < |f(b)| gives q = 1.
  if (fb.distinct_primes() != 1) return std::nullopt;
  const Int& p = fb.factors()[0].prime;
  if (divides(p, gb)) return std::nullopt;
  PatternWitness w{criterion::kPatCoroVechi, {}};
  w.evidence.push_back(make_check("pattern_fb_prime_power", fb.abs_value(),
                                  "==", pow_int(p, fb.factors()[0].exp)));
  w.evidence.push_back(make_check("pattern_p_ndiv_gcd_b", p, "!|", gb));
  return w;
}

struct TokenSet {
  const char* bound_linear;
  const char* bound_squared;
  const char* midpoint;
  const char* disk_q;
  const char* disk_sqrt_q;
  const char* half_plane;
};

constexpr TokenSet kAdmissibleTokens{criterion::kThm1I,  criterion::kThm1II,
                                     criterion::kThm1III, criterion::kThm0I,
                                     criterion::kThm0II,  criterion::kThm0III};
constexpr TokenSet kUnitaryTokens{criterion::kThm3I,  criterion::kThm3II,
                                  criterion::kThm3III, criterion::kThm0uI,
                                  criterion::kThm0uII, criterion::kThm0uIII};

struct Attempt {
  std::string token;
  std::vector<CheckRecord> checks;
  bool passed = false;
};

}  // namespace

std::string to_string(KindMode m) {
  switch (m) {
    case KindMode::Auto: return "auto";
    case KindMode::AdmissibleOnly: return "admissible";
    default: return "unitary";
  }
}

QuotientBound max_divisor_quotient(const IntegerFactorization& fa,
                                   const Int& ga,
                                   const IntegerFactorization& fb,
                                   const Int& gb, DivisorKind kind,
                                   std::uint64_t* pairs_scanned) {
  Int va = fa.abs_value();
  Int vb = fb.abs_value();
  if (!(va > 0 && va < vb))
    throw precondition_error("max_divisor_quotient: need 0 < |f(a)| < |f(b)|");
  auto d1s = kind == DivisorKind::Admissible ? admissible_divisors(fa, ga)
                                             : unitary_divisors(fa);
  auto d2s = kind == DivisorKind::Admissible ? admissible_divisors(fb, gb)
                                             : unitary_divisors(fb);
  if (pairs_scanned)
    *pairs_scanned += static_cast<std::uint64_t>(d1s.size()) * d2s.size();
  QuotientBound best{Rat(1), Int(1), Int(1), kind, d1s.size(), d2s.size(),
                     false};
  for (const Int& d2 : d2s) {
    // Smallest d1 with d1^2 |f(b)| >= d2^2 |f(a)|; larger d1 only shrinks
    // the quotient.
    Int need = d2 * d2 * va;
    auto it = std::lower_bound(d1s.begin(), d1s.end(), need,
                               [&](const Int& d1, const Int& target) {
                                 return d1 * d1 * vb < target;
                               });
    if (it == d1s.end()) continue;
    Rat value(d2, *it);
    if (value > best.value ||
        (value == best.value &&
         (*it < best.d1 || (*it == best.d1 && d2 < best.d2)))) {
      best.value = value;
      best.d1 = *it;
      best.d2 = d2;
    }
  }
  return best;
}

QuotientBound compute_quotient_bound(const UniPoly& f, const Int& a,
                                     const Int& b, DivisorKind kind,
                                     const FactorOptions& options) {
  Int va = abs_int(f(a));
  Int vb = abs_int(f(b));
  if (!(va > 0 && va < vb))
    throw precondition_error("compute_quotient_bound: need 0 < |f(a)| < |f(b)|");
  UniPoly df = f.derivative();
  Int ga = gcd_int(abs_int(f(a)), abs_int(df(a)));
  Int gb = gcd_int(abs_int(f(b)), abs_int(df(b)));
  return max_divisor_quotient(factorize(f(a), options), ga,
                              factorize(f(b), options), gb, kind);
}

bool disk_in_apollonius(const Int& a, const Int& b, const Rat& t,
                        const Rat& disk_radius) {
  if (!(t > Rat(1))) throw precondition_error("disk_in_apollonius: need t > 1");
  if (disk_radius < Rat(0))
    throw precondition_error("disk_in_apollonius: need B >= 0");
  return apollonius_margin(a, b, t, disk_radius) > Rat(0);
}

std::optional<PatternWitness> match_pattern(const IntegerFactorization& fa,
                                            const IntegerFactorization& fb,
                                            const Int& ga, const Int& gb) {
  if (auto w = pat_step_prime_power(fa, fb)) return w;
  if (auto w = pat_prime_times_power(fa, fb)) return w;
  if (auto w = pat_unitary_step(fa, fb, ga, gb)) return w;
  if (auto w = pat_unitary_two_primes(fa, fb, ga, gb)) return w;
  if (auto w = pat_unitary_three_primes(fa, fb, ga, gb)) return w;
  if (auto w = pat_unitary_four_primes(fa, fb, ga, gb)) return w;
  if (auto w = pat_prime_power_value(fb, gb)) return w;
  return std::nullopt;
}

RootBound best_root_bound(const UniPoly& f, const std::vector<Rat>& extra_radii) {
  RootBound out;
  out.value = cauchy_root_bound(f);
  out.strict = true;
  out.source = "cauchy";
  std::vector<Rat> radii{Rat(1, 2), Rat(1)};
  for (const auto& r : extra_radii) radii.push_back(r);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  for (const auto& r : radii) {
    if (!(r > Rat(0))) continue;
    bool holds = rouche_all_roots_inside(f, r);
    out.rouche_radii.emplace_back(r, holds);
    if (holds && r < out.value) {
      out.value = r;
      out.source = "rouche";
    }
  }
  // Halving scan below the best radius so far.
  Rat r = out.value;
  for (int i = 0; i < 64; ++i) {
    Rat half = r / Rat(2);
    bool holds = rouche_all_roots_inside(f, half);
    out.rouche_radii.emplace_back(half, holds);
    if (!holds) break;
    r = half;
    out.value = half;
    out.source = "rouche";
  }
  if (is_enestrom_kakeya(f) && Rat(1) < out.value) {
    out.value = Rat(1);
    out.strict = false;
    out.source = "enestrom_kakeya";
  }
  return out;
}

namespace {

// Records that justify the chosen root bound inside a certificate.
std::vector<CheckRecord> bound_evidence(const UniPoly& f, const RootBound& b) {
  std::vector<CheckRecord> out;
  if (b.source == "rouche") {
    int n = f.degree();
    Rat lhs(0);
    for (int i = 0; i < n; ++i)
      lhs += Rat(abs_int(f.coeff(i))) * b.value.pow(i);
    Rat rhs = Rat(abs_int(f.coeff(n))) * b.value.pow(n);
    out.push_back(make_check("bound_rouche_inequality", lhs, "<", rhs));
  } else if (b.source == "enestrom_kakeya") {
    out.push_back(make_check("bound_ek_nonneg", Int(0), "<=", f.coeff(0)));
    for (int i = 0; i < f.degree(); ++i)
      out.push_back(make_check("bound_ek_chain_" + std::to_string(i),
                               f.coeff(i), "<=", f.coeff(i + 1)));
  }
  // The Cauchy bound is definitional in the coefficients; nothing to record.
  return out;
}

// The criteria battery for one quotient value.  Attempts stop at the
// first success.
std::vector<Attempt> run_criteria(const UniPoly& f, const Int& a, const Int& b,
                                  const Rat& q, const RootBound& bound,
                                  const TokenSet& tok,
                                  std::optional<std::size_t>& root_count) {
  std::vector<Attempt> attempts;
  Rat absa(abs_int(a)), absb(abs_int(b));
  Rat B = bound.value;
  auto rational_root_check = [&]() {
    if (!root_count) root_count = rational_roots(f).size();
    return make_check("no_rational_roots", Int(*root_count), "==", Int(0));
  };

  auto attempt_linear = [&]() {
    Attempt at{tok.bound_linear, {}, false};
    Rat lhs = q * absa + (Rat(1) + q) * B;
    at.checks.push_back(make_check("bound_form_linear", lhs, "<", absb));
    at.passed = at.checks.back().passed;
    return at;
  };
  auto attempt_squared = [&]() {
    Attempt at{tok.bound_squared, {}, false};
    at.checks.push_back(rational_root_check());
    at.checks.push_back(make_check("b_above_bound", B, "<", absb));
    at.checks.push_back(make_check("bound_form_squared",
                                   q * (absa + B).square(), "<",
                                   (absb - B).square()));
    at.passed = std::all_of(at.checks.begin(), at.checks.end(),
                            [](const CheckRecord& c) { return c.passed; });
    return at;
  };

  if (q == Rat(1)) {
    {  // midpoint form: a^2 < b^2 and B below |a+b|/2
      Attempt at{tok.midpoint, {}, false};
      at.checks.push_back(make_check("a_sq_below_b_sq", a * a, "<", b * b));
      at.checks.push_back(make_check("bound_below_midpoint", B,
                                     bound.strict ? "<=" : "<",
                                     Rat(abs_int(a + b), Int(2))));
      at.passed = at.checks[0].passed && at.checks[1].passed;
      attempts.push_back(std::move(at));
      if (attempts.back().passed) return attempts;
    }
    attempts.push_back(attempt_linear());
    if (attempts.back().passed) return attempts;
    attempts.push_back(attempt_squared());
    if (attempts.back().passed) return attempts;
    {  // half-plane form via the exact Routh table
      Attempt at{tok.half_plane, {}, false};
      Rat center(a + b, Int(2));
      RatPoly shifted = shift(f, center);
      if (b > a) {
        at.checks.push_back(make_check("half_plane_direction", a, "<", b));
        at.checks.push_back(
            stability_check("routh_stable_shifted", routh_hurwitz(shifted)));
      } else {
        // Roots must lie right of the midpoint; test the X -> -X mirror.
        std::vector<Rat> mirrored(shifted.coeffs());
        for (std::size_t i = 1; i < mirrored.size(); i += 2)
          mirrored[i] = -mirrored[i];
        at.checks.push_back(make_check("half_plane_direction", b, "<", a));
        at.checks.push_back(stability_check("routh_stable_mirrored",
                                            routh_hurwitz(RatPoly(mirrored))));
      }
      at.passed = at.checks[0].passed && at.checks[1].passed;
      attempts.push_back(std::move(at));
    }
    return attempts;
  }

  // q > 1
  attempts.push_back(attempt_linear());
  if (attempts.back().passed) return attempts;
  attempts.push_back(attempt_squared());
  if (attempts.back().passed) return attempts;
  {
    Attempt at{tok.disk_q, {}, false};
    at.checks.push_back(make_check("q_above_1", Rat(1), "<", q));
    at.checks.push_back(make_check("apollonius_margin_q",
                                   Rat(0), "<",
                                   apollonius_margin(a, b, q.square(), B)));
    at.passed = at.checks[0].passed && at.checks[1].passed;
    attempts.push_back(std::move(at));
    if (attempts.back().passed) return attempts;
  }
  {
    Attempt at{tok.disk_sqrt_q, {}, false};
    at.checks.push_back(make_check("q_above_1", Rat(1), "<", q));
    at.checks.push_back(rational_root_check());
    at.checks.push_back(make_check("apollonius_margin_sqrt_q", Rat(0), "<",
                                   apollonius_margin(a, b, q, B)));
    at.passed = std::all_of(at.checks.begin(), at.checks.end(),
                            [](const CheckRecord& c) { return c.passed; });
    attempts.push_back(std::move(at));
  }
  return attempts;
}

}  // namespace

Certificate certify(const UniPoly& f, const Int& a_in, const Int& b_in,
                    const CertifyOptions& options) {
  Certificate cert;
  cert.f = f;
  cert.a_input = a_in;
  cert.b_input = b_in;
  cert.a = a_in;
  cert.b = b_in;
  if (f.degree() < 1) {
    fail_precondition(cert, "degree must be at least 1");
    return cert;
  }
  if (f.degree() == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.criterion = criterion::kDegree1;
    cert.fa = f(a_in);
    cert.fb = f(b_in);
    return cert;
  }
  if (a_in == b_in) {
    fail_precondition(cert, "a and b must differ");
    return cert;
  }

  Int fa = f(a_in), fb = f(b_in);
  std::vector<CheckRecord> chain;
  if (fa == 0 || fb == 0) {
    chain.push_back(make_check("f_value_nonzero_a", Int(0), "<", abs_int(fa)));
    chain.push_back(make_check("f_value_nonzero_b", Int(0), "<", abs_int(fb)));
    cert.fa = fa;
    cert.fb = fb;
    cert.checks = std::move(chain);
    fail_precondition(cert, "f vanishes at an argument");
    return cert;
  }
  if (abs_int(fa) == abs_int(fb)) {
    chain.push_back(make_check("value_gap", abs_int(fa), "<", abs_int(fb)));
    cert.fa = fa;
    cert.fb = fb;
    cert.checks = std::move(chain);
    fail_precondition(cert, "|f(a)| and |f(b)| must differ");
    return cert;
  }
  cert.swapped = abs_int(fa) > abs_int(fb);
  if (cert.swapped) {
    cert.a = b_in;
    cert.b = a_in;
    std::swap(fa, fb);
  }
  cert.fa = fa;
  cert.fb = fb;
  chain.push_back(make_check("f_value_nonzero_a", Int(0), "<", abs_int(fa)));
  chain.push_back(make_check("value_gap", abs_int(fa), "<", abs_int(fb)));

  UniPoly df = f.derivative();
  cert.dfa = df(cert.a);
  cert.dfb = df(cert.b);
  cert.ga = gcd_int(abs_int(fa), abs_int(cert.dfa));
  cert.gb = gcd_int(abs_int(fb), abs_int(cert.dfb));

  try {
    cert.fa_factorization = factorize(fa, options.factor);
    cert.fb_factorization = factorize(fb, options.factor);
  } catch (const budget_error& e) {
    cert.verdict = Verdict::Inconclusive;
    cert.failure = FailureKind::BudgetExceeded;
    cert.failure_detail = e.what();
    cert.checks = std::move(chain);
    return cert;
  }
  cert.primality_method = is_prime_method(std::max(abs_int(fa), abs_int(fb)));

  const bool unitary_applicable = cert.ga == 1 && cert.gb == 1;
  if (options.kind == KindMode::UnitaryOnly && !unitary_applicable) {
    chain.push_back(make_check("gcd_f_df_a_is_1", cert.ga, "==", Int(1)));
    chain.push_back(make_check("gcd_f_df_b_is_1", cert.gb, "==", Int(1)));
    cert.verdict = Verdict::Inconclusive;
    cert.checks = std::move(chain);
    return cert;
  }

  auto pattern = match_pattern(*cert.fa_factorization, *cert.fb_factorization,
                               cert.ga, cert.gb);
  try {
    if (pattern) {
      cert.pattern = pattern->id;
      for (const auto& c : pattern->evidence) chain.push_back(c);
      cert.q = QuotientBound{Rat(1), Int(1), Int(1), DivisorKind::Admissible,
                             0, 0, true};
      if (unitary_applicable)
        cert.q_unitary = QuotientBound{Rat(1), Int(1), Int(1),
                                       DivisorKind::Unitary, 0, 0, true};
    } else {
      cert.q = max_divisor_quotient(*cert.fa_factorization, cert.ga,
                                    *cert.fb_factorization, cert.gb,
                                    DivisorKind::Admissible,
                                    &cert.divisor_pairs_scanned);
      if (unitary_applicable && options.kind != KindMode::AdmissibleOnly)
        cert.q_unitary = max_divisor_quotient(*cert.fa_factorization, cert.ga,
                                              *cert.fb_factorization, cert.gb,
                                              DivisorKind::Unitary,
                                              &cert.divisor_pairs_scanned);
    }
  } catch (const budget_error& e) {
    cert.verdict = Verdict::Inconclusive;
    cert.failure = FailureKind::BudgetExceeded;
    cert.failure_detail = e.what();
    cert.checks = std::move(chain);
    return cert;
  }
  if (cert.q) {
    chain.push_back(make_check("q_witness_feasible",
                               cert.q->d2 * cert.q->d2 * abs_int(fa), "<=",
                               cert.q->d1 * cert.q->d1 * abs_int(fb)));
    chain.push_back(make_check("q_at_least_1", Rat(1), "<=", cert.q->value));
  }
  if (cert.q_unitary)
    chain.push_back(
        make_check("qu_le_q", cert.q_unitary->value, "<=", cert.q->value));

  RootBound bound = best_root_bound(f, {Rat(abs_int(cert.a + cert.b), Int(2))});
  cert.bound = bound;
  for (const auto& c : bound_evidence(f, bound)) chain.push_back(c);

  std::optional<std::size_t> root_count;
  std::vector<Attempt> attempts;
  if (options.kind == KindMode::UnitaryOnly) {
    attempts = run_criteria(f, cert.a, cert.b, cert.q_unitary->value, bound,
                            kUnitaryTokens, root_count);
  } else {
    attempts = run_criteria(f, cert.a, cert.b, cert.q->value, bound,
                            kAdmissibleTokens, root_count);
    if (!attempts.back().passed && cert.q_unitary &&
        cert.q_unitary->value != cert.q->value) {
      auto extra = run_criteria(f, cert.a, cert.b, cert.q_unitary->value,
                                bound, kUnitaryTokens, root_count);
      for (auto& at : extra) attempts.push_back(std::move(at));
    }
  }

  for (auto& at : attempts) {
    if (at.passed) {
      cert.verdict = Verdict::Irreducible;
      cert.criterion = at.token;
      for (auto& c : at.checks) chain.push_back(std::move(c));
      cert.checks = std::move(chain);
      return cert;
    }
  }
  cert.verdict = Verdict::Inconclusive;
  for (auto& at : attempts)
    for (auto& c : at.checks) chain.push_back(std::move(c));
  cert.checks = std::move(chain);
  return cert;
}

Certificate certify_prime_value(const UniPoly& f, const Int& b,
                                const CertifyOptions& options) {
  Certificate cert;
  cert.f = f;
  cert.a_input = 0;
  cert.b_input = b;
  if (f.is_zero()) {
    fail_precondition(cert, "zero polynomial");
    return cert;
  }
  Int fb = f(b);
  if (fb == 0) {
    fail_precondition(cert, "f(b) must be nonzero");
    return cert;
  }
  if (f.degree() == 1 || f.degree() == 0) {
    if (f.degree() == 0) {
      fail_precondition(cert, "degree must be at least 1");
      return cert;
    }
    cert.verdict = Verdict::Irreducible;
    cert.criterion = criterion::kDegree1;
    cert.fb = fb;
    return cert;
  }

  std::vector<CheckRecord> route_checks;
  bool prime_value = is_prime(abs_int(fb));

  // Route 1: dominant leading coefficient (all roots below 1/2), a = 0.
  if (f.constant_term() != 0 && leading_coeff_dominates_half(f) &&
      abs_int(b) >= 1 && prime_value) {
    Int rhs = 0;
    int n = f.degree();
    for (int i = 0; i < n; ++i)
      rhs += abs_int(f.coeff(i)) * pow_int(2, n - i);
    route_checks.push_back(
        make_check("route_leading_dominance", rhs, "<", abs_int(f.coeff(n))));
    route_checks.push_back(make_check("route_b_nonzero", Int(1), "<=", abs_int(b)));
    CheckRecord prime{"route_value_prime", abs_int(fb).str(), "prime", "", false};
    prime.passed = reevaluate(prime);
    route_checks.push_back(prime);
    route_checks.push_back(make_check("route_value_above_a0",
                                      abs_int(f.constant_term()), "<",
                                      abs_int(fb)));
    Certificate inner = certify(f, Int(0), b, options);
    inner.route = criterion::kRouteCoro2;
    inner.checks.insert(inner.checks.begin(), route_checks.begin(),
                        route_checks.end());
    return inner;
  }

  // Route 2: Enestrom-Kakeya coefficients, a = sign(b).
  if (is_enestrom_kakeya(f) && f.constant_term() != 0 && f(Int(-1)) != 0 &&
      abs_int(b) >= 2 && prime_value) {
    route_checks.push_back(make_check("route_ek_nonneg", Int(0), "<=", f.coeff(0)));
    for (int i = 0; i < f.degree(); ++i)
      route_checks.push_back(make_check("route_ek_chain_" + std::to_string(i),
                                        f.coeff(i), "<=", f.coeff(i + 1)));
    route_checks.push_back(
        make_check("route_f_minus1_nonzero", f(Int(-1)), "!=", Int(0)));
    route_checks.push_back(make_check("route_b_at_least_2", Int(2), "<=", abs_int(b)));
    CheckRecord prime{"route_value_prime", abs_int(fb).str(), "prime", "", false};
    prime.passed = reevaluate(prime);
    route_checks.push_back(prime);
    Int a = b > 0 ? 1 : -1;
    Certificate inner = certify(f, a, b, options);
    inner.route = criterion::kRouteEk2;
    inner.checks.insert(inner.checks.begin(), route_checks.begin(),
                        route_checks.end());
    return inner;
  }

  // Neither route applies; report why.
  cert.verdict = Verdict::Inconclusive;
  cert.fb = fb;
  {
    Int rhs = 0;
    int n = f.degree();
    for (int i = 0; i < n; ++i)
      rhs += abs_int(f.coeff(i)) * pow_int(2, n - i);
    cert.checks.push_back(
        make_check("route_leading_dominance", rhs, "<", abs_int(f.coeff(n))));
    CheckRecord ek{"route_enestrom_kakeya",
                   is_enestrom_kakeya(f) ? "1" : "0", "==", "1", false};
    ek.passed = reevaluate(ek);
    cert.checks.push_back(ek);
    cert.checks.push_back(
        make_check("route_f_minus1_nonzero", f(Int(-1)), "!=", Int(0)));
    cert.checks.push_back(make_check("route_a0_nonzero", f.constant_term(),
                                     "!=", Int(0)));
    CheckRecord prime{"route_value_prime", abs_int(fb).str(), "prime", "",
                      false};
    prime.passed = reevaluate(prime);
    cert.checks.push_back(prime);
  }
  return cert;
}

Certificate search(const UniPoly& f, const Int& a_lo, const Int& a_hi,
                   const Int& b_lo, const Int& b_hi,
                   const CertifyOptions& options) {
  if (a_lo > a_hi || b_lo > b_hi)
    throw precondition_error("search: empty range");
  std::optional<Certificate> best;
  for (Int a = a_lo; a <= a_hi; ++a) {
    for (Int b = b_lo; b <= b_hi; ++b) {
      if (a == b) continue;
      Certificate cert = certify(f, a, b, options);
      if (cert.verdict == Verdict::Irreducible) return cert;
      if (!best || cert.passed_count() > best->passed_count())
        best = std::move(cert);
    }
  }
  if (!best) {
    Certificate cert;
    cert.f = f;
    cert.verdict = Verdict::Inconclusive;
    cert.failure = FailureKind::PreconditionViolated;
    cert.failure_detail = "search ranges contain no pair with a != b";
    return cert;
  }
  return *best;
}

}  // namespace polycert
