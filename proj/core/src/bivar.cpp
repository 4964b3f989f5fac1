#include <polycert/bivar.hpp>

#include <algorithm>

namespace polycert {

namespace {

CheckRecord make_check(std::string id, const Rat& lhs, std::string rel,
                       const Rat& rhs) {
  CheckRecord c{std::move(id), lhs.str(), std::move(rel), rhs.str(), false};
  c.passed = reevaluate(c);
  return c;
}

void fail_precondition(BivarCertificate& cert, std::string detail) {
  cert.verdict = Verdict::Inconclusive;
  cert.failure = FailureKind::PreconditionViolated;
  cert.failure_detail = std::move(detail);
}

}  // namespace

void BiPoly::trim() {
  while (!cy_.empty() && cy_.back().is_zero()) cy_.pop_back();
}

BiPoly::BiPoly(Field field, std::vector<FieldPoly> coeffs_by_y)
    : field_(std::move(field)), cy_(std::move(coeffs_by_y)) {
  for (const auto& c : cy_)
    if (!(c.field() == field_))
      throw precondition_error("BiPoly: coefficient field mismatch");
  trim();
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& c : cy_) d = std::max(d, c.degree());
  return d;
}

FieldPoly BiPoly::coeff_y(std::size_t i) const {
  return i < cy_.size() ? cy_[i] : FieldPoly(field_);
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  std::vector<FieldPoly> v;
  std::size_t n = std::max(a.cy_.size(), b.cy_.size());
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff_y(i) + b.coeff_y(i));
  return BiPoly(a.field_, std::move(v));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  std::vector<FieldPoly> v;
  std::size_t n = std::max(a.cy_.size(), b.cy_.size());
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff_y(i) - b.coeff_y(i));
  return BiPoly(a.field_, std::move(v));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<FieldPoly> v(a.cy_.size() + b.cy_.size() - 1,
                           FieldPoly(a.field_));
  for (std::size_t i = 0; i < a.cy_.size(); ++i)
    for (std::size_t j = 0; j < b.cy_.size(); ++j)
      v[i + j] = v[i + j] + a.cy_[i] * b.cy_[j];
  return BiPoly(a.field_, std::move(v));
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < cy_.size(); ++i) {
    if (cy_[i].is_zero()) continue;
    std::string coeff = cy_[i].str();
    bool simple = cy_[i].degree() <= 0 ||
                  (coeff.find(' ') == std::string::npos &&
                   coeff.find('-') == std::string::npos);
    std::string term;
    if (i == 0) {
      term = simple ? coeff : "(" + coeff + ")";
    } else {
      std::string ypart = i == 1 ? "y" : "y^" + std::to_string(i);
      if (cy_[i].is_one())
        term = ypart;
      else
        term = (simple ? coeff : "(" + coeff + ")") + "*" + ypart;
    }
    if (!s.empty()) s += " + ";
    s += term;
  }
  return s;
}

FieldPoly substitute(const BiPoly& f, const FieldPoly& s) {
  FieldPoly acc(f.field());
  for (std::size_t i = f.coeffs_y().size(); i-- > 0;)
    acc = acc * s + f.coeffs_y()[i];
  return acc;
}

BiPoly partial_y(const BiPoly& f) {
  if (f.degree_y() < 1) return BiPoly(f.field());
  std::vector<FieldPoly> v;
  v.reserve(f.coeffs_y().size() - 1);
  for (std::size_t i = 1; i < f.coeffs_y().size(); ++i)
    v.push_back(f.coeffs_y()[i].scaled(f.field().from_int(Int(i))));
  return BiPoly(f.field(), std::move(v));
}

std::optional<Rat> lambda_bound(const BiPoly& f) {
  int n = f.degree_y();
  if (n < 0 || f.coeff_y(n).is_zero())
    throw precondition_error("lambda_bound: zero leading Y-coefficient");
  int deg_an = f.coeff_y(n).degree();
  std::optional<Rat> best;
  for (int i = 0; i < n; ++i) {
    const FieldPoly c = f.coeff_y(i);
    if (c.is_zero()) continue;  // deg = -infinity, excluded from the max
    Rat slope(Int(c.degree() - deg_an), Int(n - i));
    if (!best || slope > *best) best = slope;
  }
  return best;
}

BivarContext make_bivar_context(const BiPoly& f, const FieldPoly& a,
                                const FieldPoly& b,
                                std::uint64_t oracle_budget) {
  BivarContext ctx{a, b, FieldPoly(f.field()), FieldPoly(f.field()), false,
                   Rat(0), std::nullopt, FieldPoly(f.field()),
                   FieldPoly(f.field()), {}, {}};
  ctx.fa = substitute(f, a);
  ctx.fb = substitute(f, b);
  if (ctx.fa.is_zero() || ctx.fb.is_zero())
    throw precondition_error("bivar context: f(X,a(X)) f(X,b(X)) = 0");
  if (ctx.fa.degree() > ctx.fb.degree()) {
    std::swap(ctx.a, ctx.b);
    std::swap(ctx.fa, ctx.fb);
    ctx.swapped = true;
  }
  ctx.delta = Rat(Int(ctx.fb.degree() - ctx.fa.degree()), Int(2));
  ctx.lambda = lambda_bound(f);
  BiPoly df = partial_y(f);
  FieldPoly dfa = substitute(df, ctx.a);
  FieldPoly dfb = substitute(df, ctx.b);
  ctx.ga = dfa.is_zero() ? ctx.fa.monic() : poly_gcd(ctx.fa, dfa);
  ctx.gb = dfb.is_zero() ? ctx.fb.monic() : poly_gcd(ctx.fb, dfb);
  ctx.fa_factors = factor_over_field(ctx.fa, oracle_budget);
  ctx.fb_factors = factor_over_field(ctx.fb, oracle_budget);
  return ctx;
}

DegreeQuotient compute_q_bivar(const BivarContext& ctx, DivisorKind kind) {
  if (ctx.delta < Rat(0))
    throw precondition_error("compute_q_bivar: delta must be >= 0");
  auto degrees = [&](const FieldFactorization& fac, const FieldPoly& g) {
    return kind == DivisorKind::Admissible ? divisor_degrees_admissible(fac, g)
                                           : divisor_degrees_unitary(fac);
  };
  auto da = degrees(ctx.fa_factors, ctx.ga);
  auto db = degrees(ctx.fb_factors, ctx.gb);
  DegreeQuotient best{0, 0, 0, kind, da.size(), db.size()};
  for (const auto& w2 : db) {
    for (const auto& w1 : da) {
      int gap = w2.degree - w1.degree;
      if (Rat(gap) > ctx.delta) continue;
      if (gap > best.value) {
        best.value = gap;
        best.d1_degree = w1.degree;
        best.d2_degree = w2.degree;
      }
    }
  }
  return best;
}

std::size_t BivarCertificate::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckRecord& c) { return c.passed; }));
}

BivarCertificate certify_bivar(const BiPoly& f, const FieldPoly& a,
                               const FieldPoly& b, const BivarOptions& options) {
  BivarCertificate cert;
  cert.field = f.field();
  cert.f = f;
  cert.a_input = a;
  cert.b_input = b;
  cert.a = a;
  cert.b = b;
  int n = f.degree_y();
  if (n < 1) {
    fail_precondition(cert, "degree in Y must be at least 1");
    return cert;
  }
  if (f.coeff_y(0).is_zero() || f.coeff_y(n).is_zero()) {
    fail_precondition(cert, "a_0(X) a_n(X) must be nonzero");
    return cert;
  }
  if (n == 1) {
    cert.verdict = Verdict::Irreducible;
    cert.criterion = criterion::kDegree1;
    return cert;
  }

  BivarContext ctx{a, b, FieldPoly(f.field()), FieldPoly(f.field()), false,
                   Rat(0), std::nullopt, FieldPoly(f.field()),
                   FieldPoly(f.field()), {}, {}};
  try {
    ctx = make_bivar_context(f, a, b, options.oracle_budget);
  } catch (const precondition_error& e) {
    fail_precondition(cert, e.what());
    return cert;
  } catch (const budget_error& e) {
    cert.failure = FailureKind::BudgetExceeded;
    cert.failure_detail = e.what();
    return cert;
  }
  cert.a = ctx.a;
  cert.b = ctx.b;
  cert.swapped = ctx.swapped;
  cert.fa = ctx.fa;
  cert.fb = ctx.fb;
  cert.delta = ctx.delta;
  cert.lambda = ctx.lambda;

  std::vector<CheckRecord> chain;
  chain.push_back(make_check("delta_nonneg", Rat(0), "<=", ctx.delta));

  // Fast paths need a = 0, nonconstant b, and deg a_n >= every deg a_i,
  // which is exactly lambda <= 0.
  bool fast_shape = ctx.a.is_zero() && ctx.b.degree() >= 1 && ctx.lambda &&
                    *ctx.lambda <= Rat(0);
  if (fast_shape) {
    std::vector<CheckRecord> fast;
    fast.push_back(make_check("fast_lambda_nonpositive", *ctx.lambda, "<=", Rat(0)));
    fast.push_back(
        make_check("fast_b_nonconstant", Rat(1), "<=", Rat(Int(ctx.b.degree()))));
    if (ctx.fb_factors.is_irreducible()) {
      cert.verdict = Verdict::Irreducible;
      cert.criterion = criterion::kCoro6;
      fast.push_back(make_check("fast_fb_irreducible_factors", Rat(1), "==",
                                Rat(Int(ctx.fb_factors.factors.size()))));
      fast.push_back(make_check(
          "fast_fb_irreducible_multiplicity", Rat(1), "==",
          Rat(Int(ctx.fb_factors.factors[0].second))));
      cert.checks = std::move(chain);
      for (auto& c : fast) cert.checks.push_back(std::move(c));
      return cert;
    }
    if (ctx.fb_factors.is_prime_power() && ctx.gb.degree() == 0) {
      cert.verdict = Verdict::Irreducible;
      cert.criterion = criterion::kCoro8;
      fast.push_back(make_check("fast_fb_prime_power_factors", Rat(1), "==",
                                Rat(Int(ctx.fb_factors.factors.size()))));
      fast.push_back(make_check("fast_fb_coprime_derivative", Rat(0), "==",
                                Rat(Int(ctx.gb.degree()))));
      cert.checks = std::move(chain);
      for (auto& c : fast) cert.checks.push_back(std::move(c));
      return cert;
    }
  }

  // General degree-gap criterion.
  DegreeQuotient q;
  try {
    q = compute_q_bivar(ctx, DivisorKind::Admissible);
  } catch (const budget_error& e) {
    cert.failure = FailureKind::BudgetExceeded;
    cert.failure_detail = e.what();
    cert.checks = std::move(chain);
    return cert;
  }
  cert.q = q;
  chain.push_back(make_check("q_witness_gap",
                             Rat(Int(q.d2_degree - q.d1_degree)), "<=",
                             ctx.delta));
  const bool unitary_applicable = ctx.ga.degree() == 0 && ctx.gb.degree() == 0;
  if (unitary_applicable) {
    cert.q_unitary = compute_q_bivar(ctx, DivisorKind::Unitary);
    chain.push_back(make_check("qu_le_q", Rat(Int(cert.q_unitary->value)),
                               "<=", Rat(Int(q.value))));
  }

  // deg b > max(deg a, lambda) + q; deg of the zero polynomial is
  // -infinity and drops out of the max.
  std::optional<Rat> base = ctx.lambda;
  if (!ctx.a.is_zero()) {
    Rat da(Int(ctx.a.degree()));
    if (!base || da > *base) base = da;
  }
  auto degree_gap_attempt = [&](int qv, const char* token) {
    if (ctx.b.is_zero()) {
      // deg b = -infinity: the gap criterion cannot hold.
      CheckRecord c{"criterion_b_nonzero", "0", "!=", "0", false};
      return std::pair<CheckRecord, const char*>(c, token);
    }
    if (!base) {
      // Unreachable through certify_bivar: a_0 != 0 keeps lambda finite.
      CheckRecord c{"criterion_degree_gap", "-inf", "<",
                    Rat(Int(ctx.b.degree())).str(), true};
      return std::pair<CheckRecord, const char*>(c, token);
    }
    return std::pair<CheckRecord, const char*>(
        make_check("criterion_degree_gap", *base + Rat(qv), "<",
                   Rat(Int(ctx.b.degree()))),
        token);
  };

  auto [check_admissible, token_admissible] =
      degree_gap_attempt(q.value, criterion::kThm5);
  if (check_admissible.passed) {
    cert.verdict = Verdict::Irreducible;
    cert.criterion = token_admissible;
    chain.push_back(std::move(check_admissible));
    cert.checks = std::move(chain);
    return cert;
  }
  chain.push_back(check_admissible);
  if (unitary_applicable && cert.q_unitary->value != q.value) {
    auto [check_unitary, token_unitary] =
        degree_gap_attempt(cert.q_unitary->value, criterion::kThm7);
    if (check_unitary.passed) {
      cert.verdict = Verdict::Irreducible;
      cert.criterion = token_unitary;
      chain.push_back(std::move(check_unitary));
      cert.checks = std::move(chain);
      return cert;
    }
    chain.push_back(check_unitary);
  }
  cert.verdict = Verdict::Inconclusive;
  cert.checks = std::move(chain);
  return cert;
}

bool eisenstein_check(const FieldPoly& f, const Int& p) {
  if (!f.field().is_rationals())
    throw precondition_error("eisenstein_check: rational coefficients required");
  if (f.degree() < 1) return false;
  Int l = 1;
  for (const auto& r : f.coeffs()) l = l / gcd_int(l, r.den()) * r.den();
  std::vector<Int> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = f.coeffs()[i].num() * (l / f.coeffs()[i].den());
  UniPoly prim = UniPoly(std::move(v)).primitive_part();
  int n = prim.degree();
  if (divides(p, prim.coeff(n))) return false;
  for (int i = 0; i < n; ++i)
    if (!divides(p, prim.coeff(i))) return false;
  return !divides(p * p, prim.coeff(0));
}

}  // namespace polycert
