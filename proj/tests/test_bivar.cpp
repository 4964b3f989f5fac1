#include <doctest.h>

#include <polycert/bivar.hpp>
#include <polycert/oracle.hpp>

#include <random>

using namespace polycert;

namespace {

FieldPoly fp(const Field& field, std::vector<long long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return FieldPoly::from_ints(field, std::move(c));
}

BiPoly bp(const Field& field, std::vector<std::vector<long long>> rows) {
  std::vector<FieldPoly> cy;
  for (auto& row : rows) cy.push_back(fp(field, row));
  return BiPoly(field, std::move(cy));
}

// 3 + 2xy + (9x+4)y^2 + 3xy^3 + x^2 y^4
BiPoly example_five(const Field& field) {
  return bp(field, {{3}, {0, 2}, {4, 9}, {0, 3}, {0, 0, 1}});
}

// 9 + (54+81x)y + (6x+18x^2)y^2 + x^2 y^4
BiPoly example_six(const Field& field) {
  return bp(field, {{9}, {54, 81}, {0, 6, 18}, {0}, {0, 0, 1}});
}

BiPoly random_bp(const Field& field, std::mt19937_64& rng, int max_dy,
                 int max_dx) {
  long long p = field.modulus().convert_to<long long>();
  int dy = 1 + static_cast<int>(rng() % max_dy);
  std::vector<FieldPoly> cy;
  for (int j = 0; j <= dy; ++j) {
    std::vector<Int> c(1 + rng() % (max_dx + 1));
    for (auto& x : c) x = Int(static_cast<long long>(rng() % p));
    cy.push_back(FieldPoly::from_ints(field, std::move(c)));
  }
  return BiPoly(field, std::move(cy));
}

}  // namespace

TEST_CASE("substitute") {
  Field q = Field::rationals();
  BiPoly f = example_five(q);
  CHECK(substitute(f, fp(q, {0, 1})) == fp(q, {3, 0, 6, 9, 3, 0, 1}));
  CHECK(substitute(f, FieldPoly(q)) == fp(q, {3}));
  BiPoly g = example_six(q);
  // f(x,x) = (3 + 9x + x^3)^2
  FieldPoly h = fp(q, {3, 9, 0, 1});
  CHECK(substitute(g, fp(q, {0, 1})) == h * h);
}

TEST_CASE("substitute is a ring homomorphism") {
  std::mt19937_64 rng(111);
  Field f5 = Field::gfp(5);
  for (int i = 0; i < 100; ++i) {
    BiPoly g = random_bp(f5, rng, 3, 2);
    BiPoly h = random_bp(f5, rng, 3, 2);
    FieldPoly s = fp(f5, {static_cast<long long>(rng() % 5),
                          static_cast<long long>(rng() % 5)});
    CHECK(substitute(g * h, s) == substitute(g, s) * substitute(h, s));
    CHECK(substitute(g + h, s) == substitute(g, s) + substitute(h, s));
  }
}

TEST_CASE("partial_y") {
  Field q = Field::rationals();
  CHECK(partial_y(bp(q, {{0}, {0}, {1}})) == bp(q, {{0}, {2}}));
  // Derivative value of the second example at y = x.
  BiPoly g = example_six(q);
  CHECK(substitute(partial_y(g), fp(q, {0, 1})) ==
        fp(q, {54, 81, 12, 36, 0, 4}));
  CHECK(partial_y(bp(q, {{5, 7}})).is_zero());
}

TEST_CASE("partial_y product rule at a substitution point") {
  std::mt19937_64 rng(222);
  Field f3 = Field::gfp(3);
  for (int i = 0; i < 100; ++i) {
    BiPoly g = random_bp(f3, rng, 2, 2);
    BiPoly h = random_bp(f3, rng, 2, 2);
    FieldPoly s = fp(f3, {static_cast<long long>(rng() % 3),
                          static_cast<long long>(rng() % 3)});
    FieldPoly lhs = substitute(partial_y(g * h), s);
    FieldPoly rhs = substitute(partial_y(g), s) * substitute(h, s) +
                    substitute(g, s) * substitute(partial_y(h), s);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lambda bound") {
  Field q = Field::rationals();
  // Coefficient degrees (0,1,1,1,2) with n = 4.
  auto l = lambda_bound(example_five(q));
  REQUIRE(l.has_value());
  CHECK(*l == Rat(-1, 3));
  // All coefficients constants.
  CHECK(*lambda_bound(bp(q, {{1}, {2}, {3}})) == Rat(0));
  // deg a_0 = n - 0 with constant a_n: slope 1.
  CHECK(*lambda_bound(bp(q, {{0, 0, 1}, {1}, {5}})) == Rat(1));
  // Only the leading coefficient: -infinity sentinel.
  CHECK_FALSE(lambda_bound(bp(q, {{0}, {0}, {1}})).has_value());
}

TEST_CASE("compute_q_bivar worked shapes") {
  Field q = Field::rationals();
  {
    // Irreducible f(x,b): divisor degrees {0, deg fb}, so q = 0.
    BiPoly f = example_five(q);
    BivarContext ctx = make_bivar_context(f, FieldPoly(q), fp(q, {0, 1}),
                                          kDefaultOracleBudget);
    CHECK(ctx.delta == Rat(3));  // (6 - 0) / 2
    DegreeQuotient dq = compute_q_bivar(ctx, DivisorKind::Admissible);
    CHECK(dq.value == 0);
  }
  {
    // fa == fb gives delta = 0 and q = 0.
    BiPoly f = bp(q, {{1, 1}, {0, 1}, {1}});
    BivarContext ctx =
        make_bivar_context(f, fp(q, {2}), fp(q, {2}), kDefaultOracleBudget);
    CHECK(ctx.delta == Rat(0));
    CHECK(compute_q_bivar(ctx, DivisorKind::Admissible).value == 0);
  }
  {
    // Prime-power value coprime to the derivative value: unitary degrees
    // {0, k deg h}, q_u = 0.
    BiPoly f = example_six(q);
    BivarContext ctx = make_bivar_context(f, FieldPoly(q), fp(q, {0, 1}),
                                          kDefaultOracleBudget);
    CHECK(ctx.gb.degree() == 0);
    REQUIRE(ctx.fb_factors.is_prime_power());
    DegreeQuotient dq = compute_q_bivar(ctx, DivisorKind::Unitary);
    CHECK(dq.value == 0);
  }
}

TEST_CASE("certify_bivar on the two worked families") {
  Field q = Field::rationals();
  {
    BiPoly f = example_five(q);
    // The substituted value is Eisenstein at 3, hence irreducible.
    CHECK(eisenstein_check(substitute(f, fp(q, {0, 1})), 3));
    BivarCertificate cert = certify_bivar(f, FieldPoly(q), fp(q, {0, 1}));
    CHECK(cert.verdict == Verdict::Irreducible);
    CHECK(cert.criterion == criterion::kCoro6);
  }
  {
    BiPoly f = example_six(q);
    BivarCertificate cert = certify_bivar(f, FieldPoly(q), fp(q, {0, 1}));
    CHECK(cert.verdict == Verdict::Irreducible);
    CHECK(cert.criterion == criterion::kCoro8);
  }
  {
    // y^2 - x^2 factors; every criterion must abstain.
    BiPoly f = bp(q, {{0, 0, -1}, {0}, {1}});
    for (long long s = -2; s <= 2; ++s) {
      BivarCertificate cert = certify_bivar(f, fp(q, {s}), fp(q, {0, 1}));
      CHECK(cert.verdict == Verdict::Inconclusive);
      BivarCertificate cert2 = certify_bivar(f, fp(q, {s}), fp(q, {s, 1}));
      CHECK(cert2.verdict == Verdict::Inconclusive);
    }
  }
  {
    // Preconditions: zero substituted value.
    BiPoly f = bp(q, {{0, 0, -1}, {0}, {1}});
    BivarCertificate cert = certify_bivar(f, FieldPoly(q), fp(q, {0, 1}));
    CHECK(cert.failure == FailureKind::PreconditionViolated);
    // Vanishing a_0 a_n.
    BiPoly g = bp(q, {{0}, {1}, {1}});
    CHECK(certify_bivar(g, FieldPoly(q), fp(q, {0, 1})).failure ==
          FailureKind::PreconditionViolated);
  }
  {
    // Degree 1 in y is irreducible over K(x) outright.
    BiPoly f = bp(q, {{1, 2}, {3}});
    CHECK(certify_bivar(f, FieldPoly(q), fp(q, {0, 1})).verdict ==
          Verdict::Irreducible);
  }
}

TEST_CASE("certify_bivar over prime fields agrees with the exhaustive oracle") {
  std::mt19937_64 rng(333);
  Field fields[] = {Field::gfp(2), Field::gfp(3)};
  int certified = 0;
  for (int i = 0; i < 120; ++i) {
    const Field& field = fields[rng() % 2];
    BiPoly f = random_bp(field, rng, 3, 2);
    if (f.degree_y() < 2) continue;
    if (f.coeff_y(0).is_zero() || f.coeff_y(f.degree_y()).is_zero()) continue;
    std::vector<FieldPoly> subs = {FieldPoly(field), fp(field, {1}),
                                   fp(field, {0, 1}), fp(field, {1, 1}),
                                   fp(field, {0, 0, 1})};
    for (const auto& a : subs)
      for (const auto& b : subs) {
        if (a == b) continue;
        BivarCertificate cert = certify_bivar(f, a, b);
        if (cert.verdict != Verdict::Irreducible) continue;
        ++certified;
        auto oracle = exhaustive_bivar_factor(f);
        CHECK_MESSAGE(oracle.status == OracleStatus::Irreducible,
                      "unsound bivariate certificate for ", f.str());
      }
  }
  CHECK(certified >= 10);
}

TEST_CASE("degree bookkeeping under substitution") {
  std::mt19937_64 rng(444);
  Field f5 = Field::gfp(5);
  for (int i = 0; i < 150; ++i) {
    BiPoly f = random_bp(f5, rng, 3, 2);
    int n = f.degree_y();
    if (n < 1) continue;
    auto l = lambda_bound(f);
    std::vector<Int> c(2 + rng() % 3);
    for (auto& x : c) x = Int(static_cast<long long>(rng() % 5));
    FieldPoly b = FieldPoly::from_ints(f5, std::move(c));
    if (b.degree() < 1) continue;
    if (l && Rat(Int(b.degree())) <= *l) continue;
    CHECK(substitute(f, b).degree() ==
          n * b.degree() + f.coeff_y(n).degree());
  }
}

TEST_CASE("bivariate q_u never exceeds q") {
  std::mt19937_64 rng(555);
  Field f3 = Field::gfp(3);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 80; ++i) {
    BiPoly f = random_bp(f3, rng, 3, 2);
    if (f.degree_y() < 2) continue;
    FieldPoly a = fp(f3, {static_cast<long long>(rng() % 3)});
    FieldPoly b = fp(f3, {static_cast<long long>(rng() % 3),
                          1 + static_cast<long long>(rng() % 2)});
    try {
      BivarContext ctx = make_bivar_context(f, a, b, kDefaultOracleBudget);
      DegreeQuotient q = compute_q_bivar(ctx, DivisorKind::Admissible);
      DegreeQuotient qu = compute_q_bivar(ctx, DivisorKind::Unitary);
      CHECK(qu.value <= q.value);
      ++tested;
    } catch (const precondition_error&) {
      continue;
    }
  }
  CHECK(tested >= 40);
}

TEST_CASE("eisenstein_check") {
  Field q = Field::rationals();
  CHECK(eisenstein_check(fp(q, {3, 0, 6, 9, 3, 0, 1}), 3));
  CHECK_FALSE(eisenstein_check(fp(q, {1, 0, 1}), 2));
  CHECK(eisenstein_check(fp(q, {2, 2, 1}), 2));
  // p^2 | a_0 fails.
  CHECK_FALSE(eisenstein_check(fp(q, {4, 2, 1}), 2));
  // Denominators are cleared first: (2/3)x^2 + 2x + 2 ~ 2x^2 + 6x + 6 -> 3.
  CHECK(eisenstein_check(FieldPoly(q, {Rat(2), Rat(2), Rat(2, 3)}), 3));
}
