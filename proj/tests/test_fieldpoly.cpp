#include <doctest.h>

#include <polycert/field.hpp>

#include <random>

using namespace polycert;

namespace {

FieldPoly fp(const Field& field, std::vector<long long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return FieldPoly::from_ints(field, std::move(c));
}

FieldPoly random_fp(const Field& field, std::mt19937_64& rng, int max_deg,
                    long long range) {
  int deg = static_cast<int>(rng() % (max_deg + 1));
  std::vector<Int> c(deg + 1);
  for (auto& x : c) x = Int(static_cast<long long>(rng() % (2 * range + 1)) - range);
  return FieldPoly::from_ints(field, std::move(c));
}

}  // namespace

TEST_CASE("field element arithmetic") {
  Field q = Field::rationals();
  CHECK(q.inv(Rat(3, 4)) == Rat(4, 3));
  Field f7 = Field::gfp(7);
  CHECK(f7.canon(Rat(12)) == Rat(5));
  CHECK(f7.canon(Rat(-1)) == Rat(6));
  CHECK(f7.inv(Rat(3)) == Rat(5));  // 3 * 5 = 15 = 1 mod 7
  CHECK(f7.canon(Rat(1, 2)) == Rat(4));  // 2^-1 = 4 mod 7
  CHECK_THROWS_AS(f7.inv(Rat(0)), precondition_error);
  CHECK_THROWS_AS(Field::gfp(10), precondition_error);
}

TEST_CASE("poly gcd worked examples") {
  Field q = Field::rationals();
  CHECK(poly_gcd(fp(q, {-1, 0, 1}), fp(q, {-1, 1})) == fp(q, {-1, 1}));
  Field f2 = Field::gfp(2);
  // x^2 + 1 = (x+1)^2 in characteristic 2.
  CHECK(poly_gcd(fp(f2, {1, 0, 1}), fp(f2, {0, 1, 1})) == fp(f2, {1, 1}));
  CHECK(poly_gcd(fp(q, {2, 4}), FieldPoly(q)) == fp(q, {1, 2}).monic());
  CHECK_THROWS_AS(poly_gcd(FieldPoly(q), FieldPoly(q)), precondition_error);
}

TEST_CASE("poly gcd properties") {
  std::mt19937_64 rng(2718);
  Field fields[] = {Field::rationals(), Field::gfp(2), Field::gfp(5),
                    Field::gfp(13)};
  for (int i = 0; i < 200; ++i) {
    const Field& field = fields[rng() % 4];
    FieldPoly u = random_fp(field, rng, 5, 8);
    FieldPoly v = random_fp(field, rng, 5, 8);
    if (u.is_zero() && v.is_zero()) continue;
    FieldPoly g = poly_gcd(u, v);
    CHECK(!g.is_zero());
    CHECK(g.leading() == Rat(1));
    if (!u.is_zero()) CHECK(u.divide_exact(g).has_value());
    if (!v.is_zero()) CHECK(v.divide_exact(g).has_value());
    // A planted common factor always shows up.
    FieldPoly w = random_fp(field, rng, 3, 5);
    if (w.degree() >= 1) {
      FieldPoly g2 = poly_gcd(u * w, v * w);
      if (!(u * w).is_zero() && !(v * w).is_zero())
        CHECK(g2.divide_exact(w.monic()).has_value());
    }
  }
}

TEST_CASE("factor_gfp worked examples") {
  Field f3 = Field::gfp(3);
  {
    auto fac = factor_gfp(fp(f3, {-1, 0, 1}));  // x^2 - 1 = (x+1)(x+2)
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == fp(f3, {1, 1}));
    CHECK(fac.factors[1].first == fp(f3, {2, 1}));
    CHECK(fac.factors[0].second == 1);
  }
  {
    // x^5 - x over GF(5): all five monic linear factors.
    Field f5 = Field::gfp(5);
    auto fac = factor_gfp(fp(f5, {0, -1, 0, 0, 0, 1}));
    REQUIRE(fac.factors.size() == 5);
    for (const auto& [h, e] : fac.factors) {
      CHECK(h.degree() == 1);
      CHECK(e == 1);
    }
  }
  CHECK(factor_gfp(fp(f3, {1, 0, 1})).is_irreducible());  // x^2 + 1 mod 3
  {
    // p-th power handling: (x+1)^3 over GF(3) has zero derivative route.
    auto fac = factor_gfp(fp(f3, {1, 3, 3, 1}));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == fp(f3, {1, 1}));
    CHECK(fac.factors[0].second == 3);
  }
}

TEST_CASE("factor_gfp round-trips and is deterministic") {
  std::mt19937_64 rng(515);
  Field fields[] = {Field::gfp(2), Field::gfp(3), Field::gfp(5), Field::gfp(7)};
  for (int i = 0; i < 150; ++i) {
    const Field& field = fields[rng() % 4];
    FieldPoly f = random_fp(field, rng, 7, 10);
    if (f.is_zero()) continue;
    auto fac = factor_gfp(f);
    CHECK(fac.multiply_out(field) == f);
    for (const auto& [h, e] : fac.factors) {
      CHECK(h.leading() == Rat(1));
      CHECK(e >= 1);
      // Irreducibility spot check: no root splits off a linear factor
      // unless h is linear itself.
      if (h.degree() >= 2) {
        long long p = field.modulus().convert_to<long long>();
        for (long long r = 0; r < p; ++r) {
          Rat value(0);
          for (int k = h.degree(); k >= 0; --k)
            value = field.canon(value * Rat(r) + h.coeff(k));
          CHECK(!value.is_zero());
        }
      }
    }
    auto again = factor_gfp(f);
    CHECK(fac.factors == again.factors);
  }
}

TEST_CASE("factor_q worked examples") {
  Field q = Field::rationals();
  {
    auto fac = factor_q(fp(q, {1, 5, 6}));  // 6x^2+5x+1
    CHECK(fac.unit == Rat(6));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == FieldPoly(q, {Rat(1, 3), Rat(1)}));
    CHECK(fac.factors[1].first == FieldPoly(q, {Rat(1, 2), Rat(1)}));
  }
  CHECK(factor_q(fp(q, {3, 9, 0, 1})).is_irreducible());
  {
    auto fac = factor_q(fp(q, {0, 0, 1}));  // x^2 = x * x
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == fp(q, {0, 1}));
    CHECK(fac.factors[0].second == 2);
  }
}

TEST_CASE("factor_q round-trips") {
  std::mt19937_64 rng(626);
  Field q = Field::rationals();
  for (int i = 0; i < 60; ++i) {
    FieldPoly g = random_fp(q, rng, 3, 6);
    FieldPoly h = random_fp(q, rng, 3, 6);
    if (g.is_zero() || h.is_zero()) continue;
    FieldPoly f = g * h;
    if (f.degree() < 1) continue;
    auto fac = factor_q(f);
    CHECK(fac.multiply_out(q) == f);
  }
}

TEST_CASE("divisor degree sets") {
  Field f2 = Field::gfp(2);
  FieldPoly h = fp(f2, {1, 1, 0, 1});  // x^3 + x + 1, irreducible mod 2
  REQUIRE(factor_gfp(h).is_irreducible());
  {
    // F = h^2: unitary degrees {0, 6}.
    FieldFactorization fac{Rat(1), {{h, 2}}};
    auto uni = divisor_degrees_unitary(fac);
    REQUIRE(uni.size() == 2);
    CHECK(uni[0].degree == 0);
    CHECK(uni[1].degree == 6);
    // Admissible with G = 1: the middle divisor h has gcd(h, h) = h,
    // which does not divide 1.
    auto adm1 = divisor_degrees_admissible(fac, fp(f2, {1}));
    REQUIRE(adm1.size() == 2);
    CHECK(adm1[0].degree == 0);
    CHECK(adm1[1].degree == 6);
    // Admissible with G = h: all exponents allowed.
    auto admh = divisor_degrees_admissible(fac, h);
    REQUIRE(admh.size() == 3);
    CHECK(admh[1].degree == 3);
  }
  {
    // Squarefree with degrees 1 and 2: all divisors unitary.
    FieldPoly h1 = fp(f2, {0, 1});
    FieldPoly h2 = fp(f2, {1, 1, 1});
    FieldFactorization fac{Rat(1), {{h1, 1}, {h2, 1}}};
    auto uni = divisor_degrees_unitary(fac);
    REQUIRE(uni.size() == 4);
    CHECK(uni[0].degree == 0);
    CHECK(uni[1].degree == 1);
    CHECK(uni[2].degree == 2);
    CHECK(uni[3].degree == 3);
  }
}

TEST_CASE("divisor degree set properties") {
  std::mt19937_64 rng(828);
  Field fields[] = {Field::gfp(2), Field::gfp(3), Field::gfp(5)};
  for (int i = 0; i < 80; ++i) {
    const Field& field = fields[rng() % 3];
    FieldPoly f = random_fp(field, rng, 6, 10);
    if (f.degree() < 1) continue;
    auto fac = factor_gfp(f);
    FieldPoly g = random_fp(field, rng, 3, 10);
    if (g.is_zero()) g = fp(field, {1});
    // The admissible filter only sees factors of f; reduce g to a divisor
    // the way the criteria do (gcd with f).
    FieldPoly gg = poly_gcd(f, g);
    auto uni = divisor_degrees_unitary(fac);
    auto adm = divisor_degrees_admissible(fac, gg);
    auto has = [](const std::vector<DegreeWitness>& v, int d) {
      for (const auto& w : v)
        if (w.degree == d) return true;
      return false;
    };
    for (const auto& w : uni) CHECK(has(adm, w.degree));
    // Symmetry d <-> f/d.
    for (const auto& w : adm) CHECK(has(adm, f.degree() - w.degree));
    for (const auto& w : uni) CHECK(has(uni, f.degree() - w.degree));
    // Witness exponent vectors realize their degrees.
    for (const auto& w : adm) {
      int deg = 0;
      for (std::size_t k = 0; k < w.exponents.size(); ++k)
        deg += static_cast<int>(w.exponents[k]) * fac.factors[k].first.degree();
      CHECK(deg == w.degree);
    }
  }
}
