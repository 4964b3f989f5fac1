#include <doctest.h>

#include <polycert/oracle.hpp>

#include <random>

using namespace polycert;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int deg, int coeff_range) {
  std::vector<Int> c(deg + 1);
  for (auto& x : c)
    x = Int(static_cast<long long>(rng() % (2 * coeff_range + 1)) - coeff_range);
  if (c.back() == 0) c.back() = 1;
  return UniPoly(std::move(c));
}

BiPoly bipoly_from(const Field& field,
                   std::vector<std::vector<long long>> rows) {
  std::vector<FieldPoly> cy;
  for (auto& row : rows) {
    std::vector<Int> c(row.begin(), row.end());
    cy.push_back(FieldPoly::from_ints(field, std::move(c)));
  }
  return BiPoly(field, std::move(cy));
}

}  // namespace

TEST_CASE("kronecker worked examples") {
  {
    auto r = kronecker_factor(UniPoly{1, 5, 6});
    REQUIRE(r.status == OracleStatus::Factored);
    CHECK(r.g * r.h == UniPoly{1, 5, 6});
    CHECK(r.g == UniPoly{1, 2});
    CHECK(r.h == UniPoly{1, 3});
  }
  CHECK(kronecker_factor(UniPoly{1, 0, 1}).status == OracleStatus::Irreducible);
  CHECK(kronecker_factor(UniPoly{-3, 0, -1, -1, 1, -4, 254}).status ==
        OracleStatus::Irreducible);
  {
    // x^2: the repeated root splits off.
    auto r = kronecker_factor(UniPoly{0, 0, 1});
    REQUIRE(r.status == OracleStatus::Factored);
    CHECK(r.g * r.h == UniPoly{0, 0, 1});
  }
  {
    // Content is split off and reported: 2x^2 + 2 is irreducible over Q.
    auto r = kronecker_factor(UniPoly{2, 0, 2});
    CHECK(r.status == OracleStatus::Irreducible);
    CHECK(r.content == 2);
  }
  {
    // (x^2+1)^2 has no rational roots but factors at degree 2.
    auto r = kronecker_factor(UniPoly{1, 0, 2, 0, 1});
    REQUIRE(r.status == OracleStatus::Factored);
    CHECK(r.g == UniPoly{1, 0, 1});
    CHECK(r.h == UniPoly{1, 0, 1});
  }
  CHECK_THROWS_AS(kronecker_factor(UniPoly{5}), precondition_error);
}

TEST_CASE("kronecker round-trips random products") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 300; ++i) {
    UniPoly g = random_poly(rng, 1 + rng() % 3, 9);
    UniPoly h = random_poly(rng, 1 + rng() % 3, 9);
    UniPoly f = g * h;
    auto r = kronecker_factor(f);
    REQUIRE_MESSAGE(r.status == OracleStatus::Factored, "f = ", f.str());
    CHECK(r.g * r.h * UniPoly::constant(r.content) == f);
    CHECK(r.g.degree() >= 1);
    CHECK(r.g.degree() <= r.h.degree());
    CHECK(r.g.content() == 1);
    CHECK(r.h.content() == 1);
    CHECK(r.g.leading() > 0);
    CHECK(r.h.leading() > 0);
  }
}

TEST_CASE("kronecker is deterministic") {
  UniPoly f{4, 4, 1, 9, 3, 1};
  auto a = kronecker_factor(f);
  auto b = kronecker_factor(f);
  CHECK(a.status == b.status);
  CHECK(a.stats.tuples_tried == b.stats.tuples_tried);
  CHECK(a.stats.points_used == b.stats.points_used);
  CHECK(a.stats.candidates_built == b.stats.candidates_built);
}

TEST_CASE("kronecker budget exhaustion is reported") {
  UniPoly f{30, 1, 0, 0, 7};
  auto r = kronecker_factor(f, 3);
  CHECK(r.status == OracleStatus::BudgetExceeded);
  CHECK(r.stats.tuples_tried <= 3);
}

TEST_CASE("bivariate exhaustive worked examples") {
  Field f3 = Field::gfp(3);
  {
    // y^2 - x^2 = (y - x)(y + x).
    BiPoly f = bipoly_from(f3, {{0, 0, -1}, {0}, {1}});
    auto r = exhaustive_bivar_factor(f);
    REQUIRE(r.status == OracleStatus::Factored);
    CHECK(r.g * r.h == f);
    CHECK(r.g.degree_y() == 1);
  }
  {
    // y^2 - x is irreducible over GF(3)(x).
    BiPoly f = bipoly_from(f3, {{0, -1}, {0}, {1}});
    CHECK(exhaustive_bivar_factor(f).status == OracleStatus::Irreducible);
  }
  {
    // y^2 is divisible by y.
    BiPoly f = bipoly_from(f3, {{0}, {0}, {1}});
    auto r = exhaustive_bivar_factor(f);
    REQUIRE(r.status == OracleStatus::Factored);
    CHECK(r.g * r.h == f);
  }
}

TEST_CASE("bivariate exhaustive round-trips random products") {
  std::mt19937_64 rng(777);
  Field f2 = Field::gfp(2);
  Field f3 = Field::gfp(3);
  for (int i = 0; i < 40; ++i) {
    const Field& field = (rng() % 2) ? f2 : f3;
    long long p = field.modulus().convert_to<long long>();
    auto rand_fp = [&](int deg) {
      std::vector<Int> c(deg + 1);
      for (auto& x : c) x = Int(static_cast<long long>(rng() % p));
      return FieldPoly::from_ints(field, std::move(c));
    };
    auto rand_bp = [&](int dy, int dx) {
      std::vector<FieldPoly> cy;
      for (int j = 0; j <= dy; ++j) cy.push_back(rand_fp(dx));
      while (cy.back().is_zero()) cy.back() = rand_fp(dx);
      return BiPoly(field, std::move(cy));
    };
    BiPoly g = rand_bp(1, 1), h = rand_bp(1 + rng() % 2, 1);
    BiPoly f = g * h;
    if (f.degree_y() < 2) continue;
    auto r = exhaustive_bivar_factor(f);
    REQUIRE_MESSAGE(r.status == OracleStatus::Factored, "f = ", f.str());
    // The found split reproduces f once the X-content is restored.
    BiPoly recombined = r.g * r.h;
    std::vector<FieldPoly> scaled;
    for (const auto& c : recombined.coeffs_y())
      scaled.push_back(c * r.content);
    CHECK(BiPoly(field, scaled) == f);
    CHECK(r.g.degree_y() >= 1);
    CHECK(r.h.degree_y() >= 1);
  }
}

TEST_CASE("bivariate exhaustive budget") {
  Field f5 = Field::gfp(5);
  BiPoly f = bipoly_from(f5, {{3, 0, 0, 1}, {1, 2}, {0, 1}, {1}});
  auto r = exhaustive_bivar_factor(f, -1, 10);
  CHECK(r.status == OracleStatus::BudgetExceeded);
}
