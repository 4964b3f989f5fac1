#include <polycert/oracle.hpp>

#include <polycert/factor.hpp>

#include <algorithm>

namespace polycert {

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Irreducible: return "irreducible";
    case OracleStatus::Factored: return "factored";
    default: return "budget_exceeded";
  }
}

namespace {

// Evaluation points 0, 1, -1, 2, -2, ...
Int eval_point(std::size_t j) {
  if (j == 0) return 0;
  Int k = Int((j + 1) / 2);
  return j % 2 == 1 ? k : -k;
}

// Signed divisors in the fixed search order: positive ascending, each
// followed by its negative (the first point stays positive; see below).
std::vector<Int> signed_divisors(const Int& value, bool positive_only) {
  auto pos = all_divisors(factorize(value));
  std::vector<Int> out;
  out.reserve(pos.size() * (positive_only ? 1 : 2));
  for (const auto& d : pos) {
    out.push_back(d);
    if (!positive_only) out.push_back(-d);
  }
  return out;
}

UniPoly normalize_positive(const UniPoly& p) {
  return p.leading() < 0 ? -p : p;
}

void order_by_degree(UniPoly& g, UniPoly& h) {
  if (g.degree() > h.degree()) std::swap(g, h);
}

struct KroneckerSearch {
  const UniPoly& f;
  std::uint64_t budget;
  OracleStats stats;
  std::vector<Int> points;
  std::vector<Int> values;
  std::vector<std::vector<Int>> divisor_lists;
  bool exhausted = false;

  // Divided-difference columns: col[j][k] = [x_k .. x_j] of the candidate
  // values.  Integer polynomials have integer divided differences at
  // integer nodes, so any non-integer entry prunes the prefix.
  std::vector<std::vector<Int>> cols;

  explicit KroneckerSearch(const UniPoly& poly, std::uint64_t b)
      : f(poly), budget(b) {}

  std::size_t next_point_index = 0;

  void ensure_points(std::size_t count) {
    while (points.size() < count) {
      Int x = eval_point(next_point_index++);
      Int v = f(x);
      // Roots are split off before the search; the skip is a safety net.
      if (v == 0) continue;
      points.push_back(x);
      values.push_back(v);
      divisor_lists.push_back(signed_divisors(v, points.size() == 1));
    }
    stats.points_used = std::max<std::uint64_t>(stats.points_used, count);
  }

  // Extends the difference table with value d at level j; false if a
  // non-integer divided difference rules the prefix out.
  bool extend(std::size_t j, const Int& d) {
    std::vector<Int> col(j + 1);
    col[j] = d;
    for (std::size_t k = j; k-- > 0;) {
      Int num = col[k + 1] - cols[j - 1][k];
      Int den = points[j] - points[k];
      if (num % den != 0) return false;
      col[k] = num / den;
    }
    cols.push_back(std::move(col));
    return true;
  }

  UniPoly interpolant(std::size_t m) {
    // Newton form with coefficients cols[k][0].
    UniPoly g;
    UniPoly basis = UniPoly::constant(Int(1));
    for (std::size_t k = 0; k <= m; ++k) {
      g = g + basis * cols[k][0];
      basis = basis * UniPoly({-points[k].convert_to<long long>(), 1});
    }
    return g;
  }

  // Depth-first over divisor tuples for factor degree m.
  std::optional<UniPoly> search_degree(std::size_t m) {
    ensure_points(m + 1);
    cols.clear();
    return descend(0, m);
  }

  std::optional<UniPoly> descend(std::size_t j, std::size_t m) {
    for (const Int& d : divisor_lists[j]) {
      if (stats.tuples_tried >= budget) {
        exhausted = true;
        return std::nullopt;
      }
      ++stats.tuples_tried;
      if (!extend(j, d)) continue;
      if (j == m) {
        if (cols[m][0] != 0) {  // degree exactly m
          ++stats.candidates_built;
          UniPoly g = interpolant(m);
          ++stats.divisions_attempted;
          if (auto h = f.divide_exact(g)) {
            (void)h;
            cols.pop_back();
            return g;
          }
        }
      } else {
        if (auto g = descend(j + 1, m)) return g;
        if (exhausted) return std::nullopt;
      }
      cols.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

FactorizationResult kronecker_factor(const UniPoly& f, std::uint64_t budget) {
  if (f.is_zero() || f.degree() == 0)
    throw precondition_error("kronecker_factor: need deg f >= 1");
  if (budget == 0) throw precondition_error("kronecker_factor: need budget > 0");
  FactorizationResult res;
  Int content = f.content();
  if (f.leading() < 0) content = -content;
  res.content = content;
  UniPoly prim = f.primitive_part();
  if (prim.degree() == 1) {
    res.status = OracleStatus::Irreducible;
    return res;
  }

  // Degree-1 factors correspond exactly to rational roots.
  auto roots = rational_roots(prim);
  if (!roots.empty()) {
    const Rat& r = roots.front();
    UniPoly g(std::vector<Int>{-r.num(), r.den()});
    UniPoly h = *prim.divide_exact(g);
    res.status = OracleStatus::Factored;
    res.g = normalize_positive(g);
    res.h = normalize_positive(h);
    order_by_degree(res.g, res.h);
    return res;
  }

  KroneckerSearch search(prim, budget);
  std::size_t half = static_cast<std::size_t>(prim.degree()) / 2;
  for (std::size_t m = 2; m <= half; ++m) {
    auto g = search.search_degree(m);
    res.stats = search.stats;
    if (g) {
      UniPoly h = *prim.divide_exact(*g);
      res.status = OracleStatus::Factored;
      res.g = normalize_positive(*g);
      res.h = normalize_positive(h);
      order_by_degree(res.g, res.h);
      return res;
    }
    if (search.exhausted) {
      res.status = OracleStatus::BudgetExceeded;
      return res;
    }
  }
  res.status = OracleStatus::Irreducible;
  return res;
}

namespace {

// Exact division in GF(p)[X][Y]; each quotient step divides the running
// leading Y-coefficient by lc_Y(g) in GF(p)[X].
std::optional<BiPoly> bipoly_divide_exact(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return BiPoly(f.field());
  if (f.degree_y() < g.degree_y()) return std::nullopt;
  std::vector<FieldPoly> rem;
  for (const auto& c : f.coeffs_y()) rem.push_back(c);
  int dg = g.degree_y();
  std::vector<FieldPoly> quot(f.degree_y() - dg + 1, FieldPoly(f.field()));
  for (int k = f.degree_y() - dg; k >= 0; --k) {
    const FieldPoly& top = rem[k + dg];
    if (top.is_zero()) continue;
    auto q = top.divide_exact(g.coeff_y(dg));
    if (!q) return std::nullopt;
    quot[k] = *q;
    for (int i = 0; i <= dg; ++i)
      rem[k + i] = rem[k + i] - *q * g.coeff_y(i);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return BiPoly(f.field(), std::move(quot));
}

// Every monic divisor of a factored GF(p)[X] polynomial, by exponent
// vectors; used for the leading-coefficient candidates.
std::vector<FieldPoly> monic_divisors(const FieldFactorization& fac,
                                      const Field& field) {
  std::vector<FieldPoly> out{FieldPoly::constant(field, Rat(1))};
  for (const auto& [p, e] : fac.factors) {
    std::vector<FieldPoly> next;
    next.reserve(out.size() * (e + 1));
    for (const auto& d : out) {
      FieldPoly acc = d;
      next.push_back(acc);
      for (unsigned i = 1; i <= e; ++i) {
        acc = acc * p;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), FieldPoly::less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Odometer over polynomials of degree <= cap with p^ (cap+1) states.
bool next_poly(std::vector<Int>& digits, const Int& p) {
  for (auto& d : digits) {
    ++d;
    if (d < p) return true;
    d = 0;
  }
  return false;
}

}  // namespace

BivarFactorResult exhaustive_bivar_factor(const BiPoly& f, int degx_cap,
                                          std::uint64_t budget) {
  if (!f.field().is_prime_field())
    throw precondition_error("exhaustive_bivar_factor: field must be GF(p)");
  if (f.is_zero() || f.degree_y() < 1)
    throw precondition_error("exhaustive_bivar_factor: need deg_Y f >= 1");
  const Field& field = f.field();
  BivarFactorResult res(field);
  if (degx_cap < 0) degx_cap = std::max(f.degree_x(), 0);
  res.degx_cap = degx_cap;

  // X-content is a unit of GF(p)(X); strip and report it.
  FieldPoly content(field);
  for (const auto& c : f.coeffs_y())
    content = content.is_zero() ? c : (c.is_zero() ? content : poly_gcd(content, c));
  content = content.monic();
  res.content = content;
  std::vector<FieldPoly> reduced;
  for (const auto& c : f.coeffs_y())
    reduced.push_back(c.is_zero() ? c : *c.divide_exact(content));
  BiPoly prim(field, std::move(reduced));

  int n = prim.degree_y();
  if (n >= 2 && prim.coeff_y(0).is_zero()) {
    // Y divides; split immediately.
    std::vector<FieldPoly> shifted(prim.coeffs_y().begin() + 1,
                                   prim.coeffs_y().end());
    res.status = OracleStatus::Factored;
    res.g = BiPoly(field, {FieldPoly(field), FieldPoly::constant(field, Rat(1))});
    res.h = BiPoly(field, std::move(shifted));
    return res;
  }

  const Int& p = field.modulus();
  FieldFactorization lead_factors = factor_gfp(prim.coeff_y(n));
  std::vector<FieldPoly> lead_choices = monic_divisors(lead_factors, field);
  const FieldPoly& a0 = prim.coeff_y(0);

  for (int m = 1; m <= n / 2; ++m) {
    for (const auto& lead : lead_choices) {
      // Lower coefficients run over all polynomials of degree <= degx_cap.
      std::vector<std::vector<Int>> digits(
          m, std::vector<Int>(degx_cap + 1, Int(0)));
      bool more = true;
      while (more) {
        if (res.stats.tuples_tried >= budget) {
          res.status = OracleStatus::BudgetExceeded;
          return res;
        }
        ++res.stats.tuples_tried;
        std::vector<FieldPoly> gc;
        gc.reserve(m + 1);
        for (int i = 0; i < m; ++i)
          gc.push_back(FieldPoly::from_ints(field, std::vector<Int>(
                                                       digits[i].begin(),
                                                       digits[i].end())));
        gc.push_back(lead);
        // g(X,0) must divide f(X,0).
        bool plausible = !gc[0].is_zero() || a0.is_zero();
        if (plausible && !gc[0].is_zero())
          plausible = a0.divide_exact(gc[0]).has_value();
        if (plausible) {
          BiPoly g(field, gc);
          ++res.stats.divisions_attempted;
          if (auto h = bipoly_divide_exact(prim, g)) {
            if (h->degree_y() >= 1) {
              res.status = OracleStatus::Factored;
              res.g = g;
              res.h = *h;
              if (res.g.degree_y() > res.h.degree_y()) std::swap(res.g, res.h);
              return res;
            }
          }
        }
        // Advance the odometer across all m coefficient polynomials.
        int idx = 0;
        while (idx < m && !next_poly(digits[idx], p)) ++idx;
        more = idx < m;
      }
    }
  }
  res.status = OracleStatus::Irreducible;
  return res;
}

}  // namespace polycert
