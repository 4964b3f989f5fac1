#include <polycert/field.hpp>

#include <polycert/factor.hpp>
#include <polycert/oracle.hpp>

#include <algorithm>
#include <map>

namespace polycert {

Field Field::rationals() { return Field{}; }

Field Field::gfp(const Int& p) {
  if (!is_prime(p)) throw precondition_error("Field::gfp: " + p.str() + " is not prime");
  Field f;
  f.p_ = p;
  return f;
}

const Int& Field::modulus() const {
  if (!p_) throw precondition_error("Field: rationals have no modulus");
  return *p_;
}

Rat Field::canon(const Rat& x) const {
  if (!p_) return x;
  Int num = x.num() % *p_;
  if (num < 0) num += *p_;
  if (x.den() == 1) return Rat(num);
  Int den = x.den() % *p_;
  if (den == 0) throw precondition_error("Field: denominator divisible by p");
  return mul(Rat(num), inv(Rat(den)));
}

Rat Field::inv(const Rat& x) const {
  if (x.is_zero()) throw precondition_error("Field: inverse of zero");
  if (!p_) return Rat(1) / x;
  // Extended Euclid on canonical representatives.
  Int a = x.num() % *p_, b = *p_, u = 1, v = 0;
  if (a < 0) a += *p_;
  while (b != 0) {
    Int t = a / b;
    a -= t * b;
    std::swap(a, b);
    u -= t * v;
    std::swap(u, v);
  }
  u %= *p_;
  if (u < 0) u += *p_;
  return Rat(u);
}

std::string Field::str() const {
  return p_ ? "gfp:" + p_->str() : "q";
}

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly::FieldPoly(Field field, std::vector<Rat> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  for (auto& x : c_) x = field_.canon(x);
  trim();
}

FieldPoly FieldPoly::from_ints(const Field& field, std::vector<Int> coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (auto& x : coeffs) v.emplace_back(std::move(x));
  return FieldPoly(field, std::move(v));
}

FieldPoly FieldPoly::constant(const Field& field, const Rat& c) {
  return FieldPoly(field, {c});
}

FieldPoly FieldPoly::monomial(const Field& field, const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return FieldPoly(field, std::move(v));
}

const Rat& FieldPoly::leading() const {
  if (c_.empty()) throw precondition_error("FieldPoly: zero polynomial");
  return c_.back();
}

void FieldPoly::check_same_field(const FieldPoly& o) const {
  if (!(field_ == o.field_))
    throw precondition_error("FieldPoly: mixed fields");
}

FieldPoly FieldPoly::operator-() const {
  FieldPoly r(field_);
  r.c_ = c_;
  for (auto& x : r.c_) x = field_.neg(x);
  return r;
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
  a.check_same_field(b);
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return FieldPoly(a.field_, std::move(v));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  a.check_same_field(b);
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return FieldPoly(a.field_, std::move(v));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  a.check_same_field(b);
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_);
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = a.field_.add(v[i + j], a.c_[i] * b.c_[j]);
  return FieldPoly(a.field_, std::move(v));
}

FieldPoly FieldPoly::scaled(const Rat& s) const {
  std::vector<Rat> v(c_);
  for (auto& x : v) x = field_.mul(x, s);
  return FieldPoly(field_, std::move(v));
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

FieldPoly FieldPoly::derivative() const {
  if (c_.size() <= 1) return FieldPoly(field_);
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = field_.mul(c_[i], field_.from_int(Int(i)));
  return FieldPoly(field_, std::move(v));
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& v) const {
  check_same_field(v);
  if (v.is_zero()) throw precondition_error("FieldPoly: division by zero");
  if (degree() < v.degree()) return {FieldPoly(field_), *this};
  std::vector<Rat> rem(c_);
  std::vector<Rat> quot(degree() - v.degree() + 1, Rat(0));
  Rat lead_inv = field_.inv(v.leading());
  for (int k = degree() - v.degree(); k >= 0; --k) {
    Rat top = rem[k + v.degree()];
    if (top.is_zero()) continue;
    Rat q = field_.mul(top, lead_inv);
    quot[k] = q;
    for (std::size_t i = 0; i < v.c_.size(); ++i)
      rem[k + i] = field_.sub(rem[k + i], q * v.c_[i]);
  }
  return {FieldPoly(field_, std::move(quot)), FieldPoly(field_, std::move(rem))};
}

std::optional<FieldPoly> FieldPoly::divide_exact(const FieldPoly& v) const {
  if (v.is_zero()) return std::nullopt;
  auto [q, r] = divmod(v);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

FieldPoly FieldPoly::pow_mod(const Int& e, const FieldPoly& m) const {
  FieldPoly base = mod(m);
  FieldPoly acc = FieldPoly::constant(field_, Rat(1));
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) acc = (acc * base).mod(m);
    base = (base * base).mod(m);
    k >>= 1;
  }
  return acc;
}

std::string FieldPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a.is_zero()) continue;
    Rat m = a.abs();
    if (s.empty()) {
      if (a.sign() < 0) s += "-";
    } else {
      s += a.sign() < 0 ? " - " : " + ";
    }
    bool need_coeff = !(m == Rat(1)) || i == 0;
    if (need_coeff) s += m.str();
    if (i > 0) {
      if (need_coeff) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

bool FieldPoly::less(const FieldPoly& a, const FieldPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

namespace {

// Primitive integer polynomial carrying the same roots as a rational one.
UniPoly to_primitive_integer(const FieldPoly& f) {
  Int l = 1;
  for (const auto& r : f.coeffs()) l = l / gcd_int(l, r.den()) * r.den();
  std::vector<Int> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = f.coeffs()[i].num() * (l / f.coeffs()[i].den());
  return UniPoly(std::move(v)).primitive_part();
}

FieldPoly from_integer(const Field& field, const UniPoly& p) {
  std::vector<Int> v(p.coeffs());
  return FieldPoly::from_ints(field, std::move(v));
}

// Pseudo-remainder sequence with primitive-part reduction at each step.
UniPoly primitive_prs_gcd(UniPoly u, UniPoly v) {
  while (!v.is_zero()) {
    // lc(v)^(deg u - deg v + 1) * u mod v stays in Z[X].
    int k = u.degree() - v.degree() + 1;
    if (k < 0) {
      std::swap(u, v);
      continue;
    }
    UniPoly r = u * pow_int(v.leading(), static_cast<unsigned>(k));
    while (!r.is_zero() && r.degree() >= v.degree()) {
      Int q = r.leading() / v.leading();
      r = r - (v * q) * UniPoly::monomial(Int(1), r.degree() - v.degree());
      // Exactness of the leading division is guaranteed by the lc power.
    }
    u = v;
    v = r.primitive_part();
  }
  return u.primitive_part();
}

}  // namespace

FieldPoly poly_gcd(const FieldPoly& u, const FieldPoly& v) {
  if (u.is_zero() && v.is_zero())
    throw precondition_error("poly_gcd: both arguments zero");
  if (u.is_zero()) return v.monic();
  if (v.is_zero()) return u.monic();
  if (u.field().is_rationals()) {
    UniPoly g = primitive_prs_gcd(to_primitive_integer(u),
                                  to_primitive_integer(v));
    return from_integer(u.field(), g).monic();
  }
  FieldPoly a = u, b = v;
  while (!b.is_zero()) {
    FieldPoly r = a.mod(b);
    a = b;
    b = r;
  }
  return a.monic();
}

namespace {

std::uint64_t xorshift64(std::uint64_t& s) {
  s ^= s << 13;
  s ^= s >> 7;
  s ^= s << 17;
  return s;
}

// f(X) = g(X^p) over GF(p) is g(X)^p; recover g.
FieldPoly pth_root(const FieldPoly& f) {
  const Int& p = f.field().modulus();
  std::size_t step = p.convert_to<std::size_t>();
  std::vector<Rat> v;
  for (std::size_t i = 0; i * step <= static_cast<std::size_t>(f.degree()); ++i)
    v.push_back(f.coeff(i * step));
  return FieldPoly(f.field(), std::move(v));
}

void squarefree_decompose(const FieldPoly& f, unsigned mult,
                          std::vector<std::pair<FieldPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  FieldPoly df = f.derivative();
  unsigned p = f.field().modulus().convert_to<unsigned>();
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), mult * p, out);
    return;
  }
  FieldPoly c = poly_gcd(f, df);
  FieldPoly w = *f.divide_exact(c);
  unsigned i = 1;
  while (!w.is_one()) {
    FieldPoly y = poly_gcd(w, c);
    FieldPoly z = *w.divide_exact(y);
    if (!z.is_one()) out.emplace_back(z, mult * i);
    w = y;
    c = *c.divide_exact(y);
    ++i;
  }
  if (!c.is_one()) squarefree_decompose(pth_root(c), mult * p, out);
}

// Splits a squarefree product of degree-d irreducibles (Cantor-Zassenhaus;
// char 2 uses trace sums).
void equal_degree_split(const FieldPoly& f, int d, std::uint64_t& seed,
                        std::vector<FieldPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& field = f.field();
  const Int& p = field.modulus();
  FieldPoly x = FieldPoly::monomial(field, Rat(1), 1);
  while (true) {
    // Random polynomial of degree < 2d from the fixed stream.
    std::vector<Rat> uc;
    for (int i = 0; i < 2 * d; ++i)
      uc.emplace_back(Int(xorshift64(seed) % p.convert_to<std::uint64_t>()));
    FieldPoly u(field, std::move(uc));
    if (u.is_zero()) continue;
    FieldPoly h(field);
    if (p == 2) {
      FieldPoly t = u.mod(f), acc = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t).mod(f);
        acc = acc + t;
      }
      h = acc;
    } else {
      Int e = (pow_int(p, static_cast<unsigned>(d)) - 1) / 2;
      h = u.pow_mod(e, f) - FieldPoly::constant(field, Rat(1));
    }
    if (h.is_zero()) continue;
    FieldPoly g = poly_gcd(h, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, seed, out);
      equal_degree_split(*f.divide_exact(g), d, seed, out);
      return;
    }
  }
}

}  // namespace

FieldFactorization factor_gfp(const FieldPoly& f, std::uint64_t seed) {
  if (!f.field().is_prime_field())
    throw precondition_error("factor_gfp: field must be GF(p)");
  if (f.is_zero()) throw precondition_error("factor_gfp: zero polynomial");
  FieldFactorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  std::vector<std::pair<FieldPoly, unsigned>> squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);
  const Field& field = f.field();
  const Int& p = field.modulus();
  for (const auto& [part, mult] : squarefree) {
    // Distinct-degree splitting of the squarefree part.
    FieldPoly rest = part.monic();
    FieldPoly x = FieldPoly::monomial(field, Rat(1), 1);
    FieldPoly h = x.mod(rest);
    std::vector<std::pair<FieldPoly, int>> by_degree;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = h.pow_mod(p, rest);
      FieldPoly g = poly_gcd(h - x, rest);
      if (g.degree() > 0) {
        by_degree.emplace_back(g, d);
        rest = *rest.divide_exact(g);
        h = h.mod(rest);
      }
    }
    if (rest.degree() > 0) by_degree.emplace_back(rest, rest.degree());
    for (const auto& [product, d] : by_degree) {
      std::vector<FieldPoly> irreducibles;
      std::uint64_t s = seed;
      equal_degree_split(product, d, s, irreducibles);
      for (auto& irr : irreducibles) out.factors.emplace_back(irr, mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              return FieldPoly::less(a.first, b.first);
            });
  return out;
}

FieldFactorization factor_q(const FieldPoly& f, std::uint64_t oracle_budget) {
  if (!f.field().is_rationals())
    throw precondition_error("factor_q: field must be the rationals");
  if (f.is_zero()) throw precondition_error("factor_q: zero polynomial");
  FieldFactorization out;
  out.unit = f.leading();
  if (f.degree() == 0) return out;
  UniPoly prim = to_primitive_integer(f);
  std::vector<UniPoly> stack{prim}, irreducible;
  while (!stack.empty()) {
    UniPoly cur = stack.back();
    stack.pop_back();
    if (cur.degree() <= 1) {
      irreducible.push_back(cur);
      continue;
    }
    FactorizationResult r = kronecker_factor(cur, oracle_budget);
    if (r.status == OracleStatus::BudgetExceeded)
      throw budget_error("factor_q: oracle budget exhausted");
    if (r.status == OracleStatus::Irreducible) {
      irreducible.push_back(cur);
    } else {
      stack.push_back(r.g);
      stack.push_back(r.h);
    }
  }
  // Normalize each primitive factor to a monic rational polynomial.
  std::vector<std::pair<FieldPoly, unsigned>> collected;
  for (const auto& p : irreducible) {
    FieldPoly m = from_integer(f.field(), p).monic();
    bool found = false;
    for (auto& [poly, exp] : collected) {
      if (poly == m) {
        ++exp;
        found = true;
        break;
      }
    }
    if (!found) collected.emplace_back(m, 1);
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    return FieldPoly::less(a.first, b.first);
  });
  out.factors = std::move(collected);
  return out;
}

FieldFactorization factor_over_field(const FieldPoly& f,
                                     std::uint64_t oracle_budget) {
  return f.field().is_rationals() ? factor_q(f, oracle_budget)
                                  : factor_gfp(f);
}

FieldPoly FieldFactorization::multiply_out(const Field& field) const {
  FieldPoly acc = FieldPoly::constant(field, unit);
  for (const auto& [p, e] : factors)
    for (unsigned i = 0; i < e; ++i) acc = acc * p;
  return acc;
}

namespace {

template <typename Keep>
std::vector<DegreeWitness> enumerate_degrees(const FieldFactorization& f,
                                             Keep keep) {
  Int count = 1;
  for (const auto& [p, e] : f.factors) count *= Int(e) + 1;
  if (count > kMaxDivisors)
    throw budget_error("divisor_degrees: more than 2^20 exponent vectors");
  std::map<int, std::vector<unsigned>> found;  // degree -> first witness
  std::vector<unsigned> expv(f.factors.size(), 0);
  while (true) {
    if (keep(expv)) {
      int deg = 0;
      for (std::size_t i = 0; i < expv.size(); ++i)
        deg += static_cast<int>(expv[i]) * f.factors[i].first.degree();
      found.emplace(deg, expv);  // keeps the first witness per degree
    }
    std::size_t i = 0;
    while (i < expv.size() && expv[i] == f.factors[i].second) expv[i++] = 0;
    if (i == expv.size()) break;
    ++expv[i];
  }
  std::vector<DegreeWitness> out;
  out.reserve(found.size());
  for (auto& [deg, wit] : found) out.push_back({deg, std::move(wit)});
  return out;
}

}  // namespace

std::vector<DegreeWitness> divisor_degrees_unitary(
    const FieldFactorization& f) {
  return enumerate_degrees(f, [&](const std::vector<unsigned>& expv) {
    for (std::size_t i = 0; i < expv.size(); ++i)
      if (expv[i] != 0 && expv[i] != f.factors[i].second) return false;
    return true;
  });
}

std::vector<DegreeWitness> divisor_degrees_admissible(
    const FieldFactorization& f, const FieldPoly& admissible_gcd) {
  // Multiplicity of each irreducible factor inside the admissible gcd.
  std::vector<unsigned> cap(f.factors.size(), 0);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    FieldPoly g = admissible_gcd;
    while (true) {
      auto q = g.divide_exact(f.factors[i].first);
      if (!q) break;
      ++cap[i];
      g = *q;
    }
  }
  return enumerate_degrees(f, [&](const std::vector<unsigned>& expv) {
    for (std::size_t i = 0; i < expv.size(); ++i) {
      unsigned v = expv[i];
      unsigned co = f.factors[i].second - v;
      if (std::min(v, co) > cap[i]) return false;
    }
    return true;
  });
}

}  // namespace polycert
