#include <polycert/unipoly.hpp>

#include <polycert/factor.hpp>

#include <algorithm>
#include <set>

namespace polycert {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly::UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

UniPoly UniPoly::constant(const Int& c) {
  return UniPoly(std::vector<Int>{c});
}

UniPoly UniPoly::monomial(const Int& c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = c;
  return UniPoly(std::move(v));
}

const Int& UniPoly::leading() const {
  if (c_.empty()) throw precondition_error("UniPoly: zero polynomial");
  return c_.back();
}

const Int& UniPoly::constant_term() const {
  static const Int kZero(0);
  return c_.empty() ? kZero : c_.front();
}

Int UniPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat UniPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + Rat(*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Int> v(c_);
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Int& s) const {
  std::vector<Int> v(c_);
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& g) const {
  if (g.is_zero()) return std::nullopt;
  if (is_zero()) return UniPoly();
  if (degree() < g.degree()) return std::nullopt;
  std::vector<Int> rem(c_);
  std::vector<Int> quot(degree() - g.degree() + 1, Int(0));
  const Int& lead = g.c_.back();
  for (int k = degree() - g.degree(); k >= 0; --k) {
    Int top = rem[k + g.degree()];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int q = top / lead;
    quot[k] = q;
    for (std::size_t i = 0; i < g.c_.size(); ++i) rem[k + i] -= q * g.c_[i];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return UniPoly(std::move(quot));
}

Int UniPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) g = gcd_int(g, abs_int(x));
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return UniPoly();
  Int g = content();
  if (c_.back() < 0) g = -g;
  std::vector<Int> v(c_);
  for (auto& x : v) x /= g;
  return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int m = abs_int(a);
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    bool need_coeff = (m != 1) || i == 0;
    if (need_coeff) s += m.str();
    if (i > 0) {
      if (need_coeff) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::from(const UniPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.emplace_back(x);
  return RatPoly(std::move(v));
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw precondition_error("RatPoly: zero polynomial");
  return c_.back();
}

UniPoly RatPoly::cleared() const {
  if (is_zero()) return UniPoly();
  Int l = 1;
  for (const auto& r : c_) l = l / gcd_int(l, r.den()) * r.den();
  std::vector<Int> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i] = c_[i].num() * (l / c_[i].den());
  return UniPoly(std::move(v)).primitive_part();
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw precondition_error("rational_roots: zero polynomial");
  std::set<Rat> roots;
  // Split off X^k first so the candidate set p | a_0 is well defined.
  std::size_t low = 0;
  while (low < f.coeffs().size() && f.coeff(low) == 0) ++low;
  std::vector<Int> rest(f.coeffs().begin() + low, f.coeffs().end());
  UniPoly g{std::move(rest)};
  if (low > 0) roots.insert(Rat(0));
  if (g.degree() >= 1) {
    auto ps = all_divisors(factorize(g.constant_term()));
    auto qs = all_divisors(factorize(g.leading()));
    for (const auto& p : ps)
      for (const auto& q : qs) {
        Rat cand(p, q);
        if (g(cand).is_zero()) roots.insert(cand);
        if (g(-cand).is_zero()) roots.insert(-cand);
      }
  }
  return {roots.begin(), roots.end()};
}

bool rouche_all_roots_inside(const UniPoly& f, const Rat& radius) {
  if (f.degree() < 1)
    throw precondition_error("rouche_all_roots_inside: need deg >= 1");
  if (!(radius > Rat(0)))
    throw precondition_error("rouche_all_roots_inside: need R > 0");
  int n = f.degree();
  Rat lhs = Rat(abs_int(f.coeff(n))) * radius.pow(n);
  Rat rhs(0);
  for (int i = 0; i < n; ++i)
    rhs += Rat(abs_int(f.coeff(i))) * radius.pow(i);
  return lhs > rhs;
}

bool leading_coeff_dominates_half(const UniPoly& f) {
  if (f.degree() < 1)
    throw precondition_error("leading_coeff_dominates_half: need deg >= 1");
  int n = f.degree();
  Int rhs = 0;
  for (int i = 0; i < n; ++i)
    rhs += abs_int(f.coeff(i)) * pow_int(2, n - i);
  return abs_int(f.coeff(n)) > rhs;
}

Rat cauchy_root_bound(const UniPoly& f) {
  if (f.degree() < 1)
    throw precondition_error("cauchy_root_bound: need deg >= 1");
  int n = f.degree();
  Rat h(0);
  for (int i = 0; i < n; ++i)
    h = std::max(h, Rat(abs_int(f.coeff(i)), abs_int(f.coeff(n))));
  return Rat(1) + h;
}

bool is_enestrom_kakeya(const UniPoly& f) {
  if (f.is_zero()) return false;
  if (f.coeff(0) < 0) return false;
  for (int i = 0; i < f.degree(); ++i)
    if (f.coeff(i) > f.coeff(i + 1)) return false;
  return true;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::NotStable: return "not_stable";
    default: return "inconclusive";
  }
}

Stability routh_hurwitz(const RatPoly& f) {
  int n = f.degree();
  if (n < 1) throw precondition_error("routh_hurwitz: need deg >= 1");
  // Rows padded to a fixed width; row 0 is c_n, c_{n-2}, ..., row 1 is
  // c_{n-1}, c_{n-3}, ...; n+1 rows in total.
  std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<Rat> prev(width, Rat(0)), cur(width, Rat(0));
  for (int i = n, j = 0; i >= 0; i -= 2, ++j) prev[j] = f.coeff(i);
  for (int i = n - 1, j = 0; i >= 0; i -= 2, ++j) cur[j] = f.coeff(i);
  int ref = prev[0].sign();
  bool sign_change = false;
  for (int row = 1; row <= n; ++row) {
    bool all_zero = std::all_of(cur.begin(), cur.end(),
                                [](const Rat& x) { return x.is_zero(); });
    if (all_zero || cur[0].is_zero()) return Stability::Inconclusive;
    if (cur[0].sign() != ref) sign_change = true;
    if (row == n) break;
    std::vector<Rat> next(width, Rat(0));
    for (std::size_t i = 0; i + 1 < width; ++i)
      next[i] = (cur[0] * prev[i + 1] - prev[0] * cur[i + 1]) / cur[0];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sign_change ? Stability::NotStable : Stability::Stable;
}

RatPoly shift(const UniPoly& f, const Rat& c) {
  if (f.is_zero()) throw precondition_error("shift: zero polynomial");
  // In-place Taylor shift by repeated synthetic division.
  std::vector<Rat> w;
  w.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) w.emplace_back(x);
  int n = static_cast<int>(w.size()) - 1;
  for (int k = 0; k < n; ++k)
    for (int i = n - 1; i >= k; --i) w[i] += c * w[i + 1];
  return RatPoly(std::move(w));
}

UniPoly reciprocal(const UniPoly& f) {
  if (f.is_zero()) throw precondition_error("reciprocal: zero polynomial");
  if (f.constant_term() == 0)
    throw precondition_error("reciprocal: zero constant term");
  std::vector<Int> v(f.coeffs().rbegin(), f.coeffs().rend());
  return UniPoly(std::move(v));
}

}  // namespace polycert
