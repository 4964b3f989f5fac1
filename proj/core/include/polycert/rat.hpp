#ifndef POLYCERT_RAT_HPP
#define POLYCERT_RAT_HPP

#include <polycert/ints.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace polycert {

// Exact rational number.  Always in lowest terms with a positive
// denominator; comparisons are exact cross-multiplications.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(const Int& n) : num_(n), den_(1) {}  // NOLINT implicit on purpose
  Rat(long long n) : num_(n), den_(1) {}   // NOLINT
  Rat(Int num, Int den);
  static Rat parse(const std::string& text);  // "p" or "p/q"

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sign_of(num_); }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }
  Rat pow(unsigned e) const;
  Rat square() const { return Rat(num_ * num_, den_ * den_); }

  // Decimal string, "p" for integers and "p/q" otherwise.
  std::string str() const;

  double to_double() const;

 private:
  Int num_;
  Int den_;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace polycert

#endif  // POLYCERT_RAT_HPP
