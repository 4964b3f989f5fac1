#ifndef POLYCERT_INTS_HPP
#define POLYCERT_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycert {

using Int = boost::multiprecision::cpp_int;

// Raised when a search or enumeration exceeds its step budget.  The engine
// reports it instead of silently truncating a result.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation's stated precondition does not hold.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_of(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// divides(d, n): d | n with the usual convention that everything divides 0
// and 0 divides only 0.
inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_string(const Int& a) { return a.str(); }

}  // namespace polycert

#endif  // POLYCERT_INTS_HPP
