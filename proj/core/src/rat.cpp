#include <polycert/rat.hpp>

#include <ostream>

namespace polycert {

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw precondition_error("Rat: zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd_int(abs_int(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(Int(text));
  return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

Rat Rat::operator-() const {
  Rat r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw precondition_error("Rat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rat Rat::pow(unsigned e) const {
  return Rat(pow_int(num_, e), pow_int(den_, e));
}

std::string Rat::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rat::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace polycert
