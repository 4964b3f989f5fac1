#include <polycert/certificate.hpp>

#include <algorithm>

namespace polycert {

std::string to_string(Verdict v) {
  return v == Verdict::Irreducible ? "irreducible" : "inconclusive";
}

std::string to_string(FailureKind f) {
  switch (f) {
    case FailureKind::None: return "none";
    case FailureKind::PreconditionViolated: return "precondition_violated";
    default: return "budget_exceeded";
  }
}

std::string to_string(DivisorKind k) {
  return k == DivisorKind::Admissible ? "admissible" : "unitary";
}

bool reevaluate(const CheckRecord& check) {
  if (check.rel == "stable") return check.lhs == "stable";
  if (check.rel == "not_stable") return check.lhs == "not_stable";
  if (check.rel == "prime") {
    Rat n = Rat::parse(check.lhs);
    if (!n.is_integer())
      throw precondition_error("reevaluate: primality needs an integer");
    return is_prime(n.num());
  }
  Rat lhs = Rat::parse(check.lhs);
  Rat rhs = Rat::parse(check.rhs);
  if (check.rel == "<") return lhs < rhs;
  if (check.rel == "<=") return lhs <= rhs;
  if (check.rel == ">") return lhs > rhs;
  if (check.rel == ">=") return lhs >= rhs;
  if (check.rel == "==") return lhs == rhs;
  if (check.rel == "!=") return lhs != rhs;
  if (check.rel == "|" || check.rel == "!|") {
    if (!lhs.is_integer() || !rhs.is_integer())
      throw precondition_error("reevaluate: divisibility needs integers");
    bool d = divides(lhs.num(), rhs.num());
    return check.rel == "|" ? d : !d;
  }
  throw precondition_error("reevaluate: unknown relation " + check.rel);
}

std::size_t Certificate::passed_count() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(),
                    [](const CheckRecord& c) { return c.passed; }));
}

bool reverify(const Certificate& cert) {
  for (const auto& check : cert.checks)
    if (reevaluate(check) != check.passed) return false;
  if (cert.verdict == Verdict::Irreducible) {
    if (cert.criterion.empty()) return false;
    for (const auto& check : cert.checks)
      if (!check.passed) return false;
  }
  return true;
}

}  // namespace polycert
