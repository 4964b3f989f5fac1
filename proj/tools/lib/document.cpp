#include "document.hpp"

#include <polycert/criteria.hpp>

namespace polycert::cli {

namespace {

using nlohmann::json;

json input_block(const DocumentInput& in) {
  json j;
  j["command"] = in.command;
  if (!in.poly.empty()) j["poly"] = in.poly;
  if (!in.a.empty()) j["a"] = in.a;
  if (!in.b.empty()) j["b"] = in.b;
  if (!in.divisors.empty()) j["divisors"] = in.divisors;
  if (!in.field.empty()) j["field"] = in.field;
  return j;
}

json factorization_block(const IntegerFactorization& f) {
  json factors = json::array();
  for (const auto& [p, e] : f.factors())
    factors.push_back(json::array({p.str(), std::to_string(e)}));
  return json{{"sign", std::to_string(f.sign())}, {"factors", factors}};
}

json quotient_block(const QuotientBound& q) {
  json j;
  j["value"] = q.value.str();
  j["d1"] = q.d1.str();
  j["d2"] = q.d2.str();
  j["kind"] = to_string(q.kind);
  j["set_sizes"] = json::array(
      {std::to_string(q.da_size), std::to_string(q.db_size)});
  j["from_pattern"] = q.from_pattern;
  return j;
}

json checks_block(const std::vector<CheckRecord>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json j;
    j["id"] = c.id;
    j["lhs"] = c.lhs;
    j["rel"] = c.rel;
    if (!c.rhs.empty()) j["rhs"] = c.rhs;
    j["pass"] = c.passed;
    arr.push_back(std::move(j));
  }
  return arr;
}

json stats_block(const OracleStats& s) {
  json j;
  j["points_used"] = std::to_string(s.points_used);
  j["tuples_tried"] = std::to_string(s.tuples_tried);
  j["candidates_built"] = std::to_string(s.candidates_built);
  j["divisions_attempted"] = std::to_string(s.divisions_attempted);
  return j;
}

json seeds_block() {
  FactorOptions defaults;
  json j;
  j["rho"] = std::to_string(defaults.rho_seed);
  j["gfp_split"] = std::to_string(kGfpSplitSeed);
  return j;
}

}  // namespace

json certificate_document(const Certificate& cert, const DocumentInput& input,
                          const FactorizationResult* oracle_result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input_block(input);
  j["verdict"] = to_string(cert.verdict);
  if (cert.failure != FailureKind::None)
    j["failure"] = json{{"kind", to_string(cert.failure)},
                        {"detail", cert.failure_detail}};
  if (!cert.criterion.empty()) j["criterion"] = cert.criterion;
  if (!cert.pattern.empty()) j["pattern"] = cert.pattern;
  if (!cert.route.empty()) j["route"] = cert.route;
  j["oriented"] = json{{"a", cert.a.str()},
                       {"b", cert.b.str()},
                       {"swapped", cert.swapped}};
  j["values"] = json{{"f_a", cert.fa.str()},   {"f_b", cert.fb.str()},
                     {"df_a", cert.dfa.str()}, {"df_b", cert.dfb.str()},
                     {"gcd_a", cert.ga.str()}, {"gcd_b", cert.gb.str()}};
  if (cert.fa_factorization && cert.fb_factorization)
    j["factorizations"] = json{
        {"f_a", factorization_block(*cert.fa_factorization)},
        {"f_b", factorization_block(*cert.fb_factorization)}};
  if (cert.q) j["q"] = quotient_block(*cert.q);
  if (cert.q_unitary) j["q_unitary"] = quotient_block(*cert.q_unitary);
  if (cert.bound) {
    json radii = json::array();
    for (const auto& [r, holds] : cert.bound->rouche_radii)
      radii.push_back(json::array({r.str(), holds}));
    j["bound"] = json{{"value", cert.bound->value.str()},
                      {"strict", cert.bound->strict},
                      {"source", cert.bound->source},
                      {"radii", radii}};
  }
  // Small divisor sets are listed in full for offline re-verification.
  if (cert.fa_factorization && cert.fb_factorization &&
      cert.fa_factorization->divisor_count() <= 64 &&
      cert.fb_factorization->divisor_count() <= 64) {
    auto list = [](const std::vector<Int>& v) {
      json a = json::array();
      for (const auto& d : v) a.push_back(d.str());
      return a;
    };
    j["divisors"] = json{
        {"f_a", list(admissible_divisors(*cert.fa_factorization, cert.ga))},
        {"f_b", list(admissible_divisors(*cert.fb_factorization, cert.gb))}};
  }
  j["checks"] = checks_block(cert.checks);
  j["timings"] =
      json{{"divisor_pairs", std::to_string(cert.divisor_pairs_scanned)}};
  j["seeds"] = seeds_block();
  if (!cert.primality_method.empty())
    j["primality"] = json{{"method", cert.primality_method}};
  if (oracle_result) {
    json o;
    o["status"] = to_string(oracle_result->status);
    if (oracle_result->status == OracleStatus::Factored) {
      o["g"] = oracle_result->g.str();
      o["h"] = oracle_result->h.str();
      o["content"] = oracle_result->content.str();
    }
    o["stats"] = stats_block(oracle_result->stats);
    j["oracle"] = o;
  }
  return j;
}

json bivar_certificate_document(const BivarCertificate& cert,
                                const DocumentInput& input,
                                const BivarFactorResult* oracle_result) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input_block(input);
  j["verdict"] = to_string(cert.verdict);
  if (cert.failure != FailureKind::None)
    j["failure"] = json{{"kind", to_string(cert.failure)},
                        {"detail", cert.failure_detail}};
  if (!cert.criterion.empty()) j["criterion"] = cert.criterion;
  j["field"] = cert.field.str();
  j["oriented"] = json{{"a", cert.a.str()},
                       {"b", cert.b.str()},
                       {"swapped", cert.swapped}};
  j["values"] = json{{"f_a", cert.fa.str()}, {"f_b", cert.fb.str()}};
  if (cert.delta) j["delta"] = cert.delta->str();
  if (cert.lambda)
    j["lambda"] = cert.lambda->str();
  else
    j["lambda"] = "-inf";
  auto degree_quotient = [](const DegreeQuotient& q) {
    json d;
    d["value"] = std::to_string(q.value);
    d["d1_degree"] = std::to_string(q.d1_degree);
    d["d2_degree"] = std::to_string(q.d2_degree);
    d["kind"] = to_string(q.kind);
    d["set_sizes"] = json::array(
        {std::to_string(q.da_size), std::to_string(q.db_size)});
    return d;
  };
  if (cert.q) j["q"] = degree_quotient(*cert.q);
  if (cert.q_unitary) j["q_unitary"] = degree_quotient(*cert.q_unitary);
  j["checks"] = checks_block(cert.checks);
  j["seeds"] = seeds_block();
  if (oracle_result) {
    json o;
    o["status"] = to_string(oracle_result->status);
    o["degx_cap"] = std::to_string(oracle_result->degx_cap);
    if (oracle_result->status == OracleStatus::Factored) {
      o["g"] = oracle_result->g.str();
      o["h"] = oracle_result->h.str();
      o["content"] = oracle_result->content.str();
    }
    o["stats"] = stats_block(oracle_result->stats);
    j["oracle"] = o;
  }
  return j;
}

json oracle_document(const UniPoly& f, const Int& content,
                     const std::vector<std::pair<UniPoly, unsigned>>& factors,
                     OracleStatus status, const OracleStats& stats,
                     const DocumentInput& input) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input_block(input);
  j["poly"] = f.str();
  j["status"] = to_string(status);
  j["content"] = content.str();
  json arr = json::array();
  for (const auto& [g, e] : factors)
    arr.push_back(json::array({g.str(), std::to_string(e)}));
  j["factors"] = arr;
  j["stats"] = stats_block(stats);
  j["seeds"] = seeds_block();
  return j;
}

json bounds_document(const UniPoly& f,
                     const std::vector<std::pair<Rat, Stability>>&
                         shift_verdicts,
                     const DocumentInput& input) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["input"] = input_block(input);
  j["poly"] = f.str();
  j["cauchy"] = cauchy_root_bound(f).str();
  j["enestrom_kakeya"] = is_enestrom_kakeya(f);
  RootBound best = best_root_bound(f);
  json radii = json::array();
  for (const auto& [r, holds] : best.rouche_radii)
    radii.push_back(json::array({r.str(), holds}));
  j["bound"] = json{{"value", best.value.str()},
                    {"strict", best.strict},
                    {"source", best.source},
                    {"radii", radii}};
  json shifts = json::array();
  for (const auto& [c, verdict] : shift_verdicts)
    shifts.push_back(json::array({c.str(), to_string(verdict)}));
  j["routh_shifts"] = shifts;
  return j;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace polycert::cli
