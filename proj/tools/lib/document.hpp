#ifndef POLYCERT_CLI_DOCUMENT_HPP
#define POLYCERT_CLI_DOCUMENT_HPP

#include <polycert/bivar.hpp>
#include <polycert/certificate.hpp>
#include <polycert/criteria.hpp>
#include <polycert/oracle.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace polycert::cli {

inline constexpr int kSchemaVersion = 1;

// Metadata echoed into every document under "input".
struct DocumentInput {
  std::string command;
  std::string poly;
  std::string a;
  std::string b;
  std::string divisors;
  std::string field;
};

// All exact values are serialized as decimal strings ("p" or "p/q");
// object keys are emitted sorted, so identical inputs give identical
// bytes.
nlohmann::json certificate_document(const Certificate& cert,
                                    const DocumentInput& input,
                                    const FactorizationResult* oracle_result);

nlohmann::json bivar_certificate_document(const BivarCertificate& cert,
                                          const DocumentInput& input,
                                          const BivarFactorResult* oracle_result);

nlohmann::json oracle_document(const UniPoly& f, const Int& content,
                               const std::vector<std::pair<UniPoly, unsigned>>&
                                   factors,
                               OracleStatus status, const OracleStats& stats,
                               const DocumentInput& input);

nlohmann::json bounds_document(const UniPoly& f,
                               const std::vector<std::pair<Rat, Stability>>&
                                   shift_verdicts,
                               const DocumentInput& input);

std::string render(const nlohmann::json& doc);

}  // namespace polycert::cli

#endif  // POLYCERT_CLI_DOCUMENT_HPP
