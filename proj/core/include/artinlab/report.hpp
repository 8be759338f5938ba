#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace artinlab {

enum class Verdict { Pass, Fail, Indeterminate, NotApplicable };

std::string_view to_string(Verdict v);

/// Combines verdicts of sub-checks: Fail beats Indeterminate beats Pass beats NotApplicable.
Verdict combine(Verdict a, Verdict b);

/// Outcome of one criterion check. PASS and FAIL carry a witness or an exhaustiveness
/// statement; INDETERMINATE records the bound that ran out.
struct CertificateReport {
  std::string criterion;
  Verdict verdict = Verdict::Indeterminate;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> notes;
};

nlohmann::ordered_json to_json(const CertificateReport& report);

}  // namespace artinlab
