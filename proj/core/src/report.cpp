#include "artinlab/report.hpp"

namespace artinlab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::Fail: return 3;
      case Verdict::Indeterminate: return 2;
      case Verdict::Pass: return 1;
      case Verdict::NotApplicable: return 0;
    }
    return 0;
  };
  return rank(a) >= rank(b) ? a : b;
}

nlohmann::ordered_json to_json(const CertificateReport& report) {
  nlohmann::ordered_json out;
  out["criterion"] = report.criterion;
  out["verdict"] = std::string(to_string(report.verdict));
  out["witnesses"] = report.witnesses;
  out["bounds"] = report.parameters;
  if (!report.notes.empty()) out["notes"] = report.notes;
  return out;
}

}  // namespace artinlab
