#include "l2b/report.hpp"

#include "json.hpp"

namespace l2b {

BoundReport report_le(const std::string& claim, double certified, double reference,
                      const std::string& provenance) {
  BoundReport r;
  r.claim = claim;
  r.certified_value = certified;
  r.reference_value = reference;
  r.direction = '<';
  r.margin = reference - certified;
  r.provenance = provenance;
  r.pass = certified <= reference;
  return r;
}

BoundReport report_ge(const std::string& claim, double certified, double reference,
                      const std::string& provenance) {
  BoundReport r;
  r.claim = claim;
  r.certified_value = certified;
  r.reference_value = reference;
  r.direction = '>';
  r.margin = certified - reference;
  r.provenance = provenance;
  r.pass = certified >= reference;
  return r;
}

BoundReport report_check(const std::string& claim, double certified, bool pass,
                         double margin, const std::string& provenance) {
  BoundReport r;
  r.claim = claim;
  r.certified_value = certified;
  r.direction = pass ? '>' : '<';
  r.margin = margin;
  r.provenance = provenance;
  r.pass = pass;
  return r;
}

bool ReportDocument::all_pass() const {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

std::string ReportDocument::to_json() const {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["title"] = title;
  doc["pass"] = all_pass();
  doc["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json jr;
    jr["claim"] = r.claim;
    jr["certified_value"] = r.certified_value;
    if (std::isnan(r.reference_value))
      jr["reference_value"] = nullptr;
    else
      jr["reference_value"] = r.reference_value;
    jr["direction"] = r.direction == '<' ? "<=" : ">=";
    jr["margin"] = r.margin;
    jr["provenance"] = r.provenance;
    jr["pass"] = r.pass;
    doc["reports"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

}  // namespace l2b
