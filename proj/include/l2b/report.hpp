#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace l2b {

// One certified inequality: claim text, the value we certified, the reference
// value it is checked against (NaN when the claim has no external reference),
// the direction of the comparison, and the signed margin. pass <=> the
// direction holds with nonnegative margin.
struct BoundReport {
  std::string claim;
  double certified_value = 0.0;
  double reference_value = std::numeric_limits<double>::quiet_NaN();
  char direction = '<';  // '<' means certified <= reference, '>' means certified >= reference
  double margin = 0.0;
  std::string provenance;  // "tabulated" for values checked against the reference tables, "derived" otherwise
  bool pass = false;
};

// certified <= reference required.
BoundReport report_le(const std::string& claim, double certified, double reference,
                      const std::string& provenance);
// certified >= reference required.
BoundReport report_ge(const std::string& claim, double certified, double reference,
                      const std::string& provenance);
// No external reference; caller supplies the verdict and margin.
BoundReport report_check(const std::string& claim, double certified, bool pass,
                         double margin, const std::string& provenance);

struct ReportDocument {
  std::string title;
  std::vector<BoundReport> reports;

  bool all_pass() const;
  // Deterministic JSON (schema 1, fixed key order, no clock access), so two
  // runs with identical inputs produce byte-identical documents.
  std::string to_json() const;
};

}  // namespace l2b
