#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hesselink/multiplicity.hpp"

namespace hesselink {

// Everything one analyze invocation learned about a hypersurface. JSON
// serialization is byte-deterministic for a fixed input and seed; elapsed_ms
// is the one wall-clock field and is only emitted when include_timing is set.
struct AnalysisReport {
  int r = 0;
  int d = 0;
  std::string polynomial;  // canonical serialization
  ClassificationResult classification;
  MultiplicityReport multiplicity;
  std::optional<BoundsReport> bounds;            // present when unstable
  std::optional<SingularityCheck> singularity;   // present when unstable
  std::optional<DegreeShiftReport> degree_shift;
  int budget = 0;
  uint64_t seed = 0;
  int entry_bound = 0;
  long elapsed_ms = 0;
  std::vector<std::string> warnings;
};

struct AnalyzeOptions {
  SearchConfig search;
  bool with_degree_shift = false;
  int shift = 1;
  long cap = 1000000;
};

// One-stop assembly: classification, worst multiplicity, and (when a label
// was certified) the two-sided bounds and the singularity implication.
AnalysisReport analyze(const HomogeneousPolynomial& f,
                       const AnalyzeOptions& opts = {});

std::string to_json(const AnalysisReport& report, bool include_timing = false);
std::string to_json(const DegreeShiftReport& report);

void print_human(std::ostream& os, const AnalysisReport& report);
void print_human(std::ostream& os, const DegreeShiftReport& report);

}  // namespace hesselink
