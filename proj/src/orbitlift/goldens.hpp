#pragma once

/// Embedded reference tables as machine-checkable data, plus the verification
/// driver that recomputes every entry from scratch.

#include <string>
#include <vector>

#include "orbitlift/lifting.hpp"

namespace orbitlift {

/// One expected trace: a class name or the wildcard "*".
struct GoldenExpect {
  std::string cls;  // empty when wildcard
  bool wildcard = false;
  long trace = 0;
};

/// One line of the golden table file.
struct GoldenRow {
  std::string group;               // e.g. "E6"
  std::string orbit;               // orbit name
  IVec diagram;                    // weighted Dynkin diagram, node order
  std::string gtype;               // component group: S2..S5
  std::string rep;                 // representation label
  std::vector<IVec> weights;       // each must independently reproduce expect
  std::vector<GoldenExpect> expect;
  int lineno = 0;
};

/// Parse the tab-separated golden format (see the README for the grammar).
/// Throws std::runtime_error with a line number on malformed input.
std::vector<GoldenRow> parse_goldens(const std::string& tsv);

/// The rows embedded in the binary.
const std::vector<GoldenRow>& golden_rows();

struct VerifyReport {
  struct Line {
    std::string label;
    bool pass = false;
    std::string detail;  // failure explanation, empty on pass
  };
  std::vector<Line> lines;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

/// Check one golden row: every listed weight must descend and reproduce the
/// expected traces. Returns an empty string on success, else the reason.
std::string check_golden_row(const GoldenRow& row);

/// Recompute everything: the two worked examples, then every golden row.
VerifyReport verify_all();

}  // namespace orbitlift
