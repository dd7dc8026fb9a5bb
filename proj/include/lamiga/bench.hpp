#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lamiga/cases.hpp"

namespace lamiga {

/// A named group of builtin cases whose results are laid out as one table.
struct Suite {
  std::string name;
  std::string title;
  std::vector<std::string> caseNames;
};

const std::vector<CaseSpec>& builtinCases();
const std::vector<Suite>& builtinSuites();
const CaseSpec* findBuiltinCase(const std::string& name);
const Suite* findBuiltinSuite(const std::string& name);

/// Published comparison values shown alongside computed suite results.
/// `cells` are preformatted and must match the suite table's value columns.
struct LiteratureRow {
  std::string label;
  std::vector<std::string> cells;
};
const std::vector<LiteratureRow>& literatureRows(const std::string& suiteName);

struct TableDoc {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Per-case listing: one row per quantity with reference, deviation and
/// check status.
TableDoc caseTable(const CaseResult& result);

/// Suite grid mirroring the published layout, literature rows included.
/// `results` must contain one entry per suite case, in any order.
TableDoc suiteTable(const Suite& suite, const std::vector<CaseResult>& results);

std::string toMarkdown(const TableDoc& doc);
/// RFC 4180: CRLF line endings, quoting only where needed, header row first.
std::string toCsv(const TableDoc& doc);

struct CompareLine {
  std::string caseName;
  std::string quantity;
  Real computed = 0;
  std::optional<Real> reference;
  Real tolerance = 0;  // after profile scaling
  std::optional<Real> deviation;
  bool checked = false;
  bool pass = true;
};

struct CompareReport {
  std::vector<CompareLine> lines;
  int checkedCount = 0;
  int failCount = 0;
  bool pass() const { return failCount == 0; }
  std::string text() const;  // summary with worst offenders first
};

/// Checks every referenced quantity against its stored tolerance scaled by
/// `toleranceScale` (1 = stored profile, 0.5 = strict).  Values without a
/// reference or with zero tolerance count as unchecked.
CompareReport compareResults(const std::vector<CaseResult>& results, Real toleranceScale = 1.0);

}  // namespace lamiga
