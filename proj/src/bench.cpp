#include "lamiga/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace lamiga {

namespace {

std::string fmt(const char* f, Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}
std::string f4(Real v) { return fmt("%.4f", v); }
std::string f10(Real v) { return fmt("%.10g", v); }
std::string pct(Real v) { return fmt("%.2f", 100.0 * v); }

using ResultIndex = std::map<std::string, const CaseResult*>;

ResultIndex indexResults(const std::vector<CaseResult>& results) {
  ResultIndex idx;
  for (const CaseResult& r : results) idx[r.name] = &r;
  return idx;
}

// Formatted computed value of one quantity of one case; empty when absent.
std::string cell(const ResultIndex& idx, const std::string& caseName,
                 const std::string& quantity) {
  const auto it = idx.find(caseName);
  if (it == idx.end()) return "";
  const QuantityValue* v = it->second->find(quantity);
  return v ? f4(v->computed) : "";
}

const char* kDegrees[3] = {"quadratic", "cubic", "quartic"};

void padTo(std::vector<std::string>& cells, std::size_t n) {
  while (cells.size() < n) cells.insert(cells.begin(), "");
}

}  // namespace

TableDoc caseTable(const CaseResult& r) {
  TableDoc doc;
  doc.title = r.name;
  doc.header = {"quantity", "computed", "reference", "label",
                "deviation_pct", "tolerance_pct", "status"};
  for (const QuantityValue& v : r.values) {
    std::string status = "unchecked";
    if (v.reference && v.tolerance > 0)
      status = (v.deviation && *v.deviation <= v.tolerance) ? "pass" : "FAIL";
    doc.rows.push_back({v.quantity, f10(v.computed), v.reference ? f10(*v.reference) : "",
                        v.referenceLabel, v.deviation ? pct(*v.deviation) : "",
                        v.tolerance > 0 ? pct(v.tolerance) : "", status});
  }
  return doc;
}

TableDoc suiteTable(const Suite& suite, const std::vector<CaseResult>& results) {
  const ResultIndex idx = indexResults(results);
  TableDoc doc;
  doc.title = suite.title;

  auto litBlock = [&doc](const std::string& key, std::size_t valueCols,
                         const std::vector<std::string>& prefix) {
    for (const LiteratureRow& lr : literatureRows(key)) {
      std::vector<std::string> cells = lr.cells;
      padTo(cells, valueCols);
      std::vector<std::string> row = prefix;
      row.push_back(lr.label);
      row.insert(row.end(), cells.begin(), cells.end());
      doc.rows.push_back(std::move(row));
    }
  };

  if (suite.name == "table1") {
    doc.header = {"quantity", "method", "mesh_5x5", "mesh_7x7", "mesh_9x9"};
    for (const std::string q : {"wbar", "sxx", "syy", "txz"}) {
      for (const char* deg : kDegrees) {
        std::vector<std::string> row{q, std::string("computed ") + deg};
        for (const char* m : {"5x5", "7x7", "9x9"})
          row.push_back(cell(idx, "table1-" + std::string(deg) + "-" + m, q));
        doc.rows.push_back(std::move(row));
      }
      litBlock("table1:" + q, 3, {q});
    }
  } else if (suite.name == "table2") {
    doc.header = {"a_over_h", "method", "wbar", "sxx", "syy", "txz"};
    for (const char* g : {"10", "100"}) {
      litBlock(std::string("table2:ah") + g, 4, {g});
      for (const char* deg : kDegrees) {
        const std::string name = std::string("table2-ah") + g + "-" + deg;
        doc.rows.push_back({g, std::string("computed ") + deg + " 9x9", cell(idx, name, "wbar"),
                            cell(idx, name, "sxx"), cell(idx, name, "syy"),
                            cell(idx, name, "txz")});
      }
    }
  } else if (suite.name == "table3") {
    doc.header = {"method", "a_over_h_10", "a_over_h_50", "a_over_h_100", "a_over_h_500",
                  "a_over_h_1000"};
    litBlock("table3", 5, {});
    for (const char* deg : kDegrees) {
      std::vector<std::string> row{std::string("computed ") + deg + " 9x9"};
      for (const char* g : {"10", "50", "100", "500", "1000"})
        row.push_back(cell(idx, std::string("table3-ah") + g + "-" + deg, "wbar"));
      doc.rows.push_back(std::move(row));
    }
  } else if (suite.name == "table4") {
    doc.header = {"method", "mesh_5x5", "mesh_7x7", "mesh_9x9"};
    for (const char* deg : kDegrees) {
      std::vector<std::string> row{std::string("computed ") + deg};
      for (const char* m : {"5x5", "7x7", "9x9"})
        row.push_back(cell(idx, "table4-" + std::string(deg) + "-" + m, "omega1"));
      doc.rows.push_back(std::move(row));
    }
  } else if (suite.name == "table5") {
    doc.header = {"method", "E1_over_E2_10", "E1_over_E2_20", "E1_over_E2_30",
                  "E1_over_E2_40"};
    litBlock("table5", 4, {});
    for (const char* deg : kDegrees) {
      std::vector<std::string> row{std::string("computed ") + deg + " 9x9"};
      for (const char* r : {"10", "20", "30", "40"})
        row.push_back(cell(idx, std::string("table5-e") + r + "-" + deg, "omega1"));
      doc.rows.push_back(std::move(row));
    }
  } else if (suite.name == "table6") {
    doc.header = {"method", "a_over_h_2", "a_over_h_4", "a_over_h_10", "a_over_h_20",
                  "a_over_h_50", "a_over_h_100"};
    litBlock("table6", 6, {});
    for (const char* deg : kDegrees) {
      std::vector<std::string> row{std::string("computed ") + deg + " 9x9"};
      for (const char* g : {"2", "4", "10", "20", "50", "100"})
        row.push_back(cell(idx, std::string("table6-ah") + g + "-" + deg, "omega1"));
      doc.rows.push_back(std::move(row));
    }
  } else if (suite.name == "table8") {
    doc.header = {"theta_deg", "method", "omega1", "omega2", "omega3"};
    for (const char* t : {"0", "15", "30", "45"}) {
      litBlock(std::string("table8:theta") + t, 3, {t});
      const std::string name = std::string("table8-theta") + t;
      doc.rows.push_back({t, "computed cubic 13x13", cell(idx, name, "omega1"),
                          cell(idx, name, "omega2"), cell(idx, name, "omega3")});
    }
  } else {
    // Fallback: every quantity of every case, flat.
    doc.header = {"case", "quantity", "computed"};
    for (const std::string& name : suite.caseNames) {
      const auto it = idx.find(name);
      if (it == idx.end()) continue;
      for (const QuantityValue& v : it->second->values)
        doc.rows.push_back({name, v.quantity, f10(v.computed)});
    }
  }
  return doc;
}

std::string toMarkdown(const TableDoc& doc) {
  std::ostringstream out;
  if (!doc.title.empty()) out << "# " << doc.title << "\n\n";
  auto writeRow = [&out](const std::vector<std::string>& cells) {
    out << "|";
    for (const std::string& c : cells) out << " " << c << " |";
    out << "\n";
  };
  writeRow(doc.header);
  out << "|";
  for (std::size_t i = 0; i < doc.header.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& row : doc.rows) writeRow(row);
  return out.str();
}

std::string toCsv(const TableDoc& doc) {
  auto field = [](const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  };
  std::ostringstream out;
  auto writeRow = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ",";
      out << field(cells[i]);
    }
    out << "\r\n";
  };
  writeRow(doc.header);
  for (const auto& row : doc.rows) writeRow(row);
  return out.str();
}

CompareReport compareResults(const std::vector<CaseResult>& results, Real toleranceScale) {
  CompareReport report;
  for (const CaseResult& r : results)
    for (const QuantityValue& v : r.values) {
      CompareLine line;
      line.caseName = r.name;
      line.quantity = v.quantity;
      line.computed = v.computed;
      line.reference = v.reference;
      line.deviation = v.deviation;
      line.checked = v.reference.has_value() && v.tolerance > 0 && v.deviation.has_value();
      line.tolerance = v.tolerance * toleranceScale;
      line.pass = !line.checked || *line.deviation <= line.tolerance;
      if (line.checked) ++report.checkedCount;
      if (!line.pass) ++report.failCount;
      report.lines.push_back(std::move(line));
    }
  return report;
}

std::string CompareReport::text() const {
  std::ostringstream out;
  out << "checked " << checkedCount << " quantities, " << failCount << " outside tolerance\n";

  std::vector<const CompareLine*> checkedLines;
  for (const CompareLine& l : lines)
    if (l.checked) checkedLines.push_back(&l);
  std::sort(checkedLines.begin(), checkedLines.end(), [](const CompareLine* a,
                                                         const CompareLine* b) {
    return *a->deviation / a->tolerance > *b->deviation / b->tolerance;
  });

  const std::size_t shown = failCount > 0 ? checkedLines.size() : std::min<std::size_t>(
                                                                      3, checkedLines.size());
  for (std::size_t i = 0; i < shown; ++i) {
    const CompareLine& l = *checkedLines[i];
    if (failCount > 0 && l.pass) break;
    out << (l.pass ? "  near  " : "  FAIL  ") << l.caseName << " " << l.quantity << ": computed "
        << f10(l.computed) << " vs " << f10(*l.reference) << " (" << pct(*l.deviation)
        << "% off, tolerance " << pct(l.tolerance) << "%)\n";
  }
  return out.str();
}

}  // namespace lamiga
