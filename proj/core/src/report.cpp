#include "qmsa/report.hpp"

#include <sstream>

#include <json.hpp>

namespace qmsa {

int RunReport::total() const {
  int n = 0;
  for (const auto& [name, v] : suites) n += static_cast<int>(v.size());
  return n;
}

int RunReport::passed() const {
  int n = 0;
  for (const auto& [name, v] : suites) n += count_passed(v);
  return n;
}

std::string to_json(const RunReport& report, bool include_timing) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["engine_version"] = report.engine_version;
  doc["q_mode"] = report.q_mode;
  doc["seed"] = report.seed;
  doc["jobs"] = report.jobs;
  doc["samples"] = report.samples;
  doc["suites"] = json::array();
  for (const auto& [name, records] : report.suites) {
    json s;
    s["suite"] = name;
    s["summary"] = {{"total", records.size()},
                    {"passed", count_passed(records)},
                    {"failed", records.size() - count_passed(records)}};
    s["records"] = json::array();
    for (const RelationInstance& r : records) {
      json rec;
      rec["id"] = r.id;
      rec["lhs"] = r.lhs;
      rec["rhs"] = r.rhs;
      rec["residue"] = r.residue;
      if (!r.lhs_normal.empty()) rec["lhs_normal"] = r.lhs_normal;
      rec["pass"] = r.pass;
      rec["steps"] = r.steps;
      if (include_timing) rec["elapsed_ms"] = r.elapsed_ms;
      s["records"].push_back(std::move(rec));
    }
    doc["suites"].push_back(std::move(s));
  }
  doc["summary"] = {{"total", report.total()},
                    {"passed", report.passed()},
                    {"failed", report.total() - report.passed()},
                    {"all_pass", report.all_pass()}};
  return doc.dump(2) + "\n";
}

std::string to_markdown(const RunReport& report) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "- engine version: " << report.engine_version << "\n";
  os << "- q mode: " << report.q_mode << "\n";
  os << "- seed: " << report.seed << "\n";
  os << "- total: " << report.total() << ", passed: " << report.passed()
     << ", failed: " << (report.total() - report.passed()) << "\n\n";
  for (const auto& [name, records] : report.suites) {
    os << "## " << name << " (" << count_passed(records) << "/" << records.size()
       << ")\n\n";
    os << "| id | pass | residue | steps |\n|---|---|---|---|\n";
    for (const RelationInstance& r : records) {
      os << "| " << r.id << " | " << (r.pass ? "yes" : "**NO**") << " | `" << r.residue
         << "` | " << r.steps << " |\n";
    }
    os << "\n";
    for (const RelationInstance& r : records) {
      if (r.pass) continue;
      os << "### Discrepancy certificate: " << r.id << "\n\n";
      os << "- lhs: `" << r.lhs << "`\n";
      os << "- rhs: `" << r.rhs << "`\n";
      if (!r.lhs_normal.empty()) os << "- lhs normal form: `" << r.lhs_normal << "`\n";
      os << "- residue: `" << r.residue << "`\n\n";
    }
  }
  return os.str();
}

}  // namespace qmsa
