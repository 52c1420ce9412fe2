#include "qfam/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>

namespace qfam {

CheckResult defect_check(std::string name, double defect, double tol, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.defect = defect;
  r.tol = tol;
  r.pass = defect <= tol;
  r.note = std::move(note);
  return r;
}

CheckResult value_check(std::string name, long long observed, long long expected,
                        std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = observed == expected;
  r.details["observed"] = observed;
  r.details["expected"] = expected;
  r.note = note.empty() ? "observed " + std::to_string(observed) + ", expected " +
                              std::to_string(expected)
                        : std::move(note);
  return r;
}

CheckResult verdict(std::string name, bool pass, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

bool CheckReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::optional<double> CheckReport::max_defect() const {
  std::optional<double> out;
  for (const auto& c : checks) {
    if (c.defect && (!out || *c.defect > *out)) out = c.defect;
  }
  return out;
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  provenance.insert(provenance.end(), other.provenance.begin(), other.provenance.end());
}

std::string format_defect(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", value);
  return buf;
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
  return std::strtod(buf, nullptr);
}

nlohmann::json report_to_json(const CheckReport& report) {
  using nlohmann::json;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
    if (c.defect) {
      j["defect"] = round_significant(*c.defect);
      // Full precision for reproducibility comparisons.
      j["defect_exact"] = *c.defect;
    }
    if (c.tol) j["tol"] = *c.tol;
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.details.empty()) j["details"] = c.details;
    checks.push_back(std::move(j));
  }
  json doc{{"schema_version", kSchemaVersion},
           {"command", report.command},
           {"inputs", report.inputs},
           {"tol", report.tol},
           {"status", report.pass() ? "pass" : "fail"},
           {"checks", std::move(checks)},
           {"timing_seconds", report.seconds}};
  if (report.seed) doc["seed"] = *report.seed;
  if (const auto m = report.max_defect()) doc["max_defect"] = round_significant(*m);
  if (!report.provenance.empty()) doc["provenance"] = report.provenance;
  return doc;
}

void emit_text(const CheckReport& report, std::ostream& out) {
  out << report.command;
  for (const auto& in : report.inputs) out << ' ' << in;
  out << "  (tol " << format_defect(report.tol);
  if (report.seed) out << ", seed " << *report.seed;
  out << ")\n";
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  int failed = 0;
  for (const auto& c : report.checks) {
    out << "  " << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width))
        << c.name;
    if (c.defect) out << "  defect " << format_defect(*c.defect);
    if (!c.note.empty()) out << "  " << c.note;
    out << '\n';
    if (!c.pass) ++failed;
  }
  out << (failed == 0 ? "PASS" : "FAIL") << ": " << report.checks.size() - failed << '/'
      << report.checks.size() << " checks";
  if (const auto m = report.max_defect()) out << ", max defect " << format_defect(*m);
  out << '\n';
}

void emit_structured(const CheckReport& report, std::ostream& out) {
  out << report_to_json(report).dump(2) << '\n';
}

void emit_report(const CheckReport& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::structured) {
    emit_structured(report, out);
  } else {
    emit_text(report, out);
  }
}

}  // namespace qfam
