#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace qfam {

inline constexpr int kSchemaVersion = 1;

// One line of a report. A check either measures a defect against a
// tolerance, or records a discrete verdict (a rank, a count, a violated
// hypothesis) with `defect` left empty.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::optional<double> defect;
  std::optional<double> tol;
  std::string note;
  nlohmann::json details = nlohmann::json::object();
};

// Pass when defect ≤ tol.
CheckResult defect_check(std::string name, double defect, double tol, std::string note = {});
// Pass when observed == expected.
CheckResult value_check(std::string name, long long observed, long long expected,
                        std::string note = {});
CheckResult verdict(std::string name, bool pass, std::string note = {});

struct CheckReport {
  std::string command;
  std::vector<std::string> inputs;
  double tol = 0.0;
  std::optional<unsigned long long> seed;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  // Where corpus objects came from, e.g. "builtin:z2-conjugation".
  std::vector<std::string> provenance;

  bool pass() const;
  // Largest measured defect, if any check measured one.
  std::optional<double> max_defect() const;
  int exit_code() const { return pass() ? 0 : 1; }
  void append(const CheckReport& other, const std::string& prefix);
};

// "%.3g" rendering used everywhere a defect is shown.
std::string format_defect(double value);
double round_significant(double value, int digits = 3);

nlohmann::json report_to_json(const CheckReport& report);
void emit_text(const CheckReport& report, std::ostream& out);
void emit_structured(const CheckReport& report, std::ostream& out);

enum class OutputFormat { text, structured };
void emit_report(const CheckReport& report, OutputFormat format, std::ostream& out);

}  // namespace qfam
