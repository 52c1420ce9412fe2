#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qfam/report.hpp"

namespace qfam::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInput = 2;

struct CheckRequest {
  std::string command;
  std::vector<std::string> inputs;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::text;
  std::string suite = "all";
  std::optional<double> theta;  // check-magic generator
  std::string side = "both";    // check-cancellation
  int n = 2;                    // enumerate-classical
  std::string out;              // compose / enumerate-classical / export-corpus
};

const std::vector<std::string>& command_names();

// Runs one command. Input problems surface as qfam::Error; failed checks and
// violated hypotheses are reported, not thrown.
CheckReport run_command(const CheckRequest& request);

// Writes the built-in example documents into `dir`, returning the file names.
std::vector<std::string> export_corpus(const std::filesystem::path& dir);

// Full front-end: argument parsing, dispatch, report emission. Returns the
// process exit code (0 pass, 1 check failure, 2 input error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfam::cli
