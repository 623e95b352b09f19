#pragma once

// Batch front end: one verb per invocation, JSON documents in, one JSON
// report out.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "htc/json_io.hpp"

namespace htc::cli {

inline constexpr const char* kToolVersion = "htc 1.0.0";

enum ExitCode : int { kSuccess = 0, kFalse = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Job {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::optional<std::uint64_t> budget;
  std::optional<int> maxDegree;
  std::string mode = "direct";
};

struct Outcome {
  int exitCode = kSuccess;
  /// {"verdict": bool, "details": {...}, "toolVersion": ...} on exit 0 or 1.
  io::Json report;
  /// Message for exit 2 or 3.
  std::string error;
};

const std::vector<std::string>& verbs();

/// Runs a job on already parsed documents.
Outcome run(const std::string& command, const std::vector<io::Json>& documents, const Job& options);

/// Reads the input files, runs the job and writes the report to
/// job.output (atomically, only on exit 0 or 1).
Outcome run(const Job& job);

/// Two-space indented dump with a trailing newline.
std::string render(const io::Json& report);

}  // namespace htc::cli
