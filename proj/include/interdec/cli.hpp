#pragma once

// Report assembly behind the `interdec` command line tool. Kept in the library
// so the same code path can be exercised without spawning processes.

#include <string>

#include "interdec/io.hpp"

namespace interdec {

enum class Command { kCheck, kDecompose };
enum class InputKind { kProjectors, kMeasure, kSplit };
enum class OutputFormat { kJson, kText };

/// Exit codes.
inline constexpr int kExitDecomposable = 0;
inline constexpr int kExitNotDecomposable = 1;
inline constexpr int kExitInvalidInput = 2;

struct CliRequest {
  Command command = Command::kCheck;
  InputKind kind = InputKind::kProjectors;
  OutputFormat format = OutputFormat::kJson;
};

struct CliResult {
  int exit_code = kExitInvalidInput;
  /// Rendered report (JSON or text), newline terminated.
  std::string output;
  /// Diagnostic for invalid input, empty otherwise.
  std::string error;
};

/// Builds the report for an already parsed document.
Json build_report(const CliRequest& req, const Json& document, int& exit_code);

/// Runs a request on document text. Never throws for bad input; the verdict
/// is "invalid-input" with exit code 2 instead.
CliResult run_request(const CliRequest& req, const std::string& document_text);

/// Same on a file path.
CliResult run_request_file(const CliRequest& req, const std::string& path);

std::string command_name(Command c);
std::string kind_name(InputKind k);

}  // namespace interdec
