#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rampsi::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kToleranceUnattainable = 3,
};

/// One line of command output.
struct Report {
  std::string quantity;
  double input = 0.0;
  bool integer_input = false;
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int k_used = 0;
  int n_used = 0;
  std::string method;
  std::int64_t elapsed_nanoseconds = 0;
  /// Command-specific fields appended after the fixed ones.
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
};

enum class Format { json, plain };

/// Reals are written with 17 significant digits; non-finite reals as null.
std::string to_json_line(const Report& report);
std::string to_plain_line(const Report& report);

/// Entry point behind the rampsi executable. Reads RAMPSI_GUARD_DELTA from
/// the environment.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rampsi::cli
