#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cstar::cli {

enum class Command { Spectrum, Classify, Calculus, Quotient, Characters, Verify };
enum class OutputFormat { Text, Structured };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFailed = 1;
inline constexpr int kExitInvalidInput = 2;

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::string> input_path;  // "-" reads stdin
  std::optional<std::string> document;    // inline document
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::size_t max_size = 8;
  OutputFormat format = OutputFormat::Text;

  // calculus
  std::optional<std::string> function;  // exp, log, sqrt, conj, abs, inv, square
  std::vector<double> poly;             // real coefficients, constant term first
  // quotient
  std::vector<std::string> subset;      // point labels, or character indices for C*(N)
};

/// Executes one command, writing the report to `out` and diagnostics to `err`.
/// Structured output is one JSON object per line. Returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cstar::cli
