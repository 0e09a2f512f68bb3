#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

namespace univalent::cli {

enum class Command { Coeffs, Value, Boundary, Verify, Oracle, Render };
enum class Format { Json, Csv, Svg };

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitCertificateFailure = 2,
  kExitIoError = 3,
};

/// Output path that means standard output.
inline constexpr std::string_view kStdoutPath = "-";

struct RunConfig {
  Command command = Command::Coeffs;
  int n = 1;
  int t_fold = 2;
  int grid_size = 4096;
  std::string output_path = std::string(kStdoutPath);
  Format format = Format::Json;
};

std::string_view to_string(Command c) noexcept;
std::string_view to_string(Format f) noexcept;

/// The format a command writes when --format is not given.
Format default_format(Command c) noexcept;

/// render only writes svg, boundary writes csv or json, the others json or
/// csv.
bool format_allowed(Command c, Format f) noexcept;

/// Thrown by parse_args; `exit_code` is what the process should return.
struct UsageError {
  int exit_code;
  std::string message;
};

/// Parses `univalent <command> --n N [--t T] [--grid G] [--out PATH]
/// [--format F]`. Throws UsageError; `--help` surfaces as exit code 0 with
/// the help text as message.
RunConfig parse_args(int argc, const char* const* argv);

/// Writes the artifact for `config` to config.output_path (or `out` for
/// "-"). Errors go to `err` as a one-line JSON object.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace univalent::cli
