#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetaseq/polynomial.hpp"
#include "zetaseq/verify_suite.hpp"

namespace zetaseq {

enum class Command { approximants, verify, convergence, spectra, zeros, kernel, gamma };
enum class Format { json, csv };

std::string to_string(Command c);

/// Point s = re + i im, held exactly.
struct ExactPoint {
  ExactRational re;
  ExactRational im;
};

/// "re[,im]" where each part is a decimal ("-0.25", "1e-3") or a ratio ("1/2").
ExactPoint parse_point(const std::string& text);
/// Comma-separated nonnegative integers.
std::vector<int> parse_int_list(const std::string& text);

struct RunConfig {
  Command command = Command::verify;
  std::vector<int> m_list;  // ascending
  std::vector<ExactPoint> s_list;
  long precision_bits = 128;
  int grid_denominator = 100;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::string output_path;  // empty for standard output
  bool scaled = false;      // convergence: compare h_m^{s-1}(s-1)F_m against (s-1)Gamma zeta
  std::optional<Corruption> corruption;
};

struct RunResult {
  int exit_code = 0;   // 0 pass, 1 verification failed, 2 usage or configuration error
  std::string output;  // the emitted artifact
  std::string error;   // diagnostic for exit code 2
};

/// Executes a validated configuration; never writes to a stream or file.
RunResult run(const RunConfig& config);

/// Parses arguments, runs, and writes the artifact to --out or to out.
/// Returns the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zetaseq
