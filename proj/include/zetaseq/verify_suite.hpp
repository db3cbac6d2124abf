#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace zetaseq {

/// Adds 1 to the coefficient a_{m,j} before any coefficient-driven check.
struct Corruption {
  int m = 0;
  int j = 0;
};

struct CheckResult {
  std::string check;
  int m = 0;
  bool passed = false;
  std::string witness;  // empty on pass
};

struct VerifySettings {
  std::vector<int> m_list;  // ascending, m >= 0
  int grid_denominator = 100;
  std::uint64_t seed = 0;
  std::optional<Corruption> corruption;
};

struct VerifyReport {
  std::vector<CheckResult> results;  // sorted by check name, then m
  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// Exact identity suites for every m in the list. Checks that consume the
/// coefficients a_{m,j} (interpolation, residues, recurrences, limit at
/// infinity, determinant forms, trivial zeros) see the corrupted values.
VerifyReport run_verify_suite(const VerifySettings& settings);

}  // namespace zetaseq
