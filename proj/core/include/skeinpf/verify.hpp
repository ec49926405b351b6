#pragma once

// Cross-validation sweep: closed forms against brute-force enumeration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skeinpf/oracle.hpp"
#include "skeinpf/sl2z.hpp"

namespace skeinpf {

struct NamedMatrix {
  std::string name;
  SL2Matrix matrix;
};

/// Companion-form representative (0 -1; 1 t) for |t| > 2, otherwise the
/// standard finite-order and shear representatives for that trace.
std::vector<NamedMatrix> trace_representatives(int trace, unsigned max_shear = 3);

/// Representatives of every trace in [trace_min, trace_max] together with
/// +-T^m for 1 <= m <= max_shear and the matrix (2 1; 3 2).
std::vector<NamedMatrix> standard_test_set(int trace_min, int trace_max, unsigned max_shear = 3);

struct VerifyOptions {
  int trace_min = -6;
  int trace_max = 6;
  unsigned max_k = 8;
  unsigned max_n = 6;
  unsigned max_shear = 3;
  std::uint64_t cap = kDefaultElementCap;
  std::uint64_t tuple_cap = kDefaultTupleCap;
  std::uint64_t seed = 1;
  /// Random conjugates per test matrix for the c_k comparison.
  unsigned conjugates = 2;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Adds one to every closed-form c_k. Negative control for the sweep.
  bool inject_fault = false;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
  /// ck, burnside, fixed_points, coinv, block, series.
  std::string check;
  std::string gamma;
  std::string parameter;
  std::string expected;
  std::string observed;
  CheckStatus status = CheckStatus::Pass;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
};

std::string to_string(CheckStatus s);

/// Runs every check for every test matrix. Deterministic given the options;
/// results are ordered by matrix, then check, then parameter.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace skeinpf
