#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hexbubble::cli {

enum class Suite { Quick, Full };

struct VerifyOptions {
  Suite suite = Suite::Quick;
  std::uint64_t seed = 42;
  /// Equal-side kissing perimeter under test; defaults to hexbubble::p3.
  std::function<double(double L, double alpha)> p3;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  /// One line per check plus a summary; identical for identical options.
  [[nodiscard]] std::string text(const VerifyOptions& options) const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hexbubble::cli
