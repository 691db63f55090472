#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clothoid::verify {

enum class Suite { fresnel, riccati, tangent, curve, frenet, all };

Suite suite_from_string(std::string_view name);
std::string_view to_string(Suite suite);

struct Check {
  std::string name;
  double observed;   ///< worst deviation seen
  double tolerance;  ///< pass iff observed <= tolerance
  bool gating = true;  ///< informational checks never fail a suite
  bool within_tolerance() const { return observed <= tolerance; }
  bool passed() const { return !gating || within_tolerance(); }
};

struct SuiteReport {
  Suite suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// Runs the invariant checks of one suite, or of every suite for Suite::all.
std::vector<SuiteReport> run(Suite suite);

}  // namespace clothoid::verify
