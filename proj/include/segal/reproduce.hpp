#pragma once

#include <string>
#include <vector>

namespace segal {

/// One row of the reference-count table: a frozen expected value for a small
/// example, recomputed from scratch. Rows marked `disputed` carry a bundled
/// reference value that exhaustive enumeration contradicts; both numbers are
/// reported and such rows do not count as failures.
struct RefCheck {
  std::string id;
  std::string what;
  long expected = 0;
  long computed = 0;
  bool disputed = false;

  bool pass() const { return expected == computed; }
};

std::vector<RefCheck> reproduce_all();

/// The undisputed subset; fast enough for a smoke test.
std::vector<RefCheck> reproduce_core();

std::string format_table(const std::vector<RefCheck>& rows);

}  // namespace segal
