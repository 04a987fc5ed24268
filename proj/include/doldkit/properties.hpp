#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace doldkit {

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Description of the first counterexample, if any.
  std::optional<std::string> first_failure;
};

/// Names accepted by run_property.
std::vector<std::string> property_names();

/// Runs a named randomized invariant check. Throws std::invalid_argument for
/// unknown names.
PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t trials);

}  // namespace doldkit
