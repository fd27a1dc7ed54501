#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "sforest/collapse.hpp"

namespace sforest {

struct VerifyOptions {
  /// Largest exhaustive instance size. Each suite clamps it to what it can
  /// afford (relations 4, partial orders and terms 5, graphs 5).
  std::size_t max_n = 4;
  /// Seeded random instances per randomized suite (graphs on 5-6 vertices,
  /// partial orders on 6-7 elements).
  std::size_t random_count = 0;
  std::uint64_t seed = 0;
};

/// One report per check id (2.1-2.6, 3.1-3.3, 4.1-4.8, 5.1-5.7), sorted by
/// id. `proposition` holds the id, `checked` the number of instances.
std::vector<VerificationReport> verify_all(const VerifyOptions& options);

/// {"max_n", "random_count", "seed", "status", "propositions": [...]}
nlohmann::json verify_report_json(const VerifyOptions& options, const std::vector<VerificationReport>& reports);

}  // namespace sforest
