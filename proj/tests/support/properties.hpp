#pragma once

#include <cstdint>
#include <string>

namespace fdebt::testing {

struct PropertyResult {
  int cases = 0;
  int violations = 0;
  int interesting = 0;  // cases where the property had something to bite on
  std::string first_failure;
};

/// Tightening one threshold term never grows the finding set; the only new
/// findings allowed are Brain Classes on former God Classes.
PropertyResult threshold_monotonicity(std::uint64_t seed, int cases);

/// build_model yields the same ids, names and references for any file order.
PropertyResult model_order_invariance(std::uint64_t seed, int cases);

/// identify_features yields the same features for any file order.
PropertyResult feature_order_invariance(std::uint64_t seed, int cases);

/// Consistent renaming of every identifier leaves every metric unchanged.
PropertyResult metric_alpha_invariance(std::uint64_t seed, int cases);

}  // namespace fdebt::testing
