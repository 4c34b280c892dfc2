#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "fdebt/features.hpp"
#include "fdebt/smells.hpp"

namespace fdebt {

/// Debt of one feature: total = sum of per_file = sum of per_type.
struct FeatureDebt {
  std::string id;
  std::string name;
  int total = 0;
  std::map<std::string, int> per_file;   // every feature file, zeros included
  std::map<SmellType, int> per_type;     // all seven types, zeros included

  bool operator==(const FeatureDebt&) const = default;
};

using DebtRanking = std::vector<FeatureDebt>;

/// Findings per file; files without findings are absent.
std::map<std::string, int> file_debt_counts(std::span<const SmellFinding> findings);

/// Sums `counts` over the feature's files. `per_type` is left all-zero;
/// see rollup() for the full record.
FeatureDebt rollup_feature(const Feature& feature, const std::map<std::string, int>& counts);

/// Counts of the findings located in the feature's files, all seven types.
std::map<SmellType, int> type_breakdown(const Feature& feature,
                                        std::span<const SmellFinding> findings);

/// rollup_feature plus type_breakdown. Throws IntegrityError when the two
/// totals disagree.
FeatureDebt rollup(const Feature& feature, std::span<const SmellFinding> findings);

/// Total descending, then name ascending.
DebtRanking rank(std::vector<FeatureDebt> debts);

}  // namespace fdebt
