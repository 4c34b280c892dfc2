#include "fdebt/debt.hpp"

#include <algorithm>
#include <set>

#include "fdebt/errors.hpp"

namespace fdebt {

std::map<std::string, int> file_debt_counts(std::span<const SmellFinding> findings) {
  std::map<std::string, int> out;
  for (const SmellFinding& f : findings) ++out[f.file];
  return out;
}

FeatureDebt rollup_feature(const Feature& feature, const std::map<std::string, int>& counts) {
  FeatureDebt d;
  d.id = feature.id;
  d.name = feature.name;
  for (SmellType t : all_smell_types()) d.per_type[t] = 0;
  for (const std::string& file : feature.files) {
    auto it = counts.find(file);
    int n = it == counts.end() ? 0 : it->second;
    d.per_file[file] = n;
    d.total += n;
  }
  return d;
}

std::map<SmellType, int> type_breakdown(const Feature& feature,
                                        std::span<const SmellFinding> findings) {
  std::map<SmellType, int> out;
  for (SmellType t : all_smell_types()) out[t] = 0;
  std::set<std::string> files(feature.files.begin(), feature.files.end());
  for (const SmellFinding& f : findings) {
    if (files.count(f.file)) ++out[f.type];
  }
  return out;
}

FeatureDebt rollup(const Feature& feature, std::span<const SmellFinding> findings) {
  FeatureDebt d = rollup_feature(feature, file_debt_counts(findings));
  d.per_type = type_breakdown(feature, findings);
  int by_type = 0;
  for (const auto& [type, n] : d.per_type) by_type += n;
  if (by_type != d.total) {
    throw IntegrityError("feature " + feature.name + ": per-type sum " + std::to_string(by_type) +
                         " differs from total " + std::to_string(d.total));
  }
  return d;
}

DebtRanking rank(std::vector<FeatureDebt> debts) {
  std::stable_sort(debts.begin(), debts.end(), [](const FeatureDebt& a, const FeatureDebt& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.name < b.name;
  });
  return debts;
}

}  // namespace fdebt
