#pragma once

#include <string>
#include <vector>

#include "fdebt/code_model.hpp"
#include "fdebt/config.hpp"
#include "fdebt/debt.hpp"
#include "fdebt/features.hpp"
#include "fdebt/metrics.hpp"
#include "fdebt/smells.hpp"

namespace fdebt {

struct SourceText {
  std::string path;  // relative, '/'-separated
  std::string text;
};

/// Everything one run derives from a source tree.
struct Analysis {
  CodeModel model;
  ProjectMetrics metrics;
  std::vector<SmellFinding> findings;
  std::vector<Feature> features;
  DebtRanking ranking;
  std::vector<std::string> warnings;
};

/// Selected files under `root`, sorted by path. Throws Error when `root`
/// is not a readable directory.
std::vector<SourceText> load_directory(const std::string& root, const FrontendConfig& frontend);

/// Newest modification time (seconds) among the selected files, 0 if none.
long long newest_mtime(const std::string& root, const FrontendConfig& frontend);

Analysis analyze_sources(const std::vector<SourceText>& sources, const Config& config);

}  // namespace fdebt
