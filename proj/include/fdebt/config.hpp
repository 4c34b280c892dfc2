#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fdebt/metrics.hpp"

namespace fdebt {

/// One number per strategy term, defaulting to the Lanza-Marinescu values.
struct Thresholds {
  // BrainMethod: MLOC > a, CYCLO >= b, MAXNESTING >= c, NOAV > d
  double brain_method_mloc = 65;
  double brain_method_cyclo = 7;
  double brain_method_maxnesting = 5;
  double brain_method_noav = 7;
  // ConditionalComplexity: CYCLO >= a
  double conditional_complexity_cyclo = 10;
  // LongMethod: MLOC > a
  double long_method_mloc = 65;
  // FeatureEnvy: ATFD_m > a, LAA < b, FDP <= c
  double feature_envy_atfd = 5;
  double feature_envy_laa = 1.0 / 3.0;
  double feature_envy_fdp = 3;
  // GodClass: ATFD_c > a, WMC >= b, TCC < c
  double god_class_atfd = 5;
  double god_class_wmc = 47;
  double god_class_tcc = 1.0 / 3.0;
  // BrainClass: TCC < a and either (#BM > 1, CLOC >= b, WMC >= c)
  // or (#BM == 1, CLOC >= d, WMC >= e)
  double brain_class_tcc = 0.5;
  double brain_class_cloc = 195;
  double brain_class_wmc = 47;
  double brain_class_single_cloc = 390;
  double brain_class_single_wmc = 94;
  // DataClass: WOC < a and either (NOPA+NOAM > b, WMC < c)
  // or (NOPA+NOAM > d, WMC < e)
  double data_class_woc = 1.0 / 3.0;
  double data_class_accessors = 5;
  double data_class_wmc = 31;
  double data_class_many_accessors = 10;
  double data_class_many_wmc = 47;

  bool operator==(const Thresholds&) const = default;
};

/// How a threshold constrains its metric. For kFloor terms the metric must
/// exceed (or reach) the threshold; for kCeiling terms it must stay below.
/// Tightening a strategy raises floors and lowers ceilings.
enum class Bound { kFloor, kCeiling };

struct ThresholdTerm {
  std::string_view smell;  // section name in the config file
  std::string_view term;   // key within the section
  double Thresholds::*member;
  Bound bound;
  bool ratio;  // must lie in (0, 1]
};

std::span<const ThresholdTerm> threshold_terms();

struct FrontendConfig {
  std::vector<std::string> include{"**/*.java"};
  std::vector<std::string> exclude;
  /// On a lexical or structural error: fail the analysis, or drop the file
  /// with a warning.
  bool skip_unparsable = false;
};

/// Feature-mapper knobs: controller-name suffixes stripped from feature
/// names, and the main-method predicates.
struct FeatureConfig {
  std::vector<std::string> suffixes{"MBean", "Controller", "Servlet", "Action", "Resource"};
  bool require_public = true;
  bool require_calls_made = true;
  bool require_no_calls_received = true;
  bool exclude_accessors = true;
};

struct Config {
  Thresholds thresholds;
  FrontendConfig frontend;
  FeatureConfig features;
  MetricsOptions metrics;
};

/// Throws ConfigError on unknown keys, wrong types or out-of-range values.
Config config_from_json(const nlohmann::json& doc);
Config load_config(const std::string& path);
nlohmann::json to_json(const Config& config);

/// Throws ConfigError unless every threshold is positive and every ratio
/// lies in (0, 1].
void validate(const Thresholds& thresholds);

/// `*` and `?` stay within one path segment; `**` spans segments.
bool glob_match(std::string_view pattern, std::string_view path);

/// Included by some include pattern and by no exclude pattern.
bool path_selected(const FrontendConfig& frontend, std::string_view path);

}  // namespace fdebt
