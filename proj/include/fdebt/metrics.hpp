#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdebt/code_model.hpp"

namespace fdebt {

enum class MetricScope { kMethod, kClass };

const char* to_string(MetricScope s);

namespace metric {

// Method scope.
inline constexpr std::string_view kMloc = "MLOC";
inline constexpr std::string_view kCyclo = "CYCLO";
inline constexpr std::string_view kMaxNesting = "MAXNESTING";
inline constexpr std::string_view kNoav = "NOAV";
inline constexpr std::string_view kNop = "NOP";
inline constexpr std::string_view kAtfdMethod = "ATFD_m";
inline constexpr std::string_view kFdp = "FDP";
inline constexpr std::string_view kLaa = "LAA";
inline constexpr std::string_view kFanout = "FANOUT";

// Class scope.
inline constexpr std::string_view kCloc = "CLOC";
inline constexpr std::string_view kWmc = "WMC";
inline constexpr std::string_view kNom = "NOM";
inline constexpr std::string_view kNoa = "NOA";
inline constexpr std::string_view kNopa = "NOPA";
inline constexpr std::string_view kNoam = "NOAM";
inline constexpr std::string_view kTcc = "TCC";
inline constexpr std::string_view kWoc = "WOC";
inline constexpr std::string_view kAmw = "AMW";

/// Not part of the catalog: the class-level aggregate of ATFD_m (distinct
/// foreign attributes over all methods), carried on class vectors because
/// the God Class strategy reads it.
inline constexpr std::string_view kAtfdClass = "ATFD_c";

}  // namespace metric

/// The 18 catalog names: 9 method metrics followed by 9 class metrics.
std::span<const std::string_view> metric_catalog();
std::span<const std::string_view> method_metric_names();
std::span<const std::string_view> class_metric_names();

struct MetricVector {
  MetricScope scope = MetricScope::kMethod;
  std::string key;   // qualified class name, or method_qualified_name
  std::string file;  // path of the declaring file
  std::map<std::string, double, std::less<>> values;

  /// Throws IntegrityError when `name` is missing.
  double at(std::string_view name) const;
};

struct MetricsOptions {
  /// TCC over non-private, non-accessor methods only (otherwise over every
  /// non-constructor method).
  bool tcc_visible_only = true;
};

/// 1 + if/for/while/do/catch nodes + non-default case labels + `?:`, `&&`, `||`.
int compute_cyclo(const StatementTree& body);

/// Deepest nesting of if/for/while/do/switch/try; `else if` does not nest.
int compute_max_nesting(const StatementTree& body);

/// get*/set*/is* name, non-constructor, body of at most one statement.
bool is_accessor(const MethodEntity& method);

MetricVector compute_method_metrics(const CodeModel& model, const MethodEntity& method);
MetricVector compute_class_metrics(const CodeModel& model, const TypeEntity& type,
                                   const MetricsOptions& options = {});

struct ProjectMetrics {
  std::vector<MetricVector> classes;  // by qualified name
  std::vector<MetricVector> methods;  // by owner, then signature
};

ProjectMetrics compute_all_metrics(const CodeModel& model, const MetricsOptions& options = {});

}  // namespace fdebt
