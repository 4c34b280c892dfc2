#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdebt/code_model.hpp"
#include "fdebt/config.hpp"
#include "fdebt/metrics.hpp"

namespace fdebt {

/// Class smells first, then method smells. ConditionalComplexity is what
/// some tools call "complex method".
enum class SmellType {
  kGodClass,
  kBrainClass,
  kDataClass,
  kBrainMethod,
  kConditionalComplexity,
  kLongMethod,
  kFeatureEnvy,
};

const char* to_string(SmellType t);
std::optional<SmellType> smell_type_from_string(std::string_view name);
std::span<const SmellType> all_smell_types();
bool is_class_smell(SmellType t);

/// Evidence key for the number of Brain Methods a Brain Class holds.
inline constexpr std::string_view kBrainMethodCount = "NBM";

struct SmellFinding {
  SmellType type = SmellType::kGodClass;
  std::string entity_key;  // qualified class name or method qualified name
  std::string file;
  std::map<std::string, double> evidence;  // every metric the strategy read

  bool operator==(const SmellFinding&) const = default;
};

/// Method strategies fire independently of each other. Throws
/// IntegrityError for a class-scoped vector or a missing metric.
std::vector<SmellFinding> detect_method_smells(const MetricVector& mv, const Thresholds& t);

/// `method_findings` may hold findings of any entity; only Brain Methods
/// declared in this class are counted.
std::vector<SmellFinding> detect_class_smells(const MetricVector& cv,
                                              std::span<const SmellFinding> method_findings,
                                              const Thresholds& t);

/// Every finding over the project, sorted by (file, entity_key, type).
std::vector<SmellFinding> detect_all(const ProjectMetrics& metrics, const Thresholds& t);
std::vector<SmellFinding> detect_all(const CodeModel& model, const Config& config);

/// "<type>|<entity_key>". The path is left out so moving code within a file
/// keeps the identity stable.
std::string finding_key(const SmellFinding& f);

}  // namespace fdebt
