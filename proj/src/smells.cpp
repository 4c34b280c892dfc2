#include "fdebt/smells.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "fdebt/errors.hpp"

namespace fdebt {
namespace {

constexpr std::array<SmellType, 7> kAllTypes = {
    SmellType::kGodClass,   SmellType::kBrainClass,            SmellType::kDataClass,
    SmellType::kBrainMethod, SmellType::kConditionalComplexity, SmellType::kLongMethod,
    SmellType::kFeatureEnvy};

class Evidence {
 public:
  explicit Evidence(const MetricVector& v) : v_(v) {}

  double operator()(std::string_view name) {
    double x = v_.at(name);
    read_[std::string(name)] = x;
    return x;
  }

  SmellFinding finding(SmellType type, std::initializer_list<std::string_view> names) const {
    SmellFinding f{type, v_.key, v_.file, {}};
    for (std::string_view n : names) f.evidence[std::string(n)] = read_.at(std::string(n));
    return f;
  }

 private:
  const MetricVector& v_;
  std::map<std::string, double> read_;
};

void require_scope(const MetricVector& v, MetricScope scope) {
  if (v.scope != scope) {
    throw IntegrityError(v.key + ": expected a " + std::string(to_string(scope)) + " vector");
  }
}

}  // namespace

const char* to_string(SmellType t) {
  switch (t) {
    case SmellType::kGodClass: return "GodClass";
    case SmellType::kBrainClass: return "BrainClass";
    case SmellType::kDataClass: return "DataClass";
    case SmellType::kBrainMethod: return "BrainMethod";
    case SmellType::kConditionalComplexity: return "ConditionalComplexity";
    case SmellType::kLongMethod: return "LongMethod";
    case SmellType::kFeatureEnvy: return "FeatureEnvy";
  }
  return "?";
}

std::optional<SmellType> smell_type_from_string(std::string_view name) {
  for (SmellType t : kAllTypes) {
    if (name == to_string(t)) return t;
  }
  return std::nullopt;
}

std::span<const SmellType> all_smell_types() { return kAllTypes; }

bool is_class_smell(SmellType t) {
  return t == SmellType::kGodClass || t == SmellType::kBrainClass || t == SmellType::kDataClass;
}

std::vector<SmellFinding> detect_method_smells(const MetricVector& mv, const Thresholds& t) {
  require_scope(mv, MetricScope::kMethod);
  Evidence m(mv);
  double mloc = m(metric::kMloc);
  double cyclo = m(metric::kCyclo);
  double maxnesting = m(metric::kMaxNesting);
  double noav = m(metric::kNoav);
  double atfd = m(metric::kAtfdMethod);
  double laa = m(metric::kLaa);
  double fdp = m(metric::kFdp);

  std::vector<SmellFinding> out;
  if (mloc > t.brain_method_mloc && cyclo >= t.brain_method_cyclo &&
      maxnesting >= t.brain_method_maxnesting && noav > t.brain_method_noav) {
    out.push_back(m.finding(SmellType::kBrainMethod,
                            {metric::kMloc, metric::kCyclo, metric::kMaxNesting, metric::kNoav}));
  }
  if (cyclo >= t.conditional_complexity_cyclo) {
    out.push_back(m.finding(SmellType::kConditionalComplexity, {metric::kCyclo}));
  }
  if (mloc > t.long_method_mloc) {
    out.push_back(m.finding(SmellType::kLongMethod, {metric::kMloc}));
  }
  if (atfd > t.feature_envy_atfd && laa < t.feature_envy_laa && fdp <= t.feature_envy_fdp) {
    out.push_back(m.finding(SmellType::kFeatureEnvy,
                            {metric::kAtfdMethod, metric::kLaa, metric::kFdp}));
  }
  return out;
}

std::vector<SmellFinding> detect_class_smells(const MetricVector& cv,
                                              std::span<const SmellFinding> method_findings,
                                              const Thresholds& t) {
  require_scope(cv, MetricScope::kClass);
  Evidence c(cv);
  double atfd = c(metric::kAtfdClass);
  double wmc = c(metric::kWmc);
  double tcc = c(metric::kTcc);
  double cloc = c(metric::kCloc);
  double woc = c(metric::kWoc);
  double nopa = c(metric::kNopa);
  double noam = c(metric::kNoam);

  std::string prefix = cv.key + "#";
  double brain_methods = 0;
  for (const SmellFinding& f : method_findings) {
    if (f.type == SmellType::kBrainMethod && f.entity_key.compare(0, prefix.size(), prefix) == 0) {
      ++brain_methods;
    }
  }

  std::vector<SmellFinding> out;
  bool god = atfd > t.god_class_atfd && wmc >= t.god_class_wmc && tcc < t.god_class_tcc;
  if (god) {
    out.push_back(c.finding(SmellType::kGodClass, {metric::kAtfdClass, metric::kWmc, metric::kTcc}));
  }
  bool brain = !god && tcc < t.brain_class_tcc &&
               ((brain_methods > 1 && cloc >= t.brain_class_cloc && wmc >= t.brain_class_wmc) ||
                (brain_methods == 1 && cloc >= t.brain_class_single_cloc &&
                 wmc >= t.brain_class_single_wmc));
  if (brain) {
    SmellFinding f = c.finding(SmellType::kBrainClass, {metric::kTcc, metric::kCloc, metric::kWmc});
    f.evidence[std::string(kBrainMethodCount)] = brain_methods;
    out.push_back(std::move(f));
  }
  double exposed = nopa + noam;
  if (woc < t.data_class_woc &&
      ((exposed > t.data_class_accessors && wmc < t.data_class_wmc) ||
       (exposed > t.data_class_many_accessors && wmc < t.data_class_many_wmc))) {
    out.push_back(c.finding(SmellType::kDataClass,
                            {metric::kWoc, metric::kNopa, metric::kNoam, metric::kWmc}));
  }
  return out;
}

std::vector<SmellFinding> detect_all(const ProjectMetrics& metrics, const Thresholds& t) {
  std::vector<SmellFinding> method_findings;
  for (const MetricVector& mv : metrics.methods) {
    for (SmellFinding& f : detect_method_smells(mv, t)) method_findings.push_back(std::move(f));
  }
  std::vector<SmellFinding> out;
  for (const MetricVector& cv : metrics.classes) {
    for (SmellFinding& f : detect_class_smells(cv, method_findings, t)) out.push_back(std::move(f));
  }
  out.insert(out.end(), method_findings.begin(), method_findings.end());
  std::sort(out.begin(), out.end(), [](const SmellFinding& a, const SmellFinding& b) {
    return std::tie(a.file, a.entity_key, a.type) < std::tie(b.file, b.entity_key, b.type);
  });
  return out;
}

std::vector<SmellFinding> detect_all(const CodeModel& model, const Config& config) {
  return detect_all(compute_all_metrics(model, config.metrics), config.thresholds);
}

std::string finding_key(const SmellFinding& f) {
  return std::string(to_string(f.type)) + "|" + f.entity_key;
}

}  // namespace fdebt
