#include "fdebt/config.hpp"

#include <array>
#include <fstream>
#include <set>

#include "fdebt/errors.hpp"

namespace fdebt {
namespace {

using json = nlohmann::json;

constexpr std::array<ThresholdTerm, 22> kTerms = {{
    {"BrainMethod", "MLOC", &Thresholds::brain_method_mloc, Bound::kFloor, false},
    {"BrainMethod", "CYCLO", &Thresholds::brain_method_cyclo, Bound::kFloor, false},
    {"BrainMethod", "MAXNESTING", &Thresholds::brain_method_maxnesting, Bound::kFloor, false},
    {"BrainMethod", "NOAV", &Thresholds::brain_method_noav, Bound::kFloor, false},
    {"ConditionalComplexity", "CYCLO", &Thresholds::conditional_complexity_cyclo, Bound::kFloor,
     false},
    {"LongMethod", "MLOC", &Thresholds::long_method_mloc, Bound::kFloor, false},
    {"FeatureEnvy", "ATFD_m", &Thresholds::feature_envy_atfd, Bound::kFloor, false},
    {"FeatureEnvy", "LAA", &Thresholds::feature_envy_laa, Bound::kCeiling, true},
    {"FeatureEnvy", "FDP", &Thresholds::feature_envy_fdp, Bound::kCeiling, false},
    {"GodClass", "ATFD_c", &Thresholds::god_class_atfd, Bound::kFloor, false},
    {"GodClass", "WMC", &Thresholds::god_class_wmc, Bound::kFloor, false},
    {"GodClass", "TCC", &Thresholds::god_class_tcc, Bound::kCeiling, true},
    {"BrainClass", "TCC", &Thresholds::brain_class_tcc, Bound::kCeiling, true},
    {"BrainClass", "CLOC", &Thresholds::brain_class_cloc, Bound::kFloor, false},
    {"BrainClass", "WMC", &Thresholds::brain_class_wmc, Bound::kFloor, false},
    {"BrainClass", "CLOC_single", &Thresholds::brain_class_single_cloc, Bound::kFloor, false},
    {"BrainClass", "WMC_single", &Thresholds::brain_class_single_wmc, Bound::kFloor, false},
    {"DataClass", "WOC", &Thresholds::data_class_woc, Bound::kCeiling, true},
    {"DataClass", "NOPA_NOAM", &Thresholds::data_class_accessors, Bound::kFloor, false},
    {"DataClass", "WMC", &Thresholds::data_class_wmc, Bound::kCeiling, false},
    {"DataClass", "NOPA_NOAM_many", &Thresholds::data_class_many_accessors, Bound::kFloor, false},
    {"DataClass", "WMC_many", &Thresholds::data_class_many_wmc, Bound::kCeiling, false},
}};

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (known.count(key) == 0) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const json& s : v) {
    if (!s.is_string()) throw ConfigError(where + ": expected an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

bool boolean(const json& v, const std::string& where) {
  if (!v.is_boolean()) throw ConfigError(where + ": expected a boolean");
  return v.get<bool>();
}

void read_thresholds(const json& doc, Thresholds& t) {
  std::set<std::string> sections;
  for (const ThresholdTerm& term : kTerms) sections.emplace(term.smell);
  reject_unknown(doc, sections, "thresholds");
  for (const auto& [smell, body] : doc.items()) {
    std::set<std::string> keys;
    for (const ThresholdTerm& term : kTerms) {
      if (term.smell == smell) keys.emplace(term.term);
    }
    reject_unknown(body, keys, "thresholds." + smell);
    for (const ThresholdTerm& term : kTerms) {
      if (term.smell != smell) continue;
      auto it = body.find(std::string(term.term));
      if (it == body.end()) continue;
      if (!it->is_number()) {
        throw ConfigError("thresholds." + smell + "." + std::string(term.term) +
                          ": expected a number");
      }
      t.*term.member = it->get<double>();
    }
  }
}

bool glob_impl(std::string_view p, std::string_view s) {
  while (!p.empty()) {
    if (p.substr(0, 2) == "**") {
      std::string_view rest = p.substr(2);
      if (!rest.empty() && rest.front() == '/' && glob_impl(rest.substr(1), s)) return true;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (glob_impl(rest, s.substr(i))) return true;
      }
      return false;
    }
    if (p.front() == '*') {
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (glob_impl(p.substr(1), s.substr(i))) return true;
        if (i < s.size() && s[i] == '/') break;
      }
      return false;
    }
    if (s.empty()) return false;
    if (p.front() == '?' ? s.front() == '/' : p.front() != s.front()) return false;
    p.remove_prefix(1);
    s.remove_prefix(1);
  }
  return s.empty();
}

}  // namespace

std::span<const ThresholdTerm> threshold_terms() { return kTerms; }

void validate(const Thresholds& thresholds) {
  for (const ThresholdTerm& term : kTerms) {
    double v = thresholds.*term.member;
    std::string name = std::string(term.smell) + "." + std::string(term.term);
    if (!(v > 0)) throw ConfigError("threshold " + name + " must be positive");
    if (term.ratio && v > 1) throw ConfigError("threshold " + name + " must lie in (0, 1]");
  }
}

Config config_from_json(const json& doc) {
  Config c;
  reject_unknown(doc, {"thresholds", "frontend", "features", "metrics"}, "config");
  if (auto it = doc.find("thresholds"); it != doc.end()) read_thresholds(*it, c.thresholds);
  if (auto it = doc.find("frontend"); it != doc.end()) {
    reject_unknown(*it, {"include", "exclude", "on_error"}, "frontend");
    if (it->contains("include")) c.frontend.include = string_list(it->at("include"), "frontend.include");
    if (it->contains("exclude")) c.frontend.exclude = string_list(it->at("exclude"), "frontend.exclude");
    if (it->contains("on_error")) {
      const json& v = it->at("on_error");
      if (v != "fail" && v != "skip") throw ConfigError("frontend.on_error: expected \"fail\" or \"skip\"");
      c.frontend.skip_unparsable = v == "skip";
    }
  }
  if (auto it = doc.find("features"); it != doc.end()) {
    reject_unknown(*it,
                   {"suffixes", "require_public", "require_calls_made",
                    "require_no_calls_received", "exclude_accessors"},
                   "features");
    FeatureConfig& f = c.features;
    if (it->contains("suffixes")) f.suffixes = string_list(it->at("suffixes"), "features.suffixes");
    auto flag = [&](const char* key, bool& out) {
      if (it->contains(key)) out = boolean(it->at(key), std::string("features.") + key);
    };
    flag("require_public", f.require_public);
    flag("require_calls_made", f.require_calls_made);
    flag("require_no_calls_received", f.require_no_calls_received);
    flag("exclude_accessors", f.exclude_accessors);
  }
  if (auto it = doc.find("metrics"); it != doc.end()) {
    reject_unknown(*it, {"tcc_visible_only"}, "metrics");
    if (it->contains("tcc_visible_only")) {
      c.metrics.tcc_visible_only = boolean(it->at("tcc_visible_only"), "metrics.tcc_visible_only");
    }
  }
  validate(c.thresholds);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return config_from_json(doc);
}

json to_json(const Config& config) {
  json thresholds = json::object();
  for (const ThresholdTerm& term : kTerms) {
    thresholds[std::string(term.smell)][std::string(term.term)] = config.thresholds.*term.member;
  }
  const FeatureConfig& f = config.features;
  return {
      {"thresholds", thresholds},
      {"frontend",
       {{"include", config.frontend.include},
        {"exclude", config.frontend.exclude},
        {"on_error", config.frontend.skip_unparsable ? "skip" : "fail"}}},
      {"features",
       {{"suffixes", f.suffixes},
        {"require_public", f.require_public},
        {"require_calls_made", f.require_calls_made},
        {"require_no_calls_received", f.require_no_calls_received},
        {"exclude_accessors", f.exclude_accessors}}},
      {"metrics", {{"tcc_visible_only", config.metrics.tcc_visible_only}}},
  };
}

bool glob_match(std::string_view pattern, std::string_view path) { return glob_impl(pattern, path); }

bool path_selected(const FrontendConfig& frontend, std::string_view path) {
  auto any = [path](const std::vector<std::string>& patterns) {
    for (const std::string& p : patterns) {
      if (glob_match(p, path)) return true;
    }
    return false;
  };
  return any(frontend.include) && !any(frontend.exclude);
}

}  // namespace fdebt
