#include "fdebt/report.hpp"

#include <set>

#include "fdebt/errors.hpp"

namespace fdebt {
namespace {

using json = nlohmann::json;

json vector_json(const MetricVector& v) {
  json values = json::object();
  for (const auto& [name, x] : v.values) values[name] = x;
  return {{"key", v.key}, {"file", v.file}, {"scope", to_string(v.scope)}, {"values", values}};
}

json finding_json(const SmellFinding& f) {
  return {{"type", to_string(f.type)},
          {"entity_key", f.entity_key},
          {"key", finding_key(f)},
          {"file", f.file},
          {"evidence", f.evidence}};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw IntegrityError("inconsistent report: " + what);
}

}  // namespace

json build_report(const Analysis& analysis, const Config& config, const ReportMeta& meta,
                  const DebtLedger* ledger) {
  const CodeModel& model = analysis.model;
  std::map<std::string, int> per_file = file_debt_counts(analysis.findings);

  json files = json::array();
  int gaps = 0;
  for (const auto& [path, file] : model.files()) {
    json types = json::array();
    for (EntityId id : file.type_ids) types.push_back(model.type(id).qualified_name);
    auto it = per_file.find(path);
    files.push_back({{"path", path},
                     {"package", file.package},
                     {"loc", file.loc},
                     {"parse_gaps", file.parse_gaps},
                     {"types", types},
                     {"findings", it == per_file.end() ? 0 : it->second}});
    gaps += file.parse_gaps;
  }

  ReferenceGraph graph = build_reference_graph(model);
  json edges = json::array();
  for (const std::string& from : graph.nodes()) {
    for (const std::string& to : graph.successors(from)) edges.push_back({{"from", from}, {"to", to}});
  }

  std::map<std::string, const Feature*> by_id;
  for (const Feature& f : analysis.features) by_id[f.id] = &f;
  json features = json::array();
  for (const FeatureDebt& d : analysis.ranking) {
    const Feature& f = *by_id.at(d.id);
    json per_type = json::object();
    for (const auto& [type, n] : d.per_type) per_type[to_string(type)] = n;
    features.push_back({{"id", f.id},
                        {"name", f.name},
                        {"controller", f.controller},
                        {"main_method", f.main_method},
                        {"files", f.files},
                        {"total", d.total},
                        {"per_file", d.per_file},
                        {"per_type", per_type}});
  }

  json findings = json::array();
  for (const SmellFinding& f : analysis.findings) findings.push_back(finding_json(f));

  json classes = json::array();
  for (const MetricVector& v : analysis.metrics.classes) classes.push_back(vector_json(v));
  json methods = json::array();
  for (const MetricVector& v : analysis.metrics.methods) methods.push_back(vector_json(v));

  json report = {
      {"schema_version", kReportSchemaVersion},
      {"metadata",
       {{"tool", kToolName},
        {"version", kToolVersion},
        {"revision", meta.revision ? json(*meta.revision) : json(nullptr)},
        {"timestamp", format_timestamp(meta.timestamp)},
        {"config", to_json(config)},
        {"warnings", analysis.warnings},
        {"limitations",
         {"file and class renames are not tracked: a renamed entity reads as one paid and one "
          "inserted finding",
          "receiver types come from declared types only"}}}},
      {"summary",
       {{"files", model.files().size()},
        {"types", model.types().size()},
        {"methods", model.methods().size()},
        {"findings", analysis.findings.size()},
        {"features", analysis.features.size()},
        {"parse_gaps", gaps}}},
      {"files", files},
      {"edges", edges},
      {"features", features},
      {"findings", findings},
      {"metrics", {{"classes", classes}, {"methods", methods}}},
      {"ledger", ledger ? ledger_json(*ledger) : json(nullptr)},
  };
  check_report(report);
  return report;
}

json delta_json(const DebtDelta& delta) {
  return {{"schema_version", kReportSchemaVersion},
          {"from", delta.from_rev},
          {"to", delta.to_rev},
          {"inserted", delta.inserted},
          {"paid", delta.paid}};
}

json ledger_json(const DebtLedger& ledger) {
  json rows = json::array();
  for (const LedgerRow& r : ledger.rows) {
    rows.push_back({{"rev", r.rev},
                    {"date", r.date},
                    {"inserted", r.inserted},
                    {"paid", r.paid},
                    {"active", r.active}});
  }
  return {{"interval_days", ledger.interval_days}, {"rows", rows}};
}

std::string export_json(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

void check_sections(const json& report) {
  std::set<std::string> files;
  for (const json& f : report.at("files")) files.insert(f.at("path").get<std::string>());
  std::set<std::string> entities;
  for (const char* scope : {"classes", "methods"}) {
    for (const json& v : report.at("metrics").at(scope)) {
      require(files.count(v.at("file").get<std::string>()) != 0, "metric file");
      entities.insert(v.at("key").get<std::string>());
    }
  }
  for (const json& f : report.at("findings")) {
    require(files.count(f.at("file").get<std::string>()) != 0, "finding file");
    require(entities.count(f.at("entity_key").get<std::string>()) != 0, "finding entity");
  }
  for (const json& e : report.at("edges")) {
    require(files.count(e.at("from").get<std::string>()) && files.count(e.at("to").get<std::string>()),
            "edge endpoint");
  }
  long long previous = -1;
  for (const json& feature : report.at("features")) {
    std::string id = feature.at("id").get<std::string>();
    require(files.count(feature.at("controller").get<std::string>()) != 0, "controller of " + id);
    require(entities.count(feature.at("main_method").get<std::string>()) != 0,
            "main method of " + id);
    std::set<std::string> members;
    for (const json& path : feature.at("files")) {
      require(files.count(path.get<std::string>()) != 0, "file of " + id);
      members.insert(path.get<std::string>());
    }
    int total = feature.at("total").get<int>();
    int by_file = 0;
    std::set<std::string> counted;
    for (const auto& [path, n] : feature.at("per_file").items()) {
      counted.insert(path);
      by_file += n.get<int>();
    }
    require(counted == members, "per-file breakdown of " + id);
    int by_type = 0;
    for (const auto& [type, n] : feature.at("per_type").items()) by_type += n.get<int>();
    require(total == by_file && total == by_type, "feature totals of " + id);
    require(previous < 0 || total <= previous, "ranking order");
    previous = total;
  }
}

}  // namespace

void check_report(const json& report) {
  try {
    check_sections(report);
  } catch (const json::exception& e) {
    throw IntegrityError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace fdebt
