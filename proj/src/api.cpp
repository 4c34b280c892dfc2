#include "fdebt/api.hpp"

#include <httplib.h>

#include "fdebt/errors.hpp"
#include "fdebt/report.hpp"

namespace fdebt {
namespace {

using json = nlohmann::json;

ApiResponse not_found(const std::string& what) { return {404, {{"error", what + " not found"}}}; }

json pointers_to_array(const std::vector<const json*>* items) {
  json out = json::array();
  if (items) {
    for (const json* j : *items) out.push_back(*j);
  }
  return out;
}

template <typename Map>
const typename Map::mapped_type* find_in(const Map& m, const std::string& key) {
  auto it = m.find(key);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

ReportApi::ReportApi(json report) : report_(std::move(report)) {
  check_report(report_);
  for (const json& f : report_.at("features")) features_[f.at("id").get<std::string>()] = &f;
  for (const json& f : report_.at("files")) files_[f.at("path").get<std::string>()] = &f;
  for (const char* scope : {"classes", "methods"}) {
    for (const json& v : report_.at("metrics").at(scope)) {
      std::string key = v.at("key").get<std::string>();
      entities_[key] = &v;
      entities_by_file_[v.at("file").get<std::string>()].push_back(key);
    }
  }
  for (const json& f : report_.at("findings")) {
    findings_by_file_[f.at("file").get<std::string>()].push_back(&f);
    findings_by_entity_[f.at("entity_key").get<std::string>()].push_back(&f);
  }
}

ApiResponse ReportApi::get(std::string_view path) const {
  constexpr std::string_view kFeatures = "/api/features";
  constexpr std::string_view kFiles = "/api/files/";
  constexpr std::string_view kEntities = "/api/entities/";
  if (path == kFeatures || path == "/api/features/") return features();
  if (path.starts_with("/api/features/")) {
    return feature(std::string(path.substr(kFeatures.size() + 1)));
  }
  if (path.starts_with(kFiles)) return file(std::string(path.substr(kFiles.size())));
  if (path.starts_with(kEntities)) return entity(std::string(path.substr(kEntities.size())));
  if (path == "/api/meta") return meta();
  return not_found("endpoint " + std::string(path));
}

ApiResponse ReportApi::features() const {
  json items = json::array();
  for (const json& f : report_.at("features")) {
    items.push_back({{"id", f.at("id")},
                     {"name", f.at("name")},
                     {"total", f.at("total")},
                     {"controller", f.at("controller")},
                     {"main_method", f.at("main_method")},
                     {"files", f.at("files").size()}});
  }
  return {200, {{"features", items}}};
}

ApiResponse ReportApi::feature(const std::string& id) const {
  auto* f = find_in(features_, id);
  if (!f) return not_found("feature " + id);
  return {200, **f};
}

ApiResponse ReportApi::file(const std::string& path) const {
  auto* f = find_in(files_, path);
  if (!f) return not_found("file " + path);
  json entities = json::array();
  if (auto* keys = find_in(entities_by_file_, path)) entities = *keys;
  return {200,
          {{"file", **f},
           {"entities", entities},
           {"findings", pointers_to_array(find_in(findings_by_file_, path))}}};
}

ApiResponse ReportApi::entity(const std::string& key) const {
  auto* v = find_in(entities_, key);
  if (!v) return not_found("entity " + key);
  return {200,
          {{"metrics", **v}, {"findings", pointers_to_array(find_in(findings_by_entity_, key))}}};
}

ApiResponse ReportApi::meta() const {
  return {200,
          {{"schema_version", report_.at("schema_version")},
           {"metadata", report_.at("metadata")},
           {"summary", report_.at("summary")}}};
}

struct ApiServer::Impl {
  explicit Impl(const ReportApi& a) : api(a) {}
  const ReportApi& api;
  httplib::Server server;
};

ApiServer::ApiServer(const ReportApi& api, std::string static_dir)
    : impl_(std::make_unique<Impl>(api)) {
  impl_->server.Get(R"(/api/.*)", [this](const httplib::Request& req, httplib::Response& res) {
    ApiResponse r = impl_->api.get(req.path);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  });
  if (!static_dir.empty() && !impl_->server.set_mount_point("/", static_dir)) {
    throw Error("cannot serve static files from " + static_dir);
  }
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->server.bind_to_any_port(host);
    if (bound <= 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error("cannot bind " + host + ":" + std::to_string(port) + " (port in use?)");
  }
  return port;
}

void ApiServer::run() { impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

}  // namespace fdebt
