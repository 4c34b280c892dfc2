#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fdebt {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// Read-only view over a report. Every value it returns is copied from the
/// report, never recomputed.
class ReportApi {
 public:
  /// Throws IntegrityError for an inconsistent report.
  explicit ReportApi(nlohmann::json report);

  /// `path` is the decoded request path, e.g. "/api/files/fx/Turma.java".
  ApiResponse get(std::string_view path) const;

  const nlohmann::json& report() const { return report_; }

 private:
  ApiResponse features() const;
  ApiResponse feature(const std::string& id) const;
  ApiResponse file(const std::string& path) const;
  ApiResponse entity(const std::string& key) const;
  ApiResponse meta() const;

  nlohmann::json report_;
  std::map<std::string, const nlohmann::json*> features_;
  std::map<std::string, const nlohmann::json*> files_;
  std::map<std::string, const nlohmann::json*> entities_;
  std::map<std::string, std::vector<const nlohmann::json*>> findings_by_file_;
  std::map<std::string, std::vector<const nlohmann::json*>> findings_by_entity_;
  std::map<std::string, std::vector<std::string>> entities_by_file_;
};

/// HTTP front end for a ReportApi: GET only, JSON bodies.
class ApiServer {
 public:
  /// `static_dir`, when non-empty, is served under "/".
  explicit ApiServer(const ReportApi& api, std::string static_dir = {});
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds `host:port` (port 0 picks a free one) and returns the bound
  /// port. Throws Error when the address cannot be bound.
  int bind(const std::string& host, int port);

  /// Serves until stop(); call after bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fdebt
