#include "fdebt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "fdebt/analysis.hpp"
#include "fdebt/api.hpp"
#include "fdebt/config.hpp"
#include "fdebt/errors.hpp"
#include "fdebt/repo_miner.hpp"
#include "fdebt/report.hpp"

namespace fdebt {
namespace {

struct Options {
  std::string path;
  std::string rev;
  std::string config;
  std::string out;
  std::string from;
  std::string to;
  std::string branch = "HEAD";
  int interval = 14;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
};

Config load(const Options& o) { return o.config.empty() ? Config{} : load_config(o.config); }

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error("cannot write " + o.out);
  file << text;
  if (!file.flush()) throw Error("cannot write " + o.out);
}

std::optional<std::int64_t> source_date_epoch() {
  const char* v = std::getenv("SOURCE_DATE_EPOCH");
  if (v == nullptr || *v == '\0') return std::nullopt;
  char* end = nullptr;
  long long t = std::strtoll(v, &end, 10);
  if (*end != '\0') throw ConfigError("SOURCE_DATE_EPOCH is not an integer");
  return t;
}

int analyze(const Options& o, std::ostream& out, std::ostream& err) {
  Config config = load(o);
  Analysis analysis;
  ReportMeta meta;
  if (o.rev.empty()) {
    analysis = analyze_sources(load_directory(o.path, config.frontend), config);
    meta.timestamp = source_date_epoch().value_or(newest_mtime(o.path, config.frontend));
  } else {
    GitRepo repo(o.path);
    Revision rev = repo.describe(o.rev);
    analysis = analyze_sources(repo.snapshot(rev.id, config.frontend), config);
    meta.revision = rev.id;
    meta.timestamp = source_date_epoch().value_or(rev.timestamp);
  }
  for (const std::string& w : analysis.warnings) err << "warning: " << w << "\n";
  emit(export_json(build_report(analysis, config, meta)), o, out);
  return kExitOk;
}

int diff(const Options& o, std::ostream& out) {
  Config config = load(o);
  GitRepo repo(o.path);
  std::string from = repo.resolve(o.from);
  std::string to = repo.resolve(o.to);
  Analysis a = analyze_sources(repo.snapshot(from, config.frontend), config);
  Analysis b = analyze_sources(repo.snapshot(to, config.frontend), config);
  DebtDelta delta = debt_diff(a.findings, b.findings);
  delta.from_rev = from;
  delta.to_rev = to;
  emit(export_json(delta_json(delta)), o, out);
  return kExitOk;
}

int series(const Options& o, std::ostream& out) {
  Config config = load(o);
  DebtLedger ledger =
      debt_series(o.path, parse_date(o.from), parse_date(o.to), o.interval, config, o.branch);
  emit(ledger_csv(ledger), o, out);
  return kExitOk;
}

int serve(const Options& o, std::ostream& err) {
  std::ifstream in(o.path);
  if (!in) throw Error("cannot read report " + o.path);
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(o.path + ": " + e.what());
  }
  ReportApi api(std::move(report));
  ApiServer server(api, o.static_dir);
  int port = server.bind(o.host, o.port);
  err << "serving " << o.path << " on http://" << o.host << ":" << port << "/api/features\n";
  err.flush();
  server.run();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Feature-level technical debt analysis of Java sources", "fdebt"};
  app.require_subcommand(1);

  CLI::App* an = app.add_subcommand("analyze", "Analyze a source tree (or a git revision)");
  an->add_option("path", o.path, "Source directory, or repository with --rev")->required();
  an->add_option("--rev", o.rev, "Analyze this git revision instead of the work tree");
  an->add_option("--config", o.config, "JSON config file");
  an->add_option("--out", o.out, "Write the report here instead of stdout");

  CLI::App* df = app.add_subcommand("diff", "Debt inserted and paid between two revisions");
  df->add_option("path", o.path, "Git repository")->required();
  df->add_option("--from", o.from, "Base revision")->required();
  df->add_option("--to", o.to, "Target revision")->required();
  df->add_option("--config", o.config, "JSON config file");
  df->add_option("--out", o.out, "Write the delta here instead of stdout");

  CLI::App* se = app.add_subcommand("series", "Sampled debt ledger over a date window (CSV)");
  se->add_option("path", o.path, "Git repository")->required();
  se->add_option("--from", o.from, "First sample date, YYYY-MM-DD")->required();
  se->add_option("--to", o.to, "Last sample date, YYYY-MM-DD")->required();
  se->add_option("--interval", o.interval, "Days between samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  se->add_option("--branch", o.branch, "Branch or revision to follow")->capture_default_str();
  se->add_option("--config", o.config, "JSON config file");
  se->add_option("--out", o.out, "Write the CSV here instead of stdout");

  CLI::App* sv = app.add_subcommand("serve", "Serve a report over a read-only JSON API");
  sv->add_option("report", o.path, "Report produced by analyze")->required();
  sv->add_option("--port", o.port, "TCP port (0 picks a free one)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  sv->add_option("--host", o.host, "Address to bind")->capture_default_str();
  sv->add_option("--static", o.static_dir, "Directory of UI assets served under /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = nullptr;
    for (const CLI::App* s : {an, df, se, sv}) {
      if (s->parsed()) sub = s;
    }
    err << (sub ? sub->help() : app.help());
    return kExitUsage;
  }

  try {
    if (an->parsed()) return analyze(o, out, err);
    if (df->parsed()) return diff(o, out);
    if (se->parsed()) return series(o, out);
    return serve(o, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitAnalysisError;
  }
}

}  // namespace fdebt
