#include "fdebt/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fdebt/errors.hpp"
#include "fdebt/java/model_builder.hpp"
#include "fdebt/java/parser.hpp"

namespace fdebt {
namespace {

namespace fs = std::filesystem;

template <typename Visit>
void walk(const std::string& root, const FrontendConfig& frontend, Visit visit) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(root + ": not a readable directory");
  fs::recursive_directory_iterator it(root, ec), end;
  if (ec) throw Error(root + ": " + ec.message());
  for (; it != end; it.increment(ec)) {
    if (ec) throw Error(root + ": " + ec.message());
    if (!it->is_regular_file()) continue;
    std::string rel = fs::relative(it->path(), root).generic_string();
    if (path_selected(frontend, rel)) visit(it->path(), rel);
  }
}

}  // namespace

std::vector<SourceText> load_directory(const std::string& root, const FrontendConfig& frontend) {
  std::vector<SourceText> out;
  walk(root, frontend, [&out](const fs::path& file, const std::string& rel) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(file.string() + ": cannot read");
    std::ostringstream text;
    text << in.rdbuf();
    out.push_back(SourceText{rel, text.str()});
  });
  std::sort(out.begin(), out.end(),
            [](const SourceText& a, const SourceText& b) { return a.path < b.path; });
  return out;
}

long long newest_mtime(const std::string& root, const FrontendConfig& frontend) {
  long long newest = 0;
  walk(root, frontend, [&newest](const fs::path& file, const std::string&) {
    auto t = fs::last_write_time(file);
    auto sys = std::chrono::file_clock::to_sys(t);
    newest = std::max<long long>(
        newest,
        std::chrono::duration_cast<std::chrono::seconds>(sys.time_since_epoch()).count());
  });
  return newest;
}

Analysis analyze_sources(const std::vector<SourceText>& sources, const Config& config) {
  Analysis a;
  std::vector<CompilationUnit> units;
  for (const SourceText& s : sources) {
    try {
      units.push_back(java::parse_unit(s.text, s.path));
    } catch (const LexError& e) {
      if (!config.frontend.skip_unparsable) throw Error(s.path + ": " + e.what());
      a.warnings.push_back("skipped " + s.path + ": " + e.what());
    } catch (const ParseError& e) {
      if (!config.frontend.skip_unparsable) throw;
      a.warnings.push_back("skipped " + std::string(e.what()));
    }
  }
  a.model = java::build_model(std::move(units));
  a.metrics = compute_all_metrics(a.model, config.metrics);
  a.findings = detect_all(a.metrics, config.thresholds);
  a.features = identify_features(a.model, config.features);
  if (a.features.empty() && !a.model.files().empty()) {
    a.warnings.push_back("no features identified: no file has in-degree 0 and out-degree >= 1 "
                         "with a qualifying main method");
  }
  std::vector<FeatureDebt> debts;
  for (const Feature& f : a.features) debts.push_back(rollup(f, a.findings));
  a.ranking = rank(std::move(debts));
  return a;
}

}  // namespace fdebt
