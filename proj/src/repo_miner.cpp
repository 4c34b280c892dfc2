#include "fdebt/repo_miner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <system_error>

#include "fdebt/process.hpp"

namespace fdebt {
namespace {

using namespace std::chrono;

constexpr std::int64_t kDay = 86400;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string trim_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

std::string git_executable() {
  const char* override_path = std::getenv("FDEBT_GIT");
  std::string program = override_path && *override_path ? override_path : "git";
  auto exe = find_executable(program);
  if (!exe) {
    throw GitError(GitError::Kind::kGitMissing, "git executable not found: " + program);
  }
  return *exe;
}

std::set<std::string> keys_of(std::span<const SmellFinding> findings) {
  std::set<std::string> out;
  for (const SmellFinding& f : findings) out.insert(finding_key(f));
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Log format: hash, committer time, author, subject, NUL-separated, one
// record per RS.
constexpr const char* kLogFormat = "--format=%H%x00%ct%x00%an%x00%s%x1e";

std::vector<Revision> parse_log(const std::string& text) {
  std::vector<Revision> out;
  for (const std::string& raw : split(text, '\x1e')) {
    std::string record = raw;
    record.erase(0, record.find_first_not_of('\n'));
    if (record.empty()) continue;
    std::vector<std::string> parts = split(record, '\0');
    if (parts.size() < 4) {
      throw GitError(GitError::Kind::kExtraction, "unexpected git log output");
    }
    out.push_back(Revision{parts[0], std::stoll(parts[1]), parts[2], trim_newline(parts[3])});
  }
  return out;
}

}  // namespace

GitRepo::GitRepo(std::string path) : exe_(git_executable()), path_(std::move(path)) {
  git({"rev-parse", "--git-dir"}, {}, GitError::Kind::kNotARepository);
}

std::string GitRepo::git(const std::vector<std::string>& args, const std::string& input,
                         GitError::Kind on_failure) const {
  std::vector<std::string> argv{exe_, "-C", path_};
  argv.insert(argv.end(), args.begin(), args.end());
  ProcessResult r;
  try {
    r = run_process(argv, input);
  } catch (const std::system_error& e) {
    throw GitError(GitError::Kind::kGitMissing, "cannot run " + exe_ + ": " + e.what());
  }
  if (r.exit_code != 0) {
    std::string what = path_ + ": git " + args.front() + " failed";
    std::string detail = trim_newline(r.err);
    if (!detail.empty()) what += ": " + detail;
    if (on_failure == GitError::Kind::kNotARepository) what = path_ + ": not a git repository";
    throw GitError(on_failure, what);
  }
  return r.out;
}

std::string GitRepo::resolve(const std::string& rev) const {
  if (rev.empty() || rev.front() == '-') {
    throw GitError(GitError::Kind::kUnknownRevision, "unknown revision '" + rev + "'");
  }
  try {
    return trim_newline(git({"rev-parse", "--verify", "--quiet", rev + "^{commit}"}, {},
                            GitError::Kind::kUnknownRevision));
  } catch (const GitError&) {
    throw GitError(GitError::Kind::kUnknownRevision,
                   path_ + ": unknown revision '" + rev + "'");
  }
}

Revision GitRepo::describe(const std::string& rev) const {
  std::string id = resolve(rev);
  std::vector<Revision> log = parse_log(git({"log", "-1", kLogFormat, id, "--"}));
  if (log.size() != 1) throw GitError(GitError::Kind::kExtraction, "cannot describe " + rev);
  return log.front();
}

std::vector<Revision> GitRepo::revisions(const std::string& branch,
                                         std::optional<std::int64_t> from,
                                         std::optional<std::int64_t> to) const {
  std::string id = resolve(branch);
  std::vector<Revision> out;
  for (Revision& r : parse_log(git({"log", "--first-parent", "--reverse", kLogFormat, id, "--"}))) {
    if (from && r.timestamp < *from) continue;
    if (to && r.timestamp > *to) continue;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SourceText> GitRepo::snapshot(const std::string& rev,
                                          const FrontendConfig& frontend) const {
  std::string id = resolve(rev);
  std::vector<SourceText> out;
  std::string request;
  for (const std::string& entry : split(git({"ls-tree", "-r", "-z", "--full-tree", id}), '\0')) {
    if (entry.empty()) continue;
    // "<mode> <type> <object>\t<path>"
    std::size_t tab = entry.find('\t');
    if (tab == std::string::npos) throw GitError(GitError::Kind::kExtraction, "bad ls-tree entry");
    std::vector<std::string> meta = split(entry.substr(0, tab), ' ');
    std::string path = entry.substr(tab + 1);
    if (meta.size() != 3 || meta[1] != "blob" || !path_selected(frontend, path)) continue;
    out.push_back(SourceText{path, {}});
    request += meta[2] + "\n";
  }
  if (out.empty()) return out;

  std::string blobs = git({"cat-file", "--batch"}, request);
  std::size_t pos = 0;
  for (SourceText& file : out) {
    std::size_t eol = blobs.find('\n', pos);
    if (eol == std::string::npos) throw GitError(GitError::Kind::kExtraction, "short cat-file output");
    std::vector<std::string> header = split(blobs.substr(pos, eol - pos), ' ');
    if (header.size() != 3 || header[1] != "blob") {
      throw GitError(GitError::Kind::kExtraction, "cannot read blob for " + file.path);
    }
    std::size_t size = std::stoull(header[2]);
    if (eol + 1 + size > blobs.size()) {
      throw GitError(GitError::Kind::kExtraction, "truncated blob for " + file.path);
    }
    file.text = blobs.substr(eol + 1, size);
    pos = eol + 1 + size + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const SourceText& a, const SourceText& b) { return a.path < b.path; });
  return out;
}

std::vector<Revision> list_revisions(const std::string& repo_path,
                                     std::optional<std::int64_t> from,
                                     std::optional<std::int64_t> to, const std::string& branch) {
  return GitRepo(repo_path).revisions(branch, from, to);
}

Analysis snapshot_analyze(const std::string& repo_path, const std::string& rev,
                          const Config& config) {
  return analyze_sources(GitRepo(repo_path).snapshot(rev, config.frontend), config);
}

DebtDelta debt_diff(std::span<const SmellFinding> before, std::span<const SmellFinding> after) {
  std::set<std::string> a = keys_of(before);
  std::set<std::string> b = keys_of(after);
  DebtDelta d;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::inserter(d.inserted, d.inserted.end()));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(d.paid, d.paid.end()));
  return d;
}

DebtLedger debt_series(const std::string& repo_path, std::int64_t from, std::int64_t to,
                       int interval_days, const Config& config, const std::string& branch) {
  if (interval_days < 1) throw ConfigError("interval must be at least 1 day");
  if (to < from) throw ConfigError("series window ends before it starts");
  GitRepo repo(repo_path);
  std::vector<Revision> history = repo.revisions(branch);

  DebtLedger ledger;
  ledger.interval_days = interval_days;
  std::string previous_rev;
  std::vector<SmellFinding> previous;
  for (std::int64_t day = from; day <= to; day += interval_days * kDay) {
    std::int64_t sample = day + kDay - 1;
    const Revision* pick = nullptr;
    for (const Revision& r : history) {
      if (r.timestamp <= sample) pick = &r;
    }
    if (pick == nullptr || pick->id == previous_rev) continue;

    std::vector<SmellFinding> current =
        analyze_sources(repo.snapshot(pick->id, config.frontend), config).findings;
    LedgerRow row;
    row.rev = pick->id;
    row.date = format_date(day);
    if (!ledger.rows.empty()) {
      DebtDelta d = debt_diff(previous, current);
      row.inserted = static_cast<int>(d.inserted.size());
      row.paid = static_cast<int>(d.paid.size());
    }
    row.active = static_cast<int>(keys_of(current).size());
    ledger.rows.push_back(std::move(row));
    previous_rev = pick->id;
    previous = std::move(current);
  }
  return ledger;
}

std::string ledger_csv(const DebtLedger& ledger) {
  std::string out = "rev,date,inserted,paid,active\r\n";
  for (const LedgerRow& r : ledger.rows) {
    out += csv_field(r.rev) + "," + csv_field(r.date) + "," + std::to_string(r.inserted) + "," +
           std::to_string(r.paid) + "," + std::to_string(r.active) + "\r\n";
  }
  return out;
}

std::int64_t parse_date(const std::string& text) {
  int y = 0;
  unsigned m = 0, d = 0;
  char tail = 0;
  if (text.size() != 10 ||
      std::sscanf(text.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw ConfigError("invalid date '" + text + "' (expected YYYY-MM-DD)");
  }
  year_month_day ymd{year{y}, month{m}, day{d}};
  if (!ymd.ok()) throw ConfigError("invalid date '" + text + "'");
  return sys_days{ymd}.time_since_epoch().count() * kDay;
}

std::string format_date(std::int64_t seconds) {
  year_month_day ymd{floor<days>(sys_seconds{std::chrono::seconds{seconds}})};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

std::string format_timestamp(std::int64_t seconds) {
  sys_seconds t{std::chrono::seconds{seconds}};
  auto day_start = floor<days>(t);
  hh_mm_ss hms{t - day_start};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(seconds).c_str(),
                static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                static_cast<int>(hms.seconds().count()));
  return buf;
}

}  // namespace fdebt
