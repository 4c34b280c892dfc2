#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fdebt/analysis.hpp"
#include "fdebt/config.hpp"
#include "fdebt/errors.hpp"
#include "fdebt/smells.hpp"

namespace fdebt {

struct Revision {
  std::string id;
  std::int64_t timestamp = 0;  // committer time, UTC seconds
  std::string author;
  std::string message;  // subject line

  bool operator==(const Revision&) const = default;
};

/// Read-only access to a repository through the git executable, which is
/// taken from $FDEBT_GIT when set and searched on PATH otherwise. The work
/// tree is never touched: snapshots are read with ls-tree and cat-file.
class GitRepo {
 public:
  /// Throws GitError(kGitMissing) or GitError(kNotARepository).
  explicit GitRepo(std::string path);

  const std::string& path() const { return path_; }

  /// Full hash of a revision. Throws GitError(kUnknownRevision).
  std::string resolve(const std::string& rev) const;
  Revision describe(const std::string& rev) const;

  /// First-parent history of `branch`, oldest first, keeping commits with
  /// from <= timestamp <= to.
  std::vector<Revision> revisions(const std::string& branch,
                                  std::optional<std::int64_t> from = std::nullopt,
                                  std::optional<std::int64_t> to = std::nullopt) const;

  /// Selected files of the tree at `rev`, sorted by path.
  std::vector<SourceText> snapshot(const std::string& rev, const FrontendConfig& frontend) const;

 private:
  std::string git(const std::vector<std::string>& args, const std::string& input = {},
                  GitError::Kind on_failure = GitError::Kind::kExtraction) const;

  std::string exe_;
  std::string path_;
};

std::vector<Revision> list_revisions(const std::string& repo_path,
                                     std::optional<std::int64_t> from = std::nullopt,
                                     std::optional<std::int64_t> to = std::nullopt,
                                     const std::string& branch = "HEAD");

Analysis snapshot_analyze(const std::string& repo_path, const std::string& rev,
                          const Config& config);

struct DebtDelta {
  std::string from_rev;
  std::string to_rev;
  std::set<std::string> inserted;  // finding keys new in `to`
  std::set<std::string> paid;      // finding keys gone from `from`

  bool operator==(const DebtDelta&) const = default;
};

DebtDelta debt_diff(std::span<const SmellFinding> before, std::span<const SmellFinding> after);

struct LedgerRow {
  std::string rev;
  std::string date;  // sample date, YYYY-MM-DD
  int inserted = 0;
  int paid = 0;
  int active = 0;

  bool operator==(const LedgerRow&) const = default;
};

struct DebtLedger {
  int interval_days = 1;
  std::vector<LedgerRow> rows;
};

/// Samples the end of day from, from + interval, ... up to `to`, analyzes
/// the newest first-parent revision committed by each sample and diffs
/// consecutive ones. A sample that lands on the same revision as the
/// previous row, or precedes every commit, is skipped. `from` and `to` are
/// day starts (UTC seconds).
DebtLedger debt_series(const std::string& repo_path, std::int64_t from, std::int64_t to,
                       int interval_days, const Config& config,
                       const std::string& branch = "HEAD");

/// Header rev,date,inserted,paid,active; RFC 4180 quoting.
std::string ledger_csv(const DebtLedger& ledger);

/// "YYYY-MM-DD" to the UTC start of that day. Throws ConfigError.
std::int64_t parse_date(const std::string& text);
std::string format_date(std::int64_t seconds);
std::string format_timestamp(std::int64_t seconds);  // ISO 8601, UTC

}  // namespace fdebt
