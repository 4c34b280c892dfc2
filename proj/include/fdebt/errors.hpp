#pragma once

#include <stdexcept>
#include <string>

namespace fdebt {

/// Base for every diagnostic the library raises. Callers that only need to
/// report and exit catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unterminated literal/comment or a byte the lexer cannot classify.
class LexError : public Error {
 public:
  LexError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Structural failure that recovery cannot absorb (e.g. unbalanced braces).
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Project-level inconsistency found while assembling the CodeModel.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Two on-demand imports both provide the same simple name.
class AmbiguityError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// A dangling id or a missing metric: the data violates its own contract.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class GitError : public Error {
 public:
  enum class Kind { kGitMissing, kNotARepository, kUnknownRevision, kExtraction };

  GitError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace fdebt
