#include "fdebt/java/lexer.hpp"

#include <algorithm>
#include <array>

#include "fdebt/errors.hpp"

namespace fdebt::java {
namespace {

constexpr std::array<std::string_view, 51> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",      "catch",
    "char",     "class",      "const",     "continue",  "default",  "do",        "double",
    "else",     "enum",       "extends",   "final",     "finally",  "float",     "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",     "interface",
    "long",     "native",     "new",       "package",   "private",  "protected", "public",
    "return",   "short",      "static",    "strictfp",  "super",    "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",      "volatile",
    "while",    "_"};

// Longest first within each leading character.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=",   "-=",  "*=",  "/=",  "&=", "|=", "^=", "%=", "<<", ">>", "=",  ">",  "<",
    "!",    "~",   "?",   ":",   "+",  "-",  "*",  "/",  "&",  "|",  "^",  "%"};

constexpr std::array<std::string_view, 11> kPunctuation = {"...", "::", "(", ")", "{", "}",
                                                           "[", "]", ";", ",", "."};

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    if (src_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
    while (pos_ < src_.size()) {
      unsigned char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        ++pos_;
      } else if (src_.compare(pos_, 2, "//") == 0) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.compare(pos_, 2, "/*") == 0) {
        block_comment();
      } else if (src_.compare(pos_, 3, "\"\"\"") == 0) {
        text_block();
      } else if (c == '"') {
        quoted('"', "string literal");
      } else if (c == '\'') {
        quoted('\'', "character literal");
      } else if (digit(c) || (c == '.' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
        number();
      } else if (ident_start(c)) {
        word();
      } else if (c == '@') {
        emit(TokenKind::kPunctuation, pos_, 1, line_);
        ++pos_;
      } else {
        symbol();
      }
    }
    return std::move(tokens_);
  }

 private:
  void emit(TokenKind kind, std::size_t start, std::size_t len, int first_line) {
    tokens_.push_back(Token{kind, std::string(src_.substr(start, len)), first_line, line_});
  }

  void block_comment() {
    int start_line = line_;
    pos_ += 2;
    while (true) {
      if (pos_ + 1 >= src_.size()) throw LexError("unterminated comment", start_line);
      if (src_[pos_] == '*' && src_[pos_ + 1] == '/') break;
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    pos_ += 2;
  }

  void text_block() {
    int start_line = line_;
    std::size_t start = pos_;
    pos_ += 3;
    while (true) {
      if (pos_ + 2 >= src_.size()) throw LexError("unterminated text block", start_line);
      if (src_[pos_] == '\\') {
        if (src_[pos_ + 1] == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (src_.compare(pos_, 3, "\"\"\"") == 0) break;
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    pos_ += 3;
    emit(TokenKind::kLiteral, start, pos_ - start, start_line);
  }

  void quoted(char quote, const char* what) {
    std::size_t start = pos_++;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw LexError(std::string("unterminated ") + what, line_);
      }
      char c = src_[pos_];
      if (c == '\\') {
        if (pos_ + 1 >= src_.size() || src_[pos_ + 1] == '\n') {
          throw LexError(std::string("unterminated ") + what, line_);
        }
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == quote) break;
    }
    emit(TokenKind::kLiteral, start, pos_ - start, line_);
  }

  void number() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      unsigned char c = src_[pos_];
      if (ident_part(c) && c < 0x80) {
        bool exponent = (c == 'e' || c == 'E' || c == 'p' || c == 'P');
        ++pos_;
        // 1e-5, 0x1p+3; hex digits `e` are harmless since a sign cannot follow them.
        if (exponent && pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      } else if (c == '.') {
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') break;
        ++pos_;
      } else {
        break;
      }
    }
    emit(TokenKind::kLiteral, start, pos_ - start, line_);
  }

  void word() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_part(src_[pos_])) ++pos_;
    std::string_view w = src_.substr(start, pos_ - start);
    TokenKind kind = TokenKind::kIdentifier;
    if (w == "true" || w == "false" || w == "null") {
      kind = TokenKind::kLiteral;
    } else if (is_keyword(w)) {
      kind = TokenKind::kKeyword;
    }
    emit(kind, start, w.size(), line_);
  }

  void symbol() {
    for (std::string_view p : kPunctuation) {
      if (src_.compare(pos_, p.size(), p) == 0) {
        emit(TokenKind::kPunctuation, pos_, p.size(), line_);
        pos_ += p.size();
        return;
      }
    }
    for (std::string_view op : kOperators) {
      if (src_.compare(pos_, op.size(), op) == 0) {
        emit(TokenKind::kOperator, pos_, op.size(), line_);
        pos_ += op.size();
        return;
      }
    }
    throw LexError("unexpected character (byte " +
                       std::to_string(static_cast<unsigned char>(src_[pos_])) + ")",
                   line_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::vector<Token> tokens_;
};

}  // namespace

const char* to_string(TokenKind k) {
  switch (k) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kLiteral: return "literal";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kPunctuation: return "punctuation";
  }
  return "punctuation";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

int count_code_lines(const std::vector<Token>& tokens, std::size_t first, std::size_t last) {
  if (tokens.empty() || first > last) return 0;
  last = std::min(last, tokens.size() - 1);
  int count = 0;
  int covered = 0;  // highest line already counted
  for (std::size_t i = first; i <= last; ++i) {
    int lo = std::max(tokens[i].line, covered + 1);
    if (tokens[i].end_line >= lo) {
      count += tokens[i].end_line - lo + 1;
      covered = tokens[i].end_line;
    }
  }
  return count;
}

}  // namespace fdebt::java
