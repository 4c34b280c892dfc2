#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fdebt::java {

enum class TokenKind { kKeyword, kIdentifier, kLiteral, kOperator, kPunctuation };

const char* to_string(TokenKind k);

struct Token {
  TokenKind kind = TokenKind::kPunctuation;
  std::string text;
  int line = 1;      // 1-based line of the first character
  int end_line = 1;  // differs from `line` only for multi-line literals
};

/// Splits Java source into tokens. Whitespace and comments are dropped; a
/// line counts as code exactly when some token covers it. Throws LexError on
/// unterminated literals/comments and on bytes outside the Java alphabet.
std::vector<Token> tokenize(std::string_view source);

/// Distinct lines covered by tokens[first..last] (inclusive).
int count_code_lines(const std::vector<Token>& tokens, std::size_t first, std::size_t last);

bool is_keyword(std::string_view word);

}  // namespace fdebt::java
