#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fdebt/java/lexer.hpp"
#include "fdebt/syntax.hpp"

namespace fdebt::java {

/// Parses one source file of the supported Java subset.
///
/// Package/import declarations, classes, interfaces and enums with their
/// fields, methods and constructors are read in full, as are the usual
/// statements and expressions. Generic type arguments are parsed and
/// dropped. Annotations, lambdas, member/local/anonymous class bodies and
/// anything else outside the subset are skipped to the end of the enclosing
/// member or statement (or over their braces) and counted in `parse_gaps`;
/// the rest of the file is still read.
///
/// Throws LexError from tokenization and ParseError when the file's braces
/// do not balance.
CompilationUnit parse_unit(std::string_view source, const std::string& path);

CompilationUnit parse_tokens(std::vector<Token> tokens, const std::string& path);

}  // namespace fdebt::java
