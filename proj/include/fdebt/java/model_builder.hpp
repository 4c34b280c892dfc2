#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdebt/code_model.hpp"
#include "fdebt/syntax.hpp"

namespace fdebt::java {

using TypeExists = std::function<bool(std::string_view qualified_name)>;

/// Resolves a type name as written in `unit` to a project type.
///
/// Precedence: types declared in the same file, single-type imports, the
/// unit's own package, on-demand imports. Names that reach none of these
/// (including everything from the JDK) are external and yield nullopt.
/// Array suffixes are ignored; `Outer.Inner` resolves to `Outer`.
///
/// Throws AmbiguityError when two on-demand imports both provide the name.
std::optional<std::string> resolve_type_name(const CompilationUnit& unit, std::string_view name,
                                             const TypeExists& exists);

std::optional<std::string> resolve_type_name(const CompilationUnit& unit, std::string_view name,
                                             const CodeModel& model);

/// Merges parsed units into a CodeModel: assigns ids, resolves names and
/// extracts file-to-file references. The result does not depend on the
/// order of `units`.
///
/// Throws ModelError for duplicate paths or duplicate qualified type names
/// and AmbiguityError from resolution.
CodeModel build_model(std::vector<CompilationUnit> units);

/// get*/set*/is* followed by an upper-case letter.
bool is_accessor_name(std::string_view name);

/// `getNome` -> `nome`; empty for non-accessor names.
std::string accessor_attribute(std::string_view name);

}  // namespace fdebt::java
