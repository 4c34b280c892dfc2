#pragma once

// Resolved, project-wide view of the parsed sources. Every analysis reads
// this model; nothing writes to it after construction.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fdebt/syntax.hpp"

namespace fdebt {

/// Dense ids, assigned in sorted-name order so reports are reproducible.
using EntityId = std::uint32_t;

enum class RefKind {
  kImport,
  kSupertype,
  kFieldType,
  kParamType,
  kReturnType,
  kInvocation,
  kFieldAccess,
  kInstantiation,
};

const char* to_string(RefKind k);

struct SourceFile {
  std::string path;
  std::string package;
  std::vector<EntityId> type_ids;
  int loc = 0;
  int parse_gaps = 0;
};

struct FieldEntity {
  EntityId id = 0;
  EntityId owner = 0;
  std::string name;
  std::string type;
  Visibility visibility = Visibility::kPackage;
  bool is_static = false;
  bool is_final = false;
};

/// One syntactic access to an attribute. `owner` is the qualified name of
/// the project type holding it; `via_accessor` marks `x.getFoo()` style
/// accesses that were mapped to attribute `foo`.
struct FieldRef {
  std::string owner;
  std::string name;
  bool own = false;
  bool via_accessor = false;
  int line = 0;
};

/// `target` is the qualified name of the project type whose method is
/// called, or empty when the receiver did not resolve to a project type.
struct InvocationRef {
  std::string target;
  std::string receiver;
  std::string name;
  int line = 0;
};

struct Parameter {
  std::string name;
  std::string type;
};

struct MethodEntity {
  EntityId id = 0;
  EntityId owner = 0;
  std::string name;
  std::string signature;  // name(T1,T2)
  Visibility visibility = Visibility::kPackage;
  bool is_constructor = false;
  bool is_static = false;
  std::vector<Parameter> params;
  std::string return_type;
  std::optional<StatementTree> body;
  int loc = 0;

  std::vector<FieldRef> accessed_fields;
  std::vector<InvocationRef> invoked;

  // Variables named in the body; inputs to NOAV.
  std::set<std::string> params_used;
  std::set<std::string> locals;

  /// Qualified project types named in the signature or body.
  std::set<std::string> referenced_types;
};

struct TypeEntity {
  EntityId id = 0;
  std::string qualified_name;
  std::string simple_name;
  TypeKind kind = TypeKind::kClass;
  Visibility visibility = Visibility::kPackage;
  std::string file;
  std::vector<EntityId> field_ids;
  std::vector<EntityId> method_ids;
  std::vector<std::string> supertype_names;
  int loc = 0;
};

struct Reference {
  std::string from_file;
  std::string to_file;
  RefKind kind = RefKind::kImport;

  auto operator<=>(const Reference&) const = default;
};

class ModelBuilder;

/// Immutable once built. Types, methods and fields live in id-indexed
/// vectors; files are keyed by path.
class CodeModel {
 public:
  CodeModel() = default;

  const std::map<std::string, SourceFile>& files() const { return files_; }
  const std::vector<TypeEntity>& types() const { return types_; }
  const std::vector<MethodEntity>& methods() const { return methods_; }
  const std::vector<FieldEntity>& fields() const { return fields_; }
  const std::vector<Reference>& references() const { return references_; }

  const TypeEntity* find_type(std::string_view qualified_name) const;
  const SourceFile* find_file(std::string_view path) const;

  /// Throws IntegrityError on an out-of-range id.
  const TypeEntity& type(EntityId id) const;
  const MethodEntity& method(EntityId id) const;
  const FieldEntity& field(EntityId id) const;

  /// Methods of every type declared in `path`, in id order.
  std::vector<const MethodEntity*> methods_in_file(std::string_view path) const;

 private:
  friend class ModelBuilder;

  std::map<std::string, SourceFile> files_;
  std::vector<TypeEntity> types_;
  std::vector<MethodEntity> methods_;
  std::vector<FieldEntity> fields_;
  std::vector<Reference> references_;
  std::map<std::string, EntityId, std::less<>> type_index_;
};

/// Absent for unknown names; never throws.
const TypeEntity* entity_lookup(const CodeModel& model, std::string_view qualified_name);

/// "<owner qualified name>#<name>(<T1,T2,...>)".
std::string method_qualified_name(const MethodEntity& method, const CodeModel& model);

}  // namespace fdebt
