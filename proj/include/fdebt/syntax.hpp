#pragma once

#include <string>
#include <vector>

namespace fdebt {

enum class Visibility { kPublic, kProtected, kPackage, kPrivate };

const char* to_string(Visibility v);

// ----------------------------------------------------------------------------
// Expression facts
// ----------------------------------------------------------------------------

/// `receiver.name(...)`. The receiver is empty for an unqualified call,
/// "this"/"super" for those keywords, a (possibly dotted) name when the
/// receiver is a plain name chain, and "<expr>" for anything else.
struct RawInvocation {
  std::string receiver;
  std::string name;
  int line = 0;
};

/// `receiver.field` used as a value (not as a call target).
struct RawFieldAccess {
  std::string receiver;
  std::string field;
  int line = 0;
};

/// A bare identifier in value position.
struct NameUse {
  std::string name;
  int line = 0;
};

/// Everything the analyses need from the expressions of one statement.
struct ExprFacts {
  std::vector<RawInvocation> invocations;
  std::vector<RawFieldAccess> field_accesses;
  std::vector<NameUse> names;
  std::vector<std::string> instantiations;  // `new T(...)`, generics dropped
  std::vector<std::string> type_uses;       // casts, instanceof, T.class
  int conditional_ands = 0;
  int conditional_ors = 0;
  int ternaries = 0;

  void append(const ExprFacts& other);
  bool empty() const;
};

// ----------------------------------------------------------------------------
// Statement tree
// ----------------------------------------------------------------------------

enum class StmtKind {
  kBlock,
  kIf,
  kElseArm,
  kFor,
  kWhile,
  kDo,
  kSwitch,
  kCaseArm,
  kTry,
  kCatch,
  kFinally,
  kReturn,
  kThrow,
  kLocalDecl,
  kExprStmt,
  kJump,  // break / continue / yield
  kSynchronized,
  kLabeled,
  kEmpty,
};

const char* to_string(StmtKind k);

struct Statement {
  StmtKind kind = StmtKind::kEmpty;
  int line = 0;
  ExprFacts facts;  // header/condition/initializer expressions of this node
  std::vector<Statement> children;

  /// Local declarations, enhanced-for variables and catch parameters.
  std::string declared_type;
  std::vector<std::string> declared_names;

  /// kCaseArm only: `default` labels are not decision points.
  bool is_default = false;
  /// kCaseArm only: number of labels (`case 1, 2 ->` carries two).
  int labels = 0;
};

/// The body of a method is a kBlock statement.
using StatementTree = Statement;

// ----------------------------------------------------------------------------
// Unresolved declarations, as read from one file
// ----------------------------------------------------------------------------

struct RawParameter {
  std::string name;
  std::string type;  // base name, generics dropped, "[]" per array dimension
};

struct RawField {
  std::string name;
  std::string type;
  Visibility visibility = Visibility::kPackage;
  bool is_static = false;
  bool is_final = false;
  int line = 0;
  ExprFacts initializer;
};

struct RawMethod {
  std::string name;
  std::vector<RawParameter> params;
  std::string return_type;  // empty for constructors
  Visibility visibility = Visibility::kPackage;
  bool is_constructor = false;
  bool is_static = false;
  bool is_abstract = false;
  bool has_body = false;
  StatementTree body;
  std::vector<std::string> throws;
  int line = 0;
  int end_line = 0;
  int loc = 0;  // code lines spanned by the declaration
};

enum class TypeKind { kClass, kInterface, kEnum };

const char* to_string(TypeKind k);

struct RawType {
  std::string name;
  TypeKind kind = TypeKind::kClass;
  Visibility visibility = Visibility::kPackage;
  std::vector<std::string> supertypes;
  std::vector<RawField> fields;
  std::vector<RawMethod> methods;
  int line = 0;
  int end_line = 0;
  int loc = 0;
};

struct Import {
  std::string name;  // dotted, without the trailing ".*"
  bool on_demand = false;
  bool is_static = false;
};

struct CompilationUnit {
  std::string path;
  std::string package;
  std::vector<Import> imports;
  std::vector<RawType> types;
  int loc = 0;
  int parse_gaps = 0;
};

}  // namespace fdebt
