#include "fdebt/syntax.hpp"

namespace fdebt {

const char* to_string(Visibility v) {
  switch (v) {
    case Visibility::kPublic: return "public";
    case Visibility::kProtected: return "protected";
    case Visibility::kPackage: return "package";
    case Visibility::kPrivate: return "private";
  }
  return "package";
}

const char* to_string(TypeKind k) {
  switch (k) {
    case TypeKind::kClass: return "class";
    case TypeKind::kInterface: return "interface";
    case TypeKind::kEnum: return "enum";
  }
  return "class";
}

const char* to_string(StmtKind k) {
  switch (k) {
    case StmtKind::kBlock: return "block";
    case StmtKind::kIf: return "if";
    case StmtKind::kElseArm: return "else-arm";
    case StmtKind::kFor: return "for";
    case StmtKind::kWhile: return "while";
    case StmtKind::kDo: return "do";
    case StmtKind::kSwitch: return "switch";
    case StmtKind::kCaseArm: return "case-arm";
    case StmtKind::kTry: return "try";
    case StmtKind::kCatch: return "catch";
    case StmtKind::kFinally: return "finally";
    case StmtKind::kReturn: return "return";
    case StmtKind::kThrow: return "throw";
    case StmtKind::kLocalDecl: return "local-decl";
    case StmtKind::kExprStmt: return "expr-stmt";
    case StmtKind::kJump: return "jump";
    case StmtKind::kSynchronized: return "synchronized";
    case StmtKind::kLabeled: return "labeled";
    case StmtKind::kEmpty: return "empty";
  }
  return "empty";
}

void ExprFacts::append(const ExprFacts& other) {
  invocations.insert(invocations.end(), other.invocations.begin(), other.invocations.end());
  field_accesses.insert(field_accesses.end(), other.field_accesses.begin(),
                        other.field_accesses.end());
  names.insert(names.end(), other.names.begin(), other.names.end());
  instantiations.insert(instantiations.end(), other.instantiations.begin(),
                        other.instantiations.end());
  type_uses.insert(type_uses.end(), other.type_uses.begin(), other.type_uses.end());
  conditional_ands += other.conditional_ands;
  conditional_ors += other.conditional_ors;
  ternaries += other.ternaries;
}

bool ExprFacts::empty() const {
  return invocations.empty() && field_accesses.empty() && names.empty() &&
         instantiations.empty() && type_uses.empty() && conditional_ands == 0 &&
         conditional_ors == 0 && ternaries == 0;
}

}  // namespace fdebt
