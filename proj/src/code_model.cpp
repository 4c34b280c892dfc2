#include "fdebt/code_model.hpp"

#include "fdebt/errors.hpp"

namespace fdebt {

const char* to_string(RefKind k) {
  switch (k) {
    case RefKind::kImport: return "import";
    case RefKind::kSupertype: return "supertype";
    case RefKind::kFieldType: return "field-type";
    case RefKind::kParamType: return "param-type";
    case RefKind::kReturnType: return "return-type";
    case RefKind::kInvocation: return "invocation";
    case RefKind::kFieldAccess: return "field-access";
    case RefKind::kInstantiation: return "instantiation";
  }
  return "import";
}

const TypeEntity* CodeModel::find_type(std::string_view qualified_name) const {
  auto it = type_index_.find(qualified_name);
  if (it == type_index_.end()) return nullptr;
  return &types_[it->second];
}

const SourceFile* CodeModel::find_file(std::string_view path) const {
  auto it = files_.find(std::string(path));
  return it == files_.end() ? nullptr : &it->second;
}

const TypeEntity& CodeModel::type(EntityId id) const {
  if (id >= types_.size()) throw IntegrityError("dangling type id " + std::to_string(id));
  return types_[id];
}

const MethodEntity& CodeModel::method(EntityId id) const {
  if (id >= methods_.size()) throw IntegrityError("dangling method id " + std::to_string(id));
  return methods_[id];
}

const FieldEntity& CodeModel::field(EntityId id) const {
  if (id >= fields_.size()) throw IntegrityError("dangling field id " + std::to_string(id));
  return fields_[id];
}

std::vector<const MethodEntity*> CodeModel::methods_in_file(std::string_view path) const {
  std::vector<const MethodEntity*> out;
  const SourceFile* file = find_file(path);
  if (file == nullptr) return out;
  for (EntityId tid : file->type_ids) {
    for (EntityId mid : type(tid).method_ids) out.push_back(&method(mid));
  }
  return out;
}

const TypeEntity* entity_lookup(const CodeModel& model, std::string_view qualified_name) {
  return model.find_type(qualified_name);
}

std::string method_qualified_name(const MethodEntity& method, const CodeModel& model) {
  const TypeEntity& owner = model.type(method.owner);
  std::string out = owner.qualified_name;
  out += '#';
  out += method.name;
  out += '(';
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i > 0) out += ',';
    out += method.params[i].type;
  }
  out += ')';
  return out;
}

}  // namespace fdebt
