#include "fdebt/java/model_builder.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "fdebt/errors.hpp"

namespace fdebt {
namespace {

std::string qualify(const std::string& package, const std::string& name) {
  return package.empty() ? name : package + "." + name;
}

std::string strip_array(std::string_view name) {
  while (name.ends_with("[]")) name.remove_suffix(2);
  return std::string(name);
}

std::string last_segment(std::string_view dotted) {
  auto dot = dotted.rfind('.');
  return std::string(dot == std::string_view::npos ? dotted : dotted.substr(dot + 1));
}

std::string first_segment(std::string_view dotted) {
  return std::string(dotted.substr(0, dotted.find('.')));
}

bool is_primitive_name(std::string_view n) {
  return n == "boolean" || n == "byte" || n == "char" || n == "short" || n == "int" ||
         n == "long" || n == "float" || n == "double" || n == "void" || n == "var";
}

struct Declared {
  const CompilationUnit* unit;
  const RawType* type;
};

}  // namespace

/// Single-use helper that fills a CodeModel; friend of CodeModel.
class ModelBuilder {
 public:
  CodeModel build(std::vector<CompilationUnit> units) {
    std::sort(units.begin(), units.end(),
              [](const CompilationUnit& a, const CompilationUnit& b) { return a.path < b.path; });
    for (std::size_t i = 1; i < units.size(); ++i) {
      if (units[i].path == units[i - 1].path) {
        throw ModelError("duplicate source path: " + units[i].path);
      }
    }
    units_ = std::move(units);
    index_types();
    assign_entities();
    for (const CompilationUnit& unit : units_) collect_references(unit);

    std::sort(refs_.begin(), refs_.end());
    refs_.erase(std::unique(refs_.begin(), refs_.end()), refs_.end());
    model_.references_ = std::move(refs_);
    return std::move(model_);
  }

 private:
  void index_types() {
    for (const CompilationUnit& unit : units_) {
      for (const RawType& type : unit.types) {
        std::string qn = qualify(unit.package, type.name);
        auto [it, inserted] = declared_.emplace(qn, Declared{&unit, &type});
        if (!inserted) {
          throw ModelError("duplicate type " + qn + " declared in " + it->second.unit->path +
                           " and " + unit.path);
        }
      }
    }
  }

  bool exists(std::string_view qn) const { return declared_.count(std::string(qn)) != 0; }

  java::TypeExists exists_fn() const {
    return [this](std::string_view qn) { return exists(qn); };
  }

  std::optional<std::string> resolve(const CompilationUnit& unit, std::string_view name) const {
    return java::resolve_type_name(unit, name, exists_fn());
  }

  void assign_entities() {
    EntityId next_type = 0;
    for (const auto& [qn, decl] : declared_) {
      TypeEntity t;
      t.id = next_type++;
      t.qualified_name = qn;
      t.simple_name = decl.type->name;
      t.kind = decl.type->kind;
      t.visibility = decl.type->visibility;
      t.file = decl.unit->path;
      t.supertype_names = decl.type->supertypes;
      t.loc = decl.type->loc;
      model_.type_index_.emplace(qn, t.id);
      model_.types_.push_back(std::move(t));
    }
    for (const CompilationUnit& unit : units_) {
      SourceFile f;
      f.path = unit.path;
      f.package = unit.package;
      f.loc = unit.loc;
      f.parse_gaps = unit.parse_gaps;
      for (const RawType& type : unit.types) {
        f.type_ids.push_back(model_.type_index_.at(qualify(unit.package, type.name)));
      }
      std::sort(f.type_ids.begin(), f.type_ids.end());
      model_.files_.emplace(unit.path, std::move(f));
    }

    for (TypeEntity& owner : model_.types_) {
      const Declared& decl = declared_.at(owner.qualified_name);

      std::map<std::string, const RawField*> fields;
      for (const RawField& f : decl.type->fields) fields.emplace(f.name, &f);  // first wins
      for (const auto& [name, raw] : fields) {
        FieldEntity f;
        f.id = static_cast<EntityId>(model_.fields_.size());
        f.owner = owner.id;
        f.name = name;
        f.type = raw->type;
        f.visibility = raw->visibility;
        f.is_static = raw->is_static;
        f.is_final = raw->is_final;
        owner.field_ids.push_back(f.id);
        model_.fields_.push_back(std::move(f));
      }

      std::map<std::string, const RawMethod*> methods;
      for (const RawMethod& m : decl.type->methods) methods.emplace(signature_of(m), &m);
      for (const auto& [sig, raw] : methods) {
        MethodEntity m = resolve_method(*decl.unit, owner, *raw);
        m.id = static_cast<EntityId>(model_.methods_.size());
        m.signature = sig;
        owner.method_ids.push_back(m.id);
        model_.methods_.push_back(std::move(m));
      }
    }
  }

  static std::string signature_of(const RawMethod& m) {
    std::string sig = m.name + "(";
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i > 0) sig += ',';
      sig += m.params[i].type;
    }
    return sig + ")";
  }

  // ---------------------------------------------------------------------------
  // Per-method resolution
  // ---------------------------------------------------------------------------

  struct Scope {
    const CompilationUnit* unit = nullptr;
    const RawType* type = nullptr;
    std::string self;  // qualified name of the enclosing type
    std::map<std::string, std::string> params;
    std::map<std::string, std::string> locals;
  };

  const RawField* own_field(const Scope& scope, const std::string& name) const {
    for (const RawField& f : scope.type->fields) {
      if (f.name == name) return &f;
    }
    return nullptr;
  }

  static void collect_locals(const Statement& s, std::map<std::string, std::string>& out) {
    for (const std::string& n : s.declared_names) out.emplace(n, s.declared_type);
    for (const Statement& c : s.children) collect_locals(c, out);
  }

  // Declared type of a variable visible in the method: locals shadow
  // parameters, which shadow fields.
  std::optional<std::string> variable_type(const Scope& scope, const std::string& name) const {
    if (auto it = scope.locals.find(name); it != scope.locals.end()) return it->second;
    if (auto it = scope.params.find(name); it != scope.params.end()) return it->second;
    if (const RawField* f = own_field(scope, name)) return f->type;
    return std::nullopt;
  }

  // Project type whose value a declared type denotes. Arrays denote no
  // project type: `xs.length` is not an attribute of the element class.
  std::optional<std::string> value_type(const CompilationUnit& unit,
                                        const std::string& declared) const {
    if (declared.ends_with("[]")) return std::nullopt;
    return resolve(unit, declared);
  }

  // Type of the receiver of `receiver.member`, from declared types only.
  std::optional<std::string> receiver_type(const Scope& scope, const std::string& receiver) const {
    if (receiver.empty() || receiver == "<expr>" || receiver == "super") return std::nullopt;
    if (receiver == "this") return scope.self;

    std::string head = first_segment(receiver);
    std::string rest = receiver.size() > head.size() ? receiver.substr(head.size() + 1) : "";
    std::optional<std::string> current;
    if (head == "this") {
      current = scope.self;
    } else if (auto declared = variable_type(scope, head)) {
      current = value_type(*scope.unit, *declared);
    } else {
      // A type (static member access) or a package-qualified type name.
      return resolve(*scope.unit, receiver);
    }
    // Walk the remaining segments through declared field types.
    while (current && !rest.empty()) {
      std::string seg = first_segment(rest);
      rest = rest.size() > seg.size() ? rest.substr(seg.size() + 1) : "";
      const Declared& holder = declared_.at(*current);
      const RawField* field = nullptr;
      for (const RawField& f : holder.type->fields) {
        if (f.name == seg) field = &f;
      }
      if (field == nullptr) return std::nullopt;
      current = value_type(*holder.unit, field->type);
    }
    return current;
  }

  void note_type(const Scope& scope, const std::string& name, MethodEntity& m) const {
    if (auto qn = resolve(*scope.unit, name)) m.referenced_types.insert(*qn);
  }

  void visit_facts(const Scope& scope, const ExprFacts& facts, MethodEntity& m) const {
    for (const NameUse& use : facts.names) {
      if (scope.locals.count(use.name)) {
        m.locals.insert(use.name);
      } else if (scope.params.count(use.name)) {
        m.params_used.insert(use.name);
      } else if (own_field(scope, use.name)) {
        m.accessed_fields.push_back(FieldRef{scope.self, use.name, true, false, use.line});
      }
    }
    for (const RawFieldAccess& fa : facts.field_accesses) {
      auto owner = receiver_type(scope, fa.receiver);
      if (!owner) continue;
      bool own = *owner == scope.self;
      m.accessed_fields.push_back(FieldRef{*owner, fa.field, own, false, fa.line});
      m.referenced_types.insert(*owner);
    }
    for (const RawInvocation& inv : facts.invocations) {
      std::optional<std::string> target;
      if (inv.receiver.empty()) {
        target = scope.self;
      } else {
        target = receiver_type(scope, inv.receiver);
      }
      m.invoked.push_back(InvocationRef{target.value_or(""), inv.receiver, inv.name, inv.line});
      if (!target) continue;
      m.referenced_types.insert(*target);
      if (*target != scope.self && java::is_accessor_name(inv.name)) {
        m.accessed_fields.push_back(
            FieldRef{*target, java::accessor_attribute(inv.name), false, true, inv.line});
      }
    }
    for (const std::string& t : facts.instantiations) note_type(scope, t, m);
    for (const std::string& t : facts.type_uses) note_type(scope, t, m);
  }

  void visit_statement(const Scope& scope, const Statement& s, MethodEntity& m) const {
    for (const std::string& n : s.declared_names) m.locals.insert(n);
    if (!s.declared_type.empty()) note_type(scope, s.declared_type, m);
    visit_facts(scope, s.facts, m);
    for (const Statement& c : s.children) visit_statement(scope, c, m);
  }

  MethodEntity resolve_method(const CompilationUnit& unit, const TypeEntity& owner,
                              const RawMethod& raw) const {
    MethodEntity m;
    m.owner = owner.id;
    m.name = raw.name;
    m.visibility = raw.visibility;
    m.is_constructor = raw.is_constructor;
    m.is_static = raw.is_static;
    m.return_type = raw.return_type;
    m.loc = raw.has_body ? raw.loc : 0;
    for (const RawParameter& p : raw.params) m.params.push_back(Parameter{p.name, p.type});

    Scope scope;
    scope.unit = &unit;
    scope.type = declared_.at(owner.qualified_name).type;
    scope.self = owner.qualified_name;
    for (const RawParameter& p : raw.params) scope.params.emplace(p.name, p.type);

    for (const RawParameter& p : raw.params) note_type(scope, p.type, m);
    if (!raw.return_type.empty()) note_type(scope, raw.return_type, m);
    for (const std::string& t : raw.throws) note_type(scope, t, m);

    if (raw.has_body) {
      m.body = raw.body;
      collect_locals(raw.body, scope.locals);
      visit_statement(scope, raw.body, m);
    }
    return m;
  }

  // ---------------------------------------------------------------------------
  // File references
  // ---------------------------------------------------------------------------

  void add_ref(const std::string& from_file, const std::string& to_type, RefKind kind) {
    const std::string& to_file = declared_.at(to_type).unit->path;
    if (to_file == from_file) return;
    refs_.push_back(Reference{from_file, to_file, kind});
  }

  void add_resolved(const CompilationUnit& unit, const std::string& name, RefKind kind) {
    if (auto qn = resolve(unit, name)) add_ref(unit.path, *qn, kind);
  }

  void collect_references(const CompilationUnit& unit) {
    for (const Import& imp : unit.imports) {
      std::string target = imp.name;
      if (imp.is_static && !imp.on_demand) {
        auto dot = target.rfind('.');
        target = dot == std::string::npos ? target : target.substr(0, dot);
      }
      if (exists(target)) add_ref(unit.path, target, RefKind::kImport);
    }
    for (const RawType& raw : unit.types) {
      const TypeEntity& type = *model_.find_type(qualify(unit.package, raw.name));
      for (const std::string& s : raw.supertypes) add_resolved(unit, s, RefKind::kSupertype);
      for (const RawField& f : raw.fields) {
        add_resolved(unit, f.type, RefKind::kFieldType);
        Scope scope;
        scope.unit = &unit;
        scope.type = &raw;
        scope.self = type.qualified_name;
        MethodEntity init;  // field initializers, not owned by any method
        visit_facts(scope, f.initializer, init);
        body_references(unit, init);
        for (const std::string& t : f.initializer.instantiations) {
          add_resolved(unit, t, RefKind::kInstantiation);
        }
      }
      for (EntityId mid : type.method_ids) {
        const MethodEntity& m = model_.methods_[mid];
        for (const Parameter& p : m.params) add_resolved(unit, p.type, RefKind::kParamType);
        if (!m.return_type.empty()) add_resolved(unit, m.return_type, RefKind::kReturnType);
        body_references(unit, m);
      }
    }
  }

  void body_references(const CompilationUnit& unit, const MethodEntity& m) {
    for (const InvocationRef& inv : m.invoked) {
      if (!inv.target.empty()) add_ref(unit.path, inv.target, RefKind::kInvocation);
    }
    for (const FieldRef& f : m.accessed_fields) {
      if (!f.own && !f.via_accessor) add_ref(unit.path, f.owner, RefKind::kFieldAccess);
    }
    if (!m.body) return;
    std::vector<const Statement*> stack{&*m.body};
    while (!stack.empty()) {
      const Statement* s = stack.back();
      stack.pop_back();
      for (const std::string& t : s->facts.instantiations) {
        add_resolved(unit, t, RefKind::kInstantiation);
      }
      for (const Statement& c : s->children) stack.push_back(&c);
    }
  }

  std::vector<CompilationUnit> units_;
  std::map<std::string, Declared> declared_;
  std::vector<Reference> refs_;
  CodeModel model_;
};

namespace java {

std::optional<std::string> resolve_type_name(const CompilationUnit& unit, std::string_view name,
                                             const TypeExists& exists) {
  std::string base = strip_array(name);
  if (base.empty() || is_primitive_name(base)) return std::nullopt;

  if (base.find('.') != std::string::npos) {
    if (exists(base)) return base;
    // Outer.Inner: nested types collapse to their enclosing top-level type.
    std::string head = first_segment(base);
    if (auto outer = resolve_type_name(unit, head, exists)) return outer;
    // pkg.Outer.Inner
    std::string prefix = base;
    while (true) {
      auto dot = prefix.rfind('.');
      if (dot == std::string::npos) break;
      prefix.resize(dot);
      if (exists(prefix)) return prefix;
    }
    return std::nullopt;
  }

  for (const RawType& t : unit.types) {
    if (t.name == base) return qualify(unit.package, base);
  }
  for (const Import& imp : unit.imports) {
    if (imp.on_demand || imp.is_static) continue;
    if (last_segment(imp.name) == base) {
      if (exists(imp.name)) return imp.name;
      return std::nullopt;  // an explicit import of an external type shadows the package
    }
  }
  std::string same_package = qualify(unit.package, base);
  if (exists(same_package)) return same_package;

  std::set<std::string> candidates;
  for (const Import& imp : unit.imports) {
    if (!imp.on_demand || imp.is_static) continue;
    std::string candidate = imp.name + "." + base;
    if (exists(candidate)) candidates.insert(candidate);
  }
  if (candidates.size() > 1) {
    std::string list;
    for (const std::string& c : candidates) list += (list.empty() ? "" : ", ") + c;
    throw AmbiguityError(unit.path + ": type name '" + base + "' is ambiguous between " + list);
  }
  if (candidates.size() == 1) return *candidates.begin();
  return std::nullopt;
}

std::optional<std::string> resolve_type_name(const CompilationUnit& unit, std::string_view name,
                                             const CodeModel& model) {
  return resolve_type_name(unit, name, [&model](std::string_view qn) {
    return model.find_type(qn) != nullptr;
  });
}

CodeModel build_model(std::vector<CompilationUnit> units) {
  return ModelBuilder().build(std::move(units));
}

bool is_accessor_name(std::string_view name) {
  auto upper_at = [&](std::size_t i) {
    return name.size() > i && std::isupper(static_cast<unsigned char>(name[i]));
  };
  return ((name.starts_with("get") || name.starts_with("set")) && upper_at(3)) ||
         (name.starts_with("is") && upper_at(2));
}

std::string accessor_attribute(std::string_view name) {
  if (!is_accessor_name(name)) return {};
  std::string attr(name.substr(name.starts_with("is") ? 2 : 3));
  attr[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(attr[0])));
  return attr;
}

}  // namespace java
}  // namespace fdebt
