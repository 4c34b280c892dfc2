#include "java_gen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fdebt/java/lexer.hpp"
#include "fdebt/java/model_builder.hpp"

namespace fdebt::testing {
namespace {

constexpr int kInt = -1;  // field/param/local type: int; otherwise a class index

struct FieldSpec {
  std::string ph;  // "F<c>_<i>"
  int type = kInt;
  std::string visibility;
};

struct MethodSpec {
  enum Kind { kGetter, kSetter, kPlain, kConstructor } kind = kPlain;
  std::string ph;  // "M<c>_<i>"; unused for accessors and constructors
  int field = -1;  // accessor target
  std::vector<int> params;
  std::vector<std::string> param_ph;
  bool returns_int = false;
  std::string visibility;
};

struct ClassSpec {
  int index = 0;
  int package = 0;
  std::vector<FieldSpec> fields;
  std::vector<MethodSpec> methods;
};

std::string ph(const std::string& name) { return "@" + name + "@"; }
std::string cls(int c) { return ph("C" + std::to_string(c)); }
std::string cap(const FieldSpec& f) { return ph("U" + f.ph.substr(1)); }

struct Var {
  std::string text;  // rendered reference
  int type = kInt;
};

class Generator {
 public:
  Generator(std::mt19937_64& rng, const GeneratorOptions& options) : rng_(rng), opt_(options) {}

  GeneratedProject run() {
    int n = pick(opt_.min_classes, opt_.max_classes);
    controllers_ = pick(0, 2);
    referable_ = n;
    n += controllers_;
    packages_ = pick(1, 2);
    for (int p = 0; p < packages_; ++p) use("K" + std::to_string(p));
    for (int c = 0; c < n; ++c) {
      ClassSpec k;
      k.index = c;
      k.package = pick(0, packages_ - 1);
      use("C" + std::to_string(c));
      classes_.push_back(k);
    }
    for (ClassSpec& k : classes_) declare_members(k);
    GeneratedProject out;
    for (const ClassSpec& k : classes_) out.files.push_back(emit(k, out));
    out.placeholders.assign(used_.begin(), used_.end());
    return out;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return pick(1, 100) <= percent; }
  std::string visibility() {
    static const char* kinds[] = {"public ", "private ", "protected ", ""};
    return kinds[pick(0, 3)];
  }
  int any_type() { return chance(50) ? kInt : pick(0, referable_ - 1); }
  bool is_controller(const ClassSpec& k) const { return k.index >= referable_; }
  void use(const std::string& name) { used_.insert(name); }
  std::string type_name(int t) const { return t == kInt ? "int" : cls(t); }

  void declare_members(ClassSpec& k) {
    std::string c = std::to_string(k.index);
    bool controller = is_controller(k);
    int fields = controller ? pick(1, 3) : pick(0, 4);
    for (int i = 0; i < fields; ++i) {
      int type = controller ? pick(0, referable_ - 1) : any_type();
      FieldSpec f{"F" + c + "_" + std::to_string(i), type, controller ? "private " : visibility()};
      use(f.ph);
      use("U" + f.ph.substr(1));
      k.fields.push_back(f);
    }
    for (int i = 0; i < fields && !controller; ++i) {
      if (chance(40)) k.methods.push_back(MethodSpec{MethodSpec::kGetter, "", i, {}, {}, false, "public "});
      if (chance(25)) k.methods.push_back(MethodSpec{MethodSpec::kSetter, "", i, {k.fields[i].type}, {}, false, "public "});
    }
    if (chance(30)) {
      MethodSpec ctor{MethodSpec::kConstructor, "", -1, {kInt}, {}, false, "public "};
      k.methods.push_back(ctor);
    }
    int plain = pick(1, 4);
    for (int i = 0; i < plain; ++i) {
      MethodSpec m;
      m.kind = MethodSpec::kPlain;
      m.ph = "M" + c + "_" + std::to_string(i);
      use(m.ph);
      int params = pick(0, 3);
      for (int p = 0; p < params; ++p) m.params.push_back(any_type());
      m.returns_int = chance(60);
      m.visibility = controller ? "public " : visibility();
      k.methods.push_back(m);
    }
    for (MethodSpec& m : k.methods) {
      for (std::size_t p = 0; p < m.params.size(); ++p) {
        std::string name = "P" + std::to_string(next_param_++);
        use(name);
        m.param_ph.push_back(name);
      }
    }
  }

  std::string comment_line(const std::string& indent) {
    switch (pick(0, 2)) {
      case 0: return indent + "// note " + std::to_string(pick(0, 99)) + "\n";
      case 1: return indent + "/* block\n" + indent + "   spanning { lines } */\n";
      default: return indent + "/** doc \"quoted\" */\n";
    }
  }

  std::string trailing_comment() {
    if (!opt_.comments || !chance(15)) return "";
    return chance(50) ? " // tail" : " /* tail */";
  }

  GeneratedProject::File emit(const ClassSpec& k, GeneratedProject& out) {
    cur_ = &k;
    std::ostringstream s;
    if (opt_.comments && chance(50)) s << "/* header\n * comment\n */\n";
    s << "package " << ph("K" + std::to_string(k.package)) << ";\n\n";
    if (packages_ > 1) {
      int other = 1 - k.package;
      if (chance(50)) {
        s << "import " << ph("K" + std::to_string(other)) << ".*;\n";
      } else {
        for (const ClassSpec& o : classes_) {
          if (o.package == other && !is_controller(o)) {
            s << "import " << ph("K" + std::to_string(other)) << "." << cls(o.index) << ";\n";
          }
        }
      }
      s << "import java.util.List;\n\n";
    }
    s << "public class " << cls(k.index) << " {\n";
    for (const FieldSpec& f : k.fields) {
      s << "    " << f.visibility << type_name(f.type) << " " << ph(f.ph);
      if (f.type == kInt && chance(30)) s << " = " << pick(0, 9);
      s << ";" << trailing_comment() << "\n";
    }
    std::string key_prefix = ph("K" + std::to_string(k.package)) + "." + cls(k.index);
    out.class_keys.push_back(key_prefix);
    for (const MethodSpec& m : k.methods) {
      s << "\n";
      if (opt_.comments && chance(30)) s << comment_line("    ");
      std::string name;
      std::string sig;
      switch (m.kind) {
        case MethodSpec::kGetter: {
          const FieldSpec& f = k.fields[m.field];
          name = "get" + cap(f);
          s << "    public " << type_name(f.type) << " " << name << "() {\n";
          s << "        return " << ph(f.ph) << ";\n    }\n";
          break;
        }
        case MethodSpec::kSetter: {
          const FieldSpec& f = k.fields[m.field];
          name = "set" + cap(f);
          s << "    public void " << name << "(" << type_name(f.type) << " " << ph(m.param_ph[0])
            << ") {\n";
          s << "        this." << ph(f.ph) << " = " << ph(m.param_ph[0]) << ";\n    }\n";
          break;
        }
        case MethodSpec::kConstructor:
        case MethodSpec::kPlain: {
          name = m.kind == MethodSpec::kConstructor ? cls(k.index) : ph(m.ph);
          s << "    " << m.visibility;
          if (m.kind == MethodSpec::kPlain) s << (m.returns_int ? "int " : "void ");
          s << name << "(";
          scope_.clear();
          for (std::size_t p = 0; p < m.params.size(); ++p) {
            if (p) s << ", ";
            s << type_name(m.params[p]) << " " << ph(m.param_ph[p]);
            scope_.push_back(Var{ph(m.param_ph[p]), m.params[p]});
          }
          for (const FieldSpec& f : k.fields) scope_.push_back(Var{ph(f.ph), f.type});
          s << ") {\n";
          block(s, 2, opt_.max_depth);
          if (m.returns_int && m.kind == MethodSpec::kPlain) {
            s << "        return " << int_expr(2) << ";\n";
          }
          s << "    }\n";
          break;
        }
      }
      std::string params;
      for (std::size_t p = 0; p < m.params.size(); ++p) {
        if (p) params += ",";
        params += type_name(m.params[p]);
      }
      out.method_keys.push_back(key_prefix + "#" + name + "(" + params + ")");
    }
    s << "}\n";
    return {ph("K" + std::to_string(k.package)) + "/" + cls(k.index) + ".java", s.str()};
  }

  // Statements --------------------------------------------------------------

  void block(std::ostringstream& s, int indent, int depth) {
    std::size_t mark = scope_.size();
    int n = pick(depth > 0 ? 1 : 0, 4);
    for (int i = 0; i < n; ++i) statement(s, indent, depth);
    scope_.resize(mark);
  }

  std::string pad(int indent) const { return std::string(static_cast<std::size_t>(indent) * 4, ' '); }

  std::string new_local() {
    std::string name = "L" + std::to_string(next_local_++);
    use(name);
    return ph(name);
  }

  void statement(std::ostringstream& s, int indent, int depth) {
    std::string p = pad(indent);
    if (opt_.comments && chance(10)) s << comment_line(p);
    int kind = pick(0, depth > 0 ? 9 : 4);
    switch (kind) {
      case 0: {
        std::string l = new_local();
        s << p << "int " << l << " = " << int_expr(2) << ";" << trailing_comment() << "\n";
        scope_.push_back(Var{l, kInt});
        break;
      }
      case 1: {
        int t = pick(0, referable_ - 1);
        std::string l = new_local();
        s << p << cls(t) << " " << l << " = ";
        std::vector<const Var*> same;
        for (const Var& v : scope_) {
          if (v.type == t) same.push_back(&v);
        }
        if (!same.empty() && chance(50)) {
          s << same[pick(0, static_cast<int>(same.size()) - 1)]->text;
        } else {
          s << "new " << cls(t) << "()";
        }
        s << ";\n";
        scope_.push_back(Var{l, t});
        break;
      }
      case 2: {
        const Var* v = int_var();
        if (v) {
          s << p << v->text << (chance(50) ? "++;" : " = " + int_expr(2) + ";") << "\n";
        } else {
          s << p << "System.out.println(" << int_expr(1) << ");\n";
        }
        break;
      }
      case 3:
      case 4:
        s << p << call_statement() << "\n";
        break;
      case 5:
      case 6: {
        s << p << "if (" << condition() << ") {\n";
        block(s, indent + 1, depth - 1);
        if (chance(40)) {
          s << p << "} else {\n";
          block(s, indent + 1, depth - 1);
        }
        s << p << "}\n";
        break;
      }
      case 7: {
        std::string l = new_local();
        s << p << "for (int " << l << " = 0; " << l << " < " << int_expr(1) << "; " << l
          << "++) {\n";
        scope_.push_back(Var{l, kInt});
        block(s, indent + 1, depth - 1);
        scope_.pop_back();
        s << p << "}\n";
        break;
      }
      case 8: {
        s << p << "while (" << condition() << ") {\n";
        block(s, indent + 1, depth - 1);
        s << pad(indent + 1) << "break;\n" << p << "}\n";
        break;
      }
      default: {
        s << p << "switch (" << int_expr(1) << ") {\n";
        s << p << "    case 1:\n";
        block(s, indent + 2, depth - 1);
        s << pad(indent + 2) << "break;\n";
        if (chance(50)) {
          s << p << "    case 2:\n" << p << "    case 3:\n";
          block(s, indent + 2, depth - 1);
          s << pad(indent + 2) << "break;\n";
        }
        s << p << "    default:\n";
        block(s, indent + 2, depth - 1);
        s << p << "}\n";
        break;
      }
    }
  }

  // Expressions ----------------------------------------------------------------

  const Var* int_var() {
    std::vector<const Var*> ints;
    for (const Var& v : scope_) {
      if (v.type == kInt) ints.push_back(&v);
    }
    if (ints.empty()) return nullptr;
    return ints[pick(0, static_cast<int>(ints.size()) - 1)];
  }

  const Var* object_var() {
    std::vector<const Var*> objs;
    for (const Var& v : scope_) {
      if (v.type != kInt) objs.push_back(&v);
    }
    if (objs.empty()) return nullptr;
    return objs[pick(0, static_cast<int>(objs.size()) - 1)];
  }

  // Something int-valued read through another object, or empty.
  std::string foreign_read() {
    const Var* o = object_var();
    if (!o) return {};
    const ClassSpec& k = classes_[o->type];
    std::vector<std::string> options;
    for (const FieldSpec& f : k.fields) {
      if (f.type == kInt) options.push_back(o->text + "." + ph(f.ph));
    }
    for (const MethodSpec& m : k.methods) {
      if (m.kind == MethodSpec::kGetter && k.fields[m.field].type == kInt) {
        options.push_back(o->text + ".get" + cap(k.fields[m.field]) + "()");
      }
      if (m.kind == MethodSpec::kPlain && m.returns_int) {
        options.push_back(o->text + "." + ph(m.ph) + "(" + args(m) + ")");
      }
    }
    if (options.empty()) return {};
    return options[pick(0, static_cast<int>(options.size()) - 1)];
  }

  std::string args(const MethodSpec& m) {
    std::string out;
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i) out += ", ";
      out += m.params[i] == kInt ? std::to_string(pick(0, 9)) : "null";
    }
    return out;
  }

  std::string int_expr(int budget) {
    int kind = pick(0, budget > 0 ? 5 : 2);
    switch (kind) {
      case 0: return std::to_string(pick(0, 99));
      case 1:
      case 2: {
        const Var* v = int_var();
        return v ? v->text : std::to_string(pick(0, 9));
      }
      case 3: {
        std::string f = foreign_read();
        return f.empty() ? std::to_string(pick(0, 9)) : f;
      }
      case 4: return int_expr(budget - 1) + (chance(50) ? " + " : " * ") + int_expr(budget - 1);
      default:
        return "(" + condition_leaf(budget - 1) + " ? " + int_expr(budget - 1) + " : " +
               int_expr(budget - 1) + ")";
    }
  }

  std::string condition_leaf(int budget) {
    static const char* ops[] = {" < ", " > ", " == ", " != ", " >= "};
    return int_expr(budget) + ops[pick(0, 4)] + int_expr(budget);
  }

  std::string condition() {
    std::string c = condition_leaf(1);
    int extra = pick(0, 2);
    for (int i = 0; i < extra; ++i) c += (chance(50) ? " && " : " || ") + condition_leaf(1);
    return c;
  }

  std::string call_statement() {
    const ClassSpec& k = *cur_;
    if (chance(50)) {
      if (const Var* o = object_var()) {
        const ClassSpec& other = classes_[o->type];
        std::vector<const MethodSpec*> callable;
        for (const MethodSpec& m : other.methods) {
          if (m.kind == MethodSpec::kPlain || m.kind == MethodSpec::kSetter) callable.push_back(&m);
        }
        if (!callable.empty()) {
          const MethodSpec& m = *callable[pick(0, static_cast<int>(callable.size()) - 1)];
          std::string name = m.kind == MethodSpec::kSetter ? "set" + cap(other.fields[m.field])
                                                            : ph(m.ph);
          return o->text + "." + name + "(" + args(m) + ");";
        }
      }
    }
    std::vector<const MethodSpec*> own;
    for (const MethodSpec& m : k.methods) {
      if (m.kind == MethodSpec::kPlain) own.push_back(&m);
    }
    const MethodSpec& m = *own[pick(0, static_cast<int>(own.size()) - 1)];
    return (chance(30) ? "this." : "") + ph(m.ph) + "(" + args(m) + ");";
  }

  std::mt19937_64& rng_;
  GeneratorOptions opt_;
  int packages_ = 1;
  int referable_ = 0;    // classes other classes may name
  int controllers_ = 0;  // trailing classes nobody references
  std::vector<ClassSpec> classes_;
  std::set<std::string> used_;
  const ClassSpec* cur_ = nullptr;
  std::vector<Var> scope_;
  int next_local_ = 0;
  int next_param_ = 0;
};

bool is_class_placeholder(const std::string& p) { return p[0] == 'C'; }
bool is_package_placeholder(const std::string& p) { return p[0] == 'K'; }
bool is_capitalized_field(const std::string& p) { return p[0] == 'U'; }

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

GeneratedProject generate_project(std::mt19937_64& rng, const GeneratorOptions& options) {
  return Generator(rng, options).run();
}

NameMap canonical_names(const GeneratedProject& project) {
  NameMap names;
  for (const std::string& p : project.placeholders) {
    if (is_class_placeholder(p)) {
      names[p] = "Type" + p.substr(1);
    } else if (is_package_placeholder(p)) {
      names[p] = "pkg" + p.substr(1);
    } else if (is_capitalized_field(p)) {
      names[p] = "F" + p.substr(1);
    } else {
      std::string lower = p;
      lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
      names[p] = lower;
    }
  }
  return names;
}

NameMap random_names(const GeneratedProject& project, std::mt19937_64& rng) {
  std::set<std::string> taken{"String", "System", "List", "java", "util", "out", "println"};
  auto fresh = [&](bool upper) {
    std::uniform_int_distribution<int> len(3, 9);
    std::uniform_int_distribution<int> letter(0, 25);
    while (true) {
      std::string s;
      int n = len(rng);
      for (int i = 0; i < n; ++i) s += static_cast<char>('a' + letter(rng));
      if (upper) s = capitalize(s);
      if (java::is_keyword(s) || s == "true" || s == "false" || s == "null") continue;
      if (java::is_accessor_name(s) || s.rfind("get", 0) == 0 || s.rfind("set", 0) == 0 ||
          s.rfind("is", 0) == 0) {
        continue;
      }
      if (taken.insert(s).second) return s;
    }
  };
  NameMap names;
  for (const std::string& p : project.placeholders) {
    if (is_capitalized_field(p)) continue;
    names[p] = fresh(is_class_placeholder(p));
  }
  for (const std::string& p : project.placeholders) {
    if (is_capitalized_field(p)) names[p] = capitalize(names.at("F" + p.substr(1)));
  }
  return names;
}

std::string render(const std::string& text, const NameMap& names) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '@') {
      std::size_t end = text.find('@', i + 1);
      out += names.at(text.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      out += text[i++];
    }
  }
  return out;
}

std::vector<SourceText> render_sources(const GeneratedProject& project, const NameMap& names) {
  std::vector<SourceText> out;
  for (const auto& f : project.files) out.push_back(SourceText{render(f.path, names), render(f.text, names)});
  return out;
}

}  // namespace fdebt::testing
