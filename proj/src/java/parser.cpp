#include "fdebt/java/parser.hpp"

#include <array>
#include <utility>

#include "fdebt/errors.hpp"

namespace fdebt::java {
namespace {

constexpr int kMaxDepth = 400;

constexpr std::array<std::string_view, 9> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void"};

bool is_primitive(std::string_view name) {
  for (std::string_view p : kPrimitives) {
    if (name == p) return true;
  }
  return false;
}

// Thrown when the input leaves the supported subset; caught at the nearest
// member or statement boundary, which skips the construct and counts a gap.
struct Unsupported {
  int line;
  std::string what;
};

// A name or dotted name chain (`a`, `a.b`, `this.x`): the only receivers we
// attribute invocations and field accesses to.
struct Shape {
  bool name_chain = false;
  std::string text;
};

int binary_precedence(const Token& t) {
  if (t.kind == TokenKind::kKeyword) return t.text == "instanceof" ? 7 : -1;
  if (t.kind != TokenKind::kOperator) return -1;
  const std::string& s = t.text;
  if (s == "||") return 1;
  if (s == "&&") return 2;
  if (s == "|") return 3;
  if (s == "^") return 4;
  if (s == "&") return 5;
  if (s == "==" || s == "!=") return 6;
  if (s == "<" || s == ">" || s == "<=" || s == ">=") return 7;
  if (s == "<<" || s == ">>" || s == ">>>") return 8;
  if (s == "+" || s == "-") return 9;
  if (s == "*" || s == "/" || s == "%") return 10;
  return -1;
}

bool is_assignment_op(const Token& t) {
  if (t.kind != TokenKind::kOperator) return false;
  const std::string& s = t.text;
  return s == "=" || s == "+=" || s == "-=" || s == "*=" || s == "/=" || s == "%=" ||
         s == "&=" || s == "|=" || s == "^=" || s == "<<=" || s == ">>=" || s == ">>>=";
}

struct Modifiers {
  Visibility visibility = Visibility::kPackage;
  bool explicit_visibility = false;
  bool is_static = false;
  bool is_final = false;
  bool is_abstract = false;
  bool is_default = false;
  std::size_t first_token = 0;  // first token after leading annotations
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string path)
      : toks_(std::move(tokens)), path_(std::move(path)) {
    eof_.text = "";
    eof_.kind = TokenKind::kPunctuation;
    eof_.line = eof_.end_line = toks_.empty() ? 1 : toks_.back().end_line;
  }

  CompilationUnit run() {
    check_braces();
    CompilationUnit cu;
    cu.path = path_;

    {
      Mark m = mark();
      try {
        parse_modifiers(false);
        if (accept("package")) {
          cu.package = qualified_name();
          expect(";");
        } else {
          reset(m);
        }
      } catch (const Unsupported&) {
        reset(m);
        recover(m);
      }
    }
    while (is("import")) {
      Mark m = mark();
      try {
        cu.imports.push_back(parse_import());
      } catch (const Unsupported&) {
        recover(m);
      }
    }
    while (!at_end()) {
      if (accept(";")) continue;
      Mark m = mark();
      try {
        parse_type_decl(cu.types, /*in_interface=*/false);
      } catch (const Unsupported&) {
        recover(m);
      }
    }
    cu.loc = count_code_lines(toks_, 0, toks_.empty() ? 0 : toks_.size() - 1);
    cu.parse_gaps = gaps_;
    return cu;
  }

 private:
  // --------------------------------------------------------------------------
  // Cursor
  // --------------------------------------------------------------------------

  struct Mark {
    std::size_t pos;
    std::size_t undo;
    int gaps;
  };

  Mark mark() const { return Mark{pos_, undo_.size(), gaps_}; }

  void reset(const Mark& m) {
    while (undo_.size() > m.undo) {
      toks_[undo_.back().first].text = undo_.back().second;
      undo_.pop_back();
    }
    pos_ = m.pos;
    gaps_ = m.gaps;
  }

  // Rewind to `m`, skip the construct that started there and count one gap.
  void recover(const Mark& m) {
    reset(m);
    skip_construct();
    if (pos_ == m.pos && !at_end() && !is("}")) ++pos_;
    ++gaps_;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        --parser.depth_;
        throw Unsupported{parser.line(), "nesting too deep"};
      }
    }
    ~DepthGuard() { --parser.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& parser;
  };

  const Token& peek(std::size_t k = 0) const {
    return pos_ + k < toks_.size() ? toks_[pos_ + k] : eof_;
  }
  bool at_end() const { return pos_ >= toks_.size(); }
  int line() const { return peek().line; }

  // Matches keywords, operators and punctuation by text; never identifiers or
  // literals, so `is("true")` is false for the literal.
  bool is(std::string_view text, std::size_t k = 0) const {
    if (pos_ + k >= toks_.size()) return false;
    const Token& t = toks_[pos_ + k];
    return t.kind != TokenKind::kIdentifier && t.kind != TokenKind::kLiteral && t.text == text;
  }
  bool is_ident(std::size_t k = 0) const {
    return pos_ + k < toks_.size() && toks_[pos_ + k].kind == TokenKind::kIdentifier;
  }
  bool is_ident_text(std::string_view text, std::size_t k = 0) const {
    return is_ident(k) && toks_[pos_ + k].text == text;
  }
  bool accept(std::string_view text) {
    if (!is(text)) return false;
    ++pos_;
    return true;
  }
  void expect(std::string_view text) {
    if (!accept(text)) fail("expected '" + std::string(text) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw Unsupported{line(), what}; }

  std::string expect_ident() {
    if (!is_ident()) fail("expected identifier");
    return toks_[pos_++].text;
  }

  // Consumes one '>' even when the lexer glued it into '>>', '>>>' or '>>='.
  bool accept_gt() {
    if (accept(">")) return true;
    if (at_end() || toks_[pos_].kind != TokenKind::kOperator) return false;
    std::string& text = toks_[pos_].text;
    if (text.size() > 1 && text[0] == '>') {
      undo_.emplace_back(pos_, text);
      text.erase(0, 1);
      return true;
    }
    return false;
  }

  void check_braces() const {
    int depth = 0;
    for (const Token& t : toks_) {
      if (t.kind != TokenKind::kPunctuation) continue;
      if (t.text == "{") {
        ++depth;
      } else if (t.text == "}") {
        if (--depth < 0) {
          throw ParseError(path_, "unbalanced braces: unexpected '}' at line " +
                                      std::to_string(t.line));
        }
      }
    }
    if (depth != 0) {
      throw ParseError(path_, "unbalanced braces: " + std::to_string(depth) + " unclosed '{'");
    }
  }

  // --------------------------------------------------------------------------
  // Skipping
  // --------------------------------------------------------------------------

  void skip_balanced(std::string_view open, std::string_view close) {
    int depth = 0;
    while (!at_end()) {
      if (is(open)) {
        ++depth;
      } else if (is(close)) {
        if (--depth <= 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  // Skips to the end of the current member/statement: through ';' at depth 0,
  // or through a brace group that closes back to depth 0 (plus any trailing
  // else/catch/finally arms). Stops before a '}' that closes the enclosing body.
  void skip_construct() {
    int braces = 0;
    int parens = 0;
    while (!at_end()) {
      if (is("}")) {
        if (braces == 0) return;
        ++pos_;
        if (--braces == 0 && parens == 0) {
          if (is("else") || is("catch") || is("finally") || is("while")) continue;
          return;
        }
        continue;
      }
      if (is("{")) ++braces;
      if (is("(")) ++parens;
      if (is(")") && parens > 0) --parens;
      bool semi = is(";");
      ++pos_;
      if (semi && braces == 0 && parens == 0) return;
    }
  }

  // --------------------------------------------------------------------------
  // Declarations
  // --------------------------------------------------------------------------

  std::string qualified_name() {
    std::string name = expect_ident();
    while (is(".") && is_ident(1)) {
      pos_ += 1;
      name += "." + expect_ident();
    }
    return name;
  }

  Import parse_import() {
    expect("import");
    Import imp;
    if (accept("static")) imp.is_static = true;
    imp.name = qualified_name();
    if (is(".") && is("*", 1)) {
      pos_ += 2;
      imp.on_demand = true;
    }
    expect(";");
    return imp;
  }

  void skip_annotation() {
    expect("@");
    qualified_name();
    if (is("(")) skip_balanced("(", ")");
    ++gaps_;
  }

  Modifiers parse_modifiers(bool in_interface) {
    Modifiers m;
    if (in_interface) m.visibility = Visibility::kPublic;
    bool seen_first = false;
    while (!at_end()) {
      if (is("@") && !is("interface", 1)) {
        skip_annotation();
        continue;
      }
      if (!seen_first) {
        m.first_token = pos_;
        seen_first = true;
      }
      if (is("public")) {
        m.visibility = Visibility::kPublic;
        m.explicit_visibility = true;
      } else if (is("protected")) {
        m.visibility = Visibility::kProtected;
        m.explicit_visibility = true;
      } else if (is("private")) {
        m.visibility = Visibility::kPrivate;
        m.explicit_visibility = true;
      } else if (is("static")) {
        m.is_static = true;
      } else if (is("final")) {
        m.is_final = true;
      } else if (is("abstract")) {
        m.is_abstract = true;
      } else if (is("default") && !is(":", 1) && !is("->", 1)) {
        m.is_default = true;
      } else if (is("native") || is("synchronized") || is("transient") || is("volatile") ||
                 is("strictfp")) {
        // no effect on the model
      } else if (is_ident_text("sealed") && !is("(", 1) && !is("=", 1) && !is(";", 1)) {
        // contextual modifier
      } else if (is_ident_text("non") && is("-", 1) && is_ident_text("sealed", 2)) {
        pos_ += 2;
      } else {
        break;
      }
      ++pos_;
    }
    if (!seen_first) m.first_token = pos_;
    return m;
  }

  void parse_type_decl(std::vector<RawType>& out, bool in_interface) {
    Modifiers mods = parse_modifiers(in_interface);
    RawType type;
    if (accept("class")) {
      type.kind = TypeKind::kClass;
    } else if (accept("interface")) {
      type.kind = TypeKind::kInterface;
    } else if (accept("enum")) {
      type.kind = TypeKind::kEnum;
    } else {
      fail("expected a class, interface or enum declaration");
    }
    type.visibility = mods.visibility;
    type.line = toks_[mods.first_token].line;
    type.name = expect_ident();
    if (is("<")) parse_type_params();
    if (accept("extends")) {
      type.supertypes.push_back(parse_type());
      while (accept(",")) type.supertypes.push_back(parse_type());
    }
    if (accept("implements")) {
      type.supertypes.push_back(parse_type());
      while (accept(",")) type.supertypes.push_back(parse_type());
    }
    if (is_ident_text("permits")) {
      ++pos_;
      parse_type();
      while (accept(",")) parse_type();
    }
    parse_class_body(type);
    std::size_t last = pos_ - 1;
    type.end_line = toks_[last].end_line;
    type.loc = count_code_lines(toks_, mods.first_token, last);
    out.push_back(std::move(type));
  }

  void parse_type_params() {
    expect("<");
    int depth = 1;
    while (!at_end() && depth > 0) {
      if (is("<")) {
        ++depth;
        ++pos_;
      } else if (accept_gt()) {
        --depth;
      } else {
        ++pos_;
      }
    }
  }

  void parse_class_body(RawType& type) {
    expect("{");
    if (type.kind == TypeKind::kEnum) parse_enum_constants(type);
    while (!is("}")) {
      if (at_end()) fail("unterminated class body");
      if (accept(";")) continue;
      Mark m = mark();
      try {
        parse_member(type);
      } catch (const Unsupported&) {
        recover(m);
      }
    }
    expect("}");
  }

  void parse_enum_constants(RawType& type) {
    while (is_ident() || is("@")) {
      while (is("@")) skip_annotation();
      RawField constant;
      constant.line = line();
      constant.name = expect_ident();
      constant.type = type.name;
      constant.visibility = Visibility::kPublic;
      constant.is_static = true;
      constant.is_final = true;
      if (is("(")) parse_args(constant.initializer);
      if (is("{")) {
        skip_balanced("{", "}");
        ++gaps_;
      }
      type.fields.push_back(std::move(constant));
      if (!accept(",")) break;
    }
    accept(";");
  }

  void parse_member(RawType& type) {
    bool in_interface = type.kind == TypeKind::kInterface;
    Modifiers mods = parse_modifiers(in_interface);
    if (is("{")) fail("initializer block");
    if (is("class") || is("interface") || is("enum") || (is("@") && is("interface", 1)) ||
        (is_ident_text("record") && is_ident(1))) {
      fail("member type declaration");
    }
    if (is("<")) parse_type_params();

    if (is_ident() && peek().text == type.name && is("(", 1)) {
      RawMethod ctor;
      ctor.name = expect_ident();
      ctor.is_constructor = true;
      finish_method(ctor, mods, in_interface);
      type.methods.push_back(std::move(ctor));
      return;
    }

    std::string declared = parse_type();
    std::string name = expect_ident();
    if (is("(")) {
      RawMethod method;
      method.name = std::move(name);
      method.return_type = std::move(declared);
      finish_method(method, mods, in_interface);
      type.methods.push_back(std::move(method));
      return;
    }

    while (true) {
      RawField field;
      field.line = line();
      field.name = name;
      field.type = declared;
      while (is("[") && is("]", 1)) {
        pos_ += 2;
        field.type += "[]";
      }
      field.visibility = mods.visibility;
      field.is_static = mods.is_static || in_interface;
      field.is_final = mods.is_final || in_interface;
      if (accept("=")) parse_var_init(field.initializer);
      type.fields.push_back(std::move(field));
      if (!accept(",")) break;
      name = expect_ident();
    }
    expect(";");
  }

  void finish_method(RawMethod& method, const Modifiers& mods, bool in_interface) {
    method.line = toks_[mods.first_token].line;
    method.visibility = mods.visibility;
    method.is_static = mods.is_static;
    method.params = parse_params();
    while (is("[") && is("]", 1)) {
      pos_ += 2;
      method.return_type += "[]";
    }
    if (accept("throws")) {
      method.throws.push_back(parse_type());
      while (accept(",")) method.throws.push_back(parse_type());
    }
    if (is("default")) fail("annotation element default");
    if (accept(";")) {
      method.has_body = false;
      method.is_abstract =
          mods.is_abstract || (in_interface && !mods.is_static && !mods.is_default);
    } else {
      method.body = parse_block();
      method.has_body = true;
    }
    std::size_t last = pos_ - 1;
    method.end_line = toks_[last].end_line;
    method.loc = count_code_lines(toks_, mods.first_token, last);
  }

  std::vector<RawParameter> parse_params() {
    std::vector<RawParameter> params;
    expect("(");
    if (accept(")")) return params;
    while (true) {
      parse_modifiers(false);
      RawParameter p;
      p.type = parse_type();
      if (accept("...")) p.type += "[]";
      if (is("this")) {  // receiver parameter
        ++pos_;
      } else {
        p.name = expect_ident();
        while (is("[") && is("]", 1)) {
          pos_ += 2;
          p.type += "[]";
        }
        params.push_back(std::move(p));
      }
      if (accept(",")) continue;
      expect(")");
      break;
    }
    return params;
  }

  // --------------------------------------------------------------------------
  // Types
  // --------------------------------------------------------------------------

  void parse_type_args() {
    expect("<");
    if (accept_gt()) return;  // diamond
    while (true) {
      while (is("@")) skip_annotation();
      if (accept("?")) {
        if (accept("extends") || accept("super")) parse_type();
      } else {
        parse_type();
      }
      while (accept("&")) parse_type();
      if (accept(",")) continue;
      if (!accept_gt()) fail("expected '>'");
      return;
    }
  }

  std::string parse_type(bool with_dims = true) {
    while (is("@")) skip_annotation();
    std::string name;
    const Token& t = peek();
    if (t.kind == TokenKind::kKeyword && is_primitive(t.text)) {
      name = t.text;
      ++pos_;
    } else if (t.kind == TokenKind::kIdentifier) {
      name = t.text;
      ++pos_;
      if (is("<")) parse_type_args();
      while (is(".") && is_ident(1)) {
        ++pos_;
        name += "." + expect_ident();
        if (is("<")) parse_type_args();
      }
    } else {
      fail("expected type");
    }
    if (with_dims) {
      while (is("[") && is("]", 1)) {
        pos_ += 2;
        name += "[]";
      }
    }
    return name;
  }

  bool try_parse_type(std::string& out) {
    Mark m = mark();
    try {
      out = parse_type();
      return true;
    } catch (const Unsupported&) {
      reset(m);
      return false;
    }
  }

  // --------------------------------------------------------------------------
  // Statements
  // --------------------------------------------------------------------------

  Statement make(StmtKind kind, int ln) {
    Statement s;
    s.kind = kind;
    s.line = ln;
    return s;
  }

  Statement parse_block() {
    Statement block = make(StmtKind::kBlock, line());
    expect("{");
    parse_statements_until_close(block.children, /*stop_at_case=*/false);
    expect("}");
    return block;
  }

  void parse_statements_until_close(std::vector<Statement>& out, bool stop_at_case) {
    while (!at_end() && !is("}")) {
      if (stop_at_case && (is("case") || (is("default") && (is(":", 1) || is("->", 1))))) {
        return;
      }
      Mark m = mark();
      try {
        out.push_back(parse_statement());
      } catch (const Unsupported&) {
        recover(m);
      }
    }
  }

  Statement parse_statement() {
    DepthGuard guard(*this);
    int ln = line();
    if (is("{")) return parse_block();
    if (accept(";")) return make(StmtKind::kEmpty, ln);

    if (accept("if")) {
      Statement s = make(StmtKind::kIf, ln);
      parse_paren_expr(s.facts);
      s.children.push_back(parse_statement());
      if (is("else")) {
        Statement arm = make(StmtKind::kElseArm, line());
        ++pos_;
        arm.children.push_back(parse_statement());
        s.children.push_back(std::move(arm));
      }
      return s;
    }
    if (is("for")) return parse_for();
    if (accept("while")) {
      Statement s = make(StmtKind::kWhile, ln);
      parse_paren_expr(s.facts);
      s.children.push_back(parse_statement());
      return s;
    }
    if (accept("do")) {
      Statement s = make(StmtKind::kDo, ln);
      s.children.push_back(parse_statement());
      expect("while");
      parse_paren_expr(s.facts);
      expect(";");
      return s;
    }
    if (is("switch")) return parse_switch();
    if (is("try")) return parse_try();
    if (accept("return")) {
      Statement s = make(StmtKind::kReturn, ln);
      if (!is(";")) parse_expr(s.facts);
      expect(";");
      return s;
    }
    if (accept("throw")) {
      Statement s = make(StmtKind::kThrow, ln);
      parse_expr(s.facts);
      expect(";");
      return s;
    }
    if (accept("break") || accept("continue")) {
      Statement s = make(StmtKind::kJump, ln);
      if (is_ident()) ++pos_;
      expect(";");
      return s;
    }
    if (is_ident_text("yield") && !is("=", 1) && !is("(", 1) && !is(".", 1) && !is("[", 1) &&
        !is("++", 1) && !is("--", 1)) {
      ++pos_;
      Statement s = make(StmtKind::kJump, ln);
      parse_expr(s.facts);
      expect(";");
      return s;
    }
    if (accept("synchronized")) {
      Statement s = make(StmtKind::kSynchronized, ln);
      parse_paren_expr(s.facts);
      s.children.push_back(parse_block());
      return s;
    }
    if (accept("assert")) {
      Statement s = make(StmtKind::kExprStmt, ln);
      parse_expr(s.facts);
      if (accept(":")) parse_expr(s.facts);
      expect(";");
      return s;
    }
    if (is("class") || is("interface") || is("enum") || is("abstract") || is("static") ||
        (is_ident_text("record") && is_ident(1))) {
      fail("local type declaration");
    }
    if (is_ident() && is(":", 1)) {
      Statement s = make(StmtKind::kLabeled, ln);
      pos_ += 2;
      s.children.push_back(parse_statement());
      return s;
    }

    bool had_modifiers = is("final") || is("@");
    Mark m = mark();
    if (had_modifiers) {
      parse_modifiers(false);
      if (is("class") || is("interface") || is("enum")) fail("local type declaration");
    }
    std::string type;
    if (try_parse_type(type) && is_ident() &&
        (is("=", 1) || is(";", 1) || is(",", 1) || is("[", 1))) {
      Statement s = make(StmtKind::kLocalDecl, ln);
      parse_local_rest(s, type);
      expect(";");
      return s;
    }
    if (had_modifiers) fail("expected local declaration");
    reset(m);

    Statement s = make(StmtKind::kExprStmt, ln);
    parse_expr(s.facts);
    expect(";");
    return s;
  }

  void parse_local_rest(Statement& s, const std::string& type) {
    s.declared_type = type;
    while (true) {
      s.declared_names.push_back(expect_ident());
      while (is("[") && is("]", 1)) pos_ += 2;
      if (accept("=")) parse_var_init(s.facts);
      if (!accept(",")) break;
    }
  }

  void parse_paren_expr(ExprFacts& facts) {
    expect("(");
    parse_expr(facts);
    expect(")");
  }

  Statement parse_for() {
    Statement s = make(StmtKind::kFor, line());
    expect("for");
    expect("(");

    Mark m = mark();
    parse_modifiers(false);
    std::string type;
    if (try_parse_type(type) && is_ident() && is(":", 1)) {
      s.declared_type = type;
      s.declared_names.push_back(expect_ident());
      expect(":");
      parse_expr(s.facts);
      expect(")");
      s.children.push_back(parse_statement());
      return s;
    }
    reset(m);

    if (!is(";")) {
      Mark init = mark();
      parse_modifiers(false);
      if (try_parse_type(type) && is_ident() &&
          (is("=", 1) || is(",", 1) || is(";", 1) || is("[", 1))) {
        parse_local_rest(s, type);
      } else {
        reset(init);
        parse_expr(s.facts);
        while (accept(",")) parse_expr(s.facts);
      }
    }
    expect(";");
    if (!is(";")) parse_expr(s.facts);
    expect(";");
    if (!is(")")) {
      parse_expr(s.facts);
      while (accept(",")) parse_expr(s.facts);
    }
    expect(")");
    s.children.push_back(parse_statement());
    return s;
  }

  Statement parse_switch() {
    Statement s = make(StmtKind::kSwitch, line());
    expect("switch");
    parse_paren_expr(s.facts);
    expect("{");
    while (!is("}")) {
      if (at_end()) fail("unterminated switch");
      Statement arm = make(StmtKind::kCaseArm, line());
      if (accept("default")) {
        arm.is_default = true;
      } else if (accept("case")) {
        ExprFacts labels;  // constants; not variable accesses
        bool saved = allow_lambda_;
        allow_lambda_ = false;
        do {
          parse_ternary(labels);
          ++arm.labels;
        } while (accept(","));
        allow_lambda_ = saved;
      } else {
        fail("expected case label");
      }
      if (accept("->")) {
        if (is("{")) {
          arm.children.push_back(parse_block());
        } else if (is("throw")) {
          arm.children.push_back(parse_statement());
        } else {
          Statement e = make(StmtKind::kExprStmt, line());
          parse_expr(e.facts);
          expect(";");
          arm.children.push_back(std::move(e));
        }
      } else {
        expect(":");
        parse_statements_until_close(arm.children, /*stop_at_case=*/true);
      }
      s.children.push_back(std::move(arm));
    }
    expect("}");
    return s;
  }

  Statement parse_try() {
    Statement s = make(StmtKind::kTry, line());
    expect("try");
    if (accept("(")) {
      while (!is(")")) {
        if (at_end()) fail("unterminated resource list");
        Mark m = mark();
        parse_modifiers(false);
        std::string type;
        if (try_parse_type(type) && is_ident() && is("=", 1)) {
          s.declared_type = type;
          s.declared_names.push_back(expect_ident());
          expect("=");
          parse_expr(s.facts);
        } else {
          reset(m);
          parse_expr(s.facts);
        }
        if (!accept(";")) break;
      }
      expect(")");
    }
    s.children.push_back(parse_block());
    while (is("catch")) {
      Statement c = make(StmtKind::kCatch, line());
      ++pos_;
      expect("(");
      parse_modifiers(false);
      c.declared_type = parse_type();
      c.facts.type_uses.push_back(c.declared_type);
      while (accept("|")) c.facts.type_uses.push_back(parse_type());
      c.declared_names.push_back(expect_ident());
      expect(")");
      c.children.push_back(parse_block());
      s.children.push_back(std::move(c));
    }
    if (is("finally")) {
      Statement f = make(StmtKind::kFinally, line());
      ++pos_;
      f.children.push_back(parse_block());
      s.children.push_back(std::move(f));
    }
    if (s.children.size() == 1 && s.declared_names.empty()) fail("try without catch or finally");
    return s;
  }

  // --------------------------------------------------------------------------
  // Expressions
  // --------------------------------------------------------------------------

  void parse_var_init(ExprFacts& f) {
    if (is("{")) {
      parse_array_init(f);
    } else {
      parse_expr(f);
    }
  }

  void parse_array_init(ExprFacts& f) {
    DepthGuard guard(*this);
    expect("{");
    while (!is("}")) {
      if (at_end()) fail("unterminated array initializer");
      parse_var_init(f);
      if (!accept(",")) break;
    }
    expect("}");
  }

  Shape parse_expr(ExprFacts& f) {
    DepthGuard guard(*this);
    if (lambda_ahead()) {
      skip_lambda();
      return {};
    }
    Shape lhs = parse_ternary(f);
    if (is_assignment_op(peek())) {
      ++pos_;
      parse_expr(f);
      return {};
    }
    return lhs;
  }

  Shape parse_ternary(ExprFacts& f) {
    Shape cond = parse_binary(f, 1);
    if (!accept("?")) return cond;
    ++f.ternaries;
    parse_expr(f);
    expect(":");
    if (lambda_ahead()) {
      skip_lambda();
    } else {
      parse_ternary(f);
    }
    return {};
  }

  Shape parse_binary(ExprFacts& f, int min_prec) {
    DepthGuard guard(*this);
    Shape lhs = parse_unary(f);
    while (true) {
      int prec = binary_precedence(peek());
      if (prec < 0 || prec < min_prec) break;
      std::string op = peek().text;
      ++pos_;
      if (op == "instanceof") {
        accept("final");
        f.type_uses.push_back(parse_type());
        if (is_ident()) ++pos_;  // pattern binding
      } else {
        if (op == "&&") ++f.conditional_ands;
        if (op == "||") ++f.conditional_ors;
        parse_binary(f, prec + 1);
      }
      lhs = {};
    }
    return lhs;
  }

  bool cast_follows() const {
    const Token& t = peek();
    if (t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kLiteral) return true;
    return is("(") || is("this") || is("super") || is("new") || is("!") || is("~") ||
           (t.kind == TokenKind::kKeyword && is_primitive(t.text));
  }

  Shape parse_unary(ExprFacts& f) {
    DepthGuard guard(*this);
    const Token& t = peek();
    if (t.kind == TokenKind::kOperator &&
        (t.text == "+" || t.text == "-" || t.text == "++" || t.text == "--" || t.text == "!" ||
         t.text == "~")) {
      ++pos_;
      parse_unary(f);
      return {};
    }
    if (is("(")) {
      if (lambda_ahead()) {
        skip_lambda();
        return {};
      }
      Mark m = mark();
      ++pos_;
      std::string type;
      if (try_parse_type(type) && accept(")")) {
        bool primitive = is_primitive(type);
        if (primitive || cast_follows()) {
          if (!primitive) f.type_uses.push_back(type);
          parse_unary(f);
          return {};
        }
      }
      reset(m);
    }
    return parse_postfix(f);
  }

  Shape parse_postfix(ExprFacts& f) {
    Shape s = parse_primary(f);
    while (true) {
      if (is(".")) {
        ++pos_;
        if (is("new")) {
          parse_creator(f);
          s = {};
          continue;
        }
        if (is("<")) parse_type_args();
        if (accept("class")) {
          if (s.name_chain) f.type_uses.push_back(s.text);
          s = {};
          continue;
        }
        if (accept("this") || accept("super")) {
          s = {};
          continue;
        }
        int ln = line();
        std::string name = expect_ident();
        std::string receiver = s.name_chain ? s.text : "<expr>";
        if (is("(")) {
          f.invocations.push_back(RawInvocation{receiver, name, ln});
          parse_args(f);
          s = {};
        } else {
          f.field_accesses.push_back(RawFieldAccess{receiver, name, ln});
          s = s.name_chain ? Shape{true, s.text + "." + name} : Shape{};
        }
      } else if (is("[")) {
        ++pos_;
        parse_expr(f);
        expect("]");
        s = {};
      } else if (is("++") || is("--")) {
        ++pos_;
        s = {};
      } else if (accept("::")) {
        if (!accept("new")) expect_ident();
        s = {};
      } else {
        break;
      }
    }
    return s;
  }

  Shape parse_primary(ExprFacts& f) {
    const Token& t = peek();
    int ln = t.line;
    if (t.kind == TokenKind::kLiteral) {
      ++pos_;
      return {};
    }
    if (t.kind == TokenKind::kIdentifier) {
      if (is("->", 1) && allow_lambda_) {
        skip_lambda();
        return {};
      }
      std::string name = t.text;
      ++pos_;
      if (is("(")) {
        f.invocations.push_back(RawInvocation{"", name, ln});
        parse_args(f);
        return {};
      }
      f.names.push_back(NameUse{name, ln});
      return {true, name};
    }
    if (accept("this")) {
      if (is("(")) {
        parse_args(f);
        return {};
      }
      return {true, "this"};
    }
    if (accept("super")) {
      if (is("(")) {
        parse_args(f);
        return {};
      }
      return {true, "super"};
    }
    if (is("new")) {
      parse_creator(f);
      return {};
    }
    if (accept("(")) {
      parse_expr(f);
      expect(")");
      return {};
    }
    if (t.kind == TokenKind::kKeyword && is_primitive(t.text)) {
      parse_type();
      expect(".");
      expect("class");
      return {};
    }
    if (is("switch")) fail("switch expression");
    fail("unexpected token '" + t.text + "'");
  }

  void parse_args(ExprFacts& f) {
    expect("(");
    if (accept(")")) return;
    while (true) {
      parse_expr(f);
      if (accept(",")) continue;
      expect(")");
      return;
    }
  }

  void parse_creator(ExprFacts& f) {
    expect("new");
    if (is("<")) parse_type_args();
    std::string type = parse_type(/*with_dims=*/false);
    if (is("[")) {
      while (accept("[")) {
        if (!is("]")) parse_expr(f);
        expect("]");
      }
      if (is("{")) parse_array_init(f);
      if (!is_primitive(type)) f.type_uses.push_back(type);
      return;
    }
    if (!is("(")) fail("expected constructor arguments");
    parse_args(f);
    f.instantiations.push_back(type);
    if (is("{")) {  // anonymous class body
      skip_balanced("{", "}");
      ++gaps_;
    }
  }

  bool lambda_ahead() const {
    if (!allow_lambda_) return false;
    if (is_ident() && is("->", 1)) return true;
    if (!is("(")) return false;
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind != TokenKind::kPunctuation) continue;
      if (t.text == "(") {
        ++depth;
      } else if (t.text == ")") {
        if (--depth == 0) {
          return i + 1 < toks_.size() && toks_[i + 1].kind == TokenKind::kOperator &&
                 toks_[i + 1].text == "->";
        }
      } else if (t.text == ";" || t.text == "{" || t.text == "}") {
        return false;
      }
    }
    return false;
  }

  void skip_lambda() {
    ++gaps_;
    if (is_ident()) {
      ++pos_;
    } else {
      skip_balanced("(", ")");
    }
    expect("->");
    if (is("{")) {
      skip_balanced("{", "}");
      return;
    }
    int depth = 0;
    while (!at_end()) {
      if (is("(") || is("[") || is("{")) {
        ++depth;
      } else if (is(")") || is("]") || is("}")) {
        if (depth == 0) return;
        --depth;
      } else if ((is(",") || is(";")) && depth == 0) {
        return;
      }
      ++pos_;
    }
  }

  std::vector<Token> toks_;
  std::string path_;
  Token eof_;
  std::size_t pos_ = 0;
  int gaps_ = 0;
  int depth_ = 0;
  bool allow_lambda_ = true;
  std::vector<std::pair<std::size_t, std::string>> undo_;
};

}  // namespace

CompilationUnit parse_tokens(std::vector<Token> tokens, const std::string& path) {
  return Parser(std::move(tokens), path).run();
}

CompilationUnit parse_unit(std::string_view source, const std::string& path) {
  return parse_tokens(tokenize(source), path);
}

}  // namespace fdebt::java
