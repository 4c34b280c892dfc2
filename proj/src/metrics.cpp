#include "fdebt/metrics.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

#include "fdebt/errors.hpp"
#include "fdebt/java/model_builder.hpp"

namespace fdebt {
namespace {

constexpr std::array<std::string_view, 18> kCatalog = {
    metric::kMloc, metric::kCyclo, metric::kMaxNesting, metric::kNoav, metric::kNop,
    metric::kAtfdMethod, metric::kFdp, metric::kLaa, metric::kFanout,
    metric::kCloc, metric::kWmc, metric::kNom, metric::kNoa, metric::kNopa,
    metric::kNoam, metric::kTcc, metric::kWoc, metric::kAmw};

int count_decisions(const Statement& s) {
  int n = s.facts.conditional_ands + s.facts.conditional_ors + s.facts.ternaries;
  switch (s.kind) {
    case StmtKind::kIf:
    case StmtKind::kFor:
    case StmtKind::kWhile:
    case StmtKind::kDo:
    case StmtKind::kCatch:
      ++n;
      break;
    case StmtKind::kCaseArm:
      if (!s.is_default) n += s.labels;
      break;
    default:
      break;
  }
  for (const Statement& c : s.children) n += count_decisions(c);
  return n;
}

bool nests(StmtKind k) {
  return k == StmtKind::kIf || k == StmtKind::kFor || k == StmtKind::kWhile ||
         k == StmtKind::kDo || k == StmtKind::kSwitch || k == StmtKind::kTry;
}

int nesting(const Statement& s, int depth) {
  if (s.kind == StmtKind::kElseArm && s.children.size() == 1 &&
      s.children.front().kind == StmtKind::kIf) {
    return nesting(s.children.front(), depth - 1);
  }
  int inner = nests(s.kind) ? depth + 1 : depth;
  int best = inner;
  for (const Statement& c : s.children) best = std::max(best, nesting(c, inner));
  return best;
}

using Attribute = std::pair<std::string, std::string>;  // (owner, name)

bool is_public_attribute(const FieldEntity& f) {
  return f.visibility == Visibility::kPublic && !(f.is_static && f.is_final);
}

std::set<std::string> own_fields_accessed(const MethodEntity& m) {
  std::set<std::string> out;
  for (const FieldRef& f : m.accessed_fields) {
    if (f.own) out.insert(f.name);
  }
  return out;
}

}  // namespace

const char* to_string(MetricScope s) { return s == MetricScope::kMethod ? "method" : "class"; }

std::span<const std::string_view> metric_catalog() { return kCatalog; }
std::span<const std::string_view> method_metric_names() {
  return std::span<const std::string_view>(kCatalog).first(9);
}
std::span<const std::string_view> class_metric_names() {
  return std::span<const std::string_view>(kCatalog).last(9);
}

double MetricVector::at(std::string_view name) const {
  auto it = values.find(name);
  if (it == values.end()) {
    throw IntegrityError("metric " + std::string(name) + " missing for " + key);
  }
  return it->second;
}

int compute_cyclo(const StatementTree& body) { return 1 + count_decisions(body); }

int compute_max_nesting(const StatementTree& body) { return nesting(body, 0); }

bool is_accessor(const MethodEntity& method) {
  return !method.is_constructor && method.body && java::is_accessor_name(method.name) &&
         method.body->children.size() <= 1;
}

MetricVector compute_method_metrics(const CodeModel& model, const MethodEntity& method) {
  const TypeEntity& owner = model.type(method.owner);
  MetricVector mv;
  mv.scope = MetricScope::kMethod;
  mv.key = method_qualified_name(method, model);
  mv.file = owner.file;
  auto set = [&mv](std::string_view name, double v) { mv.values[std::string(name)] = v; };

  set(metric::kNop, static_cast<double>(method.params.size()));
  if (!method.body) {
    for (std::string_view n :
         {metric::kMloc, metric::kCyclo, metric::kMaxNesting, metric::kNoav,
          metric::kAtfdMethod, metric::kFdp, metric::kFanout}) {
      set(n, 0);
    }
    set(metric::kLaa, 1);
    return mv;
  }

  std::set<std::string> own;
  std::set<Attribute> foreign;
  int own_accesses = 0;
  int foreign_accesses = 0;
  for (const FieldRef& f : method.accessed_fields) {
    if (f.own) {
      own.insert(f.name);
      ++own_accesses;
    } else {
      foreign.emplace(f.owner, f.name);
      ++foreign_accesses;
    }
  }
  std::set<std::string> providers;
  for (const Attribute& a : foreign) providers.insert(a.first);

  std::set<std::string> callees;
  for (const InvocationRef& inv : method.invoked) {
    if (!inv.target.empty() && inv.target != owner.qualified_name) callees.insert(inv.target);
  }

  int total_accesses = own_accesses + foreign_accesses;
  set(metric::kMloc, method.loc);
  set(metric::kCyclo, compute_cyclo(*method.body));
  set(metric::kMaxNesting, compute_max_nesting(*method.body));
  set(metric::kNoav, static_cast<double>(method.locals.size() + method.params_used.size() +
                                         own.size() + foreign.size()));
  set(metric::kAtfdMethod, static_cast<double>(foreign.size()));
  set(metric::kFdp, static_cast<double>(providers.size()));
  set(metric::kLaa, total_accesses == 0 ? 1.0 : static_cast<double>(own_accesses) / total_accesses);
  set(metric::kFanout, static_cast<double>(callees.size()));
  return mv;
}

MetricVector compute_class_metrics(const CodeModel& model, const TypeEntity& type,
                                   const MetricsOptions& options) {
  MetricVector cv;
  cv.scope = MetricScope::kClass;
  cv.key = type.qualified_name;
  cv.file = type.file;

  int wmc = 0;
  int accessors = 0;
  int public_methods = 0;
  int functional_public = 0;
  std::set<Attribute> foreign;
  std::vector<std::set<std::string>> cohesion;  // own fields per TCC-eligible method

  for (EntityId mid : type.method_ids) {
    const MethodEntity& m = model.method(mid);
    if (m.body) wmc += compute_cyclo(*m.body);
    bool accessor = is_accessor(m);
    if (accessor) ++accessors;
    if (!m.is_constructor && m.visibility == Visibility::kPublic) {
      ++public_methods;
      if (!accessor) ++functional_public;
    }
    for (const FieldRef& f : m.accessed_fields) {
      if (!f.own) foreign.emplace(f.owner, f.name);
    }
    bool eligible = !m.is_constructor;
    if (options.tcc_visible_only) {
      eligible = eligible && m.visibility != Visibility::kPrivate && !accessor;
    }
    if (eligible) cohesion.push_back(own_fields_accessed(m));
  }

  int public_attributes = 0;
  for (EntityId fid : type.field_ids) {
    if (is_public_attribute(model.field(fid))) ++public_attributes;
  }

  std::size_t connected = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < cohesion.size(); ++i) {
    for (std::size_t j = i + 1; j < cohesion.size(); ++j) {
      ++pairs;
      bool share = std::any_of(cohesion[i].begin(), cohesion[i].end(),
                               [&](const std::string& f) { return cohesion[j].count(f) != 0; });
      if (share) ++connected;
    }
  }

  auto nom = static_cast<double>(type.method_ids.size());
  int public_members = public_methods + public_attributes;
  auto set = [&cv](std::string_view name, double v) { cv.values[std::string(name)] = v; };
  set(metric::kCloc, type.loc);
  set(metric::kWmc, wmc);
  set(metric::kNom, nom);
  set(metric::kNoa, static_cast<double>(type.field_ids.size()));
  set(metric::kNopa, public_attributes);
  set(metric::kNoam, accessors);
  set(metric::kTcc, pairs == 0 ? 0.0 : static_cast<double>(connected) / pairs);
  set(metric::kWoc,
      public_members == 0 ? 0.0 : static_cast<double>(functional_public) / public_members);
  set(metric::kAmw, nom == 0 ? 0.0 : wmc / nom);
  set(metric::kAtfdClass, static_cast<double>(foreign.size()));
  return cv;
}

ProjectMetrics compute_all_metrics(const CodeModel& model, const MetricsOptions& options) {
  ProjectMetrics out;
  for (const TypeEntity& t : model.types()) {
    out.classes.push_back(compute_class_metrics(model, t, options));
    for (EntityId mid : t.method_ids) {
      out.methods.push_back(compute_method_metrics(model, model.method(mid)));
    }
  }
  return out;
}

}  // namespace fdebt
