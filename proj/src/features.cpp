#include "fdebt/features.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <filesystem>
#include <tuple>

#include "fdebt/errors.hpp"
#include "fdebt/metrics.hpp"

namespace fdebt {
namespace {

const std::set<std::string> kNoSuccessors;

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower_or_digit(char c) {
  return std::islower(static_cast<unsigned char>(c)) != 0 ||
         std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::string camel_split(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && is_upper(s[i])) {
      bool after_lower = is_lower_or_digit(s[i - 1]);
      bool ends_acronym = is_upper(s[i - 1]) && i + 1 < s.size() && is_lower_or_digit(s[i + 1]);
      if (after_lower || ends_acronym) out += ' ';
    }
    out += s[i];
  }
  return out;
}

// Does any other method declared in `file` call `target`?
bool called_in_file(const CodeModel& model, std::string_view file, const MethodEntity& target) {
  const std::string& owner = model.type(target.owner).qualified_name;
  for (const MethodEntity* m : model.methods_in_file(file)) {
    if (m->id == target.id) continue;
    for (const InvocationRef& inv : m->invoked) {
      if (inv.target == owner && inv.name == target.name) return true;
    }
  }
  return false;
}

}  // namespace

void ReferenceGraph::add_node(const std::string& path) { nodes_.insert(path); }

void ReferenceGraph::add_edge(const std::string& from, const std::string& to) {
  nodes_.insert(from);
  nodes_.insert(to);
  if (from == to) return;
  if (out_[from].insert(to).second) ++in_[to];
}

const std::set<std::string>& ReferenceGraph::successors(const std::string& path) const {
  auto it = out_.find(path);
  return it == out_.end() ? kNoSuccessors : it->second;
}

std::size_t ReferenceGraph::in_degree(const std::string& path) const {
  auto it = in_.find(path);
  return it == in_.end() ? 0 : it->second;
}

std::size_t ReferenceGraph::out_degree(const std::string& path) const {
  return successors(path).size();
}

std::size_t ReferenceGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [from, to] : out_) n += to.size();
  return n;
}

bool ReferenceGraph::has_edge(const std::string& from, const std::string& to) const {
  return successors(from).count(to) != 0;
}

ReferenceGraph build_reference_graph(const CodeModel& model) {
  ReferenceGraph g;
  for (const auto& [path, file] : model.files()) g.add_node(path);
  for (const Reference& r : model.references()) {
    if (model.find_file(r.from_file) == nullptr || model.find_file(r.to_file) == nullptr) {
      throw IntegrityError("reference " + r.from_file + " -> " + r.to_file +
                           " leaves the model");
    }
    g.add_edge(r.from_file, r.to_file);
  }
  return g;
}

std::vector<std::string> find_controllers(const ReferenceGraph& graph) {
  std::vector<std::string> out;
  for (const std::string& n : graph.nodes()) {
    if (graph.in_degree(n) == 0 && graph.out_degree(n) >= 1) out.push_back(n);
  }
  return out;
}

std::vector<const MethodEntity*> find_main_methods(const CodeModel& model,
                                                   std::string_view controller,
                                                   const FeatureConfig& config) {
  std::vector<const MethodEntity*> out;
  for (const MethodEntity* m : model.methods_in_file(controller)) {
    if (m->is_constructor || !m->body) continue;
    if (config.exclude_accessors && is_accessor(*m)) continue;
    if (config.require_public && m->visibility != Visibility::kPublic) continue;
    if (config.require_calls_made && m->invoked.empty()) continue;
    if (config.require_no_calls_received && called_in_file(model, controller, *m)) continue;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const MethodEntity* a, const MethodEntity* b) {
    return a->signature < b->signature;
  });
  return out;
}

std::vector<std::string> feature_closure(const CodeModel& model, const ReferenceGraph& graph,
                                         const std::string& controller,
                                         const MethodEntity& main_method) {
  std::set<std::string> seen{controller};
  std::deque<std::string> queue{controller};
  for (const std::string& qn : main_method.referenced_types) {
    if (const TypeEntity* t = model.find_type(qn); t && seen.insert(t->file).second) {
      queue.push_back(t->file);
    }
  }
  while (!queue.empty()) {
    std::string file = std::move(queue.front());
    queue.pop_front();
    for (const std::string& next : graph.successors(file)) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

const std::vector<std::string>& default_controller_suffixes() {
  static const std::vector<std::string> suffixes = FeatureConfig{}.suffixes;
  return suffixes;
}

std::string feature_name(std::string_view controller, std::string_view method_name,
                         bool several_main_methods, std::span<const std::string> suffixes) {
  std::string stem = std::filesystem::path(std::string(controller)).stem().string();
  std::string_view base = stem;
  for (const std::string& suffix : suffixes) {
    if (base.size() > suffix.size() && base.ends_with(suffix)) {
      base.remove_suffix(suffix.size());
      break;
    }
  }
  std::string name = camel_split(base);
  if (several_main_methods) name += " – " + std::string(method_name);
  return name;
}

std::vector<Feature> identify_features(const CodeModel& model, const FeatureConfig& config) {
  ReferenceGraph graph = build_reference_graph(model);
  std::vector<Feature> out;
  for (const std::string& controller : find_controllers(graph)) {
    std::vector<const MethodEntity*> mains = find_main_methods(model, controller, config);
    for (const MethodEntity* m : mains) {
      Feature f;
      f.name = feature_name(controller, m->name, mains.size() > 1, config.suffixes);
      f.controller = controller;
      f.main_method = method_qualified_name(*m, model);
      f.files = feature_closure(model, graph, controller, *m);
      bool duplicate = std::any_of(out.begin(), out.end(), [&f](const Feature& g) {
        return g.controller == f.controller && g.name == f.name && g.files == f.files;
      });
      if (!duplicate) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Feature& a, const Feature& b) {
    return std::tie(a.name, a.controller, a.main_method) <
           std::tie(b.name, b.controller, b.main_method);
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = "f" + std::to_string(i + 1);
  return out;
}

}  // namespace fdebt
