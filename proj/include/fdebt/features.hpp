#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdebt/code_model.hpp"
#include "fdebt/config.hpp"

namespace fdebt {

/// Simple digraph over project files: no self-loops, no parallel edges.
class ReferenceGraph {
 public:
  void add_node(const std::string& path);
  /// Ignores self-loops; both endpoints become nodes.
  void add_edge(const std::string& from, const std::string& to);

  const std::set<std::string>& nodes() const { return nodes_; }
  const std::set<std::string>& successors(const std::string& path) const;
  std::size_t in_degree(const std::string& path) const;
  std::size_t out_degree(const std::string& path) const;
  std::size_t edge_count() const;
  bool has_edge(const std::string& from, const std::string& to) const;

 private:
  std::set<std::string> nodes_;
  std::map<std::string, std::set<std::string>> out_;
  std::map<std::string, std::size_t> in_;
};

struct Feature {
  std::string id;           // "f1", "f2", ... in name order
  std::string name;
  std::string controller;   // file path
  std::string main_method;  // method qualified name
  std::vector<std::string> files;  // sorted

  bool operator==(const Feature&) const = default;
};

ReferenceGraph build_reference_graph(const CodeModel& model);

/// Files nothing references that reference something: in-degree 0 and
/// out-degree at least 1. Sorted.
std::vector<std::string> find_controllers(const ReferenceGraph& graph);

/// Public, non-constructor, non-accessor methods of `controller` that call
/// at least one method and are called by no other method of the same file.
/// Sorted by signature.
std::vector<const MethodEntity*> find_main_methods(const CodeModel& model,
                                                   std::string_view controller,
                                                   const FeatureConfig& config = {});

/// The controller, the files of the project types the main method names in
/// its signature or body, and everything reachable from those. Sorted.
std::vector<std::string> feature_closure(const CodeModel& model, const ReferenceGraph& graph,
                                         const std::string& controller,
                                         const MethodEntity& main_method);

/// MBean, Controller, Servlet, Action, Resource.
const std::vector<std::string>& default_controller_suffixes();

/// Class name from the controller path with one configured suffix removed,
/// split at camel-case humps. With several main methods in the controller
/// the method name is appended after an en dash.
std::string feature_name(std::string_view controller, std::string_view method_name,
                         bool several_main_methods,
                         std::span<const std::string> suffixes = default_controller_suffixes());

/// One feature per (controller, main method), sorted by name.
std::vector<Feature> identify_features(const CodeModel& model, const FeatureConfig& config = {});

}  // namespace fdebt
