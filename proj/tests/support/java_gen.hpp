#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fdebt/analysis.hpp"

namespace fdebt::testing {

/// A randomly generated project whose identifiers are placeholders
/// ("@C3@", "@F1_0@", ...). Rendering with different name maps yields
/// consistently renamed copies with identical layout.
struct GeneratedProject {
  struct File {
    std::string path;  // placeholder path, e.g. "@K0@/@C2@.java"
    std::string text;
  };
  std::vector<File> files;
  std::vector<std::string> placeholders;   // every placeholder used, no '@'
  std::vector<std::string> class_keys;     // placeholder metric keys
  std::vector<std::string> method_keys;
};

struct GeneratorOptions {
  int min_classes = 2;
  int max_classes = 7;
  int max_depth = 3;
  bool comments = false;  // sprinkle comment-only and trailing comments
};

GeneratedProject generate_project(std::mt19937_64& rng, const GeneratorOptions& options = {});

using NameMap = std::map<std::string, std::string>;

/// Canonical names: the placeholder itself in a Java-friendly form.
NameMap canonical_names(const GeneratedProject& project);

/// Fresh random identifiers, pairwise distinct, never keywords, never
/// accessor-shaped for methods; class names capitalized.
NameMap random_names(const GeneratedProject& project, std::mt19937_64& rng);

std::string render(const std::string& text, const NameMap& names);
std::vector<SourceText> render_sources(const GeneratedProject& project, const NameMap& names);

}  // namespace fdebt::testing
