#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artinlab/generator_set.hpp"

namespace artinlab {

/// Edge label. A missing edge means m = infinity; it is never stored.
using Label = unsigned;

inline constexpr Label kNoEdge = 0;

struct Edge {
  Generator u;
  Generator v;
  Label m;

  bool operator==(const Edge&) const = default;
};

/// Labeled defining graph of an Artin group. Immutable once constructed.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Throws InputError on duplicate or empty names, self-loops, labels < 2,
  /// unknown endpoints, repeated pairs, or more than 64 generators.
  DefiningGraph(std::vector<std::string> names, const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Generator g) const { return names_.at(g); }
  std::optional<Generator> find(std::string_view name) const;
  /// Like find, but throws InputError for unknown names.
  Generator index_of(std::string_view name) const;

  /// kNoEdge when the pair is not joined (m = infinity) or u == v.
  Label label(Generator u, Generator v) const { return labels_[u * names_.size() + v]; }
  bool adjacent(Generator u, Generator v) const { return label(u, v) != kNoEdge; }
  /// Distinct generators joined by a 2-labeled edge.
  bool commute(Generator u, Generator v) const { return label(u, v) == 2; }

  GeneratorSet all() const { return GeneratorSet::first_n(size()); }
  GeneratorSet neighbors(Generator g) const;

  /// Edges with u < v, in lexicographic order of (u, v).
  std::vector<Edge> edges() const;

  /// Parses whitespace- or comma-separated generator names into a subset.
  GeneratorSet subset(std::string_view names) const;
  GeneratorSet subset(const std::vector<std::string>& names) const;
  std::string format(GeneratorSet s) const;

  bool operator==(const DefiningGraph& other) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Label> labels_;
};

/// Blocks ordered by least member; a vertex with no 2-labeled edge is its own block.
struct ComponentPartition {
  std::vector<GeneratorSet> blocks;

  std::size_t size() const { return blocks.size(); }
  /// Index of the block containing g.
  std::size_t block_of(Generator g) const;
};

/// Full subgraph on t; its generators are renumbered in declaration order.
DefiningGraph full_subgraph(const DefiningGraph& g, GeneratorSet t);

/// Same vertices as g, only the edges labeled 2.
DefiningGraph hat(const DefiningGraph& g);

ComponentPartition hat_components(const DefiningGraph& g);

GeneratorSet two_completion_of_vertex(const DefiningGraph& g, Generator v);

/// True iff t is a union of blocks of hat_components.
bool is_two_complete(const DefiningGraph& g, GeneratorSet t);

/// Smallest two-complete superset of t.
GeneratorSet canonical_two_completion(const DefiningGraph& g, GeneratorSet t);

/// Connected components of the full subgraph on `within`, using every edge of g.
std::vector<GeneratorSet> connected_components(const DefiningGraph& g, GeneratorSet within);

}  // namespace artinlab
