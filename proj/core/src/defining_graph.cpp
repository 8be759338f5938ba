#include "artinlab/defining_graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "artinlab/errors.hpp"

namespace artinlab {

DefiningGraph::DefiningGraph(std::vector<std::string> names, const std::vector<Edge>& edges)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n > kMaxGenerators) {
    throw InputError("at most " + std::to_string(kMaxGenerators) + " generators are supported, got " +
                     std::to_string(n));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw InputError("generator names must be nonempty");
    if (!seen.insert(name).second) throw InputError("duplicate generator '" + name + "'");
  }
  labels_.assign(n * n, kNoEdge);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop at '" + names_[e.u] + "'");
    if (e.m < 2) {
      throw InputError("label " + std::to_string(e.m) + " on " + names_[e.u] + "-" + names_[e.v] +
                       " is below 2");
    }
    if (labels_[e.u * n + e.v] != kNoEdge) {
      throw InputError("repeated edge " + names_[e.u] + "-" + names_[e.v]);
    }
    labels_[e.u * n + e.v] = e.m;
    labels_[e.v * n + e.u] = e.m;
  }
}

std::optional<Generator> DefiningGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Generator>(it - names_.begin());
}

Generator DefiningGraph::index_of(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw InputError("unknown generator '" + std::string(name) + "'");
}

GeneratorSet DefiningGraph::neighbors(Generator g) const {
  GeneratorSet out;
  for (Generator v = 0; v < size(); ++v) {
    if (adjacent(g, v)) out.insert(v);
  }
  return out;
}

std::vector<Edge> DefiningGraph::edges() const {
  std::vector<Edge> out;
  for (Generator u = 0; u < size(); ++u) {
    for (Generator v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.push_back({u, v, label(u, v)});
    }
  }
  return out;
}

GeneratorSet DefiningGraph::subset(std::string_view text) const {
  GeneratorSet out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) out.insert(index_of(text.substr(i, j - i)));
    i = j;
  }
  return out;
}

GeneratorSet DefiningGraph::subset(const std::vector<std::string>& names) const {
  GeneratorSet out;
  for (const auto& name : names) out.insert(index_of(name));
  return out;
}

std::string DefiningGraph::format(GeneratorSet s) const {
  std::string out = "{";
  bool first = true;
  for (Generator g : s) {
    if (!first) out += ",";
    out += names_.at(g);
    first = false;
  }
  return out + "}";
}

std::size_t ComponentPartition::block_of(Generator g) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(g)) return i;
  }
  throw InputError("generator " + std::to_string(g) + " lies in no block");
}

DefiningGraph full_subgraph(const DefiningGraph& g, GeneratorSet t) {
  if (!t.subset_of(g.all())) throw InputError("subset is not contained in the graph");
  std::vector<Generator> members = t.to_vector();
  std::vector<std::string> names;
  for (Generator v : members) names.push_back(g.name(v));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (Label m = g.label(members[i], members[j]); m != kNoEdge) {
        edges.push_back({static_cast<Generator>(i), static_cast<Generator>(j), m});
      }
    }
  }
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph hat(const DefiningGraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.m == 2) edges.push_back(e);
  }
  return DefiningGraph(g.names(), edges);
}

namespace {

GeneratorSet reach(const DefiningGraph& g, Generator start, GeneratorSet within, bool two_only) {
  GeneratorSet seen = GeneratorSet::single(start);
  std::vector<Generator> stack{start};
  while (!stack.empty()) {
    Generator u = stack.back();
    stack.pop_back();
    for (Generator v : within - seen) {
      Label m = g.label(u, v);
      if (m == kNoEdge || (two_only && m != 2)) continue;
      seen.insert(v);
      stack.push_back(v);
    }
  }
  return seen;
}

}  // namespace

ComponentPartition hat_components(const DefiningGraph& g) {
  ComponentPartition out;
  GeneratorSet rest = g.all();
  while (!rest.empty()) {
    GeneratorSet block = reach(g, rest.front(), g.all(), true);
    out.blocks.push_back(block);
    rest = rest - block;
  }
  return out;
}

GeneratorSet two_completion_of_vertex(const DefiningGraph& g, Generator v) {
  if (v >= g.size()) throw InputError("unknown generator index " + std::to_string(v));
  return reach(g, v, g.all(), true);
}

GeneratorSet canonical_two_completion(const DefiningGraph& g, GeneratorSet t) {
  if (!t.subset_of(g.all())) throw InputError("subset is not contained in the graph");
  GeneratorSet out;
  for (Generator v : t) {
    if (!out.contains(v)) out |= two_completion_of_vertex(g, v);
  }
  return out;
}

bool is_two_complete(const DefiningGraph& g, GeneratorSet t) {
  return canonical_two_completion(g, t) == t;
}

std::vector<GeneratorSet> connected_components(const DefiningGraph& g, GeneratorSet within) {
  std::vector<GeneratorSet> out;
  GeneratorSet rest = within;
  while (!rest.empty()) {
    GeneratorSet c = reach(g, rest.front(), within, false);
    out.push_back(c);
    rest = rest - c;
  }
  return out;
}

}  // namespace artinlab
