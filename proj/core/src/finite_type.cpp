#include "artinlab/finite_type.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "artinlab/errors.hpp"

namespace artinlab {

namespace {

// Coxeter diagram edges: every pair whose label is not 2 (absent pairs are infinity).
bool diagram_edge(const DefiningGraph& g, Generator u, Generator v) { return u != v && g.label(u, v) != 2; }

// Classifies one connected Coxeter diagram. Returns the tag, or nullopt when infinite.
std::optional<std::string> classify_irreducible(const DefiningGraph& g, GeneratorSet comp) {
  const std::vector<Generator> vs = comp.to_vector();
  const std::size_t n = vs.size();
  if (n == 1) return "A1";
  if (n == 2) {
    Label m = g.label(vs[0], vs[1]);
    if (m == kNoEdge) return std::nullopt;
    if (m == 3) return "A2";
    if (m == 4) return "B2";
    return "I2(" + std::to_string(m) + ")";
  }

  std::size_t edge_count = 0;
  std::vector<std::vector<Generator>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!diagram_edge(g, vs[i], vs[j])) continue;
      if (g.label(vs[i], vs[j]) == kNoEdge) return std::nullopt;
      ++edge_count;
      adj[i].push_back(static_cast<Generator>(j));
      adj[j].push_back(static_cast<Generator>(i));
    }
  }
  if (edge_count != n - 1) return std::nullopt;  // connected with a cycle

  auto label_at = [&](std::size_t i, std::size_t j) { return g.label(vs[i], vs[j]); };
  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) {
      if (branch != n) return std::nullopt;
      branch = i;
    }
  }

  if (branch == n) {
    // Path: walk it from one end and collect the labels in order.
    std::size_t start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<Label> labels;
    std::size_t prev = n, cur = start;
    for (std::size_t step = 0; step + 1 < n; ++step) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      labels.push_back(label_at(cur, next));
      prev = cur;
      cur = next;
    }
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != 3) odd.push_back(i);
    }
    if (odd.empty()) return "A" + std::to_string(n);
    if (odd.size() > 1) return std::nullopt;
    const std::size_t pos = odd[0];
    const bool at_end = pos == 0 || pos + 1 == labels.size();
    const Label m = labels[pos];
    if (m == 4 && at_end) return "B" + std::to_string(n);
    if (m == 4 && n == 4) return "F4";
    if (m == 5 && at_end && (n == 3 || n == 4)) return "H" + std::to_string(n);
    return std::nullopt;
  }

  // One branch vertex: all labels must be 3; classify by arm lengths.
  for (std::size_t i = 0; i < n; ++i) {
    for (Generator j : adj[i]) {
      if (label_at(i, j) != 3) return std::nullopt;
    }
  }
  std::array<std::size_t, 3> arms{};
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t prev = branch, cur = adj[branch][k], len = 1;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms[k] = len;
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return std::nullopt;
}

}  // namespace

GramMatrix gram_matrix(const DefiningGraph& g, GeneratorSet t) {
  if (t.empty()) throw InputError("gram_matrix of the empty subset");
  if (!t.subset_of(g.all())) throw InputError("subset is not contained in the graph");
  GramMatrix out;
  out.rows = t.to_vector();
  const std::size_t n = out.rows.size();
  out.entries.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        out.entries[i * n + j] = 1.0;
        continue;
      }
      Label m = g.label(out.rows[i], out.rows[j]);
      out.entries[i * n + j] = m == kNoEdge ? -1.0 : m == 2 ? 0.0 : -std::cos(std::numbers::pi / m);
    }
  }
  return out;
}

bool gram_positive_definite(const DefiningGraph& g, GeneratorSet t) {
  if (t.empty()) return true;
  GramMatrix gm = gram_matrix(g, t);
  const auto n = static_cast<Eigen::Index>(gm.dimension());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = gm(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() > kGramTolerance;
}

FiniteTypeVerdict is_finite_type(const DefiningGraph& g, GeneratorSet t) {
  if (!t.subset_of(g.all())) throw InputError("subset is not contained in the graph");
  FiniteTypeVerdict verdict{t, true, {}};
  GeneratorSet rest = t;
  while (!rest.empty()) {
    // Component of the Coxeter diagram restricted to t.
    GeneratorSet comp = GeneratorSet::single(rest.front());
    std::vector<Generator> stack{rest.front()};
    while (!stack.empty()) {
      Generator u = stack.back();
      stack.pop_back();
      for (Generator v : t - comp) {
        if (diagram_edge(g, u, v)) {
          comp.insert(v);
          stack.push_back(v);
        }
      }
    }
    rest = rest - comp;
    auto tag = classify_irreducible(g, comp);
    if (!tag) return FiniteTypeVerdict{t, false, {}};
    verdict.decomposition.push_back({*tag, comp});
  }
  return verdict;
}

LocalReducibility is_locally_reducible(const DefiningGraph& g) {
  const auto n = static_cast<Generator>(g.size());
  for (Generator a = 0; a < n; ++a) {
    for (Generator b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Generator c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        if (!is_finite_type(g, GeneratorSet{a, b, c}).finite) continue;
        int twos = (g.label(a, b) == 2) + (g.label(a, c) == 2) + (g.label(b, c) == 2);
        if (twos < 2) return {false, Triangle{a, b, c}};
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<DihedralEdge> maximal_dihedral_edges(const DefiningGraph& g) {
  std::vector<DihedralEdge> out;
  for (const Edge& e : g.edges()) {
    if (e.m < 3) continue;
    bool maximal = true;
    for (Generator w : g.neighbors(e.u) & g.neighbors(e.v)) {
      if (is_finite_type(g, GeneratorSet{e.u, e.v, w}).finite) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    GeneratorSet completion = canonical_two_completion(g, GeneratorSet{e.u, e.v});
    out.push_back({e.u, e.v, e.m, completion, completion != g.all()});
  }
  return out;
}

std::vector<GeneratorSet> finite_type_cliques(const DefiningGraph& g, std::size_t min_size) {
  if (min_size < 1) throw InputError("min_size must be at least 1");
  std::vector<GeneratorSet> out;
  // Finite-type cliques are closed under subsets, so extend only finite-type cliques.
  std::vector<GeneratorSet> frontier;
  for (Generator v = 0; v < g.size(); ++v) frontier.push_back(GeneratorSet::single(v));
  for (std::size_t size = 1; !frontier.empty(); ++size) {
    if (size >= min_size) out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<GeneratorSet> next;
    for (GeneratorSet c : frontier) {
      GeneratorSet common = g.all();
      for (Generator v : c) common = common & g.neighbors(v);
      // Extend by vertices after the last member so each clique is produced once.
      Generator last = 0;
      for (Generator v : c) last = v;
      for (Generator w : common) {
        if (w <= last) continue;
        GeneratorSet bigger = c;
        bigger.insert(w);
        if (is_finite_type(g, bigger).finite) next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }
  std::stable_sort(out.begin(), out.end(), [](GeneratorSet a, GeneratorSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return out;
}

}  // namespace artinlab
