#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artinlab/defining_graph.hpp"

namespace artinlab {

/// Row-major symmetric matrix, rows in generator order of the subset.
struct GramMatrix {
  std::vector<Generator> rows;
  std::vector<double> entries;

  std::size_t dimension() const { return rows.size(); }
  double operator()(std::size_t i, std::size_t j) const { return entries[i * rows.size() + j]; }
};

struct IrreducibleComponent {
  std::string tag;  // "A3", "B2", "D4", "E6", "F4", "H3", "I2(7)", ...
  GeneratorSet members;
};

struct FiniteTypeVerdict {
  GeneratorSet subset;
  bool finite = false;
  /// Irreducible pieces of the Coxeter diagram ordered by least member; empty unless finite.
  std::vector<IrreducibleComponent> decomposition;
};

inline constexpr double kGramTolerance = 1e-9;

/// entry(i,j) = -cos(pi/m), with -1 for m = infinity. Throws InputError on an empty subset.
GramMatrix gram_matrix(const DefiningGraph& g, GeneratorSet t);

/// Exact decision from the classification of finite Coxeter diagrams.
FiniteTypeVerdict is_finite_type(const DefiningGraph& g, GeneratorSet t);

/// Independent numerical route: smallest Gram eigenvalue > kGramTolerance.
bool gram_positive_definite(const DefiningGraph& g, GeneratorSet t);

struct Triangle {
  Generator a, b, c;
};

struct LocalReducibility {
  bool locally_reducible = true;
  std::optional<Triangle> witness;  // first finite-type triangle not of the form 2-2-k
};

LocalReducibility is_locally_reducible(const DefiningGraph& g);

struct DihedralEdge {
  Generator u, v;
  Label m;
  GeneratorSet completion;   // canonical two-completion of {u, v}
  bool proper_completion;    // completion != V(g)
};

/// Edges with m >= 3 that lie in no finite-type triangle, in edge order.
std::vector<DihedralEdge> maximal_dihedral_edges(const DefiningGraph& g);

/// Finite-type cliques of size >= min_size, ordered by size then lexicographically.
std::vector<GeneratorSet> finite_type_cliques(const DefiningGraph& g, std::size_t min_size);

}  // namespace artinlab
