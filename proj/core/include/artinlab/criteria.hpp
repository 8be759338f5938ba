#pragma once

#include <limits>
#include <vector>

#include "artinlab/defining_graph.hpp"
#include "artinlab/oracle.hpp"
#include "artinlab/report.hpp"

namespace artinlab {

/// Graph on the generators; an edge labeled m has length pi - pi/m.
struct MetricLinkGraph {
  std::size_t vertex_count = 0;
  struct Arc {
    Generator u, v;
    double length;
  };
  std::vector<Arc> arcs;

  /// All-pairs shortest path lengths, row-major; infinity when disconnected.
  std::vector<double> distances() const;
};

MetricLinkGraph metric_link_graph(const DefiningGraph& g);

/// Minimum link distance between generators of distinct blocks must be at least 2*pi/3.
CertificateReport angle_link_check(const DefiningGraph& g);

/// Every finite-type clique of size >= 3 lies in one block (locally reducible graphs only).
CertificateReport prop_cliques_check(const DefiningGraph& g);

/// Searches for t1 u1 = u2 t2 with t_i in A_T, u_i in A_U of length <= max_len.
/// Identity elements are excluded unless include_identity is set.
CertificateReport lemma_product_check(const DefiningGraph& g, GeneratorSet t_block, GeneratorSet u_block,
                                      OracleMode mode, std::size_t max_len, bool include_identity = false);

/// With exactly two blocks: the ball is 1-dimensional, bipartite by type, and has no full 4-cycle.
CertificateReport no_full_4cycle_check(const DefiningGraph& g, OracleMode mode, std::size_t radius);

/// g = product of v_block in declaration order; checks g h g^-1 is outside A_{V - v_block}
/// for every nontrivial h in A_{V - v_block} of length <= max_len.
CertificateReport weak_malnormality_witness(const DefiningGraph& g, GeneratorSet v_block, OracleMode mode,
                                            std::size_t max_len);

struct Splitting {
  GeneratorSet gamma1;
  GeneratorSet gamma2;
  GeneratorSet core;
  bool operator==(const Splitting&) const = default;
};

/// One entry per unordered splitting; gamma1 holds the component with the least generator.
/// Ordered by core (size, then lexicographically), then by gamma1. Graphs above 20 generators
/// are rejected with InputError.
std::vector<Splitting> enumerate_splittings(const DefiningGraph& g);

/// Pairs of generators that are not joined by a 2-labeled edge form a disconnected graph,
/// so the group is a direct product of the parabolics on its components.
std::vector<GeneratorSet> direct_product_factors(const DefiningGraph& g);

CertificateReport acylindricity_report(const DefiningGraph& g);

}  // namespace artinlab
