#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "artinlab/defining_graph.hpp"
#include "artinlab/oracle.hpp"
#include "artinlab/report.hpp"
#include "artinlab/word.hpp"

namespace artinlab {

/// The simplex K: one vertex per block T_i of the 2-labeled subgraph, with local group
/// A_{V \ T_i}. A face spanned by blocks I has local group A_{V \ union of T_i, i in I}.
struct FundamentalDomain {
  struct Face {
    std::vector<std::size_t> blocks;  // indices into `blocks`, increasing
    GeneratorSet local_group;
  };

  ComponentPartition blocks;
  std::vector<GeneratorSet> vertex_types;
  /// Every nonempty face, ordered by dimension then lexicographically.
  std::vector<Face> faces;

  std::size_t dimension() const { return blocks.size() - 1; }
  GeneratorSet local_group(std::span<const std::size_t> face_blocks) const;
};

/// Throws DegenerateDomainError when the 2-labeled subgraph has fewer than two components.
FundamentalDomain fundamental_domain(const DefiningGraph& g);

/// A vertex gA_S of the complex, identified by its type S and canonical representative.
struct CosetVertex {
  GeneratorSet type;
  Word rep;

  bool operator==(const CosetVertex&) const = default;
};

struct CosetVertexHash {
  std::size_t operator()(const CosetVertex& v) const noexcept {
    return WordHash{}(v.rep) * 31 + GeneratorSetHash{}(v.type);
  }
};

using VertexId = std::uint32_t;
/// Increasing vertex ids.
using Simplex = std::vector<VertexId>;

enum class Presence { Yes, No, Unknown };

struct ComplexVertex {
  CosetVertex coset;
  bool interior = true;
};

namespace detail {
struct GroupContext;
}

/// A finite piece of the 2-complete Artin complex (or a link in one, or a hand-built
/// complex). Immutable after construction; queries are safe to run concurrently.
class DevelopedComplex {
 public:
  DevelopedComplex();

  /// A complete, hand-built complex: no oracle, every vertex interior, chords decided by
  /// the given facets alone. Types are optional labels used for DOT colors and typing.
  static DevelopedComplex from_facets(std::size_t vertex_count, std::vector<Simplex> facets,
                                      std::vector<GeneratorSet> types = {});

  const std::vector<ComplexVertex>& vertices() const { return vertices_; }
  /// Vertex sets of the present chambers (maximal simplices).
  const std::vector<Simplex>& chambers() const { return chambers_; }
  /// Group element of each chamber (normal-form words); empty for hand-built complexes.
  const std::vector<Word>& chamber_elements() const { return elements_; }
  std::size_t radius() const { return radius_; }
  /// -1 for the empty complex.
  int dimension() const;
  bool has_oracle() const { return context_ != nullptr; }
  /// Base simplex cosets when this complex is a link; empty otherwise.
  const std::vector<CosetVertex>& link_base() const { return base_; }

  std::optional<VertexId> find(const CosetVertex& v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  /// True iff the simplex is a face of a present chamber.
  bool contains(std::span<const VertexId> simplex) const;
  /// All nonempty faces of present chambers, by dimension then lexicographically.
  std::vector<Simplex> simplices() const;

  /// Whether the vertices (joined with the link base) span a simplex of the whole, infinite
  /// complex. Pairs are decided exactly by the coset oracle; larger sets by present chambers,
  /// then by a search of the radius+2 ball, and otherwise Unknown.
  Presence spans_simplex(std::span<const VertexId> simplex) const;

  const DefiningGraph* graph() const;
  const WordOracle* oracle() const;

 private:
  friend DevelopedComplex develop_ball(const DefiningGraph& g, OracleMode mode, std::size_t radius);
  friend DevelopedComplex link(const DevelopedComplex& x, const Simplex& s);

  void index();

  std::vector<ComplexVertex> vertices_;
  std::vector<Simplex> chambers_;
  std::vector<Word> elements_;
  std::size_t radius_ = 0;
  std::vector<CosetVertex> base_;
  std::shared_ptr<detail::GroupContext> context_;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<std::uint32_t>> vertex_chambers_;
};

/// Chambers are all elements of normal-form length <= radius; vertices are their cosets
/// of the vertex types, glued by coset equality. Mode must be Raag or CoxeterShadow.
DevelopedComplex develop_ball(const DefiningGraph& g, OracleMode mode, std::size_t radius);

/// Link of a present simplex. Interior flags carry over unchanged. Throws InputError when
/// the simplex is absent.
DevelopedComplex link(const DevelopedComplex& x, const Simplex& s);

enum class Fullness { Full, NotFull, Indeterminate };
std::string_view to_string(Fullness f);

struct CycleReport {
  std::vector<VertexId> cycle;
  std::size_t length = 0;
  Fullness fullness = Fullness::Indeterminate;
  std::string reason;
};

/// Simple cycles of length 3..max_len whose vertices are all interior, each classified.
/// Each cycle is listed once, starting at its least vertex.
std::vector<CycleReport> find_full_cycles_up_to(const DevelopedComplex& x, std::size_t max_len);

CertificateReport systole_certificate(const DevelopedComplex& x, std::size_t bound = 6);
CertificateReport locally_6_large_check(const DevelopedComplex& x);
bool connectivity_check(const DevelopedComplex& x);

/// Vertex bijection preserving colors and mapping chambers onto chambers.
bool isomorphic(const DevelopedComplex& a, const std::vector<std::string>& colors_a, const DevelopedComplex& b,
                const std::vector<std::string>& colors_b);

}  // namespace artinlab
