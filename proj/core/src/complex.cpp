#include "artinlab/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <queue>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "artinlab/errors.hpp"
#include "artinlab/parallel.hpp"

namespace artinlab {

namespace detail {

struct GroupContext {
  GroupContext(WordOracle o, ComponentPartition b, std::vector<GeneratorSet> t, std::size_t r)
      : oracle(std::move(o)), blocks(std::move(b)), types(std::move(t)), radius(r) {}

  WordOracle oracle;
  ComponentPartition blocks;
  std::vector<GeneratorSet> types;
  std::size_t radius;

  /// Chambers of the radius+2 ball, indexed by the cosets they contain. Built on first use.
  const std::unordered_map<CosetVertex, std::vector<std::uint32_t>, CosetVertexHash>& extended() {
    std::call_once(once_, [this] {
      const auto elements = oracle.ball(oracle.graph().all(), radius + 2);
      for (std::uint32_t c = 0; c < elements.size(); ++c) {
        for (GeneratorSet type : types) {
          extended_[CosetVertex{type, oracle.min_coset_rep(elements[c], type)}].push_back(c);
        }
      }
    });
    return extended_;
  }

 private:
  std::once_flag once_;
  std::unordered_map<CosetVertex, std::vector<std::uint32_t>, CosetVertexHash> extended_;
};

}  // namespace detail

GeneratorSet FundamentalDomain::local_group(std::span<const std::size_t> face_blocks) const {
  GeneratorSet removed;
  for (std::size_t i : face_blocks) removed |= blocks.blocks.at(i);
  GeneratorSet all;
  for (GeneratorSet b : blocks.blocks) all |= b;
  return all - removed;
}

FundamentalDomain fundamental_domain(const DefiningGraph& g) {
  FundamentalDomain k;
  k.blocks = hat_components(g);
  const std::size_t n = k.blocks.size();
  if (n < 2) {
    throw DegenerateDomainError(
        "the 2-labeled subgraph has " + std::to_string(n) +
        " component(s); the complex needs at least two (with one component it has no edges)");
  }
  for (GeneratorSet b : k.blocks.blocks) k.vertex_types.push_back(g.all() - b);
  for (std::size_t size = 1; size <= n; ++size) {
    // Subsets of block indices of this size in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      k.faces.push_back({idx, k.local_group(idx)});
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return k;
}

DevelopedComplex::DevelopedComplex() = default;

DevelopedComplex DevelopedComplex::from_facets(std::size_t vertex_count, std::vector<Simplex> facets,
                                               std::vector<GeneratorSet> types) {
  DevelopedComplex x;
  x.vertices_.resize(vertex_count);
  for (std::size_t v = 0; v < vertex_count && v < types.size(); ++v) x.vertices_[v].coset.type = types[v];
  for (Simplex& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (VertexId v : f) {
      if (v >= vertex_count) throw InputError("facet refers to vertex " + std::to_string(v));
    }
  }
  x.chambers_ = std::move(facets);
  x.index();
  return x;
}

void DevelopedComplex::index() {
  adjacency_.assign(vertices_.size(), {});
  vertex_chambers_.assign(vertices_.size(), {});
  std::vector<std::set<VertexId>> adj(vertices_.size());
  for (std::uint32_t c = 0; c < chambers_.size(); ++c) {
    for (VertexId v : chambers_[c]) {
      vertex_chambers_[v].push_back(c);
      for (VertexId w : chambers_[c]) {
        if (w != v) adj[v].insert(w);
      }
    }
  }
  for (std::size_t v = 0; v < adj.size(); ++v) adjacency_[v].assign(adj[v].begin(), adj[v].end());
}

int DevelopedComplex::dimension() const {
  int d = -1;
  for (const Simplex& c : chambers_) d = std::max(d, static_cast<int>(c.size()) - 1);
  if (d < 0 && !vertices_.empty()) d = 0;
  return d;
}

std::optional<VertexId> DevelopedComplex::find(const CosetVertex& v) const {
  for (VertexId i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].coset == v) return i;
  }
  return std::nullopt;
}

bool DevelopedComplex::contains(std::span<const VertexId> simplex) const {
  if (simplex.empty()) return true;
  for (VertexId v : simplex) {
    if (v >= vertices_.size()) return false;
  }
  Simplex sorted(simplex.begin(), simplex.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t c : vertex_chambers_[sorted.front()]) {
    if (std::includes(chambers_[c].begin(), chambers_[c].end(), sorted.begin(), sorted.end())) return true;
  }
  return sorted.size() == 1;
}

std::vector<Simplex> DevelopedComplex::simplices() const {
  std::set<Simplex> faces;
  for (const Simplex& c : chambers_) {
    const std::size_t n = c.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) f.push_back(c[i]);
      }
      faces.insert(std::move(f));
    }
  }
  for (VertexId v = 0; v < vertices_.size(); ++v) faces.insert(Simplex{v});
  std::vector<Simplex> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
  return out;
}

const DefiningGraph* DevelopedComplex::graph() const { return context_ ? &context_->oracle.graph() : nullptr; }
const WordOracle* DevelopedComplex::oracle() const { return context_ ? &context_->oracle : nullptr; }

Presence DevelopedComplex::spans_simplex(std::span<const VertexId> simplex) const {
  if (contains(simplex)) return Presence::Yes;
  if (!context_) return Presence::No;
  std::vector<CosetVertex> cosets = base_;
  for (VertexId v : simplex) cosets.push_back(vertices_.at(v).coset);
  const WordOracle& oracle = context_->oracle;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < cosets.size(); ++j) {
      if (cosets[i].type == cosets[j].type) return Presence::No;
      if (!oracle.cosets_intersect(cosets[i].rep, cosets[i].type, cosets[j].rep, cosets[j].type)) {
        return Presence::No;
      }
    }
  }
  if (cosets.size() <= 2) return Presence::Yes;
  // Collective intersection of three or more cosets: bounded search.
  const auto& index = context_->extended();
  std::vector<std::uint32_t> common;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    auto it = index.find(cosets[i]);
    if (it == index.end()) return Presence::Unknown;
    if (i == 0) {
      common = it->second;
      continue;
    }
    std::vector<std::uint32_t> next;
    std::set_intersection(common.begin(), common.end(), it->second.begin(), it->second.end(),
                          std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) return Presence::Unknown;
  }
  return common.empty() ? Presence::Unknown : Presence::Yes;
}

DevelopedComplex develop_ball(const DefiningGraph& g, OracleMode mode, std::size_t radius) {
  if (mode == OracleMode::Dihedral) {
    throw ModeError("develop_ball needs the raag or coxeter-shadow oracle");
  }
  FundamentalDomain k = fundamental_domain(g);
  WordOracle oracle(g, mode);

  DevelopedComplex x;
  x.radius_ = radius;
  x.elements_ = oracle.ball(g.all(), radius);
  std::unordered_map<CosetVertex, VertexId, CosetVertexHash> ids;
  for (const Word& element : x.elements_) {
    Simplex chamber;
    for (GeneratorSet type : k.vertex_types) {
      CosetVertex cv{type, oracle.min_coset_rep(element, type)};
      auto [it, inserted] = ids.try_emplace(cv, static_cast<VertexId>(x.vertices_.size()));
      if (inserted) x.vertices_.push_back({std::move(cv), false});
      chamber.push_back(it->second);
    }
    std::sort(chamber.begin(), chamber.end());
    x.chambers_.push_back(std::move(chamber));
  }

  // Interior: the chamber of the representative and its neighbors through the local group
  // generators are all present.
  std::unordered_set<Word, WordHash> present(x.elements_.begin(), x.elements_.end());
  for (ComplexVertex& v : x.vertices_) {
    bool interior = present.count(v.coset.rep) > 0;
    for (Generator s : v.coset.type) {
      for (bool inv : {false, true}) {
        if (!interior) break;
        interior = present.count(oracle.reduce(v.coset.rep * Word::generator(s, inv))) > 0;
      }
    }
    v.interior = interior;
  }
  x.context_ = std::make_shared<detail::GroupContext>(std::move(oracle), k.blocks, k.vertex_types, radius);
  x.index();
  return x;
}

DevelopedComplex link(const DevelopedComplex& x, const Simplex& s) {
  Simplex base(s.begin(), s.end());
  std::sort(base.begin(), base.end());
  if (!x.contains(base)) throw InputError("link of a simplex that is not present");

  DevelopedComplex out;
  out.radius_ = x.radius_;
  out.context_ = x.context_;
  out.base_ = x.base_;
  for (VertexId v : base) out.base_.push_back(x.vertices_[v].coset);

  std::map<VertexId, VertexId> renumber;
  std::set<Simplex> facets;
  for (std::uint32_t c = 0; c < x.chambers_.size(); ++c) {
    const Simplex& chamber = x.chambers_[c];
    if (!std::includes(chamber.begin(), chamber.end(), base.begin(), base.end())) continue;
    Simplex rest;
    std::set_difference(chamber.begin(), chamber.end(), base.begin(), base.end(), std::back_inserter(rest));
    if (rest.empty()) continue;
    for (VertexId v : rest) renumber.emplace(v, 0);
    if (facets.insert(rest).second && !x.elements_.empty()) out.elements_.push_back(x.elements_[c]);
  }
  VertexId next = 0;
  for (auto& [old_id, new_id] : renumber) {
    new_id = next++;
    out.vertices_.push_back(x.vertices_[old_id]);
  }
  for (const Simplex& f : facets) {
    Simplex mapped;
    for (VertexId v : f) mapped.push_back(renumber.at(v));
    out.chambers_.push_back(std::move(mapped));
  }
  out.index();
  return out;
}

std::string_view to_string(Fullness f) {
  switch (f) {
    case Fullness::Full: return "full";
    case Fullness::NotFull: return "not-full";
    case Fullness::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

std::string describe(const DevelopedComplex& x, VertexId v) {
  const DefiningGraph* g = x.graph();
  if (!g) return "v" + std::to_string(v);
  const CosetVertex& c = x.vertices()[v].coset;
  return format_word(*g, c.rep) + " A" + g->format(c.type);
}

nlohmann::ordered_json describe_cycle(const DevelopedComplex& x, const std::vector<VertexId>& cycle) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (VertexId v : cycle) out.push_back(describe(x, v));
  return out;
}

}  // namespace

std::vector<CycleReport> find_full_cycles_up_to(const DevelopedComplex& x, std::size_t max_len) {
  if (max_len < 3) throw InputError("max_len must be at least 3");
  std::vector<CycleReport> out;
  const auto& verts = x.vertices();
  std::map<std::pair<VertexId, VertexId>, Presence> chord_memo;
  auto chord = [&](VertexId a, VertexId b) {
    auto key = std::minmax(a, b);
    auto it = chord_memo.find(key);
    if (it != chord_memo.end()) return it->second;
    const VertexId pair[2] = {key.first, key.second};
    Presence p = x.spans_simplex(pair);
    chord_memo.emplace(key, p);
    return p;
  };

  auto classify = [&](std::vector<VertexId> cycle) {
    CycleReport r;
    r.length = cycle.size();
    bool unknown = false;
    for (std::size_t i = 0; i < cycle.size() && r.reason.empty(); ++i) {
      for (std::size_t j = i + 2; j < cycle.size(); ++j) {
        if (i == 0 && j + 1 == cycle.size()) continue;  // consecutive around the cycle
        Presence p = chord(cycle[i], cycle[j]);
        if (p == Presence::Yes) {
          r.fullness = Fullness::NotFull;
          r.reason = "chord " + describe(x, cycle[i]) + " -- " + describe(x, cycle[j]);
          break;
        }
        if (p == Presence::Unknown) unknown = true;
      }
    }
    if (r.reason.empty()) {
      if (unknown) {
        r.fullness = Fullness::Indeterminate;
        r.reason = "a chord could not be decided within radius " + std::to_string(x.radius() + 2);
      } else if (cycle.size() == 3) {
        // Only triangles can be filled without a chord.
        switch (x.spans_simplex(cycle)) {
          case Presence::Yes:
            r.fullness = Fullness::NotFull;
            r.reason = "filled by a 2-simplex";
            break;
          case Presence::No:
            r.fullness = Fullness::Full;
            r.reason = "no filling simplex";
            break;
          case Presence::Unknown:
            r.fullness = Fullness::Indeterminate;
            r.reason = "no filling chamber within radius " + std::to_string(x.radius() + 2);
            break;
        }
      } else {
        r.fullness = Fullness::Full;
        r.reason = "chord-free";
      }
    }
    r.cycle = std::move(cycle);
    out.push_back(std::move(r));
  };

  std::vector<VertexId> path;
  std::vector<char> on_path(verts.size(), 0);
  for (VertexId start = 0; start < verts.size(); ++start) {
    if (!verts[start].interior) continue;
    path.assign(1, start);
    on_path[start] = 1;
    // Iterative DFS over paths whose vertices exceed `start`.
    std::vector<std::size_t> cursor{0};
    while (!path.empty()) {
      VertexId tip = path.back();
      const auto& nbrs = x.neighbors(tip);
      std::size_t& i = cursor.back();
      if (i >= nbrs.size() || path.size() > max_len) {
        on_path[tip] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      VertexId w = nbrs[i++];
      if (w == start && path.size() >= 3 && path[1] < path.back()) {
        classify(path);
        continue;
      }
      if (w <= start || on_path[w] || !verts[w].interior || path.size() == max_len) continue;
      path.push_back(w);
      on_path[w] = 1;
      cursor.push_back(0);
    }
  }
  return out;
}

CertificateReport systole_certificate(const DevelopedComplex& x, std::size_t bound) {
  CertificateReport report;
  report.criterion = "systole";
  report.parameters["bound"] = bound;
  report.parameters["radius"] = x.radius();
  report.parameters["filling_search_radius"] = x.radius() + 2;
  if (bound <= 3) {
    report.verdict = Verdict::Pass;
    report.witnesses["exhaustive"] = "every systole is at least 3";
    return report;
  }
  const auto cycles = find_full_cycles_up_to(x, bound - 1);
  const CycleReport* shortest_full = nullptr;
  nlohmann::ordered_json undecided = nlohmann::ordered_json::array();
  for (const CycleReport& c : cycles) {
    if (c.fullness == Fullness::Full && (!shortest_full || c.length < shortest_full->length)) shortest_full = &c;
    if (c.fullness == Fullness::Indeterminate) {
      undecided.push_back({{"cycle", describe_cycle(x, c.cycle)}, {"reason", c.reason}});
    }
  }
  report.witnesses["cycles_examined"] = cycles.size();
  if (shortest_full) {
    report.verdict = Verdict::Fail;
    report.witnesses["full_cycle"] = describe_cycle(x, shortest_full->cycle);
    report.witnesses["length"] = shortest_full->length;
  } else if (!undecided.empty()) {
    report.verdict = Verdict::Indeterminate;
    report.witnesses["undecided"] = undecided;
  } else {
    report.verdict = Verdict::Pass;
    report.witnesses["exhaustive"] = "no full cycle of length < " + std::to_string(bound) +
                                     " through interior vertices";
  }
  if (const WordOracle* o = x.oracle(); o && !o->exact()) {
    report.notes.push_back("floating-point Coxeter representation (tolerance 1e-9); equality is not certified");
  }
  return report;
}

CertificateReport locally_6_large_check(const DevelopedComplex& x) {
  CertificateReport report;
  report.criterion = "locally-6-large";
  report.parameters["bound"] = 6;
  report.parameters["radius"] = x.radius();

  std::vector<Simplex> interior;
  for (Simplex& s : x.simplices()) {
    bool ok = std::all_of(s.begin(), s.end(), [&](VertexId v) { return x.vertices()[v].interior; });
    if (ok) interior.push_back(std::move(s));
  }
  std::vector<CertificateReport> results(interior.size());
  parallel_for(interior.size(), [&](std::size_t i) { results[i] = systole_certificate(link(x, interior[i]), 6); });

  Verdict verdict = Verdict::Pass;
  std::size_t undecided = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Verdict v = results[i].verdict;
    if (v == Verdict::Indeterminate) ++undecided;
    if (v == Verdict::Fail && verdict != Verdict::Fail) {
      report.witnesses["simplex"] = describe_cycle(x, interior[i]);
      report.witnesses["link_full_cycle"] = results[i].witnesses["full_cycle"];
    }
    verdict = combine(verdict, v);
  }
  report.verdict = verdict;
  report.witnesses["links_checked"] = interior.size();
  report.witnesses["indeterminate_links"] = undecided;
  if (verdict == Verdict::Pass) {
    report.witnesses["exhaustive"] = "every interior simplex has link systole >= 6 within the ball";
  }
  return report;
}

bool connectivity_check(const DevelopedComplex& x) {
  const std::size_t n = x.vertices().size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId w : x.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push(w);
      }
    }
  }
  return count == n;
}

bool isomorphic(const DevelopedComplex& a, const std::vector<std::string>& colors_a, const DevelopedComplex& b,
                const std::vector<std::string>& colors_b) {
  const std::size_t n = a.vertices().size();
  if (n != b.vertices().size() || a.chambers().size() != b.chambers().size()) return false;
  if (colors_a.size() != n || colors_b.size() != n) throw InputError("one color per vertex is required");

  auto signature = [](const DevelopedComplex& x, const std::vector<std::string>& colors, VertexId v) {
    std::size_t in_chambers = 0;
    for (const Simplex& c : x.chambers()) in_chambers += std::binary_search(c.begin(), c.end(), v);
    return std::make_tuple(colors[v], x.neighbors(v).size(), in_chambers);
  };
  {
    std::multiset<std::tuple<std::string, std::size_t, std::size_t>> sa, sb;
    for (VertexId v = 0; v < n; ++v) {
      sa.insert(signature(a, colors_a, v));
      sb.insert(signature(b, colors_b, v));
    }
    if (sa != sb) return false;
  }
  std::set<Simplex> chambers_b(b.chambers().begin(), b.chambers().end());

  // Visit a's vertices in BFS order so each one usually has a mapped neighbor.
  std::vector<VertexId> order;
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::queue<VertexId> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId w : a.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
  }

  std::vector<VertexId> map(n, 0);
  std::vector<char> mapped(n, 0), used(n, 0);
  auto adjacent = [](const DevelopedComplex& x, VertexId u, VertexId v) {
    const auto& nb = x.neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  };
  auto chambers_match = [&] {
    for (const Simplex& c : a.chambers()) {
      Simplex image;
      for (VertexId v : c) image.push_back(map[v]);
      std::sort(image.begin(), image.end());
      if (!chambers_b.count(image)) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
    if (k == n) return chambers_match();
    VertexId v = order[k];
    const auto sig = signature(a, colors_a, v);
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || signature(b, colors_b, w) != sig) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        VertexId u = order[j];
        ok = adjacent(a, u, v) == adjacent(b, map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      mapped[v] = 1;
      if (extend(k + 1)) return true;
      used[w] = 0;
      mapped[v] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace artinlab
