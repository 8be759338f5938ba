#include "artinlab/criteria.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <optional>
#include <unordered_map>

#include "artinlab/complex.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/finite_type.hpp"
#include "artinlab/parallel.hpp"

namespace artinlab {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr double kAngleTolerance = 1e-12;

nlohmann::ordered_json names_of(const DefiningGraph& g, GeneratorSet s) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (Generator v : s) out.push_back(g.name(v));
  return out;
}

/// Re-indexes a subset of `within` into the numbering used by full_subgraph(g, within).
GeneratorSet relative_to(GeneratorSet s, GeneratorSet within) {
  GeneratorSet out;
  Generator i = 0;
  for (Generator v : within) {
    if (s.contains(v)) out.insert(i);
    ++i;
  }
  return out;
}

void require_block(const ComponentPartition& blocks, GeneratorSet s, const char* what) {
  if (std::find(blocks.blocks.begin(), blocks.blocks.end(), s) == blocks.blocks.end()) {
    throw InputError(std::string(what) + " is not a component of the 2-labeled subgraph");
  }
}

}  // namespace

std::vector<double> MetricLinkGraph::distances() const {
  const std::size_t n = vertex_count;
  std::vector<double> d(n * n, kInfinity);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  for (const Arc& a : arcs) {
    d[a.u * n + a.v] = std::min(d[a.u * n + a.v], a.length);
    d[a.v * n + a.u] = std::min(d[a.v * n + a.u], a.length);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
      }
    }
  }
  return d;
}

MetricLinkGraph metric_link_graph(const DefiningGraph& g) {
  MetricLinkGraph out;
  out.vertex_count = g.size();
  for (const Edge& e : g.edges()) {
    out.arcs.push_back({e.u, e.v, std::numbers::pi - std::numbers::pi / static_cast<double>(e.m)});
  }
  return out;
}

CertificateReport angle_link_check(const DefiningGraph& g) {
  CertificateReport report;
  report.criterion = "angle";
  const double threshold = 2.0 * std::numbers::pi / 3.0;
  report.parameters["threshold"] = threshold;
  report.parameters["tolerance"] = kAngleTolerance;
  const ComponentPartition blocks = hat_components(g);
  if (blocks.size() < 2) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back("the 2-labeled subgraph has a single component");
    return report;
  }
  const auto d = metric_link_graph(g).distances();
  const std::size_t n = g.size();
  double best = kInfinity;
  std::optional<std::pair<Generator, Generator>> at;
  for (Generator t = 0; t < n; ++t) {
    for (Generator u = t + 1; u < n; ++u) {
      if (blocks.block_of(t) == blocks.block_of(u)) continue;
      if (!at || d[t * n + u] < best) {
        best = d[t * n + u];
        at = {t, u};
      }
    }
  }
  report.witnesses["pair"] = {g.name(at->first), g.name(at->second)};
  if (std::isinf(best)) {
    report.witnesses["minimum"] = "infinity";
  } else {
    report.witnesses["minimum"] = best;
    report.witnesses["minimum_over_pi"] = best / std::numbers::pi;
  }
  report.verdict = best >= threshold - kAngleTolerance ? Verdict::Pass : Verdict::Fail;
  if (report.verdict == Verdict::Pass) {
    report.witnesses["exhaustive"] = "all pairs of generators in distinct blocks";
  }
  return report;
}

CertificateReport prop_cliques_check(const DefiningGraph& g) {
  CertificateReport report;
  report.criterion = "cliques";
  report.parameters["min_clique_size"] = 3;
  const LocalReducibility lr = is_locally_reducible(g);
  if (!lr.locally_reducible) {
    report.verdict = Verdict::NotApplicable;
    const Triangle& t = *lr.witness;
    report.witnesses["triangle"] = {g.name(t.a), g.name(t.b), g.name(t.c)};
    report.notes.push_back("graph is not locally reducible");
    return report;
  }
  const ComponentPartition blocks = hat_components(g);
  const auto cliques = finite_type_cliques(g, 3);
  nlohmann::ordered_json checked = nlohmann::ordered_json::array();
  for (GeneratorSet c : cliques) {
    if (!c.subset_of(blocks.blocks[blocks.block_of(c.front())])) {
      report.verdict = Verdict::Fail;
      report.witnesses["clique"] = names_of(g, c);
      return report;
    }
    checked.push_back(names_of(g, c));
  }
  report.verdict = Verdict::Pass;
  report.witnesses["cliques"] = checked;
  report.witnesses["exhaustive"] = "every finite-type clique of size >= 3";
  return report;
}

CertificateReport lemma_product_check(const DefiningGraph& g, GeneratorSet t_block, GeneratorSet u_block,
                                      OracleMode mode, std::size_t max_len, bool include_identity) {
  if (mode != OracleMode::Raag) throw ModeError("lemma_product_check needs the raag oracle");
  const ComponentPartition blocks = hat_components(g);
  require_block(blocks, t_block, "t_block");
  require_block(blocks, u_block, "u_block");
  if (t_block == u_block) throw InputError("t_block and u_block must be distinct");
  const WordOracle oracle(g, mode);

  CertificateReport report;
  report.criterion = "lemma-product";
  report.parameters["max_len"] = max_len;
  report.parameters["include_identity"] = include_identity;
  auto elements = [&](GeneratorSet s) {
    auto ball = oracle.ball(s, max_len);
    if (!include_identity) ball.erase(ball.begin());  // the identity comes first
    return ball;
  };
  const auto ts = elements(t_block);
  const auto us = elements(u_block);

  // Products t1 u1, keyed by normal form.
  std::unordered_map<Word, std::pair<std::size_t, std::size_t>, WordHash> left;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < us.size(); ++j) left.emplace(oracle.reduce(ts[i] * us[j]), std::pair{i, j});
  }
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> hits(us.size());
  std::vector<std::pair<std::size_t, std::size_t>> hit_left(us.size());
  parallel_for(us.size(), [&](std::size_t j) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      auto it = left.find(oracle.reduce(us[j] * ts[i]));
      if (it != left.end()) {
        hits[j] = std::pair{j, i};
        hit_left[j] = it->second;
        return;
      }
    }
  });
  for (std::size_t j = 0; j < us.size(); ++j) {
    if (!hits[j]) continue;
    report.verdict = Verdict::Fail;
    report.witnesses["t1"] = format_word(g, ts[hit_left[j].first]);
    report.witnesses["u1"] = format_word(g, us[hit_left[j].second]);
    report.witnesses["u2"] = format_word(g, us[hits[j]->first]);
    report.witnesses["t2"] = format_word(g, ts[hits[j]->second]);
    return report;
  }
  report.verdict = Verdict::Pass;
  report.witnesses["quadruples"] = static_cast<double>(ts.size()) * ts.size() * us.size() * us.size();
  report.witnesses["exhaustive"] = "no t1 u1 = u2 t2 with all factors of length <= " + std::to_string(max_len) +
                                   (include_identity ? "" : " and nontrivial");
  return report;
}

CertificateReport no_full_4cycle_check(const DefiningGraph& g, OracleMode mode, std::size_t radius) {
  CertificateReport report;
  report.criterion = "no-full-4cycle";
  report.parameters["radius"] = radius;
  const ComponentPartition blocks = hat_components(g);
  if (blocks.size() != 2) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back("needs exactly two components of the 2-labeled subgraph, found " +
                           std::to_string(blocks.size()));
    return report;
  }
  if (mode != OracleMode::Raag) throw ModeError("no_full_4cycle_check needs the raag oracle");
  const DevelopedComplex x = develop_ball(g, mode, radius);
  report.witnesses["vertices"] = x.vertices().size();
  report.witnesses["chambers"] = x.chambers().size();
  report.witnesses["dimension"] = x.dimension();
  if (x.dimension() > 1) {
    report.verdict = Verdict::Fail;
    report.notes.push_back("complex is not 1-dimensional");
    return report;
  }
  for (VertexId v = 0; v < x.vertices().size(); ++v) {
    for (VertexId w : x.neighbors(v)) {
      if (x.vertices()[v].coset.type == x.vertices()[w].coset.type) {
        report.verdict = Verdict::Fail;
        report.notes.push_back("an edge joins two vertices of the same type");
        return report;
      }
    }
  }
  report.witnesses["bipartite_by_type"] = true;
  std::size_t cycles = 0, undecided = 0;
  for (const CycleReport& c : find_full_cycles_up_to(x, 4)) {
    if (c.length != 4) continue;
    ++cycles;
    if (c.fullness == Fullness::Full) {
      report.verdict = Verdict::Fail;
      nlohmann::ordered_json cyc = nlohmann::ordered_json::array();
      for (VertexId v : c.cycle) {
        const CosetVertex& cv = x.vertices()[v].coset;
        cyc.push_back(format_word(g, cv.rep) + " A" + g.format(cv.type));
      }
      report.witnesses["full_cycle"] = cyc;
      return report;
    }
    if (c.fullness == Fullness::Indeterminate) ++undecided;
  }
  report.witnesses["four_cycles_examined"] = cycles;
  report.verdict = undecided ? Verdict::Indeterminate : Verdict::Pass;
  if (report.verdict == Verdict::Pass) {
    report.witnesses["exhaustive"] = "no full 4-cycle through interior vertices";
  }
  return report;
}

CertificateReport weak_malnormality_witness(const DefiningGraph& g, GeneratorSet v_block, OracleMode mode,
                                            std::size_t max_len) {
  CertificateReport report;
  report.criterion = "weak-malnormality";
  report.parameters["max_len"] = max_len;
  const ComponentPartition blocks = hat_components(g);
  if (blocks.size() < 2) {
    report.verdict = Verdict::NotApplicable;
    report.notes.push_back("the 2-labeled subgraph has a single component");
    return report;
  }
  require_block(blocks, v_block, "v_block");
  if (mode != OracleMode::Raag) throw ModeError("weak_malnormality_witness needs the raag oracle");
  const WordOracle oracle(g, mode);
  const GeneratorSet rest = g.all() - v_block;

  Word conj;
  for (Generator v : v_block) conj.push_back(Letter{v, false});
  const Word conj_inv = conj.inverse();
  report.witnesses["g"] = format_word(g, conj);
  report.witnesses["subgroup"] = names_of(g, rest);

  auto hs = oracle.ball(rest, max_len);
  hs.erase(hs.begin());
  std::vector<char> bad(hs.size(), 0);
  parallel_for(hs.size(), [&](std::size_t i) {
    bad[i] = oracle.in_standard_parabolic(conj * hs[i] * conj_inv, rest) ? 1 : 0;
  });
  auto it = std::find(bad.begin(), bad.end(), 1);
  if (it != bad.end()) {
    report.verdict = Verdict::Fail;
    report.witnesses["h"] = format_word(g, hs[it - bad.begin()]);
    return report;
  }
  report.verdict = Verdict::Pass;
  report.witnesses["elements_checked"] = hs.size();
  report.witnesses["exhaustive"] = "every nontrivial h of length <= " + std::to_string(max_len);
  report.notes.push_back("bounded check; triviality beyond max_len is not verified");
  return report;
}

std::vector<Splitting> enumerate_splittings(const DefiningGraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw InputError("splitting enumeration is limited to 20 generators");
  std::vector<GeneratorSet> cores;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) cores.emplace_back(mask);
  std::stable_sort(cores.begin(), cores.end(), [](GeneratorSet a, GeneratorSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  std::vector<Splitting> out;
  for (GeneratorSet core : cores) {
    const auto comps = connected_components(g, g.all() - core);
    const std::size_t k = comps.size();
    if (k < 2 || k > 20) continue;
    std::vector<Splitting> here;
    // Component 0 always goes to gamma1; the remaining choices must leave gamma2 nonempty.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k) - 1; mask += 2) {
      Splitting s{core, core, core};
      for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1u ? s.gamma1 : s.gamma2) |= comps[i];
      here.push_back(s);
    }
    std::sort(here.begin(), here.end(), [](const Splitting& a, const Splitting& b) {
      if (a.gamma1.size() != b.gamma1.size()) return a.gamma1.size() < b.gamma1.size();
      return lex_less(a.gamma1, b.gamma1);
    });
    out.insert(out.end(), here.begin(), here.end());
  }
  return out;
}

std::vector<GeneratorSet> direct_product_factors(const DefiningGraph& g) {
  // Complement of the 2-labeled subgraph.
  std::vector<Edge> edges;
  for (Generator u = 0; u < g.size(); ++u) {
    for (Generator v = u + 1; v < g.size(); ++v) {
      if (!g.commute(u, v)) edges.push_back({u, v, 3});
    }
  }
  const DefiningGraph complement(g.names(), edges);
  return connected_components(complement, g.all());
}

CertificateReport acylindricity_report(const DefiningGraph& g) {
  CertificateReport report;
  report.criterion = "acylindrical";
  const LocalReducibility lr = is_locally_reducible(g);

  nlohmann::ordered_json c1;
  c1["locally_reducible"] = lr.locally_reducible;
  std::optional<DihedralEdge> edge;
  if (lr.locally_reducible) {
    for (const DihedralEdge& e : maximal_dihedral_edges(g)) {
      if (e.proper_completion) {
        edge = e;
        break;
      }
    }
  }
  c1["holds"] = edge.has_value();
  if (edge) {
    assert(hat_components(g).size() >= 2);
    c1["edge"] = {g.name(edge->u), g.name(edge->v)};
    c1["m"] = edge->m;
    c1["completion"] = names_of(g, edge->completion);
  }

  nlohmann::ordered_json c2;
  std::optional<Splitting> statement_only, proof_chain;
  std::size_t examined = 0;
  for (const Splitting& s : enumerate_splittings(g)) {
    for (const Splitting& o : {s, Splitting{s.gamma2, s.gamma1, s.core}}) {
      ++examined;
      const DefiningGraph sub = full_subgraph(g, o.gamma1);
      const bool statement = is_locally_reducible(sub).locally_reducible && o.gamma1 != o.core &&
                             o.core != o.gamma2 &&
                             canonical_two_completion(sub, relative_to(o.core, o.gamma1)) != sub.all();
      if (!statement) continue;
      if (!statement_only) statement_only = o;
      if (hat_components(sub).size() >= 2 || o.core.empty()) {
        proof_chain = o;
        break;
      }
    }
    if (proof_chain) break;
  }
  auto splitting_json = [&](const Splitting& s) {
    nlohmann::ordered_json j;
    j["gamma1"] = names_of(g, s.gamma1);
    j["gamma2"] = names_of(g, s.gamma2);
    j["core"] = names_of(g, s.core);
    return j;
  };
  c2["statement_reading"] = statement_only.has_value();
  c2["proof_chain_reading"] = proof_chain.has_value();
  c2["oriented_splittings_examined"] = examined;
  if (proof_chain) {
    c2["splitting"] = splitting_json(*proof_chain);
  } else if (statement_only) {
    c2["splitting"] = splitting_json(*statement_only);
  }

  const auto factors = direct_product_factors(g);
  nlohmann::ordered_json obstruction;
  obstruction["holds"] = factors.size() >= 2;
  if (factors.size() >= 2) {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (GeneratorSet f : factors) fs.push_back(names_of(g, f));
    obstruction["factors"] = fs;
  }

  report.witnesses["condition_1"] = c1;
  report.witnesses["condition_2"] = c2;
  report.witnesses["direct_product_obstruction"] = obstruction;
  if (edge) {
    report.verdict = Verdict::Pass;
    report.witnesses["satisfied_by"] = "condition_1";
  } else if (proof_chain) {
    report.verdict = Verdict::Pass;
    report.witnesses["satisfied_by"] = "condition_2";
  } else if (factors.size() >= 2) {
    report.verdict = Verdict::Fail;
    report.notes.push_back("the group is a direct product of nontrivial standard parabolics, "
                           "so it is not acylindrically hyperbolic");
  } else {
    report.verdict = Verdict::Indeterminate;
    if (statement_only) report.notes.push_back("a splitting meets the statement hypotheses only");
  }
  return report;
}

}  // namespace artinlab
