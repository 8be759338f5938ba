#include "artinlab/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "artinlab/criteria.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/finite_type.hpp"

namespace artinlab {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

Location locate(std::string_view text, std::size_t offset) {
  Location loc{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

/// Forward iterator over the text that reports how far the parser has read.
struct CountingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    ++p;
    ++*consumed;
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p == o.p; }
};

/// Records the start offset of every value, keyed by JSON pointer.
class PositionRecorder : public nlohmann::json_sax<nlohmann::json> {
 public:
  PositionRecorder(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

  std::map<std::string, std::size_t> starts;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override {
    begin_value();
    last_ = *consumed_;
    frames_.push_back({false, 0, {}});
    return true;
  }
  bool key(string_t& k) override {
    frames_.back().key = k;
    last_ = *consumed_;
    return true;
  }
  bool end_object() override {
    frames_.pop_back();
    end_value();
    return true;
  }
  bool start_array(std::size_t) override {
    begin_value();
    last_ = *consumed_;
    frames_.push_back({true, 0, {}});
    return true;
  }
  bool end_array() override {
    frames_.pop_back();
    end_value();
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::size_t next;
    std::string key;
  };

  bool scalar() {
    begin_value();
    end_value();
    return true;
  }
  void begin_value() {
    std::size_t start = last_;
    while (start < text_.size() && std::string_view(" \t\r\n,:").find(text_[start]) != std::string_view::npos) {
      ++start;
    }
    std::string pointer;
    for (const Frame& f : frames_) pointer += "/" + (f.array ? std::to_string(f.next) : f.key);
    starts.emplace(pointer, start);
  }
  void end_value() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().next;
    last_ = *consumed_;
  }

  std::string_view text_;
  const std::size_t* consumed_;
  std::size_t last_ = 0;
  std::vector<Frame> frames_;
};

[[noreturn]] void fail_at(std::string_view text, const std::string& pointer, const std::string& message) {
  std::size_t consumed = 0;
  PositionRecorder recorder(text, &consumed);
  CountingIterator first{text.data(), &consumed};
  CountingIterator last{text.data() + text.size(), &consumed};
  nlohmann::json::sax_parse(first, last, &recorder);
  // Fall back to the closest enclosing value that was recorded.
  std::string p = pointer;
  for (;;) {
    if (auto it = recorder.starts.find(p); it != recorder.starts.end()) {
      Location loc = locate(text, it->second);
      throw ParseError(message, loc.line, loc.column);
    }
    if (p.empty()) throw ParseError(message, 0, 0);
    p.erase(p.rfind('/'));
  }
}

std::string pointer_to(std::string_view field, std::size_t i) {
  return "/" + std::string(field) + "/" + std::to_string(i);
}

ordered_json names_of(const DefiningGraph& g, GeneratorSet s) {
  ordered_json out = ordered_json::array();
  for (Generator v : s) out.push_back(g.name(v));
  return out;
}

ordered_json type_json(const DevelopedComplex& x, GeneratorSet t) {
  if (const DefiningGraph* g = x.graph()) return names_of(*g, t);
  ordered_json out = ordered_json::array();
  for (Generator v : t) out.push_back(v);
  return out;
}

void emit(const ordered_json& doc, const RunConfiguration& config, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write " + *config.out_path);
    file << text;
  } else {
    out << text;
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

}  // namespace

DefiningGraph parse_graph_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // The byte index points one past the last character read, the end of the offending token.
    Location loc = locate(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
    throw ParseError("malformed document: " + what, loc.line, loc.column);
  }
  if (!doc.is_object()) fail_at(text, "", "document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges") fail_at(text, "/" + key, "unknown field '" + key + "'");
  }
  if (!doc.contains("vertices")) fail_at(text, "", "missing field 'vertices'");
  const auto& vertices = doc["vertices"];
  if (!vertices.is_array()) fail_at(text, "/vertices", "'vertices' must be an array of names");

  std::vector<std::string> names;
  std::map<std::string, Generator> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (!v.is_string() || v.get<std::string>().empty()) {
      fail_at(text, pointer_to("vertices", i), "vertex names must be nonempty strings");
    }
    const std::string name = v.get<std::string>();
    if (name.find_first_of(" \t\r\n,") != std::string::npos) {
      fail_at(text, pointer_to("vertices", i), "vertex name '" + name + "' contains a separator");
    }
    if (!index.emplace(name, static_cast<Generator>(names.size())).second) {
      fail_at(text, pointer_to("vertices", i), "duplicate vertex '" + name + "'");
    }
    names.push_back(name);
  }
  if (names.size() > kMaxGenerators) {
    fail_at(text, "/vertices", "at most " + std::to_string(kMaxGenerators) + " vertices are supported");
  }

  std::vector<Edge> edges;
  std::map<std::pair<Generator, Generator>, std::size_t> seen;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) fail_at(text, "/edges", "'edges' must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& e = list[i];
      const std::string at = pointer_to("edges", i);
      if (!e.is_object()) fail_at(text, at, "edge must be an object with fields u, v, m");
      for (const auto& [key, value] : e.items()) {
        if (key != "u" && key != "v" && key != "m") fail_at(text, at + "/" + key, "unknown edge field '" + key + "'");
      }
      Generator ends[2];
      for (int k = 0; k < 2; ++k) {
        const char* field = k == 0 ? "u" : "v";
        if (!e.contains(field)) fail_at(text, at, std::string("edge is missing '") + field + "'");
        const auto& name = e[field];
        if (!name.is_string()) fail_at(text, at + "/" + field, "endpoint must be a vertex name");
        auto it = index.find(name.get<std::string>());
        if (it == index.end()) {
          fail_at(text, at + "/" + field, "unknown endpoint '" + name.get<std::string>() + "'");
        }
        ends[k] = it->second;
      }
      if (ends[0] == ends[1]) fail_at(text, at, "self-loop at '" + names[ends[0]] + "'");
      if (!e.contains("m")) fail_at(text, at, "edge is missing 'm'");
      const auto& m = e["m"];
      if (!m.is_number_integer()) {
        fail_at(text, at + "/m", "label must be an integer (leave the pair out for infinity)");
      }
      if (m.get<std::int64_t>() < 2) {
        fail_at(text, at + "/m", "label " + std::to_string(m.get<std::int64_t>()) + " is below 2");
      }
      if (m.get<std::int64_t>() > 1'000'000) fail_at(text, at + "/m", "label is too large");
      auto key = std::minmax(ends[0], ends[1]);
      if (!seen.emplace(key, i).second) {
        fail_at(text, at, "repeated edge " + names[key.first] + "-" + names[key.second]);
      }
      edges.push_back({ends[0], ends[1], static_cast<Label>(m.get<std::int64_t>())});
    }
  }
  return DefiningGraph(std::move(names), edges);
}

std::string serialize_graph(const DefiningGraph& g) {
  std::ostringstream out;
  out << "{\n  \"vertices\": [";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << (i ? ", " : "") << nlohmann::json(g.name(static_cast<Generator>(i))).dump();
  }
  out << "],\n  \"edges\": [";
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << (i ? ",\n" : "\n") << "    {\"u\": " << nlohmann::json(g.name(edges[i].u)).dump()
        << ", \"v\": " << nlohmann::json(g.name(edges[i].v)).dump() << ", \"m\": " << edges[i].m << "}";
  }
  out << (edges.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

ordered_json domain_to_json(const DefiningGraph& g, const FundamentalDomain& k) {
  ordered_json out;
  out["dimension"] = k.dimension();
  ordered_json vertices = ordered_json::array();
  for (std::size_t i = 0; i < k.blocks.size(); ++i) {
    vertices.push_back({{"block", names_of(g, k.blocks.blocks[i])}, {"local_group", names_of(g, k.vertex_types[i])}});
  }
  out["vertices"] = vertices;
  ordered_json faces = ordered_json::array();
  for (const auto& f : k.faces) {
    ordered_json blocks = ordered_json::array();
    for (std::size_t b : f.blocks) blocks.push_back(names_of(g, k.blocks.blocks[b]));
    faces.push_back({{"blocks", blocks}, {"local_group", names_of(g, f.local_group)}});
  }
  out["faces"] = faces;
  return out;
}

ordered_json complex_to_json(const DevelopedComplex& x) {
  ordered_json out;
  const DefiningGraph* g = x.graph();
  out["radius"] = x.radius();
  out["dimension"] = x.dimension();
  if (g) {
    ordered_json blocks = ordered_json::array();
    for (GeneratorSet b : hat_components(*g).blocks) blocks.push_back(names_of(*g, b));
    out["blocks"] = blocks;
  }
  if (!x.link_base().empty() && g) {
    ordered_json base = ordered_json::array();
    for (const CosetVertex& c : x.link_base()) base.push_back({{"type", names_of(*g, c.type)}, {"rep", format_word(*g, c.rep)}});
    out["link_of"] = base;
  }
  ordered_json chambers = ordered_json::array();
  for (std::size_t c = 0; c < x.chambers().size(); ++c) {
    ordered_json entry;
    if (g && c < x.chamber_elements().size()) entry["element"] = format_word(*g, x.chamber_elements()[c]);
    entry["vertices"] = x.chambers()[c];
    chambers.push_back(entry);
  }
  out["chambers"] = chambers;
  ordered_json vertices = ordered_json::array();
  for (VertexId v = 0; v < x.vertices().size(); ++v) {
    const ComplexVertex& cv = x.vertices()[v];
    ordered_json entry;
    entry["id"] = v;
    entry["type"] = type_json(x, cv.coset.type);
    if (g) entry["rep"] = format_word(*g, cv.coset.rep);
    entry["interior"] = cv.interior;
    vertices.push_back(entry);
  }
  out["vertices"] = vertices;
  out["simplices"] = x.simplices();
  return out;
}

std::string complex_to_dot(const DevelopedComplex& x) {
  static constexpr const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                             "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  const DefiningGraph* g = x.graph();
  std::map<std::uint64_t, std::size_t> colors;
  std::ostringstream out;
  out << "graph complex {\n  node [style=filled, shape=circle, fontsize=10];\n";
  for (VertexId v = 0; v < x.vertices().size(); ++v) {
    const CosetVertex& c = x.vertices()[v].coset;
    const std::size_t color = colors.emplace(c.type.bits(), colors.size()).first->second;
    std::string label = g ? format_word(*g, c.rep) + " A" + g->format(c.type) : "v" + std::to_string(v);
    out << "  v" << v << " [label=" << nlohmann::json(label).dump() << ", fillcolor=\""
        << kPalette[color % std::size(kPalette)] << "\"";
    if (!x.vertices()[v].interior) out << ", peripheries=2";
    out << "];\n";
  }
  for (VertexId v = 0; v < x.vertices().size(); ++v) {
    for (VertexId w : x.neighbors(v)) {
      if (v < w) out << "  v" << v << " -- v" << w << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string graph_to_dot(const DefiningGraph& g) {
  std::ostringstream out;
  out << "graph defining {\n  node [shape=circle];\n";
  for (Generator v = 0; v < g.size(); ++v) out << "  " << nlohmann::json(g.name(v)).dump() << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << nlohmann::json(g.name(e.u)).dump() << " -- " << nlohmann::json(g.name(e.v)).dump();
    if (e.m == 2) {
      out << " [style=bold, color=\"#1f78b4\", label=\"2\"];\n";
    } else {
      out << " [style=dashed, label=\"" << e.m << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass:
    case Verdict::NotApplicable: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Indeterminate: return 2;
  }
  return kUsageError;
}

namespace {

GeneratorSet block_named(const DefiningGraph& g, const ComponentPartition& blocks, const std::string& name) {
  return blocks.blocks[blocks.block_of(g.index_of(name))];
}

CertificateReport certify(const RunConfiguration& config, const DefiningGraph& g, OracleMode mode) {
  const std::string& c = config.criterion;
  if (c == "acylindrical") return acylindricity_report(g);
  if (c == "angle") return angle_link_check(g);
  if (c == "cliques") return prop_cliques_check(g);
  if (c == "local-reducibility") {
    CertificateReport r;
    r.criterion = c;
    const LocalReducibility lr = is_locally_reducible(g);
    r.verdict = lr.locally_reducible ? Verdict::Pass : Verdict::Fail;
    if (lr.witness) r.witnesses["triangle"] = {g.name(lr.witness->a), g.name(lr.witness->b), g.name(lr.witness->c)};
    else r.witnesses["exhaustive"] = "every finite-type triangle has labels 2-2-k";
    return r;
  }
  if (c == "lemma-product") {
    const ComponentPartition blocks = hat_components(g);
    if (blocks.size() < 2) {
      CertificateReport r;
      r.criterion = c;
      r.verdict = Verdict::NotApplicable;
      r.notes.push_back("the 2-labeled subgraph has a single component");
      return r;
    }
    GeneratorSet t = blocks.blocks[0], u = blocks.blocks[1];
    if (config.blocks.size() >= 1) t = block_named(g, blocks, config.blocks[0]);
    if (config.blocks.size() >= 2) u = block_named(g, blocks, config.blocks[1]);
    return lemma_product_check(g, t, u, mode, config.max_len);
  }
  if (c == "no-full-4cycle") return no_full_4cycle_check(g, mode, config.radius);
  if (c == "weak-malnormality") {
    const ComponentPartition blocks = hat_components(g);
    if (blocks.size() < 2) return weak_malnormality_witness(g, g.all(), mode, config.max_len);
    GeneratorSet v = config.blocks.empty() ? blocks.blocks[0] : block_named(g, blocks, config.blocks[0]);
    return weak_malnormality_witness(g, v, mode, config.max_len);
  }
  if (c == "systole") return systole_certificate(develop_ball(g, mode, config.radius), config.max_cycle_len + 1);
  if (c == "locally-6-large") return locally_6_large_check(develop_ball(g, mode, config.radius));
  throw InputError("unknown criterion '" + c + "'");
}

}  // namespace

int run_command(const RunConfiguration& config, const DefiningGraph& g, std::ostream& out) {
  if (config.oracle && !mode_applicable(g, *config.oracle)) {
    throw ModeError("oracle " + std::string(to_string(*config.oracle)) + " does not apply to this graph");
  }
  const OracleMode mode =
      config.oracle.value_or(mode_applicable(g, OracleMode::Raag) ? OracleMode::Raag : OracleMode::CoxeterShadow);

  if (config.command == "analyze") {
    ordered_json doc;
    doc["generators"] = g.names();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"m", e.m}});
    doc["edges"] = edges;
    const ComponentPartition blocks = hat_components(g);
    ordered_json bj = ordered_json::array();
    for (GeneratorSet b : blocks.blocks) bj.push_back(names_of(g, b));
    doc["hat_blocks"] = bj;
    const LocalReducibility lr = is_locally_reducible(g);
    doc["locally_reducible"] = lr.locally_reducible;
    if (lr.witness) doc["non_reducible_triangle"] = {g.name(lr.witness->a), g.name(lr.witness->b), g.name(lr.witness->c)};
    ordered_json dihedral = ordered_json::array();
    for (const DihedralEdge& e : maximal_dihedral_edges(g)) {
      dihedral.push_back({{"edge", {g.name(e.u), g.name(e.v)}},
                          {"m", e.m},
                          {"completion", names_of(g, e.completion)},
                          {"proper", e.proper_completion}});
    }
    doc["maximal_dihedral_edges"] = dihedral;
    ordered_json cliques = ordered_json::array();
    for (GeneratorSet c : finite_type_cliques(g, 3)) cliques.push_back(names_of(g, c));
    doc["finite_type_cliques"] = cliques;
    if (blocks.size() >= 2) {
      doc["fundamental_domain"] = domain_to_json(g, fundamental_domain(g));
    } else {
      doc["fundamental_domain"] = nullptr;
      doc["notes"] = {"the 2-labeled subgraph is connected, so the complex is a single vertex"};
    }
    if (config.dot_path) write_text(*config.dot_path, graph_to_dot(g));
    emit(doc, config, out);
    return 0;
  }
  if (config.command == "develop") {
    const DevelopedComplex x = develop_ball(g, mode, config.radius);
    ordered_json doc;
    doc["oracle"] = std::string(to_string(mode));
    doc["connected"] = connectivity_check(x);
    const ordered_json body = complex_to_json(x);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    if (config.dot_path) write_text(*config.dot_path, complex_to_dot(x));
    emit(doc, config, out);
    return 0;
  }
  if (config.command == "systole") {
    const DevelopedComplex x = develop_ball(g, mode, config.radius);
    CertificateReport report = systole_certificate(x, config.max_cycle_len + 1);
    report.parameters["oracle"] = std::string(to_string(mode));
    if (config.dot_path) write_text(*config.dot_path, complex_to_dot(x));
    emit(to_json(report), config, out);
    return exit_code(report.verdict);
  }
  if (config.command == "certify" || config.command == "witness") {
    RunConfiguration c = config;
    if (config.command == "witness") c.criterion = "weak-malnormality";
    CertificateReport report = certify(c, g, mode);
    emit(to_json(report), config, out);
    return exit_code(report.verdict);
  }
  if (config.command == "splittings") {
    ordered_json list = ordered_json::array();
    for (const Splitting& s : enumerate_splittings(g)) {
      list.push_back({{"gamma1", names_of(g, s.gamma1)}, {"gamma2", names_of(g, s.gamma2)}, {"core", names_of(g, s.core)}});
    }
    emit(ordered_json{{"splittings", list}}, config, out);
    return 0;
  }
  throw InputError("unknown command '" + config.command + "'");
}

}  // namespace artinlab
