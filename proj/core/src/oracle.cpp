#include "artinlab/oracle.hpp"

#include <algorithm>
#include <unordered_set>
#include <variant>

#include "artinlab/errors.hpp"
#include "artinlab/reflection.hpp"

namespace artinlab {

std::string_view to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::Raag: return "raag";
    case OracleMode::Dihedral: return "dihedral";
    case OracleMode::CoxeterShadow: return "coxeter-shadow";
  }
  return "?";
}

OracleMode parse_oracle_mode(std::string_view text) {
  if (text == "raag") return OracleMode::Raag;
  if (text == "dihedral") return OracleMode::Dihedral;
  if (text == "coxeter-shadow") return OracleMode::CoxeterShadow;
  throw InputError("unknown oracle mode '" + std::string(text) + "'");
}

bool mode_applicable(const DefiningGraph& g, OracleMode mode) {
  switch (mode) {
    case OracleMode::Raag: {
      const auto edges = g.edges();
      return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.m == 2; });
    }
    case OracleMode::Dihedral: return g.size() <= 2;
    case OracleMode::CoxeterShadow: return true;
  }
  return false;
}

namespace rewriting {

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word raag_reduce(const DefiningGraph& g, const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w) {
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].gen == l.gen) {
        if (out[j].inverse != l.inverse) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!g.commute(out[j].gen, l.gen)) break;
    }
    if (!cancelled) out.push_back(l);
  }
  return Word(std::move(out));
}

Word raag_lex_normal_form(const DefiningGraph& g, const Word& reduced) {
  std::vector<Letter> rest = reduced.letters();
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // Among letters that commute with everything before them, take the least.
    std::size_t best = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (rest[i] >= rest[best]) continue;
      bool movable = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (!g.commute(rest[j].gen, rest[i].gen)) {
          movable = false;
          break;
        }
      }
      if (movable) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Word(std::move(out));
}

Word dihedral_normal_form(Generator a, Generator b, Label m, const Word& w) {
  // Delta^k s_1 ... s_r; a block is an alternating positive word given by its first
  // letter (0 = a, 1 = b) and its length in [1, m-1].
  struct Block {
    int first;
    Label len;
    int last() const { return first ^ static_cast<int>((len - 1) & 1u); }
  };
  const bool odd = (m % 2) == 1;
  long long k = 0;
  std::vector<Block> blocks;

  auto conjugate_all = [&] {
    if (!odd) return;
    for (Block& bl : blocks) bl.first ^= 1;
  };
  auto push_atom = [&](int x) {
    if (blocks.empty() || blocks.back().last() == x) {
      blocks.push_back({x, 1});
      return;
    }
    Block& last = blocks.back();
    ++last.len;
    if (last.len == m) {
      blocks.pop_back();
      ++k;
      conjugate_all();  // s Delta = Delta tau(s)
    }
  };

  for (Letter l : w) {
    const int x = l.gen == a ? 0 : 1;
    if (!l.inverse) {
      push_atom(x);
      continue;
    }
    // x^-1 = Delta^-1 c(x), c(x) alternating of length m-1 with c(x) x = Delta.
    --k;
    conjugate_all();
    int c = odd ? x : x ^ 1;
    for (Label i = 0; i + 1 < m; ++i, c ^= 1) push_atom(c);
  }

  std::vector<Letter> out;
  const Generator gens[2] = {a, b};
  auto emit_alternating = [&](int first, Label len, bool inverse) {
    std::vector<Letter> piece;
    int c = first;
    for (Label i = 0; i < len; ++i, c ^= 1) piece.push_back({gens[c], false});
    if (inverse) {
      std::reverse(piece.begin(), piece.end());
      for (Letter& l : piece) l.inverse = true;
    }
    out.insert(out.end(), piece.begin(), piece.end());
  };
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) emit_alternating(0, m, k < 0);
  for (const Block& bl : blocks) emit_alternating(bl.first, bl.len, false);
  return Word(std::move(out));
}

}  // namespace rewriting

struct WordOracle::Shadow {
  using Exact = ReflectionRepresentation<QuadInt>;
  using Float = ReflectionRepresentation<double>;
  std::variant<Exact, Float> rep;

  static std::variant<Exact, Float> make(const DefiningGraph& g) {
    for (Generator s = 0; s < g.size(); ++s) {
      for (Generator t = s + 1; t < g.size(); ++t) {
        if (!QuadInt::representable(g.label(s, t))) return Float(g);
      }
    }
    return Exact(g);
  }

  explicit Shadow(const DefiningGraph& g) : rep(make(g)) {}

  // Shortlex-least reduced word: repeatedly strip the least left descent.
  Word normal_form(const Word& w) const {
    return std::visit(
        [&](const auto& r) {
          auto m = r.of(w.inverse());
          std::vector<Letter> out;
          for (;;) {
            Generator s = 0;
            for (; s < r.dimension(); ++s) {
              if (r.negative_column(m, s)) break;
            }
            if (s == r.dimension()) break;
            out.push_back({s, false});
            r.multiply_right(m, s);
          }
          return Word(std::move(out));
        },
        rep);
  }

  // Minimal-length element of w W_t, as a (possibly unreduced) word.
  Word strip_right(const Word& w, GeneratorSet t) const {
    return std::visit(
        [&](const auto& r) {
          auto m = r.of(w);
          Word cur = w;
          for (;;) {
            bool found = false;
            for (Generator s : t) {
              if (r.negative_column(m, s)) {
                cur.push_back({s, false});
                r.multiply_right(m, s);
                found = true;
                break;
              }
            }
            if (!found) break;
          }
          return cur;
        },
        rep);
  }

  bool equal(const Word& x, const Word& y) const {
    return std::visit([&](const auto& r) { return r.equal(r.of(x), r.of(y)); }, rep);
  }

  bool exact() const { return std::holds_alternative<Exact>(rep); }
};

WordOracle::WordOracle(DefiningGraph g, OracleMode mode) : graph_(std::move(g)), mode_(mode) {
  if (!mode_applicable(graph_, mode_)) {
    throw ModeError("oracle mode '" + std::string(to_string(mode_)) + "' does not apply to this graph");
  }
  if (mode_ == OracleMode::CoxeterShadow) shadow_ = std::make_unique<Shadow>(graph_);
}

WordOracle::~WordOracle() = default;
WordOracle::WordOracle(WordOracle&&) noexcept = default;
WordOracle& WordOracle::operator=(WordOracle&&) noexcept = default;
WordOracle::WordOracle(const WordOracle& other)
    : graph_(other.graph_),
      mode_(other.mode_),
      shadow_(other.shadow_ ? std::make_unique<Shadow>(*other.shadow_) : nullptr) {}
WordOracle& WordOracle::operator=(const WordOracle& other) {
  if (this != &other) *this = WordOracle(other);
  return *this;
}

bool WordOracle::exact() const { return !shadow_ || shadow_->exact(); }

namespace {

void check_word(const DefiningGraph& g, const Word& w) {
  for (Letter l : w) {
    if (l.gen >= g.size()) throw InputError("word uses a generator outside the graph");
  }
}

void check_subset(const DefiningGraph& g, GeneratorSet t) {
  if (!t.subset_of(g.all())) throw InputError("subset is not contained in the graph");
}

}  // namespace

NormalForm WordOracle::normal_form(const Word& w) const {
  check_word(graph_, w);
  switch (mode_) {
    case OracleMode::Raag:
      return {rewriting::raag_lex_normal_form(graph_, rewriting::raag_reduce(graph_, w)), mode_};
    case OracleMode::Dihedral:
      if (graph_.size() == 2 && graph_.adjacent(0, 1)) {
        return {rewriting::dihedral_normal_form(0, 1, graph_.label(0, 1), w), mode_};
      }
      return {rewriting::free_reduce(w), mode_};
    case OracleMode::CoxeterShadow: return {shadow_->normal_form(w), mode_};
  }
  return {w, mode_};
}

Word WordOracle::reduce(const Word& w) const { return normal_form(w).word; }

bool WordOracle::equal(const Word& w1, const Word& w2) const {
  if (mode_ == OracleMode::CoxeterShadow) {
    check_word(graph_, w1);
    check_word(graph_, w2);
    return shadow_->equal(w1, w2);
  }
  return reduce(w1) == reduce(w2);
}

bool WordOracle::in_standard_parabolic(const Word& w, GeneratorSet t) const {
  check_subset(graph_, t);
  if (mode_ == OracleMode::Dihedral) {
    if (t == graph_.all()) return true;
    if (t.empty()) return is_identity(w);
    throw ModeError("dihedral oracle decides parabolic membership only for the empty or full subset");
  }
  // RAAG and Coxeter normal forms have minimal support.
  return reduce(w).support().subset_of(t);
}

Word WordOracle::min_coset_rep(const Word& w, GeneratorSet t) const {
  check_subset(graph_, t);
  switch (mode_) {
    case OracleMode::Dihedral:
      if (t.empty()) return reduce(w);
      if (t == graph_.all()) return {};
      throw ModeError("dihedral oracle has coset representatives only for the empty or full subset");
    case OracleMode::CoxeterShadow: return reduce(shadow_->strip_right(w, t));
    case OracleMode::Raag: break;
  }
  std::vector<Letter> r = rewriting::raag_reduce(graph_, w).letters();
  for (;;) {
    // Rightmost letter of t that commutes past everything to its right.
    std::size_t found = r.size();
    for (std::size_t i = r.size(); i-- > 0;) {
      if (!t.contains(r[i].gen)) continue;
      bool free = true;
      for (std::size_t j = i + 1; j < r.size(); ++j) {
        if (!graph_.commute(r[i].gen, r[j].gen)) {
          free = false;
          break;
        }
      }
      if (free) {
        found = i;
        break;
      }
    }
    if (found == r.size()) break;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(found));
  }
  return rewriting::raag_lex_normal_form(graph_, Word(std::move(r)));
}

bool WordOracle::cosets_intersect(const Word& w1, GeneratorSet t1, const Word& w2, GeneratorSet t2) const {
  // w1 A_t1 meets w2 A_t2  <=>  w1^-1 w2 in A_t1 A_t2  <=>  the A_t2-minimal rep of w1^-1 w2 lies in A_t1.
  return in_standard_parabolic(min_coset_rep(w1.inverse() * w2, t2), t1);
}

std::vector<Word> WordOracle::ball(GeneratorSet t, std::size_t radius) const {
  check_subset(graph_, t);
  std::vector<Word> out{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> sphere{Word{}};
  const bool involutions = mode_ == OracleMode::CoxeterShadow;
  for (std::size_t r = 0; r < radius && !sphere.empty(); ++r) {
    std::vector<Word> next;
    for (const Word& w : sphere) {
      for (Generator x : t) {
        for (bool inv : {false, true}) {
          if (inv && involutions) continue;
          Word v = reduce(w * Word::generator(x, inv));
          if (seen.insert(v).second) next.push_back(std::move(v));
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    sphere = std::move(next);
  }
  return out;
}

NormalForm normal_form(const DefiningGraph& g, OracleMode mode, const Word& w) {
  return WordOracle(g, mode).normal_form(w);
}

bool equal(const DefiningGraph& g, OracleMode mode, const Word& w1, const Word& w2) {
  return WordOracle(g, mode).equal(w1, w2);
}

bool in_standard_parabolic(const DefiningGraph& g, OracleMode mode, const Word& w, GeneratorSet t) {
  return WordOracle(g, mode).in_standard_parabolic(w, t);
}

Word min_coset_rep(const DefiningGraph& g, OracleMode mode, const Word& w, GeneratorSet t) {
  return WordOracle(g, mode).min_coset_rep(w, t);
}

bool cosets_intersect(const DefiningGraph& g, OracleMode mode, const Word& w1, GeneratorSet t1, const Word& w2,
                      GeneratorSet t2) {
  return WordOracle(g, mode).cosets_intersect(w1, t1, w2, t2);
}

}  // namespace artinlab
