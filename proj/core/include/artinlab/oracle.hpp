#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "artinlab/defining_graph.hpp"
#include "artinlab/word.hpp"

namespace artinlab {

/// Which word problem is being solved.
///   Raag          every edge labeled 2; exact in A_Gamma.
///   Dihedral      at most two generators; exact in A_Gamma (Garside form).
///   CoxeterShadow any graph; decides equality in the Coxeter quotient W_Gamma only.
enum class OracleMode { Raag, Dihedral, CoxeterShadow };

std::string_view to_string(OracleMode mode);
/// Accepts "raag", "dihedral", "coxeter-shadow". Throws InputError otherwise.
OracleMode parse_oracle_mode(std::string_view text);
bool mode_applicable(const DefiningGraph& g, OracleMode mode);

struct NormalForm {
  Word word;
  OracleMode mode;

  bool operator==(const NormalForm&) const = default;
};

/// Word-problem oracle bound to one graph and mode. Thread-safe; all queries are const.
class WordOracle {
 public:
  /// Throws ModeError when the mode does not apply to g.
  WordOracle(DefiningGraph g, OracleMode mode);
  ~WordOracle();
  WordOracle(const WordOracle&);
  WordOracle& operator=(const WordOracle&);
  WordOracle(WordOracle&&) noexcept;
  WordOracle& operator=(WordOracle&&) noexcept;

  const DefiningGraph& graph() const { return graph_; }
  OracleMode mode() const { return mode_; }
  /// False only for CoxeterShadow with a label outside {2,3,4,6,inf} (floating point, tol 1e-9).
  bool exact() const;

  NormalForm normal_form(const Word& w) const;
  /// normal_form(w).word
  Word reduce(const Word& w) const;
  bool equal(const Word& w1, const Word& w2) const;
  bool is_identity(const Word& w) const { return reduce(w).empty(); }

  /// Raag / CoxeterShadow; Dihedral only for t empty or all generators (ModeError otherwise).
  bool in_standard_parabolic(const Word& w, GeneratorSet t) const;
  /// Canonical representative of the coset w A_t (same mode restrictions).
  Word min_coset_rep(const Word& w, GeneratorSet t) const;
  /// w1 A_t1 and w2 A_t2 share an element.
  bool cosets_intersect(const Word& w1, GeneratorSet t1, const Word& w2, GeneratorSet t2) const;

  /// Normal forms of all elements of A_t of word length <= radius, by sphere then shortlex.
  std::vector<Word> ball(GeneratorSet t, std::size_t radius) const;

 private:
  struct Shadow;
  DefiningGraph graph_;
  OracleMode mode_;
  std::unique_ptr<Shadow> shadow_;
};

NormalForm normal_form(const DefiningGraph& g, OracleMode mode, const Word& w);
bool equal(const DefiningGraph& g, OracleMode mode, const Word& w1, const Word& w2);
bool in_standard_parabolic(const DefiningGraph& g, OracleMode mode, const Word& w, GeneratorSet t);
Word min_coset_rep(const DefiningGraph& g, OracleMode mode, const Word& w, GeneratorSet t);
bool cosets_intersect(const DefiningGraph& g, OracleMode mode, const Word& w1, GeneratorSet t1, const Word& w2,
                      GeneratorSet t2);

namespace rewriting {

/// Free reduction in a RAAG: cancels x ... x^-1 whenever everything between commutes with x.
Word raag_reduce(const DefiningGraph& g, const Word& w);
/// Shortlex-least word obtained from a reduced word by commuting adjacent 2-labeled letters.
Word raag_lex_normal_form(const DefiningGraph& g, const Word& reduced);
/// Left-greedy Delta normal form in the Artin group of I2(m) on generators a < b.
Word dihedral_normal_form(Generator a, Generator b, Label m, const Word& w);
/// Plain free reduction.
Word free_reduce(const Word& w);

}  // namespace rewriting

}  // namespace artinlab
