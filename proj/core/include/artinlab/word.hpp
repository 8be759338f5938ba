#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "artinlab/defining_graph.hpp"

namespace artinlab {

struct Letter {
  Generator gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  /// Shortlex key: a < a^-1 < b < b^-1 < ... in declaration order.
  unsigned key() const { return 2 * gen + (inverse ? 1u : 0u); }

  bool operator==(const Letter&) const = default;
  friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.key() <=> b.key(); }
};

/// A sequence of signed generators. Construction never reduces; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word generator(Generator g, bool inverse = false) { return Word({Letter{g, inverse}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word inverse() const;
  GeneratorSet support() const;

  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;
  /// Shortlex: shorter first, then lexicographic on Letter::key.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Parses "a b- c" (a trailing '-' marks an inverse). "e" or an empty string is the identity
/// unless the graph has a generator named "e".
Word parse_word(const DefiningGraph& g, std::string_view text);

/// Inverse of parse_word; the identity prints as "e".
std::string format_word(const DefiningGraph& g, const Word& w);

}  // namespace artinlab
