#pragma once

// Brute-force reference implementations used only by the tests. They share the Word and
// DefiningGraph types with the library but none of its algorithms.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "artinlab/defining_graph.hpp"
#include "artinlab/word.hpp"

namespace oracle_support {

/// Letter key 2*gen + inverse; matches the shortlex order of the library.
using RawWord = std::vector<std::uint8_t>;

RawWord to_raw(const artinlab::Word& w);
artinlab::Word from_raw(const RawWord& w);

/// Every word of length <= max_len over the first n generators, shortest first.
std::vector<artinlab::Word> all_words(std::size_t n, std::size_t max_len, bool with_inverses = true);

/// Closure of w under commutations of 2-labeled pairs and deletion of x x^-1; returns the
/// shortlex-least word of minimal length in it.
artinlab::Word raag_bfs_normal_form(const artinlab::DefiningGraph& g, const artinlab::Word& w);

/// Closure under braid moves and deletion of s s (inverses read as generators); returns
/// the shortlex-least word of minimal length.
artinlab::Word coxeter_bfs_normal_form(const artinlab::DefiningGraph& g, const artinlab::Word& w);

/// Equivalence classes of freely reduced words of length <= max_len in the Artin group of
/// I2(m) on generators 0 and 1, generated by inserting cyclic conjugates of the relator
/// (or its inverse) at any position and freely reducing, staying within the length bound.
class DihedralClasses {
 public:
  DihedralClasses(unsigned m, std::size_t max_len);
  /// Class id of the free reduction of w; w must reduce to length <= max_len.
  std::size_t class_of(const artinlab::Word& w) const;
  std::size_t word_count() const { return parent_.size(); }

 private:
  std::size_t find(std::size_t i) const;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  mutable std::vector<std::size_t> parent_;
};

/// Free reduction by a stack.
RawWord free_reduce(const RawWord& w);

}  // namespace oracle_support
