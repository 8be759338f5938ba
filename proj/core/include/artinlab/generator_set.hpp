#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace artinlab {

/// Index of a generator in its owning graph; the index order is the declaration order.
using Generator = std::uint32_t;

inline constexpr std::size_t kMaxGenerators = 64;

/// A subset of the generators of one graph. Iteration visits members in
/// declaration order.
class GeneratorSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Generator;
    using difference_type = std::ptrdiff_t;
    using pointer = const Generator*;
    using reference = Generator;

    Iterator() = default;
    explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    Generator operator*() const { return static_cast<Generator>(std::countr_zero(rest_)); }
    Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> members) {
    for (Generator g : members) insert(g);
  }

  static GeneratorSet first_n(std::size_t n) {
    return GeneratorSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static GeneratorSet single(Generator g) { return GeneratorSet(std::uint64_t{1} << g); }

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(Generator g) const { return g < 64 && ((bits_ >> g) & 1u); }
  void insert(Generator g) { bits_ |= std::uint64_t{1} << g; }
  void erase(Generator g) { bits_ &= ~(std::uint64_t{1} << g); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  Generator front() const { return static_cast<Generator>(std::countr_zero(bits_)); }

  bool subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(GeneratorSet other) const { return (bits_ & other.bits_) != 0; }

  friend GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & ~b.bits_); }
  GeneratorSet& operator|=(GeneratorSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  Iterator begin() const { return Iterator(bits_); }
  Iterator end() const { return Iterator(0); }

  std::vector<Generator> to_vector() const { return {begin(), end()}; }

  bool operator==(const GeneratorSet&) const = default;

  /// Lexicographic on the member lists in declaration order ({a} < {a,b} < {b}).
  friend bool lex_less(GeneratorSet a, GeneratorSet b) {
    while (!a.empty() && !b.empty()) {
      Generator x = a.front(), y = b.front();
      if (x != y) return x < y;
      a.erase(x);
      b.erase(y);
    }
    return a.empty() && !b.empty();
  }

 private:
  std::uint64_t bits_ = 0;
};

struct GeneratorSetHash {
  std::size_t operator()(GeneratorSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace artinlab
