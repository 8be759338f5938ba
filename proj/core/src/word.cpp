#include "artinlab/word.hpp"

#include <algorithm>

#include "artinlab/errors.hpp"

namespace artinlab {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

GeneratorSet Word::support() const {
  GeneratorSet s;
  for (Letter l : letters_) s.insert(l.gen);
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l.key() + 1;
    h *= 1099511628211ull;
  }
  return h;
}

Word parse_word(const DefiningGraph& g, std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n') ++j;
    if (j == i) break;
    std::string_view token = text.substr(i, j - i);
    i = j;
    if (token == "e" && !g.find("e")) continue;
    bool inverse = false;
    if (token.size() > 1 && token.back() == '-') {
      inverse = true;
      token.remove_suffix(1);
    }
    out.push_back({g.index_of(token), inverse});
  }
  return out;
}

std::string format_word(const DefiningGraph& g, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += g.name(l.gen);
    if (l.inverse) out += '-';
  }
  return out;
}

}  // namespace artinlab
