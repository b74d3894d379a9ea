#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfgrp {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator x_index (sign = +1) or its inverse (sign = -1).
// Indices are 1-based: x_1 .. x_{2g}.
struct Letter {
  int index;
  int sign;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the free group on x_1 .. x_{2g}. The empty word is the
// identity. Words are not reduced automatically.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
};

// Genus-g surface. Generators x_1 .. x_{2g}, defining relation
// prod_{i=1}^{g} [x_{2i-1}, x_{2i}].
struct SurfaceContext {
  int genus;

  explicit SurfaceContext(int g) : genus(g) {
    if (g < 2) throw RangeError("genus must be at least 2");
  }

  int generator_count() const { return 2 * genus; }
  Word relator() const;
};

// Generator -> word substitution table. Generators absent from the map
// are fixed. Determines an endomorphism of the free group.
struct EndomorphismTable {
  std::map<int, Word> images;

  // nullptr when the generator is fixed.
  const Word* image_of(int index) const {
    auto it = images.find(index);
    return it == images.end() ? nullptr : &it->second;
  }
};

Word parse_word(std::string_view text, const SurfaceContext& ctx);
std::string render_word(const Word& w);

Word free_reduce(const Word& w);
Word invert_word(const Word& w);
Word concat(const Word& u, const Word& v);
Word commutator_word(const Word& u, const Word& v);
Word power_word(const Word& w, long long k);
Word substitute(const Word& w, const EndomorphismTable& t);

inline Word generator_word(int index, int sign = 1) {
  return Word({Letter{index, sign}});
}

}  // namespace surfgrp
