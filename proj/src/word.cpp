#include "surfgrp/word.hpp"

#include <cctype>
#include <sstream>

namespace surfgrp {

Word SurfaceContext::relator() const {
  Word r;
  for (int h = 1; h <= genus; ++h) {
    Word c = commutator_word(generator_word(2 * h - 1), generator_word(2 * h));
    r = concat(r, c);
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SurfaceContext& ctx)
      : s_(text), ctx_(ctx) {}

  Word parse_top() {
    Word w = parse_word();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("unexpected character '" + std::string(1, s_[pos_]) +
                       "' at position " + std::to_string(pos_));
    return w;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool at_terminator() {
    skip_ws();
    if (pos_ >= s_.size()) return true;
    char c = s_[pos_];
    return c == ',' || c == ']' || c == ')';
  }

  Word parse_word() {
    Word w;
    while (!at_terminator()) w = concat(w, parse_factor());
    return w;
  }

  Word parse_factor() {
    Word atom = parse_atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      long long k = parse_integer();
      return power_word(atom, k);
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input");
    char c = s_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      long long idx = parse_unsigned();
      if (idx < 1 || idx > ctx_.generator_count())
        throw RangeError("generator index " + std::to_string(idx) +
                         " out of range 1.." +
                         std::to_string(ctx_.generator_count()));
      return generator_word(static_cast<int>(idx), c == 'x' ? 1 : -1);
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return commutator_word(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      expect(')');
      return w;
    }
    throw ParseError("unexpected character '" + std::string(1, c) +
                     "' at position " + std::to_string(pos_));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos_));
    ++pos_;
  }

  long long parse_unsigned() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a number at position " + std::to_string(pos_));
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("number too large");
      ++pos_;
    }
    return v;
  }

  long long parse_integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    long long v = parse_unsigned();
    return neg ? -v : v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const SurfaceContext& ctx_;
};

}  // namespace

Word parse_word(std::string_view text, const SurfaceContext& ctx) {
  return Parser(text, ctx).parse_top();
}

std::string render_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) os << ' ';
    os << (l.sign > 0 ? 'x' : 'X') << l.index;
    first = false;
  }
  return os.str();
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().index == l.index &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(Letter{it->index, -it->sign});
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.letters.size() + v.letters.size());
  out.insert(out.end(), u.letters.begin(), u.letters.end());
  out.insert(out.end(), v.letters.begin(), v.letters.end());
  return Word(std::move(out));
}

Word commutator_word(const Word& u, const Word& v) {
  return concat(concat(invert_word(u), invert_word(v)), concat(u, v));
}

Word power_word(const Word& w, long long k) {
  const Word base = k < 0 ? invert_word(w) : w;
  long long reps = k < 0 ? -k : k;
  Word out;
  out.letters.reserve(static_cast<std::size_t>(reps) * w.letters.size());
  for (long long r = 0; r < reps; ++r) out = concat(out, base);
  return out;
}

Word substitute(const Word& w, const EndomorphismTable& t) {
  Word out;
  for (const Letter& l : w.letters) {
    const Word* img = t.image_of(l.index);
    if (img == nullptr) {
      out.letters.push_back(l);
    } else if (l.sign > 0) {
      out = concat(out, *img);
    } else {
      out = concat(out, invert_word(*img));
    }
  }
  return out;
}

}  // namespace surfgrp
