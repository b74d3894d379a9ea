#include <doctest.h>

#include <random>

#include "random_words.hpp"
#include "surfgrp/word.hpp"

using namespace surfgrp;
using surfgrp::testing::random_word;

namespace {

// Reference reducer: scan for adjacent inverse pairs until none remain.
// Deliberately different from the library's single-pass stack reducer.
Word scan_reduce(Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
      if (w.letters[i].index == w.letters[i + 1].index &&
          w.letters[i].sign == -w.letters[i + 1].sign) {
        w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("parse and render") {
  SurfaceContext ctx(2);
  CHECK(render_word(parse_word("x1 X2 x3", ctx)) == "x1 X2 x3");
  CHECK(render_word(parse_word("[x1,x2]", ctx)) == "X1 X2 x1 x2");
  CHECK(render_word(parse_word("(x1 x2)^2", ctx)) == "x1 x2 x1 x2");
  CHECK(render_word(parse_word("x1^-3", ctx)) == "X1 X1 X1");
  CHECK(render_word(parse_word("[x1,x2]^-1", ctx)) == "X2 X1 x2 x1");
  CHECK(parse_word("", ctx).empty());
  CHECK(parse_word("  ", ctx).empty());

  CHECK_THROWS_AS(parse_word("x5", ctx), RangeError);
  CHECK_THROWS_AS(parse_word("x0", ctx), RangeError);
  CHECK_THROWS_AS(parse_word("[x1 x2]", ctx), ParseError);
  CHECK_THROWS_AS(parse_word("(x1", ctx), ParseError);
  CHECK_THROWS_AS(parse_word("y1", ctx), ParseError);
}

TEST_CASE("parse round trip on random words") {
  std::mt19937 rng(11);
  for (int g : {2, 3, 5}) {
    SurfaceContext ctx(g);
    for (int t = 0; t < 200; ++t) {
      Word w = random_word(rng, g, 30);
      CHECK(parse_word(render_word(w), ctx) == w);
    }
  }
}

TEST_CASE("free reduction") {
  SurfaceContext ctx(2);
  CHECK(free_reduce(parse_word("x1 X1", ctx)).empty());
  CHECK(render_word(free_reduce(parse_word("x1 x2 X2 X1 x3", ctx))) == "x3");
  CHECK(free_reduce(commutator_word(generator_word(1), generator_word(1)))
            .empty());

  std::mt19937 rng(12);
  for (int t = 0; t < 500; ++t) {
    Word w = random_word(rng, 2, 24);
    Word r = free_reduce(w);
    CHECK(r == scan_reduce(w));
    CHECK(free_reduce(r) == r);  // idempotent
    CHECK(free_reduce(concat(w, invert_word(w))).empty());
  }
}

TEST_CASE("word constructors") {
  SurfaceContext ctx(3);
  CHECK(invert_word(parse_word("x1 X2", ctx)) == parse_word("x2 X1", ctx));
  CHECK(commutator_word(generator_word(1), generator_word(2)) ==
        parse_word("X1 X2 x1 x2", ctx));
  CHECK(power_word(parse_word("x1 x2", ctx), -2) ==
        parse_word("X2 X1 X2 X1", ctx));
  CHECK(power_word(parse_word("x1", ctx), 0).empty());
  CHECK(ctx.relator() == parse_word("[x1,x2][x3,x4][x5,x6]", ctx));
}

TEST_CASE("substitution") {
  SurfaceContext ctx(2);
  EndomorphismTable t;
  t.images[2] = parse_word("X1 x2", ctx);
  CHECK(substitute(parse_word("x1 x2", ctx), t) == parse_word("x1 X1 x2", ctx));
  CHECK(substitute(parse_word("X2", ctx), t) == parse_word("X2 x1", ctx));

  // Substitution is a homomorphism: it commutes with concat and invert.
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(rng, 2, 12);
    Word v = random_word(rng, 2, 12);
    CHECK(substitute(concat(u, v), t) ==
          concat(substitute(u, t), substitute(v, t)));
    CHECK(free_reduce(substitute(invert_word(u), t)) ==
          free_reduce(invert_word(substitute(u, t))));
  }
}
