#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "random_words.hpp"
#include "surfgrp/quotient.hpp"

using namespace surfgrp;
using surfgrp::testing::random_word;

TEST_CASE("projection to the mod-K quotient") {
  SurfaceContext ctx(3);
  PairIndexSet ps(3);
  Nil2Element a = nil2_identity(ctx);
  a.m[ps.index_of(1, 2)] = 2;
  a.m[ps.index_of(3, 4)] = 2;
  a.m[ps.index_of(1, 3)] = 5;  // non-related, dies
  ModKElement p = project_to_modK(a);
  CHECK(p.mk == 1);  // (2 + 2) mod 3
  CHECK(p.n == a.n);

  CHECK(intersection_pairing(a) == 1);
  a.n[0] = 1;
  CHECK_THROWS_AS(intersection_pairing(a), std::invalid_argument);
}

TEST_CASE("mod-K law commutes with projection") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int g : {2, 3, 5}) {
    SurfaceContext ctx(g);
    PairIndexSet ps(g);
    for (int t = 0; t < 300; ++t) {
      Nil2Element a = nil2_identity(ctx), b = nil2_identity(ctx);
      for (auto& v : a.n) v = d(rng);
      for (auto& v : a.m) v = d(rng);
      for (auto& v : b.n) v = d(rng);
      for (auto& v : b.m) v = d(rng);
      CHECK(project_to_modK(multiply(a, b)) ==
            multiply_modK(project_to_modK(a), project_to_modK(b)));
      CHECK(project_to_modK(inverse(a)) == inverse_modK(project_to_modK(a)));
      CHECK(project_to_modK(power(a, 7)) == power_modK(project_to_modK(a), 7));
    }
  }
}

TEST_CASE("quotient spec orders") {
  // Odd e = g: order g^{2g+1}. Even e = g: half of that. e = 2g: (2g)^{2g} g.
  CHECK(QuotientSpec(3, 3).order() == Int(2187));  // 3^7
  CHECK(QuotientSpec(2, 2).order() == Int(16));    // 2^5 / 2
  CHECK(QuotientSpec(2, 4).order() == Int(512));   // 4^4 * 2
  CHECK(QuotientSpec(3, 6).order() == Int(139968));
  CHECK(QuotientSpec(4, 4).order() == Int(131072));  // 4^9 / 2
  CHECK(QuotientSpec(5, 5).order() == Int(48828125));

  for (int g = 2; g <= 8; ++g) {
    Int eg = 1;
    for (int i = 0; i < 2 * g + 1; ++i) eg *= g;
    CHECK(QuotientSpec(g, g).order() == (g % 2 ? eg : eg / 2));
    Int e2g = g;
    for (int i = 0; i < 2 * g; ++i) e2g *= 2 * g;
    CHECK(QuotientSpec(g, 2 * g).order() == e2g);
  }
}

TEST_CASE("enumeration matches the closed-form order") {
  for (auto [g, e] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
    QuotientSpec spec(g, e);
    auto elems = enumerate_quotient(spec);
    CHECK(Int(elems.size()) == spec.order());
    std::set<uint64_t> codes;
    for (const auto& q : elems) codes.insert(encode(q));
    CHECK(codes.size() == elems.size());
    CHECK(*codes.begin() == 0);
  }
  CHECK_THROWS(enumerate_quotient(QuotientSpec(5, 10), 1000));
}

TEST_CASE("quotient group axioms, exhaustive at g=2 e=2") {
  QuotientSpec spec(2, 2);
  auto elems = enumerate_quotient(spec);
  QuotientElement id = quotient_identity(spec);
  for (const auto& a : elems) {
    CHECK(multiply(a, id) == a);
    CHECK(multiply(a, inverse(a)) == id);
    for (const auto& b : elems) {
      for (const auto& c : elems)
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("quotient multiplication lifts coherently") {
  // Multiplying in the quotient agrees with multiplying canonical lifts
  // upstairs and projecting back down.
  std::mt19937 rng(32);
  for (auto [g, e] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {3, 6}}) {
    QuotientSpec spec(g, e);
    std::uniform_int_distribution<uint64_t> d(
        0, static_cast<uint64_t>(spec.order()) - 1);
    for (int t = 0; t < 400; ++t) {
      QuotientElement a = decode(d(rng), spec);
      QuotientElement b = decode(d(rng), spec);
      CHECK(project_to_quotient(multiply(lift_to_nil2(a), lift_to_nil2(b)),
                                spec) == multiply(a, b));
    }
  }
}

TEST_CASE("encode and decode are inverse") {
  QuotientSpec spec(3, 3);
  for (uint64_t i = 0; i < 2187; ++i) CHECK(encode(decode(i, spec)) == i);
  CHECK(decode(0, spec).is_identity());
}

TEST_CASE("membership") {
  SurfaceContext ctx(2);
  QuotientSpec s22(2, 2), s24(2, 4);
  // x1^2 has trivial image mod pi^2 K.
  CHECK(is_member(parse_word("x1^2", ctx), s22, ctx));
  CHECK_FALSE(is_member(parse_word("x1", ctx), s22, ctx));
  // [x1,x2] lies in pi^2 K (geometric case) but not in pi^4 K.
  CHECK(is_member(parse_word("[x1,x2]", ctx), s22, ctx));
  CHECK_FALSE(is_member(parse_word("[x1,x2]", ctx), s24, ctx));
  CHECK(is_member(parse_word("[x1,x2]^2", ctx), s24, ctx));
  CHECK(is_member(ctx.relator(), s24, ctx));
}

TEST_CASE("exponent of the e = g quotient divides g for odd g") {
  QuotientSpec spec(3, 3);
  for (const auto& q : enumerate_quotient(spec)) {
    QuotientElement acc = quotient_identity(spec);
    for (int i = 0; i < 3; ++i) acc = multiply(acc, q);
    CHECK(acc.is_identity());
  }
}

TEST_CASE("span of e-th powers") {
  // A small catalog of honest elements already spans the same subgroup
  // as all e-th powers, matching the closed form.
  for (int g : {2, 3, 4}) {
    SurfaceContext ctx(g);
    std::vector<Word> catalog;
    for (int i = 1; i <= 2 * g; ++i) catalog.push_back(generator_word(i));
    catalog.push_back(parse_word("x1 x2", ctx));
    for (long long e : {(long long)g, (long long)2 * g}) {
      SpanDescription got = gpower_span(ctx, e, catalog);
      SpanDescription want = general_power_span(ctx, e);
      CHECK(got == want);
      // n-lattice is e * Z^{2g}
      CHECK(got.n_lattice.size() == (std::size_t)(2 * g));
      for (std::size_t r = 0; r < got.n_lattice.size(); ++r)
        for (std::size_t c = 0; c < got.n_lattice[r].size(); ++c)
          CHECK(got.n_lattice[r][c] == (r == c ? Int(e) : Int(0)));
    }
  }
  // Spot values of the mk generator: gcd(g, e, e(e-1)/2).
  CHECK(general_power_span(SurfaceContext(2), 2).mk_generator == 1);
  CHECK(general_power_span(SurfaceContext(2), 4).mk_generator == 2);
  CHECK(general_power_span(SurfaceContext(3), 3).mk_generator == 3);
  CHECK(general_power_span(SurfaceContext(3), 6).mk_generator == 3);
  CHECK(general_power_span(SurfaceContext(4), 8).mk_generator == 4);
  CHECK(general_power_span(SurfaceContext(5), 5).mk_generator == 5);
}

TEST_CASE("hermite normal form") {
  IntMatrix m = {{Int(2), Int(4)}, {Int(4), Int(2)}};
  IntMatrix h = hermite_normal_form(m);
  CHECK(h == IntMatrix{{Int(2), Int(4)}, {Int(0), Int(6)}});
  IntMatrix z = {{Int(0), Int(0)}, {Int(3), Int(6)}};
  CHECK(hermite_normal_form(z) == IntMatrix{{Int(3), Int(6)}});
}
