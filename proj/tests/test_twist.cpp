#include <doctest.h>

#include <random>

#include "random_words.hpp"
#include "surfgrp/twist.hpp"

using namespace surfgrp;
using surfgrp::testing::random_word;

TEST_CASE("twist names") {
  SurfaceContext ctx(2);
  CHECK(parse_twist_name("t3", ctx) ==
        TwistName{TwistName::Kind::tau, 3});
  CHECK(parse_twist_name("s2", ctx) ==
        TwistName{TwistName::Kind::sigma, 2});
  CHECK(to_string(parse_twist_name("t5", ctx)) == "t5");
  CHECK_THROWS_AS(parse_twist_name("t6", ctx), RangeError);
  CHECK_THROWS_AS(parse_twist_name("s3", ctx), RangeError);
  CHECK_THROWS_AS(parse_twist_name("x1", ctx), RangeError);
  CHECK(all_twists(ctx).size() == 7);        // 2g+1 taus + g sigmas
  CHECK(all_twists(SurfaceContext(4)).size() == 13);
}

TEST_CASE("twist tables") {
  SurfaceContext ctx(2);

  // t1: only x2 moves, to X1 x2.
  EndomorphismTable t1 = twist_table({TwistName::Kind::tau, 1}, ctx);
  CHECK(t1.images.size() == 1);
  CHECK(*t1.image_of(2) == parse_word("X1 x2", ctx));

  // t2 (= tau_{2h} at h=1): x1 -> x2 x1.
  EndomorphismTable t2 = twist_table({TwistName::Kind::tau, 2}, ctx);
  CHECK(t2.images.size() == 1);
  CHECK(*t2.image_of(1) == parse_word("x2 x1", ctx));

  // t5 (= tau_{2g+1}): x4 -> X3 x4.
  EndomorphismTable t5 = twist_table({TwistName::Kind::tau, 5}, ctx);
  CHECK(t5.images.size() == 1);
  CHECK(*t5.image_of(4) == parse_word("X3 x4", ctx));

  // s2: x4 -> X3 x4 (sigma_i twists around x_{2i-1}).
  EndomorphismTable s2 = twist_table({TwistName::Kind::sigma, 2}, ctx);
  CHECK(s2.images.size() == 1);
  CHECK(*s2.image_of(4) == parse_word("X3 x4", ctx));

  // t3 (odd interior line) moves x2, x3, x4 via gamma_3.
  EndomorphismTable t3 = twist_table({TwistName::Kind::tau, 3}, ctx);
  CHECK(t3.images.size() == 3);
  Word g3 = gamma_word(3, ctx);
  CHECK(*t3.image_of(2) == free_reduce(concat(generator_word(2), g3)));
  CHECK(*t3.image_of(3) ==
        free_reduce(concat(concat(invert_word(g3), generator_word(3)), g3)));
  CHECK(*t3.image_of(4) ==
        free_reduce(concat(invert_word(g3), generator_word(4))));
}

TEST_CASE("gamma words") {
  SurfaceContext ctx(3);
  CHECK(gamma_word(1, ctx) == parse_word("x1", ctx));
  CHECK(gamma_word(2, ctx) == parse_word("x2", ctx));
  CHECK(gamma_word(4, ctx) == parse_word("x4", ctx));
  CHECK(free_reduce(gamma_word(3, ctx)) ==
        free_reduce(parse_word("x3 [x1,x2]^-1 X1", ctx)));
  CHECK(free_reduce(gamma_word(7, ctx)) ==
        free_reduce(parse_word("[x5,x6]^-1 X5", ctx)));
}

TEST_CASE("all standard twists descend to the quotient") {
  for (int g = 2; g <= 6; ++g) {
    SurfaceContext ctx(g);
    for (const TwistName& name : all_twists(ctx))
      CHECK(is_well_defined(twist_table(name, ctx), ctx));
  }
  // Negative control: x1 -> x1^2 is not even a homomorphism candidate
  // that fixes the relation class.
  SurfaceContext ctx(2);
  EndomorphismTable bad;
  bad.images[1] = parse_word("x1 x1", ctx);
  CHECK_FALSE(is_well_defined(bad, ctx));
}

TEST_CASE("induced action agrees with substitution on words") {
  std::mt19937 rng(41);
  for (int g : {2, 3}) {
    SurfaceContext ctx(g);
    for (const TwistName& name : all_twists(ctx)) {
      EndomorphismTable t = twist_table(name, ctx);
      for (int trial = 0; trial < 40; ++trial) {
        Word w = random_word(rng, g, 14);
        CHECK(induced_nil2(t, evaluate(w, ctx), ctx) ==
              evaluate(substitute(w, t), ctx));
      }
    }
  }
}

TEST_CASE("induced action is an automorphism of the lattice part") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> d(-6, 6);
  SurfaceContext ctx(2);
  for (const TwistName& name : all_twists(ctx)) {
    EndomorphismTable t = twist_table(name, ctx);
    for (int trial = 0; trial < 60; ++trial) {
      Nil2Element a = nil2_identity(ctx), b = nil2_identity(ctx);
      for (auto& v : a.n) v = d(rng);
      for (auto& v : a.m) v = d(rng);
      for (auto& v : b.n) v = d(rng);
      for (auto& v : b.m) v = d(rng);
      CHECK(induced_nil2(t, multiply(a, b), ctx) ==
            multiply(induced_nil2(t, a, ctx), induced_nil2(t, b, ctx)));
    }
  }
}

TEST_CASE("twist difference is linear and lands where expected") {
  SurfaceContext ctx(2);
  PairIndexSet ps(2);

  // t1 difference on the basis commutator at (1,2) is zero: t1 fixes
  // [x1,x2] up to pi^[3] only through x2 -> X1 x2, and
  // [x1, X1 x2] = [x1,x2] in the class-2 quotient.
  EndomorphismTable t1 = twist_table({TwistName::Kind::tau, 1}, ctx);
  CommutatorVector e12(ps.size(), 0);
  e12[ps.index_of(1, 2)] = 1;
  CHECK(twist_difference(t1, e12, ctx) == CommutatorVector(ps.size(), 0));

  // t1 difference on (2,4): [X1 x2, x4] - [x2,x4] = -[x1,x4].
  CommutatorVector e24(ps.size(), 0);
  e24[ps.index_of(2, 4)] = 1;
  CommutatorVector d24 = twist_difference(t1, e24, ctx);
  CHECK(d24[ps.index_of(1, 4)] == -1);
  Int nonzero = 0;
  for (const Int& v : d24) nonzero += (v != 0);
  CHECK(nonzero == 1);

  // Matrix columns match the vector operator, and the operator is linear.
  IntMatrix m = twist_difference_matrix(t1, ctx);
  for (int k = 0; k < ps.size(); ++k) {
    CommutatorVector ek(ps.size(), 0);
    ek[k] = 1;
    CommutatorVector col = twist_difference(t1, ek, ctx);
    for (int r = 0; r < ps.size(); ++r) CHECK(m[r][k] == col[r]);
  }
  CommutatorVector z(ps.size(), 0);
  z[ps.index_of(1, 3)] = 3;
  z[ps.index_of(2, 4)] = -2;
  CommutatorVector dz = twist_difference(t1, z, ctx);
  for (int r = 0; r < ps.size(); ++r) {
    Int want = 0;
    for (int k = 0; k < ps.size(); ++k) want += m[r][k] * z[k];
    CHECK(dz[r] == want);
  }
}

TEST_CASE("five-term identity for the odd interior twist") {
  // tau_3 sends [x2, x4] at g = 3 to a product of exactly five basis
  // commutators with unit coefficients.
  SurfaceContext ctx(3);
  PairIndexSet ps(3);
  EndomorphismTable t3 = twist_table({TwistName::Kind::tau, 3}, ctx);
  CommutatorVector z(ps.size(), 0);
  z[ps.index_of(2, 4)] = 1;
  CommutatorVector img = twist_difference(t3, z, ctx);
  for (int k = 0; k < ps.size(); ++k) img[k] += z[k];  // image = z + diff
  CHECK(img[ps.index_of(1, 2)] == -1);
  CHECK(img[ps.index_of(1, 4)] == -1);
  CHECK(img[ps.index_of(2, 3)] == -1);
  CHECK(img[ps.index_of(2, 4)] == 1);
  CHECK(img[ps.index_of(3, 4)] == 1);
  Int nonzero = 0;
  for (const Int& v : img) nonzero += (v != 0);
  CHECK(nonzero == 5);
}

TEST_CASE("induced permutations of the finite quotients") {
  for (auto [g, e] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 3}}) {
    SurfaceContext ctx(g);
    QuotientSpec spec(g, e);
    const uint64_t order = static_cast<uint64_t>(spec.order());
    for (const TwistName& name : all_twists(ctx)) {
      QuotientPermutation p =
          induced_quotient_permutation(twist_table(name, ctx), spec);
      CHECK(p.bijective);
      CHECK(p.map.size() == order);
      CHECK(p.map[0] == 0);  // identity is fixed
    }
  }
}

TEST_CASE("permutations respect the group law") {
  SurfaceContext ctx(2);
  QuotientSpec spec(2, 4);
  EndomorphismTable t = twist_table({TwistName::Kind::tau, 3}, ctx);
  QuotientPermutation p = induced_quotient_permutation(t, spec);
  std::mt19937 rng(43);
  std::uniform_int_distribution<uint64_t> d(0, 511);
  for (int trial = 0; trial < 2000; ++trial) {
    QuotientElement a = decode(d(rng), spec);
    QuotientElement b = decode(d(rng), spec);
    CHECK(p.map[encode(multiply(a, b))] ==
          encode(multiply(decode(p.map[encode(a)], spec),
                          decode(p.map[encode(b)], spec))));
  }
}

TEST_CASE("elimination certificate") {
  for (int g : {2, 3}) {
    SurfaceContext ctx(g);
    EliminationSchedule sched = elimination_certificate(ctx);
    CHECK(sched.complete());
    CHECK(sched.rank() == 2 * g * g - 2 * g);  // C(2g,2) - 1 - (g - 1)
    for (const EliminationStep& s : sched.steps) {
      CHECK(s.multiple != 0);
      CHECK_FALSE(s.ops.empty());
      CHECK_FALSE(PairIndexSet::related(s.target_pair.first,
                                        s.target_pair.second, g));
    }
  }
}

TEST_CASE("separating loops and the catalog") {
  SurfaceContext ctx(3);
  CHECK(separating_word(1, ctx) == parse_word("[x1,x2]", ctx));
  CHECK(separating_word(2, ctx) == parse_word("[x1,x2][x3,x4]", ctx));
  SimpleLoopCatalog cat = simple_loop_catalog(ctx);
  CHECK(cat.separating.size() == 2);  // h = 1 .. g-1
  CHECK_FALSE(cat.nonseparating.empty());
  for (const Word& w : cat.nonseparating)
    CHECK_FALSE(evaluate(w, ctx).is_identity());
}
