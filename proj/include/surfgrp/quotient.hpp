#pragma once

#include <cstdint>
#include <vector>

#include "surfgrp/linalg.hpp"
#include "surfgrp/nil2.hpp"

namespace surfgrp {

// Element of pi/K: unreduced generator exponents plus a single
// commutator coordinate modulo g (all related commutators identified
// with [x1,x2], non-related ones killed).
struct ModKElement {
  int genus;
  std::vector<Int> n;  // length 2g, unreduced
  Int mk;              // in [0, g)

  friend bool operator==(const ModKElement&, const ModKElement&) = default;
};

ModKElement modk_identity(const SurfaceContext& ctx);
ModKElement project_to_modK(const Nil2Element& a);
ModKElement multiply_modK(const ModKElement& a, const ModKElement& b);
ModKElement inverse_modK(const ModKElement& a);
ModKElement power_modK(const ModKElement& a, const Int& p);

// The intersection-product value of a commutator-subgroup element,
// in [0, g); zero exactly on K. Requires n(a) = 0.
Int intersection_pairing(const Nil2Element& a);

// The finite quotient pi / pi^e K. Generator exponents are residues
// mod e; the commutator coordinate is a residue mod d, where d is the
// image modulus of Z/g under e-th powers:
//   d = gcd(g, e)            for odd e,
//   d = gcd(g, e, e(e-1)/2)  for even e.
struct QuotientSpec {
  int genus;
  long long e;

  QuotientSpec(int g, long long exponent);

  long long n_modulus() const { return e; }
  long long m_modulus() const { return d_; }
  Int order() const;

 private:
  long long d_;
};

struct QuotientElement {
  int genus;
  long long e;
  long long d;
  std::vector<int64_t> n;  // residues mod e
  int64_t mk;              // residue mod d

  bool is_identity() const;

  friend bool operator==(const QuotientElement&, const QuotientElement&) =
      default;
};

QuotientElement quotient_identity(const QuotientSpec& spec);
QuotientElement project_to_quotient(const Nil2Element& a,
                                    const QuotientSpec& spec);
QuotientElement multiply(const QuotientElement& a, const QuotientElement& b);
QuotientElement inverse(const QuotientElement& a);

// Mixed-radix index of an element within 0 .. order-1; identity is 0.
uint64_t encode(const QuotientElement& a);
QuotientElement decode(uint64_t index, const QuotientSpec& spec);

// A canonical preimage in pi/pi^[3] (mk placed on the (1,2) coordinate).
Nil2Element lift_to_nil2(const QuotientElement& a);

bool is_member(const Word& w, const QuotientSpec& spec,
               const SurfaceContext& ctx);

// BFS closure of the generator classes and their inverses under
// multiplication. Throws when the closed-form order exceeds `guard`.
std::vector<QuotientElement> enumerate_quotient(const QuotientSpec& spec,
                                                uint64_t guard = 2'000'000);

// Subgroup of pi/K generated by e-th powers of a set of words:
// the lattice spanned by the generator-exponent images (in HNF) plus
// the subgroup of Z/g met in the commutator coordinate, given by its
// gcd-generator (g itself encodes the trivial subgroup).
struct SpanDescription {
  IntMatrix n_lattice;  // HNF rows
  Int mk_generator;     // divisor of g

  friend bool operator==(const SpanDescription&, const SpanDescription&) =
      default;
};

SpanDescription gpower_span(const SurfaceContext& ctx, long long e,
                            const std::vector<Word>& catalog);

// Closed-form span of e-th powers of arbitrary elements:
// e * Z^{2g} with mk-subgroup generated by gcd(g, e, e(e-1)/2).
SpanDescription general_power_span(const SurfaceContext& ctx, long long e);

}  // namespace surfgrp
