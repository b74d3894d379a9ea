#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>
#include <vector>

#include "surfgrp/word.hpp"

namespace surfgrp {

using Int = boost::multiprecision::cpp_int;

// Ordered index set for the commutator coordinates of the class-2
// quotient: all pairs (i,j) with 1 <= i < j <= 2g except (2g-1,2g),
// in lexicographic order. The pair (2g-1,2g) is eliminated by the
// defining relation; its contributions are rerouted onto the related
// pairs (2h-1,2h), h = 1..g-1.
class PairIndexSet {
 public:
  explicit PairIndexSet(int genus);

  int genus() const { return genus_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  std::pair<int, int> pair_at(int k) const { return pairs_[k]; }

  // Position of (i,j) in the set; throws on the excluded pair or on
  // out-of-range indices.
  int index_of(int i, int j) const;

  // (i,j) = (2h-1,2h) for some 1 <= h <= g-1.
  static bool related(int i, int j, int genus) {
    return i % 2 == 1 && j == i + 1 && j <= 2 * genus - 2;
  }
  bool related_at(int k) const { return related_[k]; }

 private:
  int genus_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<bool> related_;
  std::vector<int> lookup_;
};

// Normal form of an element of pi/pi^[3]:
//   prod_i x_i^{n_i} prod_{(i,j)} [x_i,x_j]^{m_{i,j}}
// with m indexed by PairIndexSet(genus). Equality is coordinatewise.
struct Nil2Element {
  int genus;
  std::vector<Int> n;  // length 2g
  std::vector<Int> m;  // length |PairIndexSet|

  friend bool operator==(const Nil2Element&, const Nil2Element&) = default;

  bool is_identity() const;
};

Nil2Element nil2_identity(const SurfaceContext& ctx);
Nil2Element nil2_generator(const SurfaceContext& ctx, int index, int sign = 1);

Nil2Element multiply(const Nil2Element& a, const Nil2Element& b);
Nil2Element inverse(const Nil2Element& a);
Nil2Element power(const Nil2Element& a, const Int& p);
Nil2Element evaluate(const Word& w, const SurfaceContext& ctx);
Nil2Element commutator_class(const Nil2Element& a, const Nil2Element& b);

}  // namespace surfgrp
