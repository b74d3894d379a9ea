#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfgrp/quotient.hpp"

namespace surfgrp {

// tau_i (1 <= i <= 2g+1): twist around gamma_i.
// sigma_i (1 <= i <= g): twist around x_{2i-1}.
struct TwistName {
  enum class Kind { tau, sigma };
  Kind kind;
  int index;

  friend bool operator==(const TwistName&, const TwistName&) = default;
};

std::string to_string(const TwistName& name);
// Accepts "t3" / "s1"; throws RangeError on bad names or indices.
TwistName parse_twist_name(std::string_view text, const SurfaceContext& ctx);
std::vector<TwistName> all_twists(const SurfaceContext& ctx);

// The simple loops gamma_1 .. gamma_{2g+1}.
Word gamma_word(int i, const SurfaceContext& ctx);

// Nonseparating loops (the gammas and the generators) plus the
// separating loops s_h = prod_{i<=h} [x_{2i-1},x_{2i}], h = 1..g-1.
// For even g the loop s_{g/2} lies in pi^g K and is excluded from the
// nonseparating probe set by construction.
struct SimpleLoopCatalog {
  std::vector<Word> nonseparating;
  std::vector<Word> separating;
};
SimpleLoopCatalog simple_loop_catalog(const SurfaceContext& ctx);
Word separating_word(int h, const SurfaceContext& ctx);

EndomorphismTable twist_table(const TwistName& name,
                              const SurfaceContext& ctx);

// True iff the endomorphism kills the defining relation in pi/pi^[3],
// i.e. descends to the class-2 quotient.
bool is_well_defined(const EndomorphismTable& t, const SurfaceContext& ctx);

// Induced action on pi/pi^[3]; agrees with evaluate(substitute(w,t))
// on any representing word. Requires is_well_defined(t).
Nil2Element induced_nil2(const EndomorphismTable& t, const Nil2Element& a,
                         const SurfaceContext& ctx);

// Element of the commutator lattice pi^[2]/pi^[3] in additive notation,
// indexed by PairIndexSet.
using CommutatorVector = std::vector<Int>;

// z |-> induced(z) - z on the commutator lattice (a Z-linear map).
CommutatorVector twist_difference(const EndomorphismTable& t,
                                  const CommutatorVector& z,
                                  const SurfaceContext& ctx);

// Matrix of the twist-difference operator: column k is the image of
// the basis commutator at pair k.
IntMatrix twist_difference_matrix(const EndomorphismTable& t,
                                  const SurfaceContext& ctx);

struct QuotientPermutation {
  std::vector<uint32_t> map;  // indexed by encode()
  bool bijective;
};
QuotientPermutation induced_quotient_permutation(const EndomorphismTable& t,
                                                 const QuotientSpec& spec);

// One step of the coefficient-elimination schedule: applying the twist
// differences in `ops` (first listed first) to a vector supported on
// the non-related pairs sends the unknown at `target_pair` to
// `multiple` times the basis commutator at `result_pair` and kills
// every other not-yet-eliminated unknown.
struct EliminationStep {
  std::pair<int, int> target_pair;
  std::vector<TwistName> ops;
  std::pair<int, int> result_pair;
  Int multiple;
};

struct EliminationSchedule {
  std::vector<EliminationStep> steps;  // in elimination order
  std::vector<std::pair<int, int>> unresolved;
  bool complete() const { return unresolved.empty(); }
  int rank() const { return static_cast<int>(steps.size()); }
};

EliminationSchedule elimination_certificate(const SurfaceContext& ctx,
                                            int max_depth = -1);

}  // namespace surfgrp
