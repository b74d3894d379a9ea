#include "surfgrp/nil2.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfgrp {

PairIndexSet::PairIndexSet(int genus) : genus_(genus) {
  const int N = 2 * genus;
  lookup_.assign(static_cast<std::size_t>(N) * N, -1);
  for (int i = 1; i < N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      if (i == N - 1 && j == N) continue;  // excluded pair
      lookup_[static_cast<std::size_t>(i - 1) * N + (j - 1)] =
          static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
      related_.push_back(related(i, j, genus));
    }
  }
}

int PairIndexSet::index_of(int i, int j) const {
  const int N = 2 * genus_;
  if (i < 1 || j <= i || j > N)
    throw RangeError("pair index out of range");
  int k = lookup_[static_cast<std::size_t>(i - 1) * N + (j - 1)];
  if (k < 0)
    throw RangeError("pair (2g-1,2g) has no coordinate");
  return k;
}

bool Nil2Element::is_identity() const {
  auto zero = [](const Int& v) { return v == 0; };
  return std::all_of(n.begin(), n.end(), zero) &&
         std::all_of(m.begin(), m.end(), zero);
}

Nil2Element nil2_identity(const SurfaceContext& ctx) {
  const PairIndexSet ps(ctx.genus);
  Nil2Element e;
  e.genus = ctx.genus;
  e.n.assign(2 * ctx.genus, 0);
  e.m.assign(ps.size(), 0);
  return e;
}

Nil2Element nil2_generator(const SurfaceContext& ctx, int index, int sign) {
  if (index < 1 || index > ctx.generator_count())
    throw RangeError("generator index out of range");
  Nil2Element e = nil2_identity(ctx);
  e.n[index - 1] = sign;
  return e;
}

Nil2Element multiply(const Nil2Element& a, const Nil2Element& b) {
  if (a.genus != b.genus)
    throw std::invalid_argument("genus mismatch in multiply");
  const PairIndexSet ps(a.genus);
  const int N = 2 * a.genus;

  Nil2Element r;
  r.genus = a.genus;
  r.n.resize(N);
  for (int i = 0; i < N; ++i) r.n[i] = a.n[i] + b.n[i];

  // Correction from moving the second operand's generators past the
  // first's, with the excluded pair rewritten onto the related pairs.
  const Int corr = b.n[N - 2] * a.n[N - 1];
  r.m.resize(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    auto [i, j] = ps.pair_at(k);
    r.m[k] = a.m[k] + b.m[k] - b.n[i - 1] * a.n[j - 1];
    if (ps.related_at(k)) r.m[k] += corr;
  }
  return r;
}

Nil2Element inverse(const Nil2Element& a) {
  const PairIndexSet ps(a.genus);
  const int N = 2 * a.genus;

  Nil2Element r;
  r.genus = a.genus;
  r.n.resize(N);
  for (int i = 0; i < N; ++i) r.n[i] = -a.n[i];

  const Int corr = a.n[N - 2] * a.n[N - 1];
  r.m.resize(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    auto [i, j] = ps.pair_at(k);
    r.m[k] = -a.m[k] - a.n[i - 1] * a.n[j - 1];
    if (ps.related_at(k)) r.m[k] += corr;
  }
  return r;
}

Nil2Element power(const Nil2Element& a, const Int& p) {
  const PairIndexSet ps(a.genus);
  const int N = 2 * a.genus;
  const Int choose2 = p * (p - 1) / 2;

  Nil2Element r;
  r.genus = a.genus;
  r.n.resize(N);
  for (int i = 0; i < N; ++i) r.n[i] = p * a.n[i];

  const Int corr = a.n[N - 2] * a.n[N - 1];
  r.m.resize(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    auto [i, j] = ps.pair_at(k);
    Int q = -a.n[i - 1] * a.n[j - 1];
    if (ps.related_at(k)) q += corr;
    r.m[k] = p * a.m[k] + choose2 * q;
  }
  return r;
}

Nil2Element evaluate(const Word& w, const SurfaceContext& ctx) {
  Nil2Element acc = nil2_identity(ctx);
  for (const Letter& l : w.letters)
    acc = multiply(acc, nil2_generator(ctx, l.index, l.sign));
  return acc;
}

Nil2Element commutator_class(const Nil2Element& a, const Nil2Element& b) {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

}  // namespace surfgrp
