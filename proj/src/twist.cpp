#include "surfgrp/twist.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace surfgrp {

std::string to_string(const TwistName& name) {
  return (name.kind == TwistName::Kind::tau ? "t" : "s") +
         std::to_string(name.index);
}

TwistName parse_twist_name(std::string_view text, const SurfaceContext& ctx) {
  if (text.size() < 2 || (text[0] != 't' && text[0] != 's'))
    throw RangeError("bad twist name '" + std::string(text) + "'");
  int idx = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9')
      throw RangeError("bad twist name '" + std::string(text) + "'");
    idx = idx * 10 + (c - '0');
  }
  TwistName name{text[0] == 't' ? TwistName::Kind::tau : TwistName::Kind::sigma,
                 idx};
  int limit = name.kind == TwistName::Kind::tau ? 2 * ctx.genus + 1 : ctx.genus;
  if (idx < 1 || idx > limit)
    throw RangeError("twist index out of range in '" + std::string(text) + "'");
  return name;
}

std::vector<TwistName> all_twists(const SurfaceContext& ctx) {
  std::vector<TwistName> out;
  for (int i = 1; i <= 2 * ctx.genus + 1; ++i)
    out.push_back({TwistName::Kind::tau, i});
  for (int i = 1; i <= ctx.genus; ++i)
    out.push_back({TwistName::Kind::sigma, i});
  return out;
}

Word gamma_word(int i, const SurfaceContext& ctx) {
  const int g = ctx.genus;
  if (i < 1 || i > 2 * g + 1) throw RangeError("gamma index out of range");
  if (i == 2 * g + 1) {
    // [x_{2g-1},x_{2g}]^{-1} x_{2g-1}^{-1}
    Word c = commutator_word(generator_word(2 * g - 1), generator_word(2 * g));
    return concat(invert_word(c), generator_word(2 * g - 1, -1));
  }
  if (i == 1 || i % 2 == 0) return generator_word(i);
  // i = 2h-1, h >= 2: x_{2h-1} [x_{2h-3},x_{2h-2}]^{-1} x_{2h-3}^{-1}
  const int h = (i + 1) / 2;
  Word c = commutator_word(generator_word(2 * h - 3), generator_word(2 * h - 2));
  return concat(concat(generator_word(2 * h - 1), invert_word(c)),
                generator_word(2 * h - 3, -1));
}

Word separating_word(int h, const SurfaceContext& ctx) {
  if (h < 1 || h > ctx.genus - 1)
    throw RangeError("separating loop index out of range");
  Word w;
  for (int i = 1; i <= h; ++i)
    w = concat(w, commutator_word(generator_word(2 * i - 1),
                                  generator_word(2 * i)));
  return w;
}

SimpleLoopCatalog simple_loop_catalog(const SurfaceContext& ctx) {
  SimpleLoopCatalog cat;
  std::set<std::string> seen;
  auto add = [&](const Word& w) {
    Word r = free_reduce(w);
    if (seen.insert(render_word(r)).second) cat.nonseparating.push_back(r);
  };
  for (int i = 1; i <= 2 * ctx.genus; ++i) add(generator_word(i));
  for (int i = 1; i <= 2 * ctx.genus + 1; ++i) add(gamma_word(i, ctx));
  for (int h = 1; h <= ctx.genus - 1; ++h)
    cat.separating.push_back(separating_word(h, ctx));
  return cat;
}

EndomorphismTable twist_table(const TwistName& name,
                              const SurfaceContext& ctx) {
  const int g = ctx.genus;
  EndomorphismTable t;
  if (name.kind == TwistName::Kind::sigma) {
    if (name.index < 1 || name.index > g)
      throw RangeError("sigma index out of range");
    const int i = name.index;
    t.images[2 * i] =
        concat(generator_word(2 * i - 1, -1), generator_word(2 * i));
    return t;
  }
  const int i = name.index;
  if (i < 1 || i > 2 * g + 1) throw RangeError("tau index out of range");
  if (i == 1) {
    t.images[2] = concat(generator_word(1, -1), generator_word(2));
  } else if (i == 2 * g + 1) {
    t.images[2 * g] = free_reduce(
        concat(generator_word(2 * g), gamma_word(2 * g + 1, ctx)));
  } else if (i % 2 == 0) {
    // tau_{2h}: x_{2h-1} -> x_{2h} x_{2h-1}
    t.images[i - 1] = concat(generator_word(i), generator_word(i - 1));
  } else {
    // tau_{2h-1}, h = 2..g
    const Word gamma = gamma_word(i, ctx);
    const Word gamma_inv = invert_word(gamma);
    t.images[i - 1] = free_reduce(concat(generator_word(i - 1), gamma));
    t.images[i] =
        free_reduce(concat(concat(gamma_inv, generator_word(i)), gamma));
    t.images[i + 1] = free_reduce(concat(gamma_inv, generator_word(i + 1)));
  }
  return t;
}

bool is_well_defined(const EndomorphismTable& t, const SurfaceContext& ctx) {
  return evaluate(substitute(ctx.relator(), t), ctx).is_identity();
}

namespace {

struct ActionCache {
  std::vector<Nil2Element> img;   // generator images, 0-based
  std::vector<Nil2Element> comm;  // basis commutator images per pair
};

ActionCache build_cache(const EndomorphismTable& t, const SurfaceContext& ctx) {
  ActionCache cache;
  for (int i = 1; i <= 2 * ctx.genus; ++i) {
    const Word* w = t.image_of(i);
    cache.img.push_back(w ? evaluate(*w, ctx)
                          : nil2_generator(ctx, i));
  }
  const PairIndexSet ps(ctx.genus);
  for (int k = 0; k < ps.size(); ++k) {
    auto [i, j] = ps.pair_at(k);
    cache.comm.push_back(commutator_class(cache.img[i - 1], cache.img[j - 1]));
  }
  return cache;
}

Nil2Element apply_cached(const ActionCache& cache, const Nil2Element& a,
                         const SurfaceContext& ctx) {
  Nil2Element acc = nil2_identity(ctx);
  for (int i = 0; i < 2 * ctx.genus; ++i)
    if (a.n[i] != 0) acc = multiply(acc, power(cache.img[i], a.n[i]));
  for (std::size_t k = 0; k < a.m.size(); ++k)
    if (a.m[k] != 0) acc = multiply(acc, power(cache.comm[k], a.m[k]));
  return acc;
}

}  // namespace

Nil2Element induced_nil2(const EndomorphismTable& t, const Nil2Element& a,
                         const SurfaceContext& ctx) {
  if (!is_well_defined(t, ctx))
    throw std::invalid_argument("table does not descend to pi/pi^[3]");
  return apply_cached(build_cache(t, ctx), a, ctx);
}

CommutatorVector twist_difference(const EndomorphismTable& t,
                                  const CommutatorVector& z,
                                  const SurfaceContext& ctx) {
  Nil2Element a = nil2_identity(ctx);
  a.m = z;
  Nil2Element image = induced_nil2(t, a, ctx);
  CommutatorVector out(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) out[k] = image.m[k] - z[k];
  return out;
}

IntMatrix twist_difference_matrix(const EndomorphismTable& t,
                                  const SurfaceContext& ctx) {
  const ActionCache cache = build_cache(t, ctx);
  const PairIndexSet ps(ctx.genus);
  IntMatrix m(ps.size(), std::vector<Int>(ps.size(), 0));
  for (int k = 0; k < ps.size(); ++k) {
    for (int r = 0; r < ps.size(); ++r) m[r][k] = cache.comm[k].m[r];
    m[k][k] -= 1;
  }
  return m;  // m[r][k]: coefficient at pair r of A e_k
}

QuotientPermutation induced_quotient_permutation(const EndomorphismTable& t,
                                                 const QuotientSpec& spec) {
  const SurfaceContext ctx(spec.genus);
  if (!is_well_defined(t, ctx))
    throw std::invalid_argument("table does not descend to pi/pi^[3]");
  const ActionCache cache = build_cache(t, ctx);
  const Int order = spec.order();
  if (order > 2'000'000)
    throw std::length_error("quotient too large for permutation");
  const uint64_t size = static_cast<uint64_t>(order);

  // The image of a canonical representative is a product of generator
  // images raised to the residue exponents; projecting factor by factor
  // keeps the whole table in machine-word arithmetic.
  const int n_gens = 2 * ctx.genus;
  std::vector<std::vector<QuotientElement>> img_pow(n_gens);
  for (int i = 0; i < n_gens; ++i) {
    QuotientElement base = project_to_quotient(cache.img[i], spec);
    QuotientElement acc = quotient_identity(spec);
    for (long long r = 0; r < spec.e; ++r) {
      img_pow[i].push_back(acc);
      acc = multiply(acc, base);
    }
  }
  std::vector<QuotientElement> comm_pow;
  {
    QuotientElement base = project_to_quotient(
        cache.comm[PairIndexSet(ctx.genus).index_of(1, 2)], spec);
    QuotientElement acc = quotient_identity(spec);
    for (long long r = 0; r < spec.m_modulus(); ++r) {
      comm_pow.push_back(acc);
      acc = multiply(acc, base);
    }
  }

  QuotientPermutation perm;
  perm.map.resize(size);
  std::vector<char> hit(size, 0);
  bool bijective = true;
  for (uint64_t idx = 0; idx < size; ++idx) {
    QuotientElement cur = decode(idx, spec);
    QuotientElement acc = quotient_identity(spec);
    for (int i = 0; i < n_gens; ++i)
      acc = multiply(acc, img_pow[i][cur.n[i]]);
    acc = multiply(acc, comm_pow[cur.mk]);
    uint64_t img = encode(acc);
    perm.map[idx] = static_cast<uint32_t>(img);
    if (hit[img]) bijective = false;
    hit[img] = 1;
  }
  perm.bijective = bijective;
  return perm;
}

namespace {

// Sparse column representation of a twist-difference operator.
struct SparseOp {
  TwistName name;
  std::vector<std::vector<std::pair<int, Int>>> cols;
};

std::vector<Int> apply_sparse(const SparseOp& op, const std::vector<Int>& v) {
  std::vector<Int> out(v.size(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (const auto& [row, coeff] : op.cols[k]) out[row] += v[k] * coeff;
  }
  return out;
}

struct SearchState {
  // Tracked images of the unknown columns (same order as `tracked`).
  std::vector<std::vector<Int>> cols;
  std::vector<int> ops;  // indices into the operator list
};

bool column_zero(const std::vector<Int>& col) {
  return std::all_of(col.begin(), col.end(),
                     [](const Int& v) { return v == 0; });
}

int column_nnz(const std::vector<Int>& col) {
  int c = 0;
  for (const Int& v : col)
    if (v != 0) ++c;
  return c;
}

std::string state_key(const SearchState& st) {
  std::string key;
  for (const auto& col : st.cols) {
    for (const Int& v : col) {
      key += v.str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

}  // namespace

EliminationSchedule elimination_certificate(const SurfaceContext& ctx,
                                            int max_depth) {
  const int g = ctx.genus;
  if (max_depth < 0) max_depth = 4 * g;
  const PairIndexSet ps(g);
  const int P = ps.size();

  std::vector<SparseOp> ops;
  for (const TwistName& name : all_twists(ctx)) {
    IntMatrix m = twist_difference_matrix(twist_table(name, ctx), ctx);
    SparseOp op;
    op.name = name;
    op.cols.resize(P);
    for (int k = 0; k < P; ++k)
      for (int r = 0; r < P; ++r)
        if (m[r][k] != 0) op.cols[k].emplace_back(r, m[r][k]);
    ops.push_back(std::move(op));
  }

  std::vector<int> targets;
  for (int k = 0; k < P; ++k)
    if (!ps.related_at(k)) targets.push_back(k);

  EliminationSchedule schedule;
  std::vector<bool> eliminated(P, false);

  // A target counts as isolated when some operator composition sends
  // its unit column to a single nonzero coordinate while killing every
  // column not yet eliminated. Eliminated unknowns are already known
  // to vanish, so their columns are unconstrained ("in turn").
  auto try_target = [&](int target) -> std::optional<EliminationStep> {
    std::vector<int> tracked;  // target first
    tracked.push_back(target);
    for (int k : targets)
      if (k != target && !eliminated[k]) tracked.push_back(k);

    auto goal = [&](const SearchState& st) -> std::optional<EliminationStep> {
      if (column_nnz(st.cols[0]) != 1) return std::nullopt;
      for (std::size_t c = 1; c < st.cols.size(); ++c)
        if (!column_zero(st.cols[c])) return std::nullopt;
      EliminationStep step;
      step.target_pair = ps.pair_at(target);
      for (int oi : st.ops) step.ops.push_back(ops[oi].name);
      for (int r = 0; r < P; ++r) {
        if (st.cols[0][r] != 0) {
          step.result_pair = ps.pair_at(r);
          step.multiple = st.cols[0][r];
        }
      }
      return step;
    };

    auto score = [&](const SearchState& st) {
      int bad = 0, total = 0;
      for (std::size_t c = 1; c < st.cols.size(); ++c)
        if (!column_zero(st.cols[c])) ++bad;
      for (const auto& col : st.cols) total += column_nnz(col);
      return std::tuple<int, int, int>(bad, column_nnz(st.cols[0]), total);
    };

    SearchState init;
    for (int k : tracked) {
      std::vector<Int> unit(P, 0);
      unit[k] = 1;
      init.cols.push_back(std::move(unit));
    }

    const std::size_t beam_width = 256;
    std::vector<SearchState> beam{init};
    std::set<std::string> seen{state_key(init)};
    for (int depth = 0; depth < max_depth; ++depth) {
      std::vector<SearchState> next;
      for (const SearchState& st : beam) {
        for (std::size_t oi = 0; oi < ops.size(); ++oi) {
          SearchState ns;
          ns.ops = st.ops;
          ns.ops.push_back(static_cast<int>(oi));
          ns.cols.reserve(st.cols.size());
          for (const auto& col : st.cols)
            ns.cols.push_back(apply_sparse(ops[oi], col));
          if (column_zero(ns.cols[0])) continue;
          if (!seen.insert(state_key(ns)).second) continue;
          if (auto step = goal(ns)) return step;
          next.push_back(std::move(ns));
        }
      }
      std::stable_sort(next.begin(), next.end(),
                       [&](const SearchState& a, const SearchState& b) {
                         return score(a) < score(b);
                       });
      if (next.size() > beam_width) next.resize(beam_width);
      beam = std::move(next);
      if (beam.empty()) break;
    }
    return std::nullopt;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (int target : targets) {
      if (eliminated[target]) continue;
      if (auto step = try_target(target)) {
        schedule.steps.push_back(*step);
        eliminated[target] = true;
        progress = true;
      }
    }
  }
  for (int target : targets)
    if (!eliminated[target]) schedule.unresolved.push_back(ps.pair_at(target));
  return schedule;
}

}  // namespace surfgrp
