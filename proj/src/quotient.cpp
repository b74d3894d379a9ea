#include "surfgrp/quotient.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace surfgrp {

namespace {

Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

int64_t to_residue(const Int& a, long long m) {
  return static_cast<int64_t>(mod_floor(a, m));
}

}  // namespace

ModKElement modk_identity(const SurfaceContext& ctx) {
  return ModKElement{ctx.genus, std::vector<Int>(2 * ctx.genus, 0), 0};
}

ModKElement project_to_modK(const Nil2Element& a) {
  const PairIndexSet ps(a.genus);
  Int mk = 0;
  for (int k = 0; k < ps.size(); ++k)
    if (ps.related_at(k)) mk += a.m[k];
  return ModKElement{a.genus, a.n, mod_floor(mk, a.genus)};
}

ModKElement multiply_modK(const ModKElement& a, const ModKElement& b) {
  if (a.genus != b.genus)
    throw std::invalid_argument("genus mismatch in multiply_modK");
  const int g = a.genus;
  ModKElement r;
  r.genus = g;
  r.n.resize(2 * g);
  for (int i = 0; i < 2 * g; ++i) r.n[i] = a.n[i] + b.n[i];
  Int mk = a.mk + b.mk;
  for (int i = 1; i <= g - 1; ++i) mk -= b.n[2 * i - 2] * a.n[2 * i - 1];
  mk += (g - 1) * b.n[2 * g - 2] * a.n[2 * g - 1];
  r.mk = mod_floor(mk, g);
  return r;
}

ModKElement inverse_modK(const ModKElement& a) {
  return power_modK(a, -1);
}

ModKElement power_modK(const ModKElement& a, const Int& p) {
  const int g = a.genus;
  ModKElement r;
  r.genus = g;
  r.n.resize(2 * g);
  for (int i = 0; i < 2 * g; ++i) r.n[i] = p * a.n[i];
  Int q = 0;
  for (int i = 1; i <= g - 1; ++i) q -= a.n[2 * i - 2] * a.n[2 * i - 1];
  q += (g - 1) * a.n[2 * g - 2] * a.n[2 * g - 1];
  r.mk = mod_floor(p * a.mk + (p * (p - 1) / 2) * q, g);
  return r;
}

Int intersection_pairing(const Nil2Element& a) {
  for (const Int& v : a.n)
    if (v != 0)
      throw std::invalid_argument(
          "intersection_pairing requires a commutator-subgroup element");
  return project_to_modK(a).mk;
}

QuotientSpec::QuotientSpec(int g, long long exponent) : genus(g), e(exponent) {
  if (g < 2) throw RangeError("genus must be at least 2");
  if (e < 2) throw RangeError("quotient exponent must be at least 2");
  long long d = std::gcd(static_cast<long long>(g), e);
  if (e % 2 == 0) d = std::gcd(d, e / 2 * (e - 1));
  d_ = d;
}

Int QuotientSpec::order() const {
  Int o = 1;
  for (int i = 0; i < 2 * genus; ++i) o *= e;
  return o * d_;
}

bool QuotientElement::is_identity() const {
  return mk == 0 && std::all_of(n.begin(), n.end(),
                                [](int64_t v) { return v == 0; });
}

QuotientElement quotient_identity(const QuotientSpec& spec) {
  return QuotientElement{spec.genus, spec.e, spec.m_modulus(),
                         std::vector<int64_t>(2 * spec.genus, 0), 0};
}

QuotientElement project_to_quotient(const Nil2Element& a,
                                    const QuotientSpec& spec) {
  if (a.genus != spec.genus)
    throw std::invalid_argument("genus mismatch in project_to_quotient");
  ModKElement mk = project_to_modK(a);
  QuotientElement r = quotient_identity(spec);
  for (int i = 0; i < 2 * spec.genus; ++i) r.n[i] = to_residue(a.n[i], spec.e);
  r.mk = to_residue(mk.mk, spec.m_modulus());
  return r;
}

QuotientElement multiply(const QuotientElement& a, const QuotientElement& b) {
  if (a.genus != b.genus || a.e != b.e)
    throw std::invalid_argument("quotient mismatch in multiply");
  const int g = a.genus;
  QuotientElement r = a;
  for (int i = 0; i < 2 * g; ++i) r.n[i] = (a.n[i] + b.n[i]) % a.e;
  // The correction terms are well defined mod d because d divides e.
  int64_t mk = (a.mk + b.mk) % a.d;
  for (int i = 1; i <= g - 1; ++i)
    mk -= (b.n[2 * i - 2] % a.d) * (a.n[2 * i - 1] % a.d) % a.d;
  mk += ((g - 1) % a.d) * (b.n[2 * g - 2] % a.d) % a.d *
        (a.n[2 * g - 1] % a.d) % a.d;
  r.mk = ((mk % a.d) + a.d) % a.d;
  return r;
}

QuotientElement inverse(const QuotientElement& a) {
  return project_to_quotient(inverse(lift_to_nil2(a)),
                             QuotientSpec(a.genus, a.e));
}

uint64_t encode(const QuotientElement& a) {
  uint64_t idx = static_cast<uint64_t>(a.mk);
  uint64_t radix = static_cast<uint64_t>(a.d);
  for (int i = 0; i < 2 * a.genus; ++i) {
    idx += static_cast<uint64_t>(a.n[i]) * radix;
    radix *= static_cast<uint64_t>(a.e);
  }
  return idx;
}

QuotientElement decode(uint64_t index, const QuotientSpec& spec) {
  QuotientElement r = quotient_identity(spec);
  r.mk = static_cast<int64_t>(index % static_cast<uint64_t>(r.d));
  index /= static_cast<uint64_t>(r.d);
  for (int i = 0; i < 2 * spec.genus; ++i) {
    r.n[i] = static_cast<int64_t>(index % static_cast<uint64_t>(spec.e));
    index /= static_cast<uint64_t>(spec.e);
  }
  return r;
}

Nil2Element lift_to_nil2(const QuotientElement& a) {
  const SurfaceContext ctx(a.genus);
  Nil2Element e = nil2_identity(ctx);
  for (int i = 0; i < 2 * a.genus; ++i) e.n[i] = a.n[i];
  e.m[PairIndexSet(a.genus).index_of(1, 2)] = a.mk;
  return e;
}

bool is_member(const Word& w, const QuotientSpec& spec,
               const SurfaceContext& ctx) {
  return project_to_quotient(evaluate(w, ctx), spec).is_identity();
}

std::vector<QuotientElement> enumerate_quotient(const QuotientSpec& spec,
                                                uint64_t guard) {
  const Int order = spec.order();
  if (order > guard)
    throw std::length_error("quotient order " + order.str() +
                            " exceeds enumeration guard");
  const uint64_t size = static_cast<uint64_t>(order);

  std::vector<QuotientElement> gens;
  const SurfaceContext ctx(spec.genus);
  for (int i = 1; i <= 2 * spec.genus; ++i) {
    for (int sign : {1, -1})
      gens.push_back(
          project_to_quotient(nil2_generator(ctx, i, sign), spec));
  }

  std::vector<char> visited(size, 0);
  std::deque<uint64_t> frontier;
  const uint64_t id = encode(quotient_identity(spec));
  visited[id] = 1;
  frontier.push_back(id);
  uint64_t count = 1;
  while (!frontier.empty()) {
    QuotientElement cur = decode(frontier.front(), spec);
    frontier.pop_front();
    for (const QuotientElement& gen : gens) {
      uint64_t next = encode(multiply(cur, gen));
      if (!visited[next]) {
        visited[next] = 1;
        frontier.push_back(next);
        ++count;
      }
    }
  }

  std::vector<QuotientElement> out;
  out.reserve(count);
  for (uint64_t idx = 0; idx < size; ++idx)
    if (visited[idx]) out.push_back(decode(idx, spec));
  return out;
}

namespace {

ModKElement modk_commutator(const ModKElement& a, const ModKElement& b) {
  return multiply_modK(multiply_modK(inverse_modK(a), inverse_modK(b)),
                       multiply_modK(a, b));
}

ModKElement ordered_product(const std::vector<ModKElement>& gens,
                            const std::vector<Int>& exps) {
  ModKElement acc = ModKElement{gens[0].genus,
                                std::vector<Int>(gens[0].n.size(), 0), 0};
  for (std::size_t s = 0; s < gens.size(); ++s)
    acc = multiply_modK(acc, power_modK(gens[s], exps[s]));
  return acc;
}

}  // namespace

SpanDescription gpower_span(const SurfaceContext& ctx, long long e,
                            const std::vector<Word>& catalog) {
  const int g = ctx.genus;
  std::vector<ModKElement> gens;
  gens.reserve(catalog.size());
  for (const Word& w : catalog)
    gens.push_back(project_to_modK(power(evaluate(w, ctx), e)));

  IntMatrix n_rows;
  for (const ModKElement& h : gens) n_rows.push_back(h.n);

  Int t = g;
  // Commutators of the generators land in the mk coordinate.
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t u = s + 1; u < gens.size(); ++u)
      t = gcd(t, modk_commutator(gens[s], gens[u]).mk);

  // Products over the kernel of the exponent map have n = 0; their mk
  // values (and those of small combinations) complete the subgroup.
  IntMatrix kernel = integer_kernel(n_rows);
  std::vector<std::vector<Int>> combos;
  for (const auto& b : kernel) combos.push_back(b);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    std::vector<Int> dbl = kernel[i];
    for (auto& v : dbl) v *= 2;
    combos.push_back(dbl);
    for (std::size_t j = i + 1; j < kernel.size(); ++j) {
      std::vector<Int> sum = kernel[i];
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] += kernel[j][s];
      combos.push_back(sum);
    }
  }
  for (const auto& c : combos) {
    ModKElement p = ordered_product(gens, c);
    t = gcd(t, p.mk);
  }

  return SpanDescription{hermite_normal_form(n_rows), t == 0 ? Int(g) : t};
}

SpanDescription general_power_span(const SurfaceContext& ctx, long long e) {
  const int g = ctx.genus;
  IntMatrix lattice(2 * g, std::vector<Int>(2 * g, 0));
  for (int i = 0; i < 2 * g; ++i) lattice[i][i] = e;
  Int t = gcd(Int(g), gcd(Int(e), Int(e) * (e - 1) / 2));
  return SpanDescription{std::move(lattice), t == 0 ? Int(g) : t};
}

}  // namespace surfgrp
