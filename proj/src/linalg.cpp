#include "surfgrp/linalg.hpp"

#include <cstddef>

namespace surfgrp {

namespace {

// Reduces `rows` to row HNF in place; `transform`, when non-null, is
// carried along (same row operations), for kernel extraction.
void hnf_in_place(IntMatrix& rows, IntMatrix* transform) {
  const std::size_t nr = rows.size();
  if (nr == 0) return;
  const std::size_t nc = rows[0].size();

  auto subtract = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < nc; ++c) rows[dst][c] -= q * rows[src][c];
    if (transform) {
      auto& T = *transform;
      for (std::size_t c = 0; c < T[dst].size(); ++c)
        T[dst][c] -= q * T[src][c];
    }
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    rows[a].swap(rows[b]);
    if (transform) (*transform)[a].swap((*transform)[b]);
  };
  auto negate_row = [&](std::size_t r) {
    for (auto& v : rows[r]) v = -v;
    if (transform)
      for (auto& v : (*transform)[r]) v = -v;
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < nc && pivot_row < nr; ++col) {
    // Euclidean reduction within the column until one nonzero remains.
    for (;;) {
      std::size_t best = nr;
      for (std::size_t r = pivot_row; r < nr; ++r) {
        if (rows[r][col] == 0) continue;
        if (best == nr ||
            abs(rows[r][col]) < abs(rows[best][col]))
          best = r;
      }
      if (best == nr) break;  // column clear
      swap_rows(pivot_row, best);
      bool others = false;
      for (std::size_t r = pivot_row + 1; r < nr; ++r) {
        if (rows[r][col] == 0) continue;
        Int q = rows[r][col] / rows[pivot_row][col];
        subtract(r, pivot_row, q);
        if (rows[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (rows[pivot_row][col] == 0) continue;
    if (rows[pivot_row][col] < 0) negate_row(pivot_row);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = rows[r][col] / rows[pivot_row][col];
      if (rows[r][col] - q * rows[pivot_row][col] < 0) q -= 1;
      if (q != 0) subtract(r, pivot_row, q);
    }
    ++pivot_row;
  }
}

bool is_zero_row(const std::vector<Int>& row) {
  for (const Int& v : row)
    if (v != 0) return false;
  return true;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  hnf_in_place(rows, nullptr);
  IntMatrix out;
  for (auto& r : rows)
    if (!is_zero_row(r)) out.push_back(std::move(r));
  return out;
}

IntMatrix integer_kernel(const IntMatrix& rows) {
  const std::size_t nr = rows.size();
  IntMatrix work = rows;
  IntMatrix transform(nr, std::vector<Int>(nr, 0));
  for (std::size_t i = 0; i < nr; ++i) transform[i][i] = 1;
  hnf_in_place(work, &transform);
  IntMatrix kernel;
  for (std::size_t r = 0; r < nr; ++r)
    if (is_zero_row(work[r])) kernel.push_back(transform[r]);
  return kernel;
}

}  // namespace surfgrp
