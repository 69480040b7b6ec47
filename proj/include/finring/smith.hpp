#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "finring/arith.hpp"

namespace finring::detail {

using Matrix = std::vector<std::vector<Coord>>;

/// Smith form of an integer relation matrix A (rows = relations, c columns),
/// tracking only the column transform: A V = P^{-1} D for some unimodular P.
/// Then Z^c / rowspan(A) is isomorphic to (+)_i Z/diag_i via x -> x V.
struct Smith {
  std::vector<Coord> diag;  // length c; 0 marks a free direction
  Matrix v;                 // c x c
  Matrix v_inv;             // c x c
};

inline Smith smith_form(Matrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  Smith s;
  s.v.assign(cols, std::vector<Coord>(cols, 0));
  s.v_inv = s.v;
  for (std::size_t i = 0; i < cols; ++i) s.v[i][i] = s.v_inv[i][i] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : s.v) std::swap(row[x], row[y]);
    std::swap(s.v_inv[x], s.v_inv[y]);
  };
  // col_j -= q col_t
  auto col_op = [&](std::size_t j, std::size_t t, Coord q) {
    for (auto& row : a) row[j] = arith::checked_add(row[j], -arith::checked_mul(q, row[t]));
    for (auto& row : s.v) row[j] = arith::checked_add(row[j], -arith::checked_mul(q, row[t]));
    for (std::size_t l = 0; l < cols; ++l)
      s.v_inv[t][l] = arith::checked_add(s.v_inv[t][l], arith::checked_mul(q, s.v_inv[j][l]));
  };
  auto row_op = [&](std::size_t i, std::size_t t, Coord q) {
    for (std::size_t l = 0; l < cols; ++l) a[i][l] = arith::checked_add(a[i][l], -arith::checked_mul(q, a[t][l]));
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Move the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || std::llabs(a[i][j]) < std::llabs(a[bi][bj]))) bi = i, bj = j;
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_op(i, t, a[i][t] / a[t][t]);
          if (a[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_op(j, t, a[t][j] / a[t][t]);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) {
        std::size_t mi = t, mj = t;
        Coord best = std::llabs(a[t][t]);
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && std::llabs(a[i][t]) < best) best = std::llabs(a[i][t]), mi = i, mj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && std::llabs(a[t][j]) < best) best = std::llabs(a[t][j]), mi = t, mj = j;
        std::swap(a[t], a[mi]);
        swap_cols(t, mj);
        continue;
      }
      // Divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t l = 0; l < cols; ++l) a[t][l] = arith::checked_add(a[t][l], a[i][l]);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (std::size_t l = 0; l < cols; ++l) a[t][l] = -a[t][l];
  }
  s.diag.assign(cols, 0);
  for (std::size_t t = 0; t < n; ++t) s.diag[t] = a[t][t];
  return s;
}

/// Cyclic decomposition of Z^c / rowspan(relations), which must be finite.
/// Trivial factors are dropped: orders[a] > 1 for every kept coordinate.
struct CyclicPresentation {
  std::vector<Coord> orders;
  std::vector<std::size_t> kept;  // Smith diagonal positions that survive
  Smith smith;

  /// New coordinates of an integer vector.
  std::vector<Coord> forward(const std::vector<Coord>& x) const {
    std::vector<Coord> out(kept.size(), 0);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      const std::size_t col = kept[a];
      __int128 acc = 0;
      for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<__int128>(x[i]) * smith.v[i][col];
      acc %= orders[a];
      if (acc < 0) acc += orders[a];
      out[a] = static_cast<Coord>(acc);
    }
    return out;
  }

  /// An integer vector whose image under forward is e_a.
  const std::vector<Coord>& section(std::size_t a) const { return smith.v_inv[kept[a]]; }
};

inline CyclicPresentation cyclic_presentation(const Matrix& relations, std::size_t cols) {
  CyclicPresentation cp;
  cp.smith = smith_form(relations, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    if (cp.smith.diag[i] == 0) throw Error(Errc::BadParameters, "relation lattice does not have full rank");
    if (cp.smith.diag[i] == 1) continue;
    cp.kept.push_back(i);
    cp.orders.push_back(cp.smith.diag[i]);
  }
  return cp;
}

}  // namespace finring::detail
