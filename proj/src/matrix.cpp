#include "exactgrp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace exactgrp {

CycNum det(CycMatrix const &a) {
  int n = a.dim();
  if (n <= 4) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    CycNum total;
    do {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (p[i] > p[j])
            ++inversions;
      CycNum term = inversions % 2 ? -1 : 1;
      for (int i = 0; i < n && !term.is_zero(); ++i)
        term *= a(i, p[i]);
      total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
  }
  CycMatrix m = a;
  CycNum d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m(piv, c).is_zero())
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (int k = 0; k < n; ++k)
        std::swap(m(piv, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    CycNum inv = m(c, c).inv();
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero())
        continue;
      CycNum f = m(r, c) * inv;
      for (int k = c; k < n; ++k)
        m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(std::vector<RowVector<CycNum>> &rows, int ncols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero())
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    CycNum inv = rows[r][c].inv();
    for (auto &x : rows[r])
      x *= inv;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c].is_zero())
        continue;
      CycNum f = rows[o][c];
      for (int k = c; k < ncols; ++k)
        rows[o][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RowVector<CycNum>> nullspace(CycMatrix const &a) {
  int n = a.dim();
  std::vector<RowVector<CycNum>> rows(n, RowVector<CycNum>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = a(i, j);
  auto pivots = rref(rows, n);
  std::vector<RowVector<CycNum>> basis;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
      continue;
    RowVector<CycNum> x(n);
    x[f] = 1;
    for (size_t p = 0; p < pivots.size(); ++p)
      x[pivots[p]] = -rows[p][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(CycMatrix const &a) { return a.dim() - static_cast<int>(nullspace(a).size()); }

int rank_of_rows(std::vector<RowVector<CycNum>> rows) {
  if (rows.empty())
    return 0;
  return static_cast<int>(rref(rows, static_cast<int>(rows[0].size())).size());
}

std::vector<RowVector<QuatNum>> quat_fixed_space(std::vector<QuatMatrix> const &s) {
  if (s.empty())
    return {};
  int n = s[0].dim();
  // equation j of M: sum_i x_i (M - I)_ij = 0, stored as the coefficient row over i.
  // Equations may be scaled on the right and added.
  std::vector<RowVector<QuatNum>> eqs;
  for (auto const &m : s) {
    if (m.dim() != n)
      throw DimensionMismatch();
    for (int j = 0; j < n; ++j) {
      RowVector<QuatNum> e(n);
      for (int i = 0; i < n; ++i)
        e[i] = m(i, j) - (i == j ? QuatNum(1) : QuatNum(0));
      eqs.push_back(std::move(e));
    }
  }
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < n && r < eqs.size(); ++c) {
    size_t piv = r;
    while (piv < eqs.size() && eqs[piv][c].is_zero())
      ++piv;
    if (piv == eqs.size())
      continue;
    std::swap(eqs[piv], eqs[r]);
    QuatNum inv = eqs[r][c].inv();
    for (auto &x : eqs[r])
      x = x * inv;
    for (size_t o = 0; o < eqs.size(); ++o) {
      if (o == r || eqs[o][c].is_zero())
        continue;
      QuatNum f = eqs[o][c];
      for (int k = 0; k < n; ++k)
        eqs[o][k] -= eqs[r][k] * f;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<RowVector<QuatNum>> basis;
  for (int f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
      continue;
    RowVector<QuatNum> x(n);
    x[f] = 1;
    for (size_t p = 0; p < pivots.size(); ++p)
      x[pivots[p]] = -eqs[p][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

template <class S, class F> Matrix<S> parse_matrix(std::string const &text, F parse) {
  std::vector<std::vector<S>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<S> r;
    std::stringstream es(row);
    std::string ent;
    while (std::getline(es, ent, ','))
      r.push_back(parse(ent));
    rows.push_back(std::move(r));
  }
  int n = static_cast<int>(rows.size());
  Matrix<S> m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("matrix literal is not square: " + text);
    for (int j = 0; j < n; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

CycMatrix parse_cyc_matrix(std::string const &text) {
  return parse_matrix<CycNum>(text, [](std::string const &s) { return parse_cyc(s); });
}

QuatMatrix parse_quat_matrix(std::string const &text) {
  return parse_matrix<QuatNum>(text, [](std::string const &s) { return parse_quat(s); });
}

}  // namespace exactgrp
