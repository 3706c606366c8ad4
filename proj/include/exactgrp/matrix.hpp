#pragma once

#include "exactgrp/scalars.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace exactgrp {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};

struct UnsupportedForQuaternionic : std::logic_error {
  UnsupportedForQuaternionic() : std::logic_error("operation needs commutative scalars") {}
};

inline CycNum conj(CycNum const &a) { return a.conj(); }
inline QuatNum conj(QuatNum const &a) { return a.conj(); }

template <class S> using RowVector = std::vector<S>;

template <class S> class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }
  static Matrix scalar(int n, S const &s) {
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      m(i, i) = s;
    return m;
  }
  static Matrix diag(std::vector<S> const &d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n_; ++i)
      m(i, i) = d[i];
    return m;
  }

  int dim() const { return n_; }
  S &operator()(int r, int c) { return e_[static_cast<size_t>(r) * n_ + c]; }
  S const &operator()(int r, int c) const { return e_[static_cast<size_t>(r) * n_ + c]; }
  std::vector<S> const &entries() const { return e_; }

  Matrix operator-() const {
    Matrix m(n_);
    for (size_t k = 0; k < e_.size(); ++k)
      m.e_[k] = -e_[k];
    return m;
  }
  friend Matrix operator+(Matrix const &a, Matrix const &b) {
    check(a, b);
    Matrix m(a.n_);
    for (size_t k = 0; k < a.e_.size(); ++k)
      m.e_[k] = a.e_[k] + b.e_[k];
    return m;
  }
  friend Matrix operator-(Matrix const &a, Matrix const &b) {
    check(a, b);
    Matrix m(a.n_);
    for (size_t k = 0; k < a.e_.size(); ++k)
      m.e_[k] = a.e_[k] - b.e_[k];
    return m;
  }
  friend Matrix operator*(Matrix const &a, Matrix const &b) {
    check(a, b);
    int n = a.n_;
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        S const &x = a(i, k);
        if (x.is_zero())
          continue;
        for (int j = 0; j < n; ++j)
          if (!b(k, j).is_zero())
            m(i, j) += x * b(k, j);
      }
    return m;
  }
  // scalar on the left
  friend Matrix operator*(S const &s, Matrix const &a) {
    Matrix m(a.n_);
    for (size_t k = 0; k < a.e_.size(); ++k)
      m.e_[k] = s * a.e_[k];
    return m;
  }
  friend bool operator==(Matrix const &a, Matrix const &b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(Matrix const &a, Matrix const &b) { return !(a == b); }

  S trace() const {
    S s;
    for (int i = 0; i < n_; ++i)
      s += (*this)(i, i);
    return s;
  }

  bool is_scalar() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j ? !(*this)(i, j).is_zero() : (*this)(i, j) != (*this)(0, 0))
          return false;
    return true;
  }

  // canonical key: entry keys joined row-major
  std::string key() const {
    std::string s;
    for (size_t k = 0; k < e_.size(); ++k) {
      if (k)
        s += ";";
      s += e_[k].key();
    }
    return s;
  }

  std::string pretty() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (i)
        s += "; ";
      for (int j = 0; j < n_; ++j) {
        if (j)
          s += ", ";
        s += (*this)(i, j).pretty();
      }
    }
    return "[" + s + "]";
  }

private:
  static void check(Matrix const &a, Matrix const &b) {
    if (a.n_ != b.n_)
      throw DimensionMismatch();
  }
  int n_ = 0;
  std::vector<S> e_;
};

using CycMatrix = Matrix<CycNum>;
using QuatMatrix = Matrix<QuatNum>;

template <class S> Matrix<S> mat_mul(Matrix<S> const &a, Matrix<S> const &b) { return a * b; }

template <class S> Matrix<S> dagger(Matrix<S> const &a) {
  Matrix<S> m(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      m(j, i) = conj(a(i, j));
  return m;
}

template <class S> bool is_unitary(Matrix<S> const &a) {
  return a * dagger(a) == Matrix<S>::identity(a.dim());
}

// row vector times matrix (right action)
template <class S> RowVector<S> apply_right(RowVector<S> const &x, Matrix<S> const &m) {
  if (static_cast<int>(x.size()) != m.dim())
    throw DimensionMismatch();
  RowVector<S> y(x.size());
  for (int j = 0; j < m.dim(); ++j)
    for (int i = 0; i < m.dim(); ++i)
      y[j] += x[i] * m(i, j);
  return y;
}

// matrix times column vector (left action)
template <class S> RowVector<S> apply_left(Matrix<S> const &m, RowVector<S> const &x) {
  if (static_cast<int>(x.size()) != m.dim())
    throw DimensionMismatch();
  RowVector<S> y(x.size());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      y[i] += m(i, j) * x[j];
  return y;
}

// divide on the left by the first nonzero entry
template <class S> RowVector<S> normalize_left(RowVector<S> x) {
  for (auto const &e : x)
    if (!e.is_zero()) {
      S inv = e.inv();
      for (auto &f : x)
        f = inv * f;
      break;
    }
  return x;
}

template <class S> std::string vector_key(RowVector<S> const &x) {
  std::string s;
  for (size_t k = 0; k < x.size(); ++k) {
    if (k)
      s += ";";
    s += x[k].key();
  }
  return s;
}

template <class S> std::string vector_pretty(RowVector<S> const &x) {
  std::string s = "(";
  for (size_t k = 0; k < x.size(); ++k) {
    if (k)
      s += ",";
    s += x[k].pretty();
  }
  return s + ")";
}

CycNum det(CycMatrix const &a);
inline CycNum det(QuatMatrix const &) { throw UnsupportedForQuaternionic(); }

// basis of {x : A x = 0}, x a column vector
std::vector<RowVector<CycNum>> nullspace(CycMatrix const &a);
int rank(CycMatrix const &a);
// rank of a list of vectors (rows)
int rank_of_rows(std::vector<RowVector<CycNum>> rows);

// basis of the left module {x : x M = x for all M in S}
std::vector<RowVector<QuatNum>> quat_fixed_space(std::vector<QuatMatrix> const &s);

// rows separated by ';', entries by ','
CycMatrix parse_cyc_matrix(std::string const &text);
QuatMatrix parse_quat_matrix(std::string const &text);

}  // namespace exactgrp
