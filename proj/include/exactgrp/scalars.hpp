#pragma once

#include <array>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactgrp {

using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// lowest-terms "num/den", den omitted when 1
std::string rational_key(Rational const &q);

// Element of Q(z), z a primitive 12th root of unity, stored in the power
// basis 1, z, z^2, z^3 with z^4 = z^2 - 1.
class CycNum {
public:
  CycNum() = default;
  CycNum(long n) { c_[0] = n; }
  CycNum(Rational const &q) {
    c_[0] = q;
    c_[0].canonicalize();
  }
  CycNum(Rational c0, Rational c1, Rational c2, Rational c3);

  static CycNum zeta();
  static CycNum v();  // exp(2 pi i / 3)
  static CycNum w();  // v^2
  static CycNum i();
  static CycNum t();  // v - w, t^2 = -3

  Rational const &coeff(int k) const { return c_[k]; }
  bool is_zero() const;
  bool is_rational() const;

  CycNum operator-() const;
  CycNum &operator+=(CycNum const &o);
  CycNum &operator-=(CycNum const &o);
  CycNum &operator*=(CycNum const &o);
  friend CycNum operator+(CycNum a, CycNum const &b) { return a += b; }
  friend CycNum operator-(CycNum a, CycNum const &b) { return a -= b; }
  friend CycNum operator*(CycNum a, CycNum const &b) { return a *= b; }
  friend CycNum operator/(CycNum const &a, CycNum const &b) { return a * b.inv(); }
  friend bool operator==(CycNum const &a, CycNum const &b) { return a.c_ == b.c_; }
  friend bool operator!=(CycNum const &a, CycNum const &b) { return !(a == b); }

  CycNum inv() const;
  CycNum conj() const;
  // Galois automorphism z -> z^k, k coprime to 12
  CycNum galois(int k) const;

  std::string key() const;
  // short form over the tokens v, w, t, i where possible ("2v", "-wt")
  std::string pretty() const;

private:
  std::array<Rational, 4> c_{};
};

class QuatNum {
public:
  QuatNum() = default;
  QuatNum(long n) { c_[0] = n; }
  QuatNum(Rational const &q) {
    c_[0] = q;
    c_[0].canonicalize();
  }
  QuatNum(Rational a, Rational b, Rational c, Rational d);

  static QuatNum i() { return {0, 1, 0, 0}; }
  static QuatNum j() { return {0, 0, 1, 0}; }
  static QuatNum k() { return {0, 0, 0, 1}; }

  Rational const &coeff(int k) const { return c_[k]; }
  bool is_zero() const;
  Rational norm() const;

  QuatNum operator-() const;
  QuatNum &operator+=(QuatNum const &o);
  QuatNum &operator-=(QuatNum const &o);
  friend QuatNum operator+(QuatNum a, QuatNum const &b) { return a += b; }
  friend QuatNum operator-(QuatNum a, QuatNum const &b) { return a -= b; }
  friend QuatNum operator*(QuatNum const &a, QuatNum const &b);
  friend bool operator==(QuatNum const &a, QuatNum const &b) { return a.c_ == b.c_; }
  friend bool operator!=(QuatNum const &a, QuatNum const &b) { return !(a == b); }

  QuatNum conj() const;
  QuatNum inv() const;

  std::string key() const;
  std::string pretty() const;

private:
  std::array<Rational, 4> c_{};
};

CycNum cyc_mul(CycNum const &a, CycNum const &b);
CycNum cyc_inv(CycNum const &a);
CycNum cyc_conj(CycNum const &a);
QuatNum quat_mul(QuatNum const &p, QuatNum const &q);
QuatNum quat_conj(QuatNum const &p);

// Literal grammar: sum of terms, each a signed rational coefficient times an
// optional product of tokens from {i, j, k, v, w, t}; "/" gives denominators.
// Examples: "-1/2+i/2", "2v", "-wt/3", "(-1+i+j+k)/2".
CycNum parse_cyc(std::string_view s);
QuatNum parse_quat(std::string_view s);

}  // namespace exactgrp
