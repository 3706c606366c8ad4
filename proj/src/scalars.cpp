#include "exactgrp/scalars.hpp"

#include <cctype>
#include <vector>

namespace exactgrp {

std::string rational_key(Rational const &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

// "3v/2", "-t", "v" style printing of q * tok
std::string scaled_token(Rational const &q, std::string const &tok) {
  if (tok.empty())
    return rational_key(q);
  std::string out;
  mpz_class n = q.get_num();
  if (n < 0) {
    out += "-";
    n = -n;
  }
  if (n != 1)
    out += n.get_str();
  out += tok;
  if (q.get_den() != 1)
    out += "/" + q.get_den().get_str();
  return out;
}

void append_term(std::string &out, std::string term) {
  if (!out.empty() && term[0] != '-')
    out += "+";
  out += term;
}

}  // namespace

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto &x : c_)
    x.canonicalize();
}

CycNum CycNum::zeta() { return {0, 1, 0, 0}; }
CycNum CycNum::v() { return {-1, 0, 1, 0}; }
CycNum CycNum::w() { return {0, 0, -1, 0}; }
CycNum CycNum::i() { return {0, 0, 0, 1}; }
CycNum CycNum::t() { return {-1, 0, 2, 0}; }

bool CycNum::is_zero() const {
  for (auto const &x : c_)
    if (x != 0)
      return false;
  return true;
}

bool CycNum::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

CycNum CycNum::operator-() const {
  CycNum r;
  for (int k = 0; k < 4; ++k)
    r.c_[k] = -c_[k];
  return r;
}

CycNum &CycNum::operator+=(CycNum const &o) {
  for (int k = 0; k < 4; ++k)
    c_[k] += o.c_[k];
  return *this;
}

CycNum &CycNum::operator-=(CycNum const &o) {
  for (int k = 0; k < 4; ++k)
    c_[k] -= o.c_[k];
  return *this;
}

CycNum &CycNum::operator*=(CycNum const &o) {
  std::array<Rational, 7> d{};
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0)
      continue;
    for (int b = 0; b < 4; ++b)
      if (o.c_[b] != 0)
        d[a + b] += c_[a] * o.c_[b];
  }
  // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
  d[0] -= d[6];
  d[3] += d[5];
  d[1] -= d[5];
  d[2] += d[4];
  d[0] -= d[4];
  for (int k = 0; k < 4; ++k)
    c_[k] = d[k];
  return *this;
}

CycNum CycNum::inv() const {
  if (is_zero())
    throw DivisionByZero();
  // column m of A holds the coordinates of this * z^m; solve A x = e0
  Rational A[4][5];
  CycNum col = *this;
  for (int m = 0; m < 4; ++m) {
    for (int r = 0; r < 4; ++r)
      A[r][m] = col.c_[r];
    col *= zeta();
  }
  for (int r = 0; r < 4; ++r)
    A[r][4] = r == 0 ? 1 : 0;
  for (int p = 0; p < 4; ++p) {
    int piv = p;
    while (A[piv][p] == 0)
      ++piv;
    if (piv != p)
      for (int c = 0; c < 5; ++c)
        std::swap(A[piv][c], A[p][c]);
    Rational s = A[p][p];
    for (int c = p; c < 5; ++c)
      A[p][c] /= s;
    for (int r = 0; r < 4; ++r) {
      if (r == p || A[r][p] == 0)
        continue;
      Rational f = A[r][p];
      for (int c = p; c < 5; ++c)
        A[r][c] -= f * A[p][c];
    }
  }
  return {A[0][4], A[1][4], A[2][4], A[3][4]};
}

CycNum CycNum::conj() const {
  return {c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]};
}

CycNum CycNum::galois(int k) const {
  k = ((k % 12) + 12) % 12;
  if (k % 2 == 0 || k % 3 == 0)
    throw std::invalid_argument("galois exponent must be coprime to 12");
  CycNum zk = 1;
  for (int e = 0; e < k; ++e)
    zk *= zeta();
  CycNum out, p = 1;
  for (int m = 0; m < 4; ++m) {
    out += CycNum(c_[m]) * p;
    p *= zk;
  }
  return out;
}

std::string CycNum::key() const {
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (k)
      s += ",";
    s += rational_key(c_[k]);
  }
  return s;
}

std::string CycNum::pretty() const {
  if (is_rational())
    return rational_key(c_[0]);
  static std::vector<std::pair<std::string, CycNum>> const units = {
      {"v", v()},        {"w", w()},        {"t", t()},
      {"vt", v() * t()}, {"wt", w() * t()}, {"i", i()},
      {"iv", i() * v()}, {"iw", i() * w()}, {"z", zeta()}};
  for (auto const &[tok, u] : units) {
    CycNum q = *this * u.inv();
    if (q.is_rational())
      return scaled_token(q.c_[0], tok);
  }
  // a + b v + c i + d iv
  std::string out;
  Rational const parts[4] = {c_[0] + c_[2], c_[2], c_[3], -c_[1]};
  static char const *const tok[4] = {"", "v", "i", "iv"};
  for (int k = 0; k < 4; ++k)
    if (parts[k] != 0)
      append_term(out, scaled_token(parts[k], tok[k]));
  return out;
}

CycNum cyc_mul(CycNum const &a, CycNum const &b) { return a * b; }
CycNum cyc_inv(CycNum const &a) { return a.inv(); }
CycNum cyc_conj(CycNum const &a) { return a.conj(); }

// ---------------------------------------------------------------- QuatNum

QuatNum::QuatNum(Rational a, Rational b, Rational c, Rational d)
    : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto &x : c_)
    x.canonicalize();
}

bool QuatNum::is_zero() const {
  for (auto const &x : c_)
    if (x != 0)
      return false;
  return true;
}

Rational QuatNum::norm() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

QuatNum QuatNum::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

QuatNum &QuatNum::operator+=(QuatNum const &o) {
  for (int k = 0; k < 4; ++k)
    c_[k] += o.c_[k];
  return *this;
}

QuatNum &QuatNum::operator-=(QuatNum const &o) {
  for (int k = 0; k < 4; ++k)
    c_[k] -= o.c_[k];
  return *this;
}

QuatNum operator*(QuatNum const &p, QuatNum const &q) {
  auto const &a = p.c_;
  auto const &b = q.c_;
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

QuatNum QuatNum::conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }

QuatNum QuatNum::inv() const {
  Rational n = norm();
  if (n == 0)
    throw DivisionByZero();
  QuatNum c = conj();
  for (auto &x : c.c_)
    x /= n;
  return c;
}

std::string QuatNum::key() const {
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (k)
      s += ",";
    s += rational_key(c_[k]);
  }
  return s;
}

std::string QuatNum::pretty() const {
  std::string out;
  static char const *const tok[4] = {"", "i", "j", "k"};
  for (int k = 0; k < 4; ++k)
    if (c_[k] != 0)
      append_term(out, scaled_token(c_[k], tok[k]));
  return out.empty() ? "0" : out;
}

QuatNum quat_mul(QuatNum const &p, QuatNum const &q) { return p * q; }
QuatNum quat_conj(QuatNum const &p) { return p.conj(); }

// ---------------------------------------------------------------- parsing

namespace {

template <class S> struct Tokens;

template <> struct Tokens<CycNum> {
  static CycNum get(char c, std::string_view src) {
    switch (c) {
    case 'i': return CycNum::i();
    case 'v': return CycNum::v();
    case 'w': return CycNum::w();
    case 't': return CycNum::t();
    case 'z': return CycNum::zeta();
    }
    throw ParseError("bad cyclotomic token '" + std::string(1, c) + "' in " + std::string(src));
  }
};

template <> struct Tokens<QuatNum> {
  static QuatNum get(char c, std::string_view src) {
    switch (c) {
    case 'i': return QuatNum::i();
    case 'j': return QuatNum::j();
    case 'k': return QuatNum::k();
    case 'v': return {Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    case 'w': return {Rational(-1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};
    }
    throw ParseError("bad quaternion token '" + std::string(1, c) + "' in " + std::string(src));
  }
};

template <class S> class Parser {
public:
  explicit Parser(std::string_view s) : src_(s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c)))
        buf_ += c;
  }

  S run() {
    if (buf_.empty())
      throw ParseError("empty scalar literal");
    S r = expr();
    if (pos_ != buf_.size())
      fail();
    return r;
  }

private:
  std::string_view src_;
  std::string buf_;
  size_t pos_ = 0;

  [[noreturn]] void fail() const {
    throw ParseError("cannot parse scalar literal '" + std::string(src_) + "'");
  }
  bool at(char c) const { return pos_ < buf_.size() && buf_[pos_] == c; }

  mpz_class integer() {
    size_t st = pos_;
    while (pos_ < buf_.size() && std::isdigit(static_cast<unsigned char>(buf_[pos_])))
      ++pos_;
    if (st == pos_)
      fail();
    return mpz_class(buf_.substr(st, pos_ - st));
  }

  S expr() {
    S acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (at('+') || at('-')) {
        neg = at('-');
        ++pos_;
      } else if (!first) {
        break;
      }
      S t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      if (pos_ >= buf_.size() || at(')'))
        break;
    }
    return acc;
  }

  S term() {
    S acc = 1;
    bool any = false;
    while (pos_ < buf_.size()) {
      char c = buf_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * S(Rational(integer()));
      } else if (c == '(') {
        ++pos_;
        S inner = expr();
        if (!at(')'))
          fail();
        ++pos_;
        acc = acc * inner;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        ++pos_;
        acc = acc * Tokens<S>::get(c, src_);
      } else {
        break;
      }
      any = true;
    }
    if (!any)
      fail();
    if (at('/')) {
      ++pos_;
      mpz_class d = integer();
      if (d == 0)
        throw DivisionByZero();
      acc = acc * S(Rational(mpz_class(1), d));
    }
    return acc;
  }
};

}  // namespace

CycNum parse_cyc(std::string_view s) { return Parser<CycNum>(s).run(); }
QuatNum parse_quat(std::string_view s) { return Parser<QuatNum>(s).run(); }

}  // namespace exactgrp
