#include "doctest.h"
#include "exactgrp/scalars.hpp"

#include <random>

using namespace exactgrp;

namespace {

Rational small_rat(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

CycNum random_cyc(std::mt19937 &rng) {
  return {small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng)};
}

QuatNum random_quat(std::mt19937 &rng) {
  return {small_rat(rng), small_rat(rng), small_rat(rng), small_rat(rng)};
}

}  // namespace

TEST_CASE("cyclotomic constants") {
  CycNum v = CycNum::v(), w = CycNum::w(), t = CycNum::t(), i = CycNum::i();
  CHECK(v * w == CycNum(1));
  CHECK(v * v * v == CycNum(1));
  CHECK(CycNum(1) + v + w == CycNum(0));
  CHECK(t * t == CycNum(-3));
  CHECK(i * i == CycNum(-1));
  CHECK(t == v - w);
  CHECK(v * v == w);
}

TEST_CASE("cyc_inv") {
  CHECK(cyc_inv(CycNum::v()) == CycNum::w());
  CHECK(cyc_inv(CycNum::t()) == CycNum(Rational(-1, 3)) * CycNum::t());
  CHECK(cyc_inv(CycNum(2)) == CycNum(Rational(1, 2)));
  CHECK_THROWS_AS(cyc_inv(CycNum(0)), DivisionByZero);
}

TEST_CASE("cyc_conj") {
  CHECK(cyc_conj(CycNum::v()) == CycNum::w());
  CHECK(cyc_conj(CycNum::i()) == -CycNum::i());
  CHECK(cyc_conj(CycNum::t()) == -CycNum::t());
  CHECK(CycNum::zeta().galois(11) == cyc_conj(CycNum::zeta()));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(cyc_conj(a * b) == cyc_conj(a) * cyc_conj(b));
    CHECK(cyc_conj(cyc_conj(a)) == a);
    if (!a.is_zero()) {
      CHECK(a * a.inv() == CycNum(1));
      CHECK(a.inv().inv() == a);
    }
    for (int k : {5, 7, 11})
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
  }
}

TEST_CASE("quaternions") {
  QuatNum i = QuatNum::i(), j = QuatNum::j(), k = QuatNum::k();
  CHECK(quat_mul(i, j) == k);
  CHECK(j * i == -k);
  CHECK(i * i == QuatNum(-1));
  QuatNum W(Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2));
  CHECK(W * W * W == QuatNum(1));
  QuatNum q(1, 1, 0, 0);
  CHECK(q * quat_conj(q) == QuatNum(2));
  CHECK(quat_conj(i) == -i);
  CHECK(quat_conj(QuatNum(1, 1, 1, 1)) == QuatNum(1, -1, -1, -1));
  QuatNum r(Rational(3, 2), 0, 0, 1);
  CHECK(quat_conj(quat_conj(r)) == r);
}

TEST_CASE("quaternion norm is multiplicative") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    QuatNum p = random_quat(rng), q = random_quat(rng);
    CHECK((p * q).norm() == p.norm() * q.norm());
    CHECK(quat_conj(p * q) == quat_conj(q) * quat_conj(p));
    if (!p.is_zero())
      CHECK(p * p.inv() == QuatNum(1));
  }
}

TEST_CASE("literal parsing") {
  CHECK(parse_cyc("v") == CycNum::v());
  CHECK(parse_cyc("-w") == -CycNum::w());
  CHECK(parse_cyc("2v") == CycNum(2) * CycNum::v());
  CHECK(parse_cyc("-t/3") == CycNum(Rational(-1, 3)) * CycNum::t());
  CHECK(parse_cyc("(-1+i)/2") == CycNum(Rational(-1, 2)) + CycNum(Rational(1, 2)) * CycNum::i());
  CHECK(parse_cyc("vt") == CycNum::v() * CycNum::t());
  CHECK(parse_quat("(-1+i+j+k)/2") == parse_quat("v"));
  CHECK(parse_quat("ij") == QuatNum::k());
  CHECK(parse_quat("ji") == -QuatNum::k());
  CHECK_THROWS_AS(parse_cyc("j"), ParseError);
  CHECK_THROWS_AS(parse_cyc("1+"), ParseError);
  CHECK_THROWS_AS(parse_quat("t"), ParseError);
}

TEST_CASE("pretty strings round trip") {
  for (char const *s : {"v", "-w", "t", "2v", "-wt", "vt", "1/2", "-3", "i", "0"})
    CHECK(parse_cyc(parse_cyc(s).pretty()) == parse_cyc(s));
  CHECK(parse_cyc("2v").pretty() == "2v");
  CHECK(parse_cyc("-t").pretty() == "-t");
  CHECK(parse_cyc("1+2v").pretty() == "t");
  std::mt19937 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    CycNum a = random_cyc(rng);
    CHECK(parse_cyc(a.pretty()) == a);
    QuatNum q = random_quat(rng);
    CHECK(parse_quat(q.pretty()) == q);
  }
}

TEST_CASE("canonical key") {
  CHECK(CycNum(Rational(2, 4)).key() == "1/2,0,0,0");
  CHECK(CycNum::v().key() == "-1,0,1,0");
  CHECK(QuatNum(Rational(-1, 2), 0, 0, 1).key() == "-1/2,0,0,1");
}
