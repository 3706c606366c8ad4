#include "doctest.h"
#include "exactgrp/catalog.hpp"

using namespace exactgrp;

TEST_CASE("catalog lookup") {
  CHECK(catalog::get("g27").expected_order == 27);
  CHECK(catalog::get("e128").expected_order == 128);
  CHECK(catalog::get("combined82944").expected_order == 82944);
  CHECK(catalog::get("hessian216").central_quotient);
  CHECK_THROWS_AS(catalog::get("nope"), UnknownName);
  CHECK_THROWS_AS(catalog::cyc("gamma5"), UnknownName);
  for (auto const &n : catalog::names())
    CHECK_MESSAGE(!catalog::get(n).anchor.empty(), n);
}

TEST_CASE("transcription checksum") {
  // any edit to the literal catalog must update this digest deliberately
  CHECK(catalog::checksum() == "13cef3124c026ecf");
}

TEST_CASE("literal spot checks") {
  CHECK(catalog::cyc("K")(0, 1) == CycNum::i());
  CHECK(catalog::cyc("W")(1, 1) == parse_cyc("(-1-i)/2"));
  CHECK(catalog::cyc("lambda8")(2, 2) * catalog::cyc("lambda8")(2, 2) == CycNum(Rational(4, 3)));
  CHECK(catalog::cyc("ternary_pauli2")(1, 0) == parse_cyc("-wt/3"));
  CHECK(catalog::quat("gellmann4q3")(2, 1) == parse_quat("-i/2"));
  CHECK(catalog::quat("g27centre")(3, 1) == parse_quat("(-1+i+j+k)/2"));
  auto const &m = catalog::get("mirrors_literal");
  REQUIRE(m.cyc_vectors.size() == 12);
  // the printed table repeats (1,v,w)
  CHECK(m.cyc_vectors[5] == m.cyc_vectors[9]);
  CHECK(catalog::get("quat_mirrors").quat_vectors.size() == 9);
  // alternate names of the same literal
  CHECK(catalog::quat("gamma3") == catalog::quat("gamma12"));
  CHECK(catalog::quat("igamma123") == catalog::quat("gamma05"));
  CHECK(catalog::quat("gamma1") == catalog::quat("gamma23"));
  CHECK(catalog::quat("igamma02") == catalog::quat("igamma0"));
  CHECK(catalog::quat("gluon_left") == dagger(catalog::quat("gellmann4q1")));
}

TEST_CASE("gluon basis") {
  auto rep = catalog::gluon_basis_check();
  for (auto const &c : rep.checks)
    CHECK_MESSAGE(c.pass, c.name);
  CHECK(rep.find("same span as Gell-Mann")->detail == "ranks 8/8/8");
}

TEST_CASE("semidirect relations") {
  auto rep = catalog::semidirect_relation_check();
  for (auto const &c : rep.checks)
    CHECK_MESSAGE(c.pass, c.name);
  // with these factors the commutator scalar is w
  CHECK(rep.find("G27 commutator is an order 3 scalar")->detail == "x^-1 y^-1 x y = w I");
}

TEST_CASE("G27 centre commutes with the quaternionic Pauli matrices") {
  auto const &c = catalog::quat("g27centre");
  CHECK(c * c * c == QuatMatrix::identity(4));
  for (int k = 1; k <= 3; ++k) {
    auto const &p = catalog::quat("pauli4q" + std::to_string(k));
    CHECK(c * p == p * c);
  }
  auto g = FinMatGroup::closure(catalog::get("g27q").quat);
  CHECK(g.index_of(c) >= 0);
  auto z = center(*g.cayley());
  CHECK(z.size() == 3);
  CHECK(std::find(z.begin(), z.end(), g.index_of(c)) != z.end());
}
