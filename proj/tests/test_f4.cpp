#include "doctest.h"
#include "exactgrp/catalog.hpp"
#include "exactgrp/f4.hpp"

#include <set>

using namespace exactgrp;

TEST_CASE("F4 field axioms by enumeration") {
  for (f4::Elt a = 0; a < 4; ++a) {
    CHECK(f4::add(a, a) == 0);
    CHECK(f4::mul(a, 1) == a);
    CHECK(f4::conj(f4::conj(a)) == a);
    if (a)
      CHECK(f4::mul(a, f4::inv(a)) == 1);
    for (f4::Elt b = 0; b < 4; ++b) {
      CHECK(f4::conj(f4::mul(a, b)) == f4::mul(f4::conj(a), f4::conj(b)));
      CHECK(f4::conj(f4::add(a, b)) == f4::add(f4::conj(a), f4::conj(b)));
      for (f4::Elt c = 0; c < 4; ++c)
        CHECK(f4::mul(a, f4::add(b, c)) == f4::add(f4::mul(a, b), f4::mul(a, c)));
    }
  }
  f4::Elt const v = 2, w = 3;
  CHECK(f4::add(1, v) == w);
  CHECK(f4::add(v, w) == 1);
  CHECK(f4::mul(v, v) == w);
  CHECK(f4::mul(v, w) == 1);
  CHECK_THROWS(f4::inv(0));
}

TEST_CASE("F9 multiplicative group is cyclic of order 8") {
  int generators = 0;
  for (f9::Elt g = 1; g < 9; ++g) {
    std::set<f9::Elt> pw;
    f9::Elt x = 1;
    for (int k = 0; k < 8; ++k) {
      pw.insert(x);
      x = f9::mul(x, g);
    }
    generators += pw.size() == 8;
  }
  CHECK(generators == 4);
  CHECK(f9::mul(3, 3) == 2);  // i^2 = -1
  CHECK(f9::conj(3) == 6);    // conj(i) = -i
}

TEST_CASE("Hermitian form") {
  for (int a = 0; a < 64; ++a)
    for (int b = 0; b < 64; ++b) {
      f4::Vec x{f4::Elt(a & 3), f4::Elt((a >> 2) & 3), f4::Elt(a >> 4)};
      f4::Vec y{f4::Elt(b & 3), f4::Elt((b >> 2) & 3), f4::Elt(b >> 4)};
      CHECK(f4::herm(x, y) == f4::conj(f4::herm(y, x)));
    }
}

TEST_CASE("points and lines") {
  auto pc = classify_points();
  CHECK(pc.nonsingular.size() == 12);
  CHECK(pc.singular.size() == 9);
  std::set<std::string> ns, sg;
  for (auto const &p : pc.nonsingular)
    ns.insert(p.name());
  for (auto const &p : pc.singular)
    sg.insert(p.name());
  CHECK(ns.count("100"));
  CHECK(sg.count("011"));
  CHECK(ns.count("1wv"));
  auto lines = line_profile();
  CHECK(lines.size() == 21);
  for (auto const &l : lines) {
    CHECK(l.nonsingular + l.singular == 5);
    CHECK(l.contains_pole == l.pole.singular);
    if (l.pole.singular) {
      CHECK(l.singular == 1);
      CHECK(l.nonsingular == 4);
    } else {
      CHECK(l.singular == 3);
      CHECK(l.nonsingular == 2);
    }
  }
}

TEST_CASE("reduction mod 2") {
  auto t = CycNum::t(), v = CycNum::v();
  CHECK(reduce_mod2(t) == 1);
  CHECK(reduce_mod2(CycNum(2)) == 0);
  CHECK(reduce_mod2(v) == 2);
  CHECK(reduce_mod2(CycNum::w()) == 3);
  CHECK(reduce_mod2(CycNum(Rational(1, 3))) == 1);
  CHECK(reduce_mod2(RowVector<CycNum>{t, 0, 0}).name() == "100");
  CHECK(reduce_mod2(RowVector<CycNum>{1, 1, 1}).name() == "111");
  CHECK(reduce_mod2(RowVector<CycNum>{v, 1, 1}).name() == "1ww");
  CHECK_THROWS_AS(reduce_mod2(CycNum(Rational(1, 2))), NotEisensteinIntegral);
  CHECK_THROWS_AS(reduce_mod2(CycNum::i()), NotEisensteinIntegral);
  CHECK_THROWS_AS(reduce_mod2(RowVector<CycNum>{2, 0, 2}), NotEisensteinIntegral);
}

TEST_CASE("finite unitary groups") {
  CHECK(build_u3f4().size() == 648);
  CHECK(build_u1f4().size() == 3);
  CHECK(build_su2f9().size() == 24);
  auto su2 = su2f9_group();
  CHECK(su2.order() == 24);
  auto btg = FinMatGroup::closure(catalog::get("btg").cyc);
  CHECK(is_isomorphic(*btg.cayley(), su2));
}

TEST_CASE("geometry and quotient chain reports") {
  auto g = FinMatGroup::closure(catalog::get("g648").cyc);
  auto btg = FinMatGroup::closure(catalog::get("btg").cyc);
  auto rep = f4_geometry_checks(g, *btg.cayley());
  CHECK(rep.checks.size() >= 20);
  for (auto const &c : rep.checks)
    CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}
