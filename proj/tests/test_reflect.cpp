#include "doctest.h"
#include "exactgrp/catalog.hpp"
#include "exactgrp/reflect.hpp"

#include <set>

using namespace exactgrp;

namespace {

FinMatGroup const &g648() {
  static FinMatGroup g = FinMatGroup::closure(catalog::get("g648").cyc);
  return g;
}

MirrorSet const &mirrors() {
  static MirrorSet m = reflection_scan(g648());
  return m;
}

}  // namespace

TEST_CASE("648 group has 24 reflections in 12 mirrors") {
  auto const &m = mirrors();
  CHECK(m.mirrors.size() == 12);
  CHECK(m.reflection_count() == 24);
  CHECK(m.identity_count == 1);
  CHECK(m.other_count == 648 - 25);
  std::set<std::string> roots;
  for (auto const &mir : m.mirrors) {
    roots.insert(vector_key(mir.root));
    REQUIRE(mir.reflections.size() == 2);
    CHECK(mir.reflections[0].lambda * mir.reflections[1].lambda == CycNum(1));
    CHECK(mir.reflections[0].matrix * mir.reflections[1].matrix == CycMatrix::identity(3));
    for (auto const &r : mir.reflections)
      CHECK(is_unitary(r.matrix));
  }
  auto t = CycNum::t();
  for (RowVector<CycNum> r : {RowVector<CycNum>{t, 0, 0}, {0, t, 0}, {0, 0, t}, {1, 1, 1}})
    CHECK(roots.count(vector_key(normalize_left(r))));
}

TEST_CASE("reflection formula reproduces the scanned reflections") {
  std::set<std::string> scanned, built;
  std::vector<CycMatrix> gens;
  for (auto const &mir : mirrors().mirrors) {
    for (auto const &r : mir.reflections)
      scanned.insert(r.matrix.key());
    for (auto const &l : {CycNum::v(), CycNum::w()}) {
      auto m = build_complex_reflection(mir.root, l);
      built.insert(m.key());
      gens.push_back(m);
      CHECK(det(m) == l);
    }
  }
  CHECK(scanned == built);
  CHECK(FinMatGroup::closure(gens).order() == 648);

  auto t = CycNum::t();
  auto d = build_complex_reflection({t, 0, 0}, CycNum::v());
  CHECK(d == CycMatrix::diag({CycNum::v(), 1, 1}));
  CHECK(g648().index_of(d) >= 0);
  CHECK(build_complex_reflection({1, 2, CycNum::i()}, 1) == CycMatrix::identity(3));
  CHECK_THROWS_AS(build_complex_reflection({0, 0, 0}, CycNum::v()), ZeroRoot);
  auto id = FinMatGroup::closure(std::vector<CycMatrix>{CycMatrix::identity(3)});
  CHECK(reflection_scan(id).reflection_count() == 0);
}

TEST_CASE("quaternionic reflections") {
  auto const &e = catalog::get("quat_mirrors");
  auto const &roots = e.quat_vectors;
  REQUIRE(roots.size() == 9);
  QuatNum minus1(-1);
  auto r0 = build_quaternionic_reflection(roots[0], minus1);
  CHECK(r0 == QuatMatrix::diag({-1, 1, 1, 1}));
  CHECK(r0 * build_quaternionic_reflection(roots[1], minus1) == catalog::quat("q648_gellmann"));

  // order 2: any left scalar on the root gives the same matrix
  for (auto const &mu : {QuatNum::j(), QuatNum(1, 1, 0, 0), QuatNum(-1, 1, 1, 1)}) {
    RowVector<QuatNum> s;
    for (auto const &x : roots[3])
      s.push_back(mu * x);
    CHECK(build_quaternionic_reflection(s, minus1) == build_quaternionic_reflection(roots[3], minus1));
  }
  // other eigenvalues: scaling the root by mu conjugates lambda
  QuatNum lambda = parse_quat("v");
  QuatNum mu = QuatNum::j();
  RowVector<QuatNum> s;
  for (auto const &x : roots[1])
    s.push_back(mu * x);
  CHECK(build_quaternionic_reflection(s, lambda) == build_quaternionic_reflection(roots[1], mu.inv() * lambda * mu));
  CHECK(build_quaternionic_reflection(s, lambda) != build_quaternionic_reflection(roots[1], lambda));
  CHECK_THROWS_AS(build_quaternionic_reflection({0, 0, 0, 0}, minus1), ZeroRoot);

  // products of the first reflection with the other eight generate G27
  std::vector<QuatMatrix> prods;
  for (size_t k = 1; k < roots.size(); ++k) {
    auto r = build_quaternionic_reflection(roots[k], minus1);
    CHECK(r * r == QuatMatrix::identity(4));
    prods.push_back(r0 * r);
  }
  auto g = FinMatGroup::closure(prods);
  CHECK(g.order() == 27);
  auto ref = FinMatGroup::closure(catalog::get("g27q").quat);
  for (int k = 0; k < g.order(); ++k)
    CHECK(ref.index_of(g.quat(k)) >= 0);
}

TEST_CASE("realified mirrors generate a group of order 51840") {
  std::vector<RowVector<CycNum>> roots;
  for (auto const &mir : mirrors().mirrors)
    roots.push_back(mir.root);
  auto e6 = realify_to_e6(roots);
  CHECK(e6.lines.size() == 36);
  CHECK(e6.group.order() == 51840);
  for (auto const &r : e6.reflections) {
    CHECK(r * r == CycMatrix::identity(6));
    CHECK(rank(r - CycMatrix::identity(6)) == 1);
  }
  CHECK(eisenstein_coords(CycNum::t())[0] == 1);
  CHECK(eisenstein_coords(CycNum::t())[1] == 2);
  CHECK_THROWS(eisenstein_coords(CycNum::i()));
}

TEST_CASE("top row mirrors give a binary tetrahedral group") {
  for (auto const &c : top_row_check(mirrors()).checks)
    CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}
