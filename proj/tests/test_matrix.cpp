#include "doctest.h"
#include "exactgrp/catalog.hpp"

#include <random>

using namespace exactgrp;

namespace {

CycNum random_cyc(std::mt19937 &rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return {d(rng), d(rng), d(rng), d(rng)};
}

CycMatrix random_cyc_matrix(std::mt19937 &rng, int n) {
  CycMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = random_cyc(rng);
  return m;
}

std::vector<QuatMatrix> gellmann_eight() {
  std::vector<QuatMatrix> s;
  for (int k = 1; k <= 4; ++k) {
    auto const &m = catalog::quat("gellmann4q" + std::to_string(k));
    s.push_back(m);
    s.push_back(dagger(m));
  }
  return s;
}

}  // namespace

TEST_CASE("determinants") {
  CHECK(det(catalog::cyc("u1")) == CycNum::v());
  for (int k = 1; k <= 8; ++k)
    CHECK(det(catalog::cyc("unitary" + std::to_string(k))) == CycNum(1));
  CHECK(det(CycMatrix::identity(3)) == CycNum(1));
  CHECK_THROWS_AS(det(catalog::quat("gamma5")), UnsupportedForQuaternionic);

  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    auto a = random_cyc_matrix(rng, 3), b = random_cyc_matrix(rng, 3);
    CHECK(det(a * b) == det(a) * det(b));
  }
  // elimination path agrees with Leibniz on block diagonal input
  auto a = random_cyc_matrix(rng, 3), b = random_cyc_matrix(rng, 3);
  CycMatrix big(6);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      big(r, c) = a(r, c);
      big(r + 3, c + 3) = b(r, c);
    }
  CHECK(det(big) == det(a) * det(b));
}

TEST_CASE("nullspace") {
  auto const &tp = catalog::cyc("ternary_pauli1");
  auto ns = nullspace(tp - CycMatrix::identity(3));
  REQUIRE(ns.size() == 1);
  RowVector<CycNum> e{0, 1, -1};
  CHECK(apply_left(tp, e) == e);
  CHECK(normalize_left(ns[0]) == normalize_left(e));

  CHECK(nullspace(CycMatrix::identity(3)).empty());
  CHECK(nullspace(CycMatrix(3)).size() == 3);

  std::mt19937 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    auto a = random_cyc_matrix(rng, 4);
    // force a dependency
    for (int c = 0; c < 4; ++c)
      a(3, c) = a(0, c) + CycNum::v() * a(1, c);
    auto basis = nullspace(a);
    CHECK(rank(a) + static_cast<int>(basis.size()) == 4);
    for (auto const &x : basis)
      for (auto const &y : apply_left(a, x))
        CHECK(y.is_zero());
  }
}

TEST_CASE("quaternionic fixed spaces") {
  auto fs = quat_fixed_space(gellmann_eight());
  REQUIRE(fs.size() == 1);
  RowVector<QuatNum> expect{0, 1, parse_quat("v"), parse_quat("w")};
  CHECK(normalize_left(fs[0]) == expect);
  for (auto const &m : gellmann_eight())
    CHECK(apply_right(expect, m) == expect);

  std::vector<QuatMatrix> pauli{catalog::quat("pauli4q1"), catalog::quat("pauli4q2"), catalog::quat("pauli4q3")};
  auto fp = quat_fixed_space(pauli);
  REQUIRE(fp.size() == 1);
  CHECK(normalize_left(fp[0]) == RowVector<QuatNum>{1, 0, 0, 0});

  CHECK(quat_fixed_space({QuatMatrix::identity(4)}).size() == 4);
}

TEST_CASE("unitarity of catalog generators") {
  for (auto const &n : catalog::names(EntryKind::Matrix)) {
    auto const &e = catalog::get(n);
    bool u = e.domain == Domain::Cyc ? is_unitary(e.cyc[0]) : is_unitary(e.quat[0]);
    // the Hermitian lambda and sigma matrices are the flagged exceptions
    if (n.rfind("fourier", 0) == 0)
      continue;
    CHECK_MESSAGE(u != e.hermitian_basis, n);
  }
  std::mt19937 rng(3);
  auto names = catalog::names(EntryKind::Group);
  for (int rep = 0; rep < 30; ++rep) {
    auto const &e = catalog::get(names[rng() % names.size()]);
    if (e.domain == Domain::Cyc) {
      auto m = e.cyc[rng() % e.cyc.size()] * e.cyc[rng() % e.cyc.size()];
      CHECK(is_unitary(m));
    } else {
      auto m = e.quat[rng() % e.quat.size()] * e.quat[rng() % e.quat.size()];
      CHECK(is_unitary(m));
    }
  }
}

TEST_CASE("dagger and parsing") {
  std::mt19937 rng(5);
  auto a = random_cyc_matrix(rng, 3);
  CHECK(dagger(dagger(a)) == a);
  auto q = parse_quat_matrix("1,i;j,(1+k)/2");
  CHECK(dagger(dagger(q)) == q);
  CHECK(q(1, 1) == QuatNum(Rational(1, 2), 0, 0, Rational(1, 2)));
  CHECK_THROWS_AS(parse_cyc_matrix("1,0;0"), ParseError);
  CHECK_THROWS_AS(a * CycMatrix::identity(2), DimensionMismatch);
  CHECK(parse_cyc_matrix(a.pretty().substr(1, a.pretty().size() - 2)) == a);
}
