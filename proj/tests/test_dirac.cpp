#include "doctest.h"
#include "exactgrp/catalog.hpp"
#include "exactgrp/dirac.hpp"
#include "exactgrp/store.hpp"

using namespace exactgrp;

namespace {

FinMatGroup const &e128() {
  static FinMatGroup g = FinMatGroup::closure(catalog::get("e128").quat);
  return g;
}

void all_pass(CheckReport const &rep) {
  REQUIRE(!rep.checks.empty());
  for (auto const &c : rep.checks)
    CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

}  // namespace

TEST_CASE("clifford signatures") {
  auto const &q = [](char const *n) { return catalog::quat(n); };
  std::vector<QuatMatrix> real = {q("igamma0_real"), q("igamma1"), q("igamma2"), q("igamma3")};
  CHECK(clifford_signature(real).name() == "Cl(3,1)");
  std::vector<QuatMatrix> perm = {real[2], real[0], real[3], real[1]};
  CHECK(clifford_signature(perm) == clifford_signature(real));
  CHECK_THROWS_AS(clifford_signature({q("igamma1"), q("gamma12"), q("igamma1")}), NotCliffordSet);
  CHECK_THROWS_AS(clifford_signature({q("g27centre")}), NotCliffordSet);
  CHECK(clifford_signature({}).name() == "Cl(0,0)");
  all_pass(clifford_check());
}

TEST_CASE("named products") {
  auto rep = named_product_check();
  for (auto const &c : rep.checks)
    if (c.name != "gamma05 = gamma0 gamma5" && c.name != "igamma123 = i gamma1 gamma2 gamma3")
      CHECK_MESSAGE(c.pass, c.name);
  CHECK_FALSE(rep.find("igamma123 = i gamma1 gamma2 gamma3")->pass);
  // the printed gamma0 gamma5 is the product in the other order
  CHECK_FALSE(rep.find("gamma05 = gamma0 gamma5")->pass);
}

TEST_CASE("inverse and the column product") {
  auto const &g = catalog::quat("gellmann4q2");
  CHECK(quat_inverse(g) * g == QuatMatrix::identity(4));
  CHECK(quat_inverse(g) == dagger(g));
  CHECK_THROWS_AS(column_inverse(g), NotInvertible);
  auto const &p = catalog::quat("pauli4q1");
  CHECK(column_mul(column_inverse(p), p) == QuatMatrix::identity(4));
  CHECK_THROWS_AS(quat_inverse(QuatMatrix(4)), NotInvertible);
  auto const &m = catalog::quat("gamma5");
  CHECK(conjugate_action(QuatMatrix::identity(4), m) == m);
  // real matrices: both products agree
  auto const &h = catalog::quat("gellmann4q1");
  CHECK(column_mul(h, catalog::quat("gamma12")) == h * catalog::quat("gamma12"));
}

TEST_CASE("E128 census") {
  CHECK(e128().order() == 128);
  auto rep = group_report(*e128().cayley());
  CHECK(rep.extraspecial);
  CHECK(rep.center_order == 2);
  CHECK(rep.central_quotient_rank == 6);
  auto c = e128_census(e128(), spin_q8());
  CHECK(c.q8_subgroups == 120);
  CHECK(c.factorizations == 40);
  CHECK(c.commuting_involutions == 9);
  CHECK(c.anticommuting_partners == 4);
}

TEST_CASE("column subgroups") { all_pass(column_triple_check(e128())); }

TEST_CASE("displayed conjugations") {
  auto rep = conjugation_display_check();
  for (auto const &c : rep.checks)
    if (c.name.rfind("pauli4q1 on", 0) != 0)
      CHECK_MESSAGE(c.pass, c.name);
  // under g^-1 m g only the scalar matrix lands on its printed image
  CHECK(rep.find("pauli4q1 on e128_iI gives diracmixed1")->pass);
  CHECK_FALSE(rep.find("pauli4q1 on gamma3 gives diracmixed2")->pass);
  CHECK_FALSE(rep.find("pauli4q1 on igamma123 gives diracmixed3")->pass);
}

TEST_CASE("Gell-Mann matrices keep the columns, Pauli matrices do not") { all_pass(column_preservation_check()); }

TEST_CASE("centre of G27") { all_pass(center_action_check()); }

TEST_CASE("combined group") {
  auto combined = FinMatGroup::closure(catalog::get("combined82944").quat);
  auto q648 = FinMatGroup::closure(catalog::get("q648").quat);
  all_pass(combined_group_checks(combined, e128(), q648));
  all_pass(automorphism_check(combined, 40));
  auto q8 = FinMatGroup::closure(spin_q8());
  CHECK(conjugation_orbit_count(q8, spin_q8()) == 1);
  int e = conjugation_orbit_count(e128(), spin_q8());
  CHECK(128 % e == 0);
}

TEST_CASE("spinor character") {
  GroupStore st;
  auto s = spinor_character(st);
  CHECK(s.exact);
  CHECK(s.character.degree() == CycNum(8));
  CHECK(s.decomposition == "2a+3b+3b*");
  MESSAGE("untwisted: " << s.untwisted << ", twist " << s.twist);
}
