#include "doctest.h"
#include "exactgrp/store.hpp"

#include <algorithm>

using namespace exactgrp;

namespace {

GroupStore &store() {
  static GroupStore s;
  return s;
}

int gen_index(std::string const &group, std::string const &gen) {
  auto const &names = catalog::get(group).generator_names;
  return static_cast<int>(std::find(names.begin(), names.end(), gen) - names.begin());
}

Subgroup normal_of_order(ClassedGroup const &g, size_t n) {
  for (auto const &s : normal_subgroups(*g.group, g.classes))
    if (s.size() == n)
      return s;
  return {};
}

// constituents with multiplicity, sorted by label
std::string decomposed(CharTable const &t, Character const &chi) {
  auto d = decompose(t, chi);
  REQUIRE(d.exact());
  std::vector<std::string> parts;
  for (size_t k = 0; k < d.multiplicity.size(); ++k)
    for (long r = 0; r < d.multiplicity[k].coeff(0).get_num().get_si(); ++r)
      parts.push_back(t.labels[k]);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto const &p : parts)
    out += (out.empty() ? "" : "+") + p;
  return out;
}

}  // namespace

TEST_CASE("binary tetrahedral table matches the reference") {
  auto const &t = store().table("btg");
  CHECK(t.irr.size() == 7);
  for (auto const &c : orthogonality_report(t).checks)
    CHECK_MESSAGE(c.pass, c.name);
  auto const &fm = store().group("btg");
  auto const &e = catalog::get("btg");
  CHECK(hom_character(fm, t.group, e.cyc) == t["2a"]);
  CHECK(t["2a"].values[1] == CycNum(-2));
  CHECK(linear_characters(t.group).size() == 3);
}

TEST_CASE("Hessian table matches and a perturbed reference does not") {
  auto const &t = store().table("hessian216");
  CHECK(t.irr.size() == 10);
  auto ref = hessian_reference();
  CHECK_NOTHROW(table_match(t, ref));
  ref.rows[7][4] = CycNum(3);  // 8a on a size-12 class
  CHECK_THROWS_AS(table_match(t, ref), NoMatch);
  auto ref2 = hessian_reference();
  ref2.rows[1][4] = CycNum::i();
  CHECK_THROWS_AS(table_match(t, ref2), NoMatch);
}

TEST_CASE("order 648 table: corrected faithful rows match, printed rows do not") {
  auto const &t = store().table("g648");
  CHECK(t.irr.size() == 24);
  for (auto const &c : orthogonality_report(t).checks)
    CHECK_MESSAGE(c.pass, c.name);
  auto const &mo = store().match_options_of("g648");
  CHECK_NOTHROW(table_match(t, quark_reference(), mo));
  CHECK_THROWS_AS(table_match(t, quark_reference(true), mo), NoMatch);

  // printed 3b on the Hessian columns: sum of size |x|^2 over 216 should be 1
  auto printed = quark_reference(true);
  auto const &sizes = hessian_reference().col_sizes;
  int r = static_cast<int>(std::find(printed.row_labels.begin(), printed.row_labels.end(), "3b") -
                           printed.row_labels.begin());
  CycNum norm;
  for (int c = 0; c < 10; ++c)
    norm += CycNum(sizes[c]) * printed.rows[r][c] * printed.rows[r][c].conj();
  CHECK(norm == CycNum(360));
  auto fixed = quark_reference();
  CycNum norm2;
  for (int c = 0; c < 10; ++c)
    norm2 += CycNum(sizes[c]) * fixed.rows[r][c] * fixed.rows[r][c].conj();
  CHECK(norm2 == CycNum(216));

  auto nat = natural_character(store().group("g648"), t.group);
  auto at = std::find(t.irr.begin(), t.irr.end(), nat);
  REQUIRE(at != t.irr.end());
  CHECK(t.labels[at - t.irr.begin()] == "3b*");
}

TEST_CASE("tensor relations") {
  for (auto const &c : verify_tensor_relations(store().table("g648")).checks)
    CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
}

TEST_CASE("symmetric and alternating squares of 8a") {
  auto const &t = store().table("hessian216");
  auto const &a = t["8a"];
  CHECK(decomposed(t, alt2(t.group, a)) == "2b+2c+8a+8b+8c");
  CHECK(decomposed(t, sym2(t.group, a)) == "1a+3a+8a+8a+8b+8c");
  CHECK(sym2(t.group, a) + alt2(t.group, a) == tensor(a, a));
  for (auto const &x : t.irr)
    CHECK(sym2(t.group, x) + alt2(t.group, x) == tensor(x, x));
}

TEST_CASE("inner products") {
  auto const &t = store().table("hessian216");
  CHECK(inner_product(t.group, t["1a"], t["1a"]) == CycNum(1));
  CHECK(inner_product(t.group, t["8a"], t["8a"]) == CycNum(1));
  CHECK(inner_product(t.group, t["1a"], t["1b"]) == CycNum(0));
  CHECK(tensor(t["1a"], t["8b"]) == t["8b"]);
  auto chi = tensor(t["8a"], t["2a"]) + t["3a"];
  auto d = decompose(t, chi);
  CHECK(d.exact());
  for (auto const &m : d.multiplicity)
    CHECK((m.is_rational() && m.coeff(0) >= 0 && m.coeff(0).get_den() == 1));
}

TEST_CASE("induction from the order 9 normal subgroup") {
  auto const &g = store().table("hessian216");
  auto n9 = normal_of_order(g.group, 9);
  REQUIRE(n9.size() == 9);
  std::vector<int> embed;
  auto h = ClassedGroup::of(subgroup_group(*g.group.group, n9, &embed));
  auto lin = linear_characters(h);
  REQUIRE(lin.size() == 9);
  auto triv = trivial_character(h);
  CHECK(induce(g.group, embed, h, triv).degree() == CycNum(24));
  for (auto const &l : lin) {
    if (l == triv)
      continue;
    auto up = induce(g.group, embed, h, l);
    CHECK(up.degree() == CycNum(24));
    auto d = decompose(g, up);
    CHECK(d.exact());
    CHECK(d.multiplicity[g.index_of("8a")] != CycNum(0));
    // Frobenius reciprocity against every irreducible
    for (auto const &psi : g.irr)
      CHECK(inner_product(g.group, up, psi) == inner_product(h, l, restrict(g.group, psi, embed, h)));
  }
}

TEST_CASE("restriction keeps degree and trivial") {
  auto const &g = store().table("g648");
  auto q8 = subgroup_closure(*g.group.group, {});
  std::vector<int> embed;
  auto h = ClassedGroup::of(subgroup_group(*g.group.group, q8, &embed));
  CHECK(restrict(g.group, trivial_character(g.group), embed, h) == trivial_character(h));
  auto nat = natural_character(store().group("g648"), g.group);
  CHECK(restrict(g.group, nat, embed, h).degree() == CycNum(3));
}

TEST_CASE("natural character on a binary tetrahedral subgroup is 1 + 2") {
  auto const &fm = store().group("g648");
  auto const &t = store().table("g648");
  auto const &cg = *t.group.group;
  int p1 = fm.times_generator(0, gen_index("g648", "ternary_pauli1"));
  int p2 = fm.times_generator(0, gen_index("g648", "ternary_pauli2"));
  auto nat = natural_character(fm, t.group);
  // every order-24 group <p1, p2, x> splits the natural character as linear + 2-dim irreducible,
  // and for some of them the linear part is trivial
  int groups = 0, with_trivial = 0;
  for (int x = 0; x < cg.order(); ++x) {
    if (cg.elem_order(x) != 3)
      continue;
    auto s = subgroup_closure(cg, {p1, p2, x});
    if (s.size() != 24)
      continue;
    ++groups;
    std::vector<int> embed;
    auto h = ClassedGroup::of(subgroup_group(cg, s, &embed));
    auto r = restrict(t.group, nat, embed, h);
    CHECK(inner_product(h, r, r) == CycNum(2));
    for (auto const &l : linear_characters(h)) {
      if (inner_product(h, r, l) != CycNum(1))
        continue;
      auto rest = r - l;
      CHECK(inner_product(h, rest, rest) == CycNum(1));
      if (l == trivial_character(h))
        ++with_trivial;
    }
  }
  CHECK(groups > 0);
  CHECK(with_trivial > 0);
}

TEST_CASE("monomial conjugation action gives 3a") {
  auto const &fm = store().group("g648");
  auto const &t = store().table("g648");
  auto const &cg = *t.group.group;
  Subgroup n27;
  for (auto const &s : normal_subgroups(cg, t.group.classes))
    if (s.size() == 27)
      n27 = s;
  auto q = quotient(cg, n27);
  int p[3];
  p[0] = q.coset_of[fm.times_generator(0, gen_index("g648", "ternary_pauli1"))];
  p[1] = q.coset_of[fm.times_generator(0, gen_index("g648", "ternary_pauli2"))];
  p[2] = q.group.mul(p[0], p[1]);
  std::vector<CycMatrix> images;
  for (int s = 0; s < fm.generator_count(); ++s) {
    int c = q.coset_of[fm.times_generator(0, s)];
    CycMatrix m(3);
    for (int k = 0; k < 3; ++k) {
      int y = q.group.conj(p[k], c);
      for (int j = 0; j < 3; ++j) {
        if (y == p[j])
          m(k, j) = 1;
        else if (y == q.group.inv(p[j]))
          m(k, j) = -1;
      }
    }
    images.push_back(m);
  }
  CHECK(hom_character(fm, t.group, images) == t["3a"]);

  std::vector<CycMatrix> bad(fm.generator_count(), CycMatrix::identity(3));
  bad[gen_index("g648", "g27_diag")] = CycMatrix::scalar(3, CycNum(-1));
  CHECK_THROWS_AS(hom_character(fm, t.group, bad), NotAHomomorphism);
  std::vector<CycMatrix> ones(fm.generator_count(), CycMatrix::identity(2));
  CHECK(hom_character(fm, t.group, ones) == CycNum(2) * trivial_character(t.group));
}

TEST_CASE("natural character of Q8") {
  auto const &t = store().table("q8");
  auto nat = hom_character(store().group("q8"), t.group, catalog::get("q8").cyc);
  CHECK(nat.degree() == CycNum(2));
  int twos = 0, zeros = 0;
  for (auto const &x : nat.values) {
    twos += x == CycNum(-2);
    zeros += x == CycNum(0);
  }
  CHECK(twos == 1);
  CHECK(zeros == 3);
}

TEST_CASE("text and json export") {
  auto const &t = store().table("btg");
  auto meta = class_metadata(t, &store().group("btg"), catalog::get("btg").generator_names);
  auto text = table_text(t, meta);
  auto first = text.substr(0, text.find('\n'));
  auto sep_at = text.find("\n-");
  REQUIRE(sep_at != std::string::npos);
  auto sep = text.substr(sep_at + 1, text.find('\n', sep_at + 1) - sep_at - 1);
  CHECK(sep.size() == first.size());
  auto js = table_json(t, meta);
  CHECK(js.find("\"characters\"") != std::string::npos);
  CHECK(table_json(t, meta) == js);
}
