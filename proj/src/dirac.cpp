#include "exactgrp/dirac.hpp"

#include "exactgrp/catalog.hpp"
#include "exactgrp/store.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace exactgrp {

namespace {

QuatMatrix const &cat(std::string const &name) { return catalog::quat(name); }

QuatMatrix bar(QuatMatrix m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      m(i, j) = m(i, j).conj();
  return m;
}

QuatMatrix scalar_i() { return QuatMatrix::scalar(4, QuatNum::i()); }

QuatMatrix from_complex(std::vector<std::vector<int>> const &re, std::vector<std::vector<int>> const &im) {
  QuatMatrix m(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = QuatNum(re[r][c], im[r][c], 0, 0);
  return m;
}

std::string set_key(std::vector<QuatMatrix> const &s) {
  std::vector<std::string> k;
  for (auto const &m : s)
    k.push_back(m.key());
  std::sort(k.begin(), k.end());
  std::string out;
  for (auto const &x : k)
    out += x + "|";
  return out;
}

// all elements of the group generated by gens, under the ordinary product
std::vector<QuatMatrix> elements(std::vector<QuatMatrix> const &gens) {
  auto g = FinMatGroup::closure(gens);
  std::vector<QuatMatrix> out;
  for (int k = 0; k < g.order(); ++k)
    out.push_back(g.quat(k));
  return out;
}

bool commute(QuatMatrix const &a, QuatMatrix const &b) { return a * b == b * a; }

}  // namespace

std::vector<NamedGamma> bjorken_drell_gammas() {
  std::vector<std::vector<int>> z(4, std::vector<int>(4, 0));
  auto g0 = from_complex({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}, z);
  // gamma^k = [[0, s_k], [-s_k, 0]]
  auto g1 = from_complex({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}, z);
  auto g2 = from_complex(z, {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
  auto g3 = from_complex({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}, z);
  auto g5 = scalar_i() * g0 * g1 * g2 * g3;
  return {{"gamma0", g0}, {"gamma1", g1}, {"gamma2", g2}, {"gamma3", g3}, {"gamma5", g5}};
}

std::vector<NamedGamma> real_basis_gammas() {
  auto mi = -scalar_i();
  return {{"gamma0", mi * cat("igamma0_real")},
          {"gamma1", mi * cat("igamma1")},
          {"gamma2", mi * cat("igamma2")},
          {"gamma3", mi * cat("igamma3")},
          {"gamma5", cat("gamma5")}};
}

NamedGamma const &find_gamma(std::vector<NamedGamma> const &set, std::string const &name) {
  for (auto const &g : set)
    if (g.name == name)
      return g;
  throw std::out_of_range("no gamma named " + name);
}

CliffordSignature clifford_signature(std::vector<QuatMatrix> const &gens) {
  CliffordSignature s;
  for (size_t a = 0; a < gens.size(); ++a) {
    int n = gens[a].dim();
    auto sq = gens[a] * gens[a];
    if (sq == QuatMatrix::identity(n))
      ++s.plus;
    else if (sq == -QuatMatrix::identity(n))
      ++s.minus;
    else
      throw NotCliffordSet("generator " + std::to_string(a) + " does not square to +-I");
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a] * gens[b] + gens[b] * gens[a] != QuatMatrix(n))
        throw NotCliffordSet("generators " + std::to_string(a) + " and " + std::to_string(b) + " do not anticommute");
  }
  return s;
}

QuatMatrix quat_inverse(QuatMatrix const &m) {
  int n = m.dim();
  QuatMatrix a = m, x = QuatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero())
      ++p;
    if (p == n)
      throw NotInvertible();
    for (int j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(x(p, j), x(c, j));
    }
    QuatNum s = a(c, c).inv();
    for (int j = 0; j < n; ++j) {
      a(c, j) = s * a(c, j);
      x(c, j) = s * x(c, j);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero())
        continue;
      QuatNum f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        x(r, j) -= f * x(c, j);
      }
    }
  }
  return x;
}

// entrywise conjugation carries the column product to the ordinary one
QuatMatrix column_mul(QuatMatrix const &a, QuatMatrix const &b) { return bar(bar(a) * bar(b)); }
QuatMatrix column_inverse(QuatMatrix const &m) { return bar(quat_inverse(bar(m))); }

QuatMatrix conjugate_action(QuatMatrix const &g, QuatMatrix const &m) { return quat_inverse(g) * m * g; }

QuatMatrix column_conjugate(QuatMatrix const &g, QuatMatrix const &m) {
  return column_mul(column_mul(column_inverse(g), m), g);
}

std::vector<std::string> conjugate_set_key(QuatMatrix const &g, std::vector<QuatMatrix> const &set) {
  auto gi = quat_inverse(g);
  std::vector<std::string> out;
  for (auto const &m : set)
    out.push_back((gi * m * g).key());
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ E128

E128Census e128_census(FinMatGroup const &e128, std::vector<QuatMatrix> const &fixed_q8) {
  auto cg = e128.cayley();
  auto const &g = *cg;
  int n = g.order();
  auto zc = center(g);
  int z = zc.size() == 2 ? zc[1] : -1;

  std::vector<int> four;
  for (int x = 0; x < n; ++x)
    if (g.elem_order(x) == 4)
      four.push_back(x);

  // Q8 = <a, b> with a, b, ab of order 4 and ab = z ba
  std::set<std::vector<int>> q8s;
  for (int a : four)
    for (int b : four) {
      if (b <= a || g.mul(a, b) == g.mul(b, a) || g.elem_order(g.mul(a, b)) != 4)
        continue;
      int ab = g.mul(a, b);
      std::vector<int> s = {0, z, a, g.mul(z, a), b, g.mul(z, b), ab, g.mul(z, ab)};
      std::sort(s.begin(), s.end());
      q8s.insert(s);
    }
  std::vector<std::vector<int>> q(q8s.begin(), q8s.end());

  E128Census c;
  c.q8_subgroups = static_cast<int>(q.size());

  auto commutes = [&](std::vector<int> const &x, std::vector<int> const &y) {
    for (int a : x)
      for (int b : y)
        if (g.mul(a, b) != g.mul(b, a))
          return false;
    return true;
  };
  int m = static_cast<int>(q.size());
  std::vector<std::vector<char>> cm(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      cm[a][b] = cm[b][a] = commutes(q[a], q[b]);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (!cm[a][b])
        continue;
      for (int d = b + 1; d < m; ++d) {
        if (!cm[a][d] || !cm[b][d])
          continue;
        std::set<int> prod;
        for (int x : q[a])
          for (int y : q[b])
            for (int w : q[d])
              prod.insert(g.mul(g.mul(x, y), w));
        c.factorizations += static_cast<int>(prod.size()) == n;
      }
    }

  std::vector<int> fixed;
  for (auto const &f : fixed_q8)
    fixed.push_back(e128.index_of(f));
  auto cen = centralizer_of(g, fixed);
  std::vector<int> invol;  // one of each sign pair
  for (int x : cen)
    if (g.elem_order(x) == 2 && x != z && x < g.mul(z, x))
      invol.push_back(x);
  c.commuting_involutions = static_cast<int>(invol.size());
  if (!invol.empty())
    for (size_t k = 1; k < invol.size(); ++k)
      c.anticommuting_partners += g.mul(invol[0], invol[k]) == g.mul(z, g.mul(invol[k], invol[0]));
  return c;
}

std::array<std::vector<QuatMatrix>, 3> e128_columns() {
  return {{{cat("e128_iI"), cat("e128_jI")}, {cat("gamma3"), cat("gamma1")}, {cat("igamma123"), cat("igamma02")}}};
}

std::vector<QuatMatrix> spin_q8() { return {cat("gamma12"), cat("gamma23")}; }

CheckReport column_triple_check(FinMatGroup const &e128) {
  CheckReport rep;
  auto cols = e128_columns();
  auto q8 = FinMatGroup::closure(catalog::get("q8q").quat).cayley();
  std::vector<std::vector<QuatMatrix>> el;
  for (int c = 0; c < 3; ++c) {
    auto g = FinMatGroup::closure(cols[c]);
    rep.add("column " + std::to_string(c + 1) + " has order 8", g.order() == 8, std::to_string(g.order()));
    rep.add("column " + std::to_string(c + 1) + " is Q8", is_isomorphic(*g.cayley(), *q8));
    el.push_back(elements(cols[c]));
  }
  QuatMatrix id = QuatMatrix::identity(4);
  std::string centre = set_key({id, -id});
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      bool ok = true;
      std::vector<QuatMatrix> common;
      for (auto const &x : el[a]) {
        for (auto const &y : el[b])
          ok = ok && commute(x, y);
        if (std::find(el[b].begin(), el[b].end(), x) != el[b].end())
          common.push_back(x);
      }
      std::string tag = std::to_string(a + 1) + "," + std::to_string(b + 1);
      rep.add("columns " + tag + " commute", ok);
      rep.add("columns " + tag + " meet in the centre", set_key(common) == centre);
    }
  std::vector<QuatMatrix> all;
  for (auto const &c : cols)
    all.insert(all.end(), c.begin(), c.end());
  auto g = FinMatGroup::closure(all);
  rep.add("columns generate 128 elements", g.order() == 128, std::to_string(g.order()));
  bool same = g.order() == e128.order();
  for (int k = 0; same && k < g.order(); ++k)
    same = e128.index_of(g.quat(k)) >= 0;
  rep.add("columns generate E128", same);
  return rep;
}

// ------------------------------------------------------------ displays and relations

CheckReport conjugation_display_check() {
  CheckReport rep;
  auto const &p = cat("pauli4q1");
  char const *row[3] = {"e128_iI", "gamma3", "igamma123"};
  bool column = true, twisted = true;
  auto q = QuatMatrix::diag({1, QuatNum::i(), QuatNum::j(), -QuatNum::k()});
  for (int k = 0; k < 3; ++k) {
    std::string img = "diracmixed" + std::to_string(k + 1);
    auto got = conjugate_action(p, cat(row[k]));
    rep.add(std::string("pauli4q1 on ") + row[k] + " gives " + img, got == cat(img), got.pretty());
    column = column && column_conjugate(p, cat(row[k])) == cat(img);
    twisted = twisted && conjugate_action(q, cat(row[k])) == cat(img);
  }
  rep.add("reversed entry order reproduces all three isospin images", column);
  rep.add("diag(1,i,j,-k) reproduces all three isospin images", twisted);
  auto const &h = cat("gellmann4q1");
  rep.add("displayed left factor is the inverse gluon", cat("gluon_left") == quat_inverse(h));
  auto s = conjugate_action(h, cat("gamma12"));
  rep.add("gluon on gamma12 gives the displayed spin image", s == cat("gluon_spin_image"), s.pretty());
  auto t = conjugate_action(h, cat("gamma05"));
  rep.add("gluon on gamma05 gives the displayed isospin image", t == cat("gluon_iso_image"), t.pretty());
  rep.add("identity acts trivially", conjugate_action(QuatMatrix::identity(4), cat("gamma5")) == cat("gamma5"));
  return rep;
}

CheckReport clifford_check() {
  CheckReport rep;
  auto sig = [&](std::string const &name, std::vector<QuatMatrix> const &gens, CliffordSignature want) {
    try {
      auto s = clifford_signature(gens);
      rep.add(name, s == want, s.name());
      std::vector<QuatMatrix> rev(gens.rbegin(), gens.rend());
      rep.add(name + " (reversed order)", clifford_signature(rev) == s);
    } catch (NotCliffordSet const &e) {
      rep.add(name, false, e.what());
    }
  };
  sig("real matrices igamma0..3 give Cl(3,1)",
      {cat("igamma0_real"), cat("igamma1"), cat("igamma2"), cat("igamma3")}, {3, 1});

  auto bd = bjorken_drell_gammas();
  std::vector<QuatMatrix> five;
  for (auto const &g : bd)
    five.push_back(g.matrix);
  sig("Bjorken-Drell gamma0..3, gamma5 give Cl(2,3)", five, {2, 3});
  auto six = five;
  six.push_back(cat("gamma6"));
  sig("adding gamma6 gives Cl(2,4)", six, {2, 4});
  bool anti = true;
  for (auto const &g : five)
    anti = anti && g * cat("gamma6") == -(cat("gamma6") * g);
  rep.add("gamma6 anticommutes with all five", anti);
  rep.add("gamma6 squares to -I", cat("gamma6") * cat("gamma6") == -QuatMatrix::identity(4));

  auto rb = real_basis_gammas();
  std::vector<QuatMatrix> rfive;
  for (auto const &g : rb)
    rfive.push_back(g.matrix);
  sig("real-basis gamma0..3, gamma5 give Cl(2,3)", rfive, {2, 3});
  auto rsix = rfive;
  rsix.push_back(cat("e128_jI"));
  sig("real basis with gamma6 = j gives Cl(2,4)", rsix, {2, 4});
  rep.add("gamma5 = i gamma0 gamma1 gamma2 gamma3 in the real basis",
          scalar_i() * rfive[0] * rfive[1] * rfive[2] * rfive[3] == rfive[4]);
  return rep;
}

CheckReport named_product_check() {
  CheckReport rep;
  auto bd = bjorken_drell_gammas();
  auto b = [&](char const *n) { return find_gamma(bd, n).matrix; };
  auto i = scalar_i();
  rep.add("gamma3 is Bjorken-Drell gamma3", cat("gamma3") == b("gamma3"));
  rep.add("gamma1 is Bjorken-Drell gamma1", cat("gamma1") == b("gamma1"));
  auto g123 = i * b("gamma1") * b("gamma2") * b("gamma3");
  rep.add("igamma123 = i gamma1 gamma2 gamma3", cat("igamma123") == g123, g123.pretty());
  // lowered spatial indices flip the sign of a triple product
  rep.add("igamma123 = -i gamma1 gamma2 gamma3", cat("igamma123") == -g123);
  rep.add("igamma02 = i gamma0 gamma2", cat("igamma02") == i * b("gamma0") * b("gamma2"));

  auto rb = real_basis_gammas();
  auto r = [&](char const *n) { return find_gamma(rb, n).matrix; };
  rep.add("gamma12 = gamma1 gamma2", cat("gamma12") == r("gamma1") * r("gamma2"));
  rep.add("gamma23 = gamma2 gamma3", cat("gamma23") == r("gamma2") * r("gamma3"));
  rep.add("igamma0 = i gamma0", cat("igamma0") == i * r("gamma0"));
  auto g05 = r("gamma0") * r("gamma5");
  rep.add("gamma05 = gamma0 gamma5", cat("gamma05") == g05, g05.pretty());
  rep.add("gamma05 = gamma5 gamma0", cat("gamma05") == r("gamma5") * r("gamma0"));
  return rep;
}

CheckReport column_preservation_check() {
  CheckReport rep;
  auto cols = e128_columns();
  std::vector<std::vector<QuatMatrix>> el;
  std::vector<std::vector<std::string>> keys;
  for (auto const &c : cols) {
    el.push_back(elements(c));
    std::vector<std::string> k;
    for (auto const &m : el.back())
      k.push_back(m.key());
    std::sort(k.begin(), k.end());
    keys.push_back(k);
  }
  auto const &h = cat("gellmann4q1");
  for (auto const &g : {h, dagger(h)}) {
    bool ok = true;
    for (int c = 0; c < 3; ++c)
      ok = ok && conjugate_set_key(g, el[c]) == keys[c];
    rep.add(g == h ? "real Gell-Mann generator fixes each column" : "its inverse fixes each column", ok);
  }
  int moved = 0;
  for (char const *p : {"pauli4q1", "pauli4q2", "pauli4q3"})
    for (int c = 0; c < 3; ++c)
      moved += conjugate_set_key(cat(p), el[c]) != keys[c];
  rep.add("some Pauli generator moves a column", moved > 0, std::to_string(moved) + " of 9 moved");
  return rep;
}

CheckReport center_action_check() {
  CheckReport rep;
  auto const &c = cat("g27centre");
  auto id = QuatMatrix::identity(4);
  auto c2 = c * c;
  rep.add("centre generator has order 3", c != id && c2 != id && c2 * c == id);
  bool comm = true;
  for (char const *p : {"pauli4q1", "pauli4q2", "pauli4q3"})
    comm = comm && c * cat(p) == cat(p) * c;
  rep.add("commutes with the Pauli matrices", comm);
  bool gm = true;
  for (char const *p : {"gellmann4q1", "gellmann4q2", "gellmann4q3", "gellmann4q4"})
    gm = gm && c * cat(p) == cat(p) * c;
  rep.add("commutes with the Gell-Mann matrices", gm);

  // conjugation permutes the three generations cyclically
  std::vector<QuatMatrix> gen = {cat("e128_iI"), cat("e128_jI"), QuatMatrix::scalar(4, QuatNum::k())};
  auto cycle = [&](std::vector<QuatMatrix> const &s) {
    // image index of each element up to sign, -1 when outside
    std::vector<int> img;
    for (auto const &m : s) {
      auto x = conjugate_action(c, m);
      int at = -1;
      for (size_t k = 0; k < s.size(); ++k)
        if (x == s[k] || x == -s[k])
          at = static_cast<int>(k);
      img.push_back(at);
    }
    bool three = img.size() == 3;
    for (int k = 0; three && k < 3; ++k)
      three = img[k] >= 0 && img[k] != k;
    return three && img[0] != img[1] && img[1] != img[2] && img[0] != img[2];
  };
  rep.add("permutes iI, jI, kI cyclically", cycle(gen));
  auto rb = real_basis_gammas();
  auto r = [&](char const *n) { return find_gamma(rb, n).matrix; };
  std::vector<QuatMatrix> planes = {r("gamma1") * r("gamma2"), r("gamma2") * r("gamma3"), r("gamma3") * r("gamma1")};
  rep.add("permutes the spin planes cyclically", cycle(planes));

  auto v = parse_quat("v"), w = parse_quat("w");
  auto one = [](std::vector<RowVector<QuatNum>> const &b, RowVector<QuatNum> const &x) {
    return b.size() == 1 && vector_key(normalize_left(b[0])) == vector_key(normalize_left(x));
  };
  RowVector<QuatNum> f1 = {0, 1, v, w}, f2 = {1, 0, 0, 0};
  rep.add("centre generator fixes the span of (0,1,v,w)", one(quat_fixed_space({c}), f1));
  std::vector<QuatMatrix> gms, ps;
  for (char const *p : {"gellmann4q1", "gellmann4q2", "gellmann4q3", "gellmann4q4"})
    gms.push_back(cat(p));
  for (char const *p : {"pauli4q1", "pauli4q2", "pauli4q3"})
    ps.push_back(cat(p));
  rep.add("Gell-Mann matrices fix the span of (0,1,v,w)", one(quat_fixed_space(gms), f1));
  rep.add("Pauli matrices fix the span of (1,0,0,0)", one(quat_fixed_space(ps), f2));
  return rep;
}

// ------------------------------------------------------------ combined group

int conjugation_orbit_count(FinMatGroup const &acting, std::vector<QuatMatrix> const &h) {
  auto hs = elements(h);
  std::set<std::vector<std::string>> seen;
  for (int k = 0; k < acting.order(); ++k)
    seen.insert(conjugate_set_key(acting.quat(k), hs));
  return static_cast<int>(seen.size());
}

CheckReport combined_group_checks(FinMatGroup const &combined, FinMatGroup const &e128, FinMatGroup const &q648) {
  CheckReport rep;
  rep.add("combined order 82944", combined.order() == 82944, std::to_string(combined.order()));
  rep.add("82944 = 128 x 648", long(e128.order()) * q648.order() == combined.order());
  std::vector<int> ei;
  bool inside = true;
  for (int k = 0; k < e128.order(); ++k) {
    ei.push_back(combined.index_of(e128.quat(k)));
    inside = inside && ei.back() >= 0;
  }
  rep.add("E128 lies in the combined group", inside);
  std::set<int> es(ei.begin(), ei.end());
  bool normal = inside;
  for (int s = 0; normal && s < combined.generator_count(); ++s) {
    int gi = combined.index_of(combined.quat(combined.times_generator(0, s)));
    for (int x : ei)
      normal = normal && es.count(combined.mul(combined.inv(gi), combined.mul(x, gi)));
  }
  rep.add("E128 is normal", normal);
  bool sub = true;
  int meet = 0;
  for (int k = 0; k < q648.order(); ++k) {
    int i = combined.index_of(q648.quat(k));
    sub = sub && i >= 0;
    meet += es.count(i) > 0;
  }
  rep.add("648 group lies in the combined group", sub);
  rep.add("648 group meets E128 trivially", meet == 1, std::to_string(meet));
  int orbit = conjugation_orbit_count(q648, spin_q8());
  rep.add("spin Q8 orbit under the 648 group", orbit == 12, std::to_string(orbit));
  return rep;
}

CheckReport automorphism_check(FinMatGroup const &combined, int trials, unsigned seed) {
  CheckReport rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, combined.order() - 1);
  bool ok = true;
  for (int t = 0; t < trials; ++t) {
    auto g = combined.quat(pick(rng)), a = combined.quat(pick(rng)), b = combined.quat(pick(rng));
    ok = ok && conjugate_action(g, a * b) == conjugate_action(g, a) * conjugate_action(g, b);
  }
  rep.add("conjugation respects products", ok, std::to_string(trials) + " triples");
  return rep;
}

// ------------------------------------------------------------ spinor character

SpinorCharacter spinor_character(GroupStore &store) {
  auto const &t = store.table("g648");
  auto const &qfm = store.group("q648");
  auto const &qc = store.classed("q648");
  auto const &g = *t.group.group;
  auto phi = find_isomorphism(g, *qc.group);
  if (!phi)
    throw std::runtime_error("648 groups are not isomorphic");

  Character psi;
  for (auto const &cl : qc.classes.classes)
    psi.values.push_back(qfm.complex_trace(cl.rep));

  // central twists x -> x z^k(x) with k the exponent of a linear character of order 3
  auto zc = center(g);
  int z = -1;
  for (int x : zc)
    if (g.elem_order(x) == 3 && (z < 0 || x < z))
      z = x;
  auto lin = linear_characters(t.group);
  std::sort(lin.begin(), lin.end(), [](Character const &a, Character const &b) { return a.key() < b.key(); });

  struct Twisted {
    Character chi;
    Decomposition d;
    std::string text;
    bool trivial;
    std::string label;
  };
  std::vector<Twisted> all;
  std::vector<CycNum> roots = {CycNum(1), CycNum::v(), CycNum::w()};
  for (auto const &l : lin) {
    std::vector<int> tau(g.order());
    bool ok = z >= 0;
    for (int x = 0; ok && x < g.order(); ++x) {
      auto it = std::find(roots.begin(), roots.end(), l.values[t.group.classes.class_of[x]]);
      ok = it != roots.end();
      if (ok)
        tau[x] = g.mul(x, g.power(z, it - roots.begin()));
    }
    if (!ok || std::set<int>(tau.begin(), tau.end()).size() != size_t(g.order()))
      continue;
    std::vector<int> comp(g.order());
    for (int x = 0; x < g.order(); ++x)
      comp[x] = (*phi)[tau[x]];
    Twisted tw;
    tw.chi = pullback(t.group, comp, qc, psi);
    tw.d = decompose(t, tw.chi);
    tw.text = constituents(t, tw.d);
    tw.trivial = l == trivial_character(t.group);
    for (size_t r = 0; r < t.irr.size(); ++r)
      if (t.irr[r] == l)
        tw.label = t.labels[r];
    all.push_back(std::move(tw));
  }
  SpinorCharacter out;
  int pick = -1;
  for (size_t k = 0; k < all.size(); ++k) {
    if (all[k].trivial)
      out.untwisted = all[k].text;
    if (pick < 0 && all[k].text == "2a+3b+3b*")
      pick = static_cast<int>(k);
  }
  if (pick < 0)
    for (size_t k = 0; k < all.size(); ++k)
      if (all[k].trivial)
        pick = static_cast<int>(k);
  if (pick < 0)
    throw std::runtime_error("no central twist available");
  out.character = all[pick].chi;
  out.decomposition = all[pick].text;
  out.twist = all[pick].trivial ? "" : all[pick].label;
  out.exact = all[pick].d.exact();
  if (!out.exact)
    throw DecompositionResidual("spinor character: " + out.decomposition);
  return out;
}

}  // namespace exactgrp
