#include "exactgrp/f4.hpp"

#include "exactgrp/reflect.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exactgrp {

namespace f4 {

namespace {
// discrete log base v on nonzero elements: 1 -> 0, v -> 1, w -> 2
int const LOG[4] = {-1, 0, 1, 2};
Elt const EXP[3] = {1, 2, 3};
}  // namespace

Elt add(Elt a, Elt b) { return a ^ b; }
Elt mul(Elt a, Elt b) { return a && b ? EXP[(LOG[a] + LOG[b]) % 3] : 0; }
Elt conj(Elt a) { return mul(a, a); }
Elt inv(Elt a) {
  if (!a)
    throw std::domain_error("division by zero in F4");
  return EXP[(3 - LOG[a]) % 3];
}
char name(Elt a) { return "01vw"[a]; }

Elt herm(Vec const &x, Vec const &y) {
  Elt s = 0;
  for (int i = 0; i < 3; ++i)
    s = add(s, mul(x[i], conj(y[i])));
  return s;
}

Vec canonical(Vec x) {
  for (auto e : x)
    if (e) {
      Elt c = inv(e);
      for (auto &f : x)
        f = mul(c, f);
      break;
    }
  return x;
}

Vec apply(Mat const &m, Vec const &x) {
  Vec y{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      y[i] = add(y[i], mul(m[3 * i + j], x[j]));
  return y;
}

Mat mul(Mat const &a, Mat const &b) {
  Mat c{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        c[3 * i + j] = add(c[3 * i + j], mul(a[3 * i + k], b[3 * k + j]));
  return c;
}

bool is_unitary(Mat const &m) {
  // M conj(M)^T = I
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elt s = 0;
      for (int k = 0; k < 3; ++k)
        s = add(s, mul(m[3 * i + k], conj(m[3 * j + k])));
      if (s != (i == j ? 1 : 0))
        return false;
    }
  return true;
}

std::string name(Vec const &x) { return {name(x[0]), name(x[1]), name(x[2])}; }

Vec parse(std::string const &s) {
  if (s.size() != 3)
    throw std::invalid_argument("F4 point needs three symbols: " + s);
  Vec x{};
  for (int i = 0; i < 3; ++i) {
    auto p = std::string("01vw").find(s[i]);
    if (p == std::string::npos)
      throw std::invalid_argument("bad F4 symbol in " + s);
    x[i] = static_cast<Elt>(p);
  }
  return x;
}

}  // namespace f4

namespace f9 {

Elt add(Elt a, Elt b) { return static_cast<Elt>((a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3)); }

Elt mul(Elt a, Elt b) {
  int x = a % 3, y = a / 3, u = b % 3, v = b / 3;
  int re = ((x * u - y * v) % 3 + 3) % 3;
  int im = (x * v + y * u) % 3;
  return static_cast<Elt>(re + 3 * im);
}

Elt conj(Elt a) { return mul(a, mul(a, a)); }

Mat mul(Mat const &a, Mat const &b) {
  return {add(mul(a[0], b[0]), mul(a[1], b[2])), add(mul(a[0], b[1]), mul(a[1], b[3])),
          add(mul(a[2], b[0]), mul(a[3], b[2])), add(mul(a[2], b[1]), mul(a[3], b[3]))};
}

}  // namespace f9

PointClasses classify_points() {
  std::set<f4::Vec> pts;
  for (int code = 1; code < 64; ++code)
    pts.insert(f4::canonical({f4::Elt(code & 3), f4::Elt((code >> 2) & 3), f4::Elt(code >> 4)}));
  PointClasses out;
  for (auto const &p : pts) {
    bool s = f4::herm(p, p) == 0;
    (s ? out.singular : out.nonsingular).push_back({p, s});
  }
  return out;
}

std::vector<LineProfile> line_profile() {
  auto pc = classify_points();
  std::vector<ProjPoint> all = pc.nonsingular;
  all.insert(all.end(), pc.singular.begin(), pc.singular.end());
  std::vector<LineProfile> out;
  for (auto const &p : all) {
    LineProfile lp{p};
    for (auto const &q : all)
      if (f4::herm(q.x, p.x) == 0) {
        (q.singular ? lp.singular : lp.nonsingular)++;
        lp.contains_pole = lp.contains_pole || q.x == p.x;
      }
    out.push_back(lp);
  }
  return out;
}

f4::Elt reduce_mod2(CycNum const &x) {
  std::array<Rational, 2> c;
  try {
    c = eisenstein_coords(x);
  } catch (std::invalid_argument const &) {
    throw NotEisensteinIntegral("not in Q(v): " + x.pretty());
  }
  f4::Elt out = 0;
  for (int k = 0; k < 2; ++k) {
    if (c[k].get_den() % 2 == 0)
      throw NotEisensteinIntegral("even denominator in " + x.pretty());
    // odd denominators are units mod 2
    if (mpz_class(c[k].get_num() % 2) != 0)
      out |= static_cast<f4::Elt>(1 << k);
  }
  return out;
}

ProjPoint reduce_mod2(RowVector<CycNum> const &x) {
  if (x.size() != 3)
    throw DimensionMismatch();
  f4::Vec v{reduce_mod2(x[0]), reduce_mod2(x[1]), reduce_mod2(x[2])};
  if (v == f4::Vec{})
    throw NotEisensteinIntegral("vector reduces to zero");
  v = f4::canonical(v);
  return {v, f4::herm(v, v) == 0};
}

f4::Mat reduce_mod2(CycMatrix const &m) {
  if (m.dim() != 3)
    throw DimensionMismatch();
  f4::Mat r{};
  for (int i = 0; i < 9; ++i)
    r[i] = reduce_mod2(m(i / 3, i % 3));
  return r;
}

std::vector<f4::Mat> build_u3f4() {
  std::vector<f4::Mat> out;
  for (int code = 0; code < (1 << 18); ++code) {
    f4::Mat m;
    for (int i = 0; i < 9; ++i)
      m[i] = static_cast<f4::Elt>((code >> (2 * i)) & 3);
    if (f4::is_unitary(m))
      out.push_back(m);
  }
  return out;
}

std::vector<f4::Elt> build_u1f4() {
  std::vector<f4::Elt> out;
  for (f4::Elt a = 0; a < 4; ++a)
    if (f4::mul(a, f4::conj(a)) == 1)
      out.push_back(a);
  return out;
}

std::vector<f9::Mat> build_su2f9() {
  std::vector<f9::Mat> out;
  for (int code = 0; code < 6561; ++code) {
    f9::Mat m;
    int c = code;
    for (auto &e : m) {
      e = static_cast<f9::Elt>(c % 9);
      c /= 9;
    }
    f9::Mat h = {f9::conj(m[0]), f9::conj(m[2]), f9::conj(m[1]), f9::conj(m[3])};
    f9::Elt det = f9::add(f9::mul(m[0], m[3]), f9::mul(2, f9::mul(m[1], m[2])));  // 2 = -1
    if (f9::mul(m, h) == f9::Mat{1, 0, 0, 1} && det == 1)
      out.push_back(m);
  }
  return out;
}

std::vector<f4::Mat> f4_closure(std::vector<f4::Mat> const &gens) {
  f4::Mat id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  std::set<f4::Mat> seen{id};
  std::vector<f4::Mat> queue{id};
  for (size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : gens) {
      auto m = f4::mul(queue[k], g);
      if (seen.insert(m).second)
        queue.push_back(m);
    }
  return {seen.begin(), seen.end()};
}

CayleyGroup su2f9_group() {
  auto el = build_su2f9();
  f9::Mat id{1, 0, 0, 1};
  std::iter_swap(el.begin(), std::find(el.begin(), el.end(), id));
  std::sort(el.begin() + 1, el.end());
  std::map<f9::Mat, int> idx;
  for (size_t k = 0; k < el.size(); ++k)
    idx[el[k]] = static_cast<int>(k);
  return CayleyGroup::from_mul(static_cast<int>(el.size()),
                               [&](int a, int b) { return idx.at(f9::mul(el[a], el[b])); });
}

PointArrangement point_arrangement() {
  return {{{{"100", "111", "v11", "w11"}, {"010", "1vw", "11v", "1w1"}, {"001", "1wv", "1v1", "11w"}}},
          {{{"011", "101", "110"}, {"0vw", "w0v", "vw0"}, {"0wv", "v0w", "wv0"}}}};
}

namespace {

Subgroup normal_of_order(CayleyGroup const &g, size_t n) {
  for (auto const &s : normal_subgroups(g, conjugacy_classes(g)))
    if (s.size() == n)
      return s;
  return {};
}

}  // namespace

CheckReport quotient_chain_check(CayleyGroup const &g648, CayleyGroup const &btg) {
  CheckReport rep;
  auto n27 = normal_of_order(g648, 27);
  rep.add("648 group has a normal subgroup of order 27", n27.size() == 27);
  if (n27.size() != 27)
    return rep;
  auto q1 = quotient(g648, n27);
  rep.add("first quotient has order 24", q1.group.order() == 24, std::to_string(q1.group.order()));
  rep.add("first quotient is binary tetrahedral", is_isomorphic(q1.group, btg));
  rep.add("first quotient is SU(2,F9)", is_isomorphic(q1.group, su2f9_group()));
  auto q8 = normal_of_order(q1.group, 8);
  auto q2 = quotient(q1.group, q8);
  rep.add("second quotient has order 3", q2.group.order() == 3, std::to_string(q2.group.order()));
  rep.add("second quotient is U(1,F4)", is_isomorphic(q2.group, cyclic_group(3)) && build_u1f4().size() == 3);
  Subgroup kernel;
  for (int x = 0; x < g648.order(); ++x)
    if (std::binary_search(q8.begin(), q8.end(), q1.coset_of[x]))
      kernel.push_back(x);
  rep.add("composite kernel has order 216", kernel.size() == 216 && is_normal(g648, kernel),
          std::to_string(kernel.size()));
  return rep;
}

CheckReport f4_geometry_checks(FinMatGroup const &g648, CayleyGroup const &btg) {
  CheckReport rep;
  auto pc = classify_points();
  rep.add("21 points", pc.nonsingular.size() + pc.singular.size() == 21);
  rep.add("12 nonsingular and 9 singular points", pc.nonsingular.size() == 12 && pc.singular.size() == 9,
          std::to_string(pc.nonsingular.size()) + "+" + std::to_string(pc.singular.size()));

  auto arr = point_arrangement();
  std::set<std::string> ns, sg, arr_ns, arr_sg;
  for (auto const &p : pc.nonsingular)
    ns.insert(p.name());
  for (auto const &p : pc.singular)
    sg.insert(p.name());
  for (auto const &row : arr.nonsingular)
    for (auto const &s : row)
      arr_ns.insert(f4::name(f4::canonical(f4::parse(s))));
  for (auto const &row : arr.singular)
    for (auto const &s : row)
      arr_sg.insert(f4::name(f4::canonical(f4::parse(s))));
  rep.add("printed point arrays match the classification", ns == arr_ns && sg == arr_sg);

  bool ns_ok = true, sg_ok = true, pole_ok = true;
  for (auto const &lp : line_profile()) {
    if (lp.pole.singular)
      sg_ok = sg_ok && lp.singular == 1 && lp.nonsingular == 4;
    else
      ns_ok = ns_ok && lp.nonsingular == 2 && lp.singular == 3;
    pole_ok = pole_ok && lp.contains_pole == lp.pole.singular;
  }
  rep.add("nonsingular lines hold 2 nonsingular and 3 singular points", ns_ok);
  rep.add("singular lines hold 1 singular and 4 nonsingular points", sg_ok);
  rep.add("a point lies on its perpendicular iff singular", pole_ok);

  auto ms = reflection_scan(g648);
  std::set<f4::Vec> reduced;
  bool all_ns = true;
  for (auto const &m : ms.mirrors) {
    auto p = reduce_mod2(m.root);
    all_ns = all_ns && !p.singular;
    reduced.insert(p.x);
  }
  rep.add("mirrors reduce bijectively onto the nonsingular points", all_ns && reduced.size() == 12 && ms.mirrors.size() == 12);

  // a reflection fixes the points of its own column and cycles the other three columns
  std::map<f4::Vec, int> column;
  for (auto const &row : arr.nonsingular)
    for (int c = 0; c < 4; ++c)
      column[f4::canonical(f4::parse(row[c]))] = c;
  bool pattern = true;
  for (auto const &m : ms.mirrors)
    for (auto const &r : m.reflections) {
      auto fm = reduce_mod2(r.matrix);
      int own = column.at(reduce_mod2(m.root).x);
      std::map<int, std::set<int>> image;
      for (auto const &[p, c] : column) {
        auto q = f4::canonical(f4::apply(fm, p));
        if (!column.count(q)) {
          pattern = false;
          continue;
        }
        image[c].insert(column.at(q));
        if (c == own)
          pattern = pattern && q == p;
        else
          pattern = pattern && q != p;
      }
      int moved = 0;
      for (auto const &[c, img] : image) {
        pattern = pattern && img.size() == 1;
        if (c != own)
          moved += *img.begin() != c && *img.begin() != own;
      }
      pattern = pattern && moved == 3;
    }
  rep.add("reflections fix their own column and cycle the others", pattern);

  auto u3 = build_u3f4();
  rep.add("|U(3,F4)| = 648 by brute force", u3.size() == 648, std::to_string(u3.size()));
  std::set<f4::Mat> images;
  bool unitary = true;
  for (int e = 0; e < g648.order(); ++e) {
    auto m = reduce_mod2(g648.cyc(e));
    unitary = unitary && f4::is_unitary(m);
    images.insert(m);
  }
  std::sort(u3.begin(), u3.end());
  rep.add("reduction mod 2 maps the 648 group onto U(3,F4)",
          unitary && images.size() == u3.size() && std::equal(images.begin(), images.end(), u3.begin()));
  std::vector<f4::Mat> gens;
  for (int s = 0; s < g648.generator_count(); ++s)
    gens.push_back(reduce_mod2(g648.cyc(g648.times_generator(0, s))));
  rep.add("reduced generators close to 648 elements", f4_closure(gens).size() == 648);
  rep.add("|U(1,F4)| = 3", build_u1f4().size() == 3);
  auto su2 = su2f9_group();
  rep.add("|SU(2,F9)| = 24", su2.order() == 24, std::to_string(su2.order()));
  auto phi = find_isomorphism(btg, su2);
  rep.add("binary tetrahedral group is isomorphic to SU(2,F9)", phi && is_isomorphism(btg, su2, *phi));
  for (auto const &c : quotient_chain_check(*g648.cayley(), btg).checks)
    rep.add(c.name, c.pass, c.detail);
  return rep;
}

}  // namespace exactgrp
