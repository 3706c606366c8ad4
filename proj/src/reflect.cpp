#include "exactgrp/reflect.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exactgrp {

int MirrorSet::reflection_count() const {
  int n = 0;
  for (auto const &m : mirrors)
    n += static_cast<int>(m.reflections.size());
  return n;
}

MirrorSet reflection_scan(FinMatGroup const &g) {
  if (g.domain() != Domain::Cyc)
    throw UnsupportedForQuaternionic();
  MirrorSet out;
  std::map<std::string, Mirror> by_root;
  auto id = CycMatrix::identity(g.dim());
  for (int e = 0; e < g.order(); ++e) {
    auto m = g.cyc(e);
    auto d = m - id;
    int r = rank(d);
    if (r == 0) {
      ++out.identity_count;
      continue;
    }
    if (r > 1) {
      ++out.other_count;
      continue;
    }
    RowVector<CycNum> col(g.dim());
    for (int j = 0; j < g.dim(); ++j) {
      bool nz = false;
      for (int i = 0; i < g.dim(); ++i)
        nz = nz || !d(i, j).is_zero();
      if (!nz)
        continue;
      for (int i = 0; i < g.dim(); ++i)
        col[i] = d(i, j);
      break;
    }
    auto root = normalize_left(col);
    auto &mir = by_root[vector_key(root)];
    mir.root = root;
    mir.reflections.push_back({root, det(m), m, e});
  }
  for (auto &[k, mir] : by_root) {
    std::sort(mir.reflections.begin(), mir.reflections.end(),
              [](ReflectionData const &a, ReflectionData const &b) { return a.lambda.key() < b.lambda.key(); });
    out.mirrors.push_back(std::move(mir));
  }
  return out;
}

CycMatrix build_complex_reflection(RowVector<CycNum> const &r, CycNum const &lambda) {
  CycNum rr;
  for (auto const &x : r)
    rr += x * x.conj();
  if (rr.is_zero())
    throw ZeroRoot();
  int n = static_cast<int>(r.size());
  CycNum c = (CycNum(1) - lambda) / rr;
  auto m = CycMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) -= c * r[i] * r[j].conj();
  return m;
}

QuatMatrix build_quaternionic_reflection(RowVector<QuatNum> const &r, QuatNum const &lambda) {
  Rational rr = 0;
  for (auto const &x : r)
    rr += x.norm();
  if (rr == 0)
    throw ZeroRoot();
  int n = static_cast<int>(r.size());
  QuatNum c = (QuatNum(1) - lambda) * QuatNum(1 / rr);
  auto m = QuatMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) -= r[i].conj() * c * r[j];
  return m;
}

std::array<Rational, 2> eisenstein_coords(CycNum const &x) {
  if (x.coeff(1) != 0 || x.coeff(3) != 0)
    throw std::invalid_argument("not in Q(v): " + x.pretty());
  // z^2 = 1 + v
  return {x.coeff(0) + x.coeff(2), x.coeff(2)};
}

namespace {

std::vector<Rational> realify(RowVector<CycNum> const &r) {
  std::vector<Rational> out;
  for (auto const &x : r) {
    auto c = eisenstein_coords(x);
    out.push_back(c[0]);
    out.push_back(c[1]);
  }
  return out;
}

// real part of the Hermitian form in the basis 1, v: |a + b v|^2 = a^2 - ab + b^2
Rational form(std::vector<Rational> const &x, std::vector<Rational> const &y) {
  Rational s = 0;
  for (size_t k = 0; k + 1 < x.size(); k += 2)
    s += x[k] * y[k] + x[k + 1] * y[k + 1] - (x[k] * y[k + 1] + x[k + 1] * y[k]) / 2;
  return s;
}

}  // namespace

E6Data realify_to_e6(std::vector<RowVector<CycNum>> const &roots, int jobs) {
  std::set<std::vector<Rational>> lines;
  for (auto r : roots) {
    // the real lines depend on the scaling: use Hermitian norm 3, so (1,0,0) becomes (t,0,0)
    CycNum rr;
    for (auto const &x : r)
      rr += x * x.conj();
    if (rr == CycNum(1))
      for (auto &x : r)
        x = CycNum::t() * x;
    else if (rr != CycNum(3))
      throw std::invalid_argument("root norm must be 1 or 3: " + vector_pretty(r));
    for (auto const &u : {CycNum(1), CycNum::v(), CycNum::w()}) {
      RowVector<CycNum> s;
      for (auto const &x : r)
        s.push_back(u * x);
      auto line = realify(s);
      auto lead = std::find_if(line.begin(), line.end(), [](Rational const &q) { return q != 0; });
      if (lead == line.end())
        throw ZeroRoot();
      Rational l = *lead;
      for (auto &q : line)
        q /= l;
      lines.insert(line);
    }
  }
  E6Data out;
  out.lines.assign(lines.begin(), lines.end());
  int n = roots.empty() ? 0 : 2 * static_cast<int>(roots[0].size());
  for (auto const &r : out.lines) {
    // x -> x - 2 B(x, r) / B(r, r) r; B(x, r) = (G r) . x
    std::vector<Rational> gr(n);
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> e(n, 0);
      e[k] = 1;
      gr[k] = form(e, r);
    }
    Rational rr = form(r, r);
    auto m = CycMatrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) -= CycNum(Rational(2 * r[i] * gr[j] / rr));
    out.reflections.push_back(m);
  }
  ClosureOptions co;
  co.max_order = 60000;
  co.jobs = jobs;
  out.group = FinMatGroup::closure(out.reflections, co);
  return out;
}

CheckReport top_row_check(MirrorSet const &m) {
  CheckReport rep;
  auto t = CycNum::t(), v = CycNum::v(), w = CycNum::w();
  std::vector<RowVector<CycNum>> roots = {{t, 0, 0}, {1, 1, 1}, {v, 1, 1}, {w, 1, 1}};
  std::set<std::string> known;
  for (auto const &mir : m.mirrors)
    known.insert(vector_key(mir.root));
  std::vector<CycMatrix> gens;
  bool all_known = true;
  for (auto const &r : roots) {
    all_known = all_known && known.count(vector_key(normalize_left(r)));
    gens.push_back(build_complex_reflection(r, v));
  }
  rep.add("top row roots are mirrors", all_known, "");
  auto g = FinMatGroup::closure(gens);
  rep.add("top row reflections generate 24 elements", g.order() == 24, std::to_string(g.order()));
  RowVector<CycNum> f = {0, 1, -1};
  bool fixed = true;
  for (int e = 0; e < g.order(); ++e)
    fixed = fixed && apply_left(g.cyc(e), f) == f;
  rep.add("top row group fixes (0,1,-1)", fixed, "");
  return rep;
}

}  // namespace exactgrp
