#include "exactgrp/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace exactgrp {

CayleyGroup::CayleyGroup(int n, std::vector<int32_t> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("bad Cayley table size");
  inv_.assign(n, -1);
  ord_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > n)
        throw std::invalid_argument("Cayley table is not a group with identity 0");
    }
    ord_[a] = k;
  }
}

CayleyGroup CayleyGroup::from_mul(int n, std::function<int(int, int)> const &mul) {
  std::vector<int32_t> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<size_t>(a) * n + b] = mul(a, b);
  return CayleyGroup(n, std::move(t));
}

int CayleyGroup::power(int a, long k) const {
  long o = ord_[a];
  k %= o;
  if (k < 0)
    k += o;
  int r = 0, base = a;
  while (k) {
    if (k & 1)
      r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

ClassInfo conjugacy_classes(CayleyGroup const &g) {
  int n = g.order();
  ClassInfo ci;
  ci.class_of.assign(n, -1);
  std::vector<ConjClass> raw;
  for (int x = 0; x < n; ++x) {
    if (ci.class_of[x] >= 0)
      continue;
    int id = static_cast<int>(raw.size());
    ConjClass c;
    for (int y = 0; y < n; ++y) {
      int z = g.conj(x, y);
      if (ci.class_of[z] < 0) {
        ci.class_of[z] = id;
        c.members.push_back(z);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.rep = c.members.front();
    c.size = static_cast<int>(c.members.size());
    c.centralizer = n / c.size;
    c.elem_order = g.elem_order(x);
    raw.push_back(std::move(c));
  }
  std::vector<int> idx(raw.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    auto const &p = raw[a];
    auto const &q = raw[b];
    return std::tie(p.elem_order, p.size, p.rep) < std::tie(q.elem_order, q.size, q.rep);
  });
  std::vector<int> rank(raw.size());
  for (size_t k = 0; k < idx.size(); ++k) {
    rank[idx[k]] = static_cast<int>(k);
    ci.classes.push_back(std::move(raw[idx[k]]));
  }
  for (auto &c : ci.class_of)
    c = rank[c];
  return ci;
}

Subgroup subgroup_closure(CayleyGroup const &g, std::vector<int> const &gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (size_t k = 0; k < elems.size(); ++k)
    for (int s : gens) {
      int y = g.mul(elems[k], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup whole(CayleyGroup const &g) {
  Subgroup s(g.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Subgroup centralizer_of(CayleyGroup const &g, std::vector<int> const &set) {
  Subgroup out;
  for (int z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (int x : set)
      if (g.mul(z, x) != g.mul(x, z)) {
        ok = false;
        break;
      }
    if (ok)
      out.push_back(z);
  }
  return out;
}

Subgroup center(CayleyGroup const &g) { return centralizer_of(g, small_generating_set(g)); }

Subgroup commutator_subgroup(CayleyGroup const &g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> comms;
  auto gens = small_generating_set(g);
  // normal closure of the generator commutators
  for (int a : gens)
    for (int b : gens) {
      int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  for (size_t k = 0; k < comms.size(); ++k)
    for (int s : gens) {
      int c = g.conj(comms[k], s);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

bool is_subgroup(CayleyGroup const &g, Subgroup const &h) {
  std::vector<char> in(g.order(), 0);
  for (int x : h)
    in[x] = 1;
  if (h.empty() || !in[0])
    return false;
  for (int a : h)
    for (int b : h)
      if (!in[g.mul(a, b)])
        return false;
  return true;
}

bool is_normal(CayleyGroup const &g, Subgroup const &h) {
  std::vector<char> in(g.order(), 0);
  for (int x : h)
    in[x] = 1;
  for (int s : small_generating_set(g))
    for (int x : h)
      if (!in[g.conj(x, s)])
        return false;
  return true;
}

std::vector<int> small_generating_set(CayleyGroup const &g) {
  int n = g.order();
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<int> gens;
  std::vector<char> in(n, 0);
  in[0] = 1;
  int have = 1;
  for (int c : cand) {
    if (have == n)
      break;
    if (in[c])
      continue;
    gens.push_back(c);
    auto s = subgroup_closure(g, gens);
    std::fill(in.begin(), in.end(), 0);
    for (int x : s)
      in[x] = 1;
    have = static_cast<int>(s.size());
  }
  return gens;
}

namespace {

Subgroup product_set(CayleyGroup const &g, Subgroup const &a, Subgroup const &b) {
  std::vector<char> in(g.order(), 0);
  for (int x : a)
    for (int y : b)
      in[g.mul(x, y)] = 1;
  Subgroup out;
  for (int z = 0; z < g.order(); ++z)
    if (in[z])
      out.push_back(z);
  return out;
}

bool subgroup_less(Subgroup const &a, Subgroup const &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(CayleyGroup const &g, ClassInfo const &ci) {
  if (g.order() > 1000)
    throw OrderExceeded("normal subgroup search is limited to order 1000");
  std::set<Subgroup> minimal;
  for (auto const &c : ci.classes)
    minimal.insert(subgroup_closure(g, c.members));
  std::set<Subgroup> found{Subgroup{0}};
  std::vector<Subgroup> queue{Subgroup{0}};
  for (size_t k = 0; k < queue.size(); ++k)
    for (auto const &m : minimal) {
      auto j = product_set(g, queue[k], m);
      if (found.insert(j).second)
        queue.push_back(j);
    }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

QuotientGroup quotient(CayleyGroup const &g, Subgroup const &n) {
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw NotNormal();
  QuotientGroup q;
  q.coset_of.assign(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] >= 0)
      continue;
    int id = static_cast<int>(q.reps.size());
    q.reps.push_back(x);
    for (int y : n)
      q.coset_of[g.mul(x, y)] = id;
  }
  int m = static_cast<int>(q.reps.size());
  q.group = CayleyGroup::from_mul(m, [&](int a, int b) { return q.coset_of[g.mul(q.reps[a], q.reps[b])]; });
  return q;
}

CayleyGroup subgroup_group(CayleyGroup const &g, Subgroup const &h, std::vector<int> *embed) {
  std::vector<int> local(g.order(), -1);
  for (size_t k = 0; k < h.size(); ++k)
    local[h[k]] = static_cast<int>(k);
  if (h.empty() || h[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
  if (embed)
    *embed = h;
  return CayleyGroup::from_mul(static_cast<int>(h.size()), [&](int a, int b) {
    int r = local[g.mul(h[a], h[b])];
    if (r < 0)
      throw std::invalid_argument("set is not closed under multiplication");
    return r;
  });
}

bool is_isomorphism(CayleyGroup const &g, CayleyGroup const &h, std::vector<int> const &phi) {
  if (g.order() != h.order() || static_cast<int>(phi.size()) != g.order())
    return false;
  std::vector<char> used(h.order(), 0);
  for (int x : phi) {
    if (x < 0 || x >= h.order() || used[x])
      return false;
    used[x] = 1;
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b]))
        return false;
  return true;
}

namespace {

// extend generator images along the Cayley graph; empty on conflict
std::vector<int> extend_map(CayleyGroup const &g, CayleyGroup const &h, std::vector<int> const &gens,
                            std::vector<int> const &imgs) {
  std::vector<int> phi(g.order(), -1);
  std::vector<char> used(h.order(), 0);
  phi[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (size_t k = 0; k < queue.size(); ++k) {
    int x = queue[k];
    for (size_t s = 0; s < gens.size(); ++s) {
      int y = g.mul(x, gens[s]);
      int py = h.mul(phi[x], imgs[s]);
      if (phi[y] < 0) {
        if (used[py])
          return {};
        phi[y] = py;
        used[py] = 1;
        queue.push_back(y);
      } else if (phi[y] != py) {
        return {};
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.order())
    return {};
  return phi;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(CayleyGroup const &g, CayleyGroup const &h) {
  if (g.order() != h.order())
    return std::nullopt;
  auto cg = conjugacy_classes(g);
  auto ch = conjugacy_classes(h);
  auto profile = [](ClassInfo const &ci) {
    std::vector<std::pair<int, int>> p;
    for (auto const &c : ci.classes)
      p.emplace_back(c.elem_order, c.size);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(cg) != profile(ch))
    return std::nullopt;
  auto gens = small_generating_set(g);
  size_t m = gens.size();
  std::vector<std::vector<int>> cand(m);
  for (size_t s = 0; s < m; ++s) {
    auto const &cls = cg.classes[cg.class_of[gens[s]]];
    for (auto const &c : ch.classes) {
      if (c.elem_order != cls.elem_order || c.size != cls.size)
        continue;
      if (s == 0)
        cand[s].push_back(c.rep);  // up to inner automorphisms of h
      else
        cand[s].insert(cand[s].end(), c.members.begin(), c.members.end());
    }
  }
  std::vector<int> imgs(m);
  std::vector<int> result;
  std::function<bool(size_t)> search = [&](size_t s) -> bool {
    if (s == m) {
      result = extend_map(g, h, gens, imgs);
      return !result.empty();
    }
    for (int c : cand[s]) {
      bool ok = true;
      for (size_t r = 0; r < s && ok; ++r) {
        if (g.elem_order(g.mul(gens[r], gens[s])) != h.elem_order(h.mul(imgs[r], c)))
          ok = false;
        else if (g.elem_order(g.mul(gens[r], g.inv(gens[s]))) != h.elem_order(h.mul(imgs[r], h.inv(c))))
          ok = false;
      }
      if (!ok)
        continue;
      imgs[s] = c;
      if (search(s + 1))
        return true;
    }
    return false;
  };
  if (search(0))
    return result;
  return std::nullopt;
}

bool is_isomorphic(CayleyGroup const &g, CayleyGroup const &h) {
  if (g.order() > 256 || h.order() > 256)
    throw OrderExceeded("isomorphism testing is capped at order 256");
  return find_isomorphism(g, h).has_value();
}

std::vector<int> power_class_map(CayleyGroup const &g, ClassInfo const &ci, long k) {
  std::vector<int> out;
  for (auto const &c : ci.classes)
    out.push_back(ci.class_of[g.power(c.rep, k)]);
  return out;
}

GroupReport group_report(CayleyGroup const &g) {
  GroupReport r;
  r.order = g.order();
  r.exponent = 1;
  for (int x = 0; x < g.order(); ++x) {
    r.exponent = std::lcm(r.exponent, static_cast<long>(g.elem_order(x)));
    ++r.order_histogram[g.elem_order(x)];
  }
  auto z = center(g);
  auto d = commutator_subgroup(g);
  r.center_order = static_cast<long>(z.size());
  r.commutator_order = static_cast<long>(d.size());
  r.abelian = r.center_order == r.order;
  // G/Z elementary abelian of exponent p: G' <= Z and every p-th power in Z
  long p = 0;
  for (long q = 2; q <= r.center_order; ++q)
    if (r.center_order % q == 0) {
      p = q;
      break;
    }
  bool prime_center = p != 0 && p == r.center_order;
  if (prime_center) {
    std::vector<char> inz(g.order(), 0);
    for (int x : z)
      inz[x] = 1;
    bool elem_ab = std::all_of(d.begin(), d.end(), [&](int x) { return inz[x]; });
    for (int x = 0; x < g.order() && elem_ab; ++x)
      if (!inz[g.power(x, p)])
        elem_ab = false;
    if (elem_ab) {
      long m = r.order / r.center_order;
      int rank = 0;
      while (m % p == 0) {
        m /= p;
        ++rank;
      }
      if (m == 1)
        r.central_quotient_rank = rank;
    }
    r.extraspecial = elem_ab && r.central_quotient_rank > 0 && d == z;
  }
  return r;
}

int conjugation_orbit_count(std::vector<int> const &acting, std::vector<int> const &h,
                            std::function<int(int, int)> const &mul, std::function<int(int)> const &inv) {
  std::set<std::vector<int>> images;
  for (int g : acting) {
    int gi = inv(g);
    if (gi < 0)
      throw ElementNotInAmbient();
    std::vector<int> img;
    for (int x : h) {
      int y = mul(mul(gi, x), g);
      if (y < 0)
        throw ElementNotInAmbient();
      img.push_back(y);
    }
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  }
  return static_cast<int>(images.size());
}

CayleyGroup perm_group(std::vector<std::vector<int>> const &gens) {
  if (gens.empty())
    return cyclic_group(1);
  size_t deg = gens[0].size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [&](std::vector<int> const &a, std::vector<int> const &b) {
    // apply a then b
    std::vector<int> c(deg);
    for (size_t k = 0; k < deg; ++k)
      c[k] = b[a[k]];
    return c;
  };
  for (size_t k = 0; k < elems.size(); ++k)
    for (auto const &s : gens) {
      auto y = compose(elems[k], s);
      if (index.emplace(y, static_cast<int>(elems.size())).second)
        elems.push_back(y);
    }
  return CayleyGroup::from_mul(static_cast<int>(elems.size()),
                               [&](int a, int b) { return index.at(compose(elems[a], elems[b])); });
}

CayleyGroup cyclic_group(int n) {
  return CayleyGroup::from_mul(n, [n](int a, int b) { return (a + b) % n; });
}

CayleyGroup direct_product(CayleyGroup const &a, CayleyGroup const &b) {
  int m = b.order();
  return CayleyGroup::from_mul(a.order() * m, [&](int x, int y) {
    return a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  });
}

}  // namespace exactgrp
