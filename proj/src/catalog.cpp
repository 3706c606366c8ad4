#include "exactgrp/catalog.hpp"

#include <map>
#include <sstream>

namespace exactgrp::catalog {

namespace {

char const *const kSource =
#include "catalog_data.inc"
    ;

std::string trim(std::string const &s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos)
    return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(std::string const &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Domain parse_domain(std::string const &s) {
  if (s == "cyc")
    return Domain::Cyc;
  if (s == "quat")
    return Domain::Quat;
  throw ParseError("catalog: bad domain " + s);
}

struct Catalog {
  std::map<std::string, CatalogEntry> entries;
  std::vector<std::string> order;
};

template <class S> S parse_scalar(std::string const &s);
template <> CycNum parse_scalar<CycNum>(std::string const &s) { return parse_cyc(s); }
template <> QuatNum parse_scalar<QuatNum>(std::string const &s) { return parse_quat(s); }

template <class S>
std::vector<RowVector<S>> read_rows(std::istream &in, int rows, int cols, std::string const &name) {
  std::vector<RowVector<S>> out;
  std::string line;
  while (static_cast<int>(out.size()) < rows && std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    auto cells = split(line, ',');
    if (static_cast<int>(cells.size()) != cols)
      throw ParseError("catalog: row width mismatch in " + name);
    RowVector<S> row;
    for (auto const &c : cells)
      row.push_back(parse_scalar<S>(c));
    out.push_back(std::move(row));
  }
  if (static_cast<int>(out.size()) != rows)
    throw ParseError("catalog: truncated entry " + name);
  return out;
}

template <class S> Matrix<S> to_matrix(std::vector<RowVector<S>> const &rows, S const &scale) {
  int n = static_cast<int>(rows.size());
  Matrix<S> m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m(r, c) = scale * rows[r][c];
  return m;
}

Catalog load() {
  Catalog cat;
  std::istringstream in(kSource);
  std::string line;
  CatalogEntry *last = nullptr;
  auto add = [&](CatalogEntry e) -> CatalogEntry * {
    if (cat.entries.count(e.name))
      throw ParseError("catalog: duplicate name " + e.name);
    cat.order.push_back(e.name);
    auto name = e.name;
    return &(cat.entries[name] = std::move(e));
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "matrix") {
      CatalogEntry e;
      std::string dom, opt, scale = "1";
      ls >> e.name >> dom >> e.dim;
      if (ls >> opt) {
        if (opt != "scale" || !(ls >> scale))
          throw ParseError("catalog: bad matrix header " + line);
      }
      e.kind = EntryKind::Matrix;
      e.domain = parse_domain(dom);
      e.generator_names = {e.name};
      if (e.domain == Domain::Cyc)
        e.cyc.push_back(to_matrix(read_rows<CycNum>(in, e.dim, e.dim, e.name), parse_cyc(scale)));
      else
        e.quat.push_back(to_matrix(read_rows<QuatNum>(in, e.dim, e.dim, e.name), parse_quat(scale)));
      last = add(std::move(e));
    } else if (kw == "vectors") {
      CatalogEntry e;
      std::string dom;
      int count = 0;
      ls >> e.name >> dom >> e.dim >> count;
      e.kind = EntryKind::Vectors;
      e.domain = parse_domain(dom);
      if (e.domain == Domain::Cyc)
        e.cyc_vectors = read_rows<CycNum>(in, count, e.dim, e.name);
      else
        e.quat_vectors = read_rows<QuatNum>(in, count, e.dim, e.name);
      last = add(std::move(e));
    } else if (kw == "group") {
      CatalogEntry e;
      std::string dom, ord, g;
      ls >> e.name >> dom >> ord;
      e.kind = EntryKind::Group;
      e.domain = parse_domain(dom);
      if (ord != "?")
        e.expected_order = std::stol(ord);
      while (ls >> g) {
        auto it = cat.entries.find(g);
        if (it == cat.entries.end() || it->second.kind != EntryKind::Matrix || it->second.domain != e.domain)
          throw ParseError("catalog: bad generator " + g + " in " + e.name);
        e.dim = it->second.dim;
        e.generator_names.push_back(g);
        if (e.domain == Domain::Cyc)
          e.cyc.push_back(it->second.cyc[0]);
        else
          e.quat.push_back(it->second.quat[0]);
      }
      last = add(std::move(e));
    } else if (kw == "anchor") {
      if (!last)
        throw ParseError("catalog: anchor before entry");
      std::string rest;
      std::getline(ls, rest);
      last->anchor = trim(rest);
    } else if (kw == "flag") {
      if (!last)
        throw ParseError("catalog: flag before entry");
      std::string f;
      ls >> f;
      if (f == "hermitian")
        last->hermitian_basis = true;
      else if (f == "central_quotient")
        last->central_quotient = true;
      else
        throw ParseError("catalog: unknown flag " + f);
    } else {
      throw ParseError("catalog: unknown keyword " + kw);
    }
  }
  return cat;
}

Catalog const &instance() {
  static Catalog const cat = load();
  return cat;
}

}  // namespace

CatalogEntry const &get(std::string const &name) {
  auto const &cat = instance();
  auto it = cat.entries.find(name);
  if (it == cat.entries.end())
    throw UnknownName(name);
  return it->second;
}

std::vector<std::string> names(std::optional<EntryKind> kind) {
  std::vector<std::string> out;
  for (auto const &n : instance().order)
    if (!kind || instance().entries.at(n).kind == *kind)
      out.push_back(n);
  return out;
}

CycMatrix const &cyc(std::string const &name) {
  auto const &e = get(name);
  if (e.kind != EntryKind::Matrix || e.domain != Domain::Cyc)
    throw UnknownName(name + " (not a cyclotomic matrix)");
  return e.cyc[0];
}

QuatMatrix const &quat(std::string const &name) {
  auto const &e = get(name);
  if (e.kind != EntryKind::Matrix || e.domain != Domain::Quat)
    throw UnknownName(name + " (not a quaternionic matrix)");
  return e.quat[0];
}

std::string const &source_text() {
  static std::string const s = kSource;
  return s;
}

std::string checksum() {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : source_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

namespace {

CycNum inner(CycMatrix const &a, CycMatrix const &b) { return (dagger(a) * b).trace(); }

RowVector<CycNum> flatten(CycMatrix const &m) { return m.entries(); }

}  // namespace

CheckReport gluon_basis_check() {
  CheckReport rep;
  std::vector<CycMatrix> u, lam;
  for (int k = 1; k <= 8; ++k) {
    u.push_back(cyc("unitary" + std::to_string(k)));
    lam.push_back(cyc("lambda" + std::to_string(k)));
  }
  bool traceless = true, unitary = true, det1 = true;
  for (auto const &m : u) {
    traceless &= m.trace().is_zero();
    unitary &= is_unitary(m);
    det1 &= det(m) == CycNum(1);
  }
  rep.add("unitary basis traceless", traceless);
  rep.add("unitary basis unitary", unitary);
  rep.add("unitary basis det 1", det1);

  bool ortho = true, norm3 = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      CycNum ip = inner(u[a], u[b]);
      if (a == b)
        norm3 &= ip == CycNum(3);
      else
        ortho &= ip.is_zero();
    }
  rep.add("pairwise orthogonal", ortho, "<A,B> = tr(A^+ B)");
  rep.add("equal norm 3", norm3);

  bool lam_traceless = true;
  for (auto const &m : lam)
    lam_traceless &= m.trace().is_zero();
  std::vector<RowVector<CycNum>> ru, rl, rj;
  for (auto const &m : u)
    ru.push_back(flatten(m));
  for (auto const &m : lam)
    rl.push_back(flatten(m));
  rj = ru;
  rj.insert(rj.end(), rl.begin(), rl.end());
  int a = rank_of_rows(ru), b = rank_of_rows(rl), c = rank_of_rows(rj);
  rep.add("lambda matrices traceless", lam_traceless);
  rep.add("same span as Gell-Mann", a == 8 && b == 8 && c == 8,
          "ranks " + std::to_string(a) + "/" + std::to_string(b) + "/" + std::to_string(c));
  return rep;
}

CheckReport semidirect_relation_check() {
  CheckReport rep;
  auto const &I = cyc("I");
  auto const &J = cyc("J");
  auto const &K = cyc("K");
  auto const &W = cyc("W");
  rep.add("IJ = K", I * J == K);
  rep.add("IW = WJ", I * W == W * J);
  rep.add("JW = WIJ", J * W == W * I * J);
  // direct product relations must fail for the non-scalar W
  rep.add("IW != WI", I * W != W * I);
  rep.add("JW != WJ", J * W != W * J);
  rep.add("W factored form", W == cyc("W_factored"));
  rep.add("W = (-1+I+J+K)/2", W == CycNum(Rational(1, 2)) * (-CycMatrix::identity(2) + I + J + K));

  auto const &d = cyc("g27_diag");
  auto const &p = cyc("g27_perm");
  auto dinv = dagger(d), pinv = dagger(p);
  auto comm = dinv * pinv * d * p;
  bool order3 = comm.is_scalar() && comm(0, 0) != CycNum(1) && comm * comm * comm == CycMatrix::identity(3);
  rep.add("G27 commutator is an order 3 scalar", order3, "x^-1 y^-1 x y = " + comm(0, 0).pretty() + " I");

  auto const &F = cyc("fourier");
  rep.add("P F = F'", p * F == cyc("fourier_permuted"));
  rep.add("P F = F D", p * F == F * d);
  return rep;
}

}  // namespace exactgrp::catalog
