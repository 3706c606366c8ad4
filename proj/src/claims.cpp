#include "exactgrp/claims.hpp"

#include "exactgrp/dirac.hpp"
#include "exactgrp/f4.hpp"
#include "exactgrp/reflect.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

namespace exactgrp {

CheckReport const &ClaimContext::report(std::string const &key, std::function<CheckReport()> const &make) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto &s = slots_[key];
    if (!s)
      s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] { slot->rep = make(); });
  return slot->rep;
}

CheckReport normal_chain_check(CayleyGroup const &g, CayleyGroup const &btg) {
  CheckReport rep;
  auto ci = conjugacy_classes(g);
  auto ns = normal_subgroups(g, ci);
  std::string orders;
  for (auto const &s : ns)
    orders += (orders.empty() ? "" : ",") + std::to_string(s.size());
  rep.add("6 normal subgroups", ns.size() == 6, std::to_string(ns.size()));
  bool chain = true;
  for (size_t k = 1; k < ns.size(); ++k)
    chain = chain && std::includes(ns[k].begin(), ns[k].end(), ns[k - 1].begin(), ns[k - 1].end());
  rep.add("normal subgroups form a chain", chain, orders);
  auto find = [&](size_t n) -> Subgroup const * {
    for (auto const &s : ns)
      if (s.size() == n)
        return &s;
    return nullptr;
  };
  auto const *k216 = find(216), *k54 = find(54), *k27 = find(27);
  if (k216) {
    auto q = quotient(g, *k216);
    rep.add("quotient by the order 216 kernel is Z3", is_isomorphic(q.group, cyclic_group(3)));
    rep.add("order 216 kernel is the commutator subgroup", commutator_subgroup(g) == *k216);
  } else {
    rep.add("quotient by the order 216 kernel is Z3", false, "no such kernel");
  }
  if (k54) {
    auto q = quotient(g, *k54);
    auto a4 = perm_group({{1, 2, 0, 3}, {0, 2, 3, 1}});
    auto phi = find_isomorphism(q.group, a4);
    rep.add("quotient by the order 54 kernel is A4", phi && is_isomorphism(q.group, a4, *phi),
            std::to_string(q.group.order()));
  } else {
    rep.add("quotient by the order 54 kernel is A4", false, "no such kernel");
  }
  if (k27) {
    auto q = quotient(g, *k27);
    rep.add("quotient by the order 27 kernel is binary tetrahedral", is_isomorphic(q.group, btg));
  } else {
    rep.add("quotient by the order 27 kernel is binary tetrahedral", false, "no such kernel");
  }
  return rep;
}

namespace {

std::string yes(bool b) { return b ? "holds" : "fails"; }

Outcome from_check(CheckReport const &rep, std::string const &name, std::string expected = "holds") {
  auto const *c = rep.find(name);
  if (!c)
    return {false, "check missing: " + name, expected};
  std::string computed = c->detail.empty() ? yes(c->pass) : c->detail;
  return {c->pass, computed, expected};
}

Outcome from_all(CheckReport const &rep) {
  int ok = 0;
  std::string bad;
  for (auto const &c : rep.checks) {
    ok += c.pass;
    if (!c.pass && bad.empty())
      bad = "; first failure: " + c.name;
  }
  auto n = std::to_string(rep.checks.size());
  return {rep.ok(), std::to_string(ok) + "/" + n + " checks" + bad, n + "/" + n + " checks"};
}

// ---------------------------------------------------------------- shared reports

CheckReport const &geometry(ClaimContext &c) {
  return c.report("geometry", [&] {
    auto const &btg = c.store.group("btg");
    return f4_geometry_checks(c.store.group("g648"), *btg.cayley());
  });
}

MirrorSet const &mirrors(ClaimContext &c) {
  static std::mutex mu;
  static std::map<GroupStore const *, std::unique_ptr<MirrorSet>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto &m = memo[&c.store];
  if (!m)
    m = std::make_unique<MirrorSet>(reflection_scan(c.store.group("g648")));
  return *m;
}

CheckReport const &reflections(ClaimContext &c) {
  return c.report("reflections", [&] {
    CheckReport rep;
    auto const &m = mirrors(c);
    rep.add("reflection count", m.reflection_count() == 24 && m.mirrors.size() == 12,
            std::to_string(m.reflection_count()) + " reflections in " + std::to_string(m.mirrors.size()) + " mirrors");
    std::set<std::string> scanned, built;
    std::vector<CycMatrix> gens;
    for (auto const &mir : m.mirrors) {
      for (auto const &r : mir.reflections)
        scanned.insert(r.matrix.key());
      for (auto const &l : {CycNum::v(), CycNum::w()}) {
        gens.push_back(build_complex_reflection(mir.root, l));
        built.insert(gens.back().key());
      }
    }
    rep.add("formula reproduces the reflections", scanned == built);
    int order = FinMatGroup::closure(gens).order();
    rep.add("reflections generate the group", order == 648, std::to_string(order));
    std::vector<RowVector<CycNum>> roots;
    for (auto const &mir : m.mirrors)
      roots.push_back(mir.root);
    auto e6 = realify_to_e6(roots, c.store.options().jobs);
    rep.add("realified lines", e6.lines.size() == 36 && e6.group.order() == 51840,
            std::to_string(e6.lines.size()) + " lines, order " + std::to_string(e6.group.order()));
    for (auto const &x : top_row_check(m).checks)
      rep.add("top row: " + x.name, x.pass, x.detail);
    return rep;
  });
}

CheckReport const &chain(ClaimContext &c) {
  return c.report("chain", [&] {
    return normal_chain_check(*c.store.group("g648").cayley(), *c.store.group("btg").cayley());
  });
}

CheckReport const &census(ClaimContext &c) {
  return c.report("census", [&] {
    CheckReport rep;
    auto const &e = c.store.group("e128");
    auto gr = group_report(*e.cayley());
    rep.add("extraspecial", gr.extraspecial && gr.center_order == 2 && gr.central_quotient_rank == 6,
            "order " + std::to_string(gr.order) + ", centre " + std::to_string(gr.center_order) + ", rank " +
                std::to_string(gr.central_quotient_rank));
    auto cs = e128_census(e, spin_q8());
    rep.add("q8", cs.q8_subgroups == 120, std::to_string(cs.q8_subgroups));
    rep.add("factorizations", cs.factorizations == 40, std::to_string(cs.factorizations));
    rep.add("involutions", cs.commuting_involutions == 9, std::to_string(cs.commuting_involutions));
    rep.add("anticommuting", cs.anticommuting_partners == 4, std::to_string(cs.anticommuting_partners));
    return rep;
  });
}

CheckReport const &combined(ClaimContext &c) {
  return c.report("combined", [&] {
    auto rep = combined_group_checks(c.store.group("combined82944"), c.store.group("e128"), c.store.group("q648"));
    for (auto const &x : automorphism_check(c.store.group("combined82944")).checks)
      rep.add(x.name, x.pass, x.detail);
    return rep;
  });
}

CheckReport const &spinor(ClaimContext &c) {
  return c.report("spinor", [&] {
    CheckReport rep;
    auto s = spinor_character(c.store);
    std::string d = s.decomposition;
    if (!s.twist.empty())
      d += " (central twist by " + s.twist + "; untwisted " + s.untwisted + ")";
    rep.add("spinor", s.decomposition == "2a+3b+3b*", d);
    rep.add("degree", s.character.degree() == CycNum(8), s.character.degree().pretty());
    return rep;
  });
}

// ---------------------------------------------------------------- claim table

Claim order_claim(std::string const &name, std::string const &id) {
  auto const &e = catalog::get(name);
  return {id, e.anchor, [name](ClaimContext &c) -> Outcome {
            auto const &e = catalog::get(name);
            long n = e.central_quotient ? c.store.classed(name).order() : c.store.group(name).order();
            return {e.expected_order && n == *e.expected_order, std::to_string(n),
                    e.expected_order ? std::to_string(*e.expected_order) : "?"};
          }};
}

Claim table_claim(std::string const &name, std::string const &anchor, int rows) {
  return {"chartab." + name, anchor, [name, rows](ClaimContext &c) -> Outcome {
            auto const &t = c.store.table(name);
            auto const &m = c.store.table_match_of(name);
            bool ok = static_cast<int>(t.irr.size()) == rows && orthogonality_report(t).ok();
            return {ok, std::to_string(t.irr.size()) + " rows matched, twist " + std::to_string(m.twist),
                    std::to_string(rows) + " rows matched"};
          }};
}

Claim check_claim(std::string id, std::string anchor, CheckReport const &(*rep)(ClaimContext &),
                  std::string name, std::string expected) {
  return {std::move(id), std::move(anchor), [rep, name, expected](ClaimContext &c) {
            return from_check(rep(c), name, expected);
          }};
}

Claim report_claim(std::string id, std::string anchor, std::string key, std::function<CheckReport(ClaimContext &)> make) {
  return {std::move(id), std::move(anchor), [key, make](ClaimContext &c) {
            return from_all(c.report(key, [&] { return make(c); }));
          }};
}

std::vector<Claim> build_claims() {
  std::vector<Claim> v;
  v.push_back(order_claim("q8", "orders.q8"));
  v.push_back(order_claim("btg", "orders.btg"));
  v.push_back(order_claim("g27", "orders.g27"));
  v.push_back(order_claim("g216", "orders.g216"));
  v.push_back(order_claim("hessian216", "orders.hessian216"));
  v.push_back(order_claim("g648", "orders.g648"));
  v.push_back(order_claim("e128", "orders.e128"));
  v.push_back(order_claim("q648", "orders.q648"));
  v.push_back(order_claim("g27q", "orders.g27q"));
  v.push_back(order_claim("q8q", "orders.q8q"));
  v.push_back(order_claim("combined82944", "orders.combined"));
  for (auto const &n : {"btg_perm", "btg_scalar", "btg_mixed"})
    v.push_back(order_claim(n, std::string("orders.") + n));

  v.push_back(report_claim("catalog.gluon_basis", "unitary trace-zero basis of the Gell-Mann span", "gluon",
                           [](ClaimContext &) { return catalog::gluon_basis_check(); }));
  v.push_back(report_claim("catalog.relations", "Q8, Z3 and G27 relations among the generators", "relations",
                           [](ClaimContext &) { return catalog::semidirect_relation_check(); }));

  v.push_back(table_claim("btg", "binary tetrahedral character table", 7));
  v.push_back(table_claim("hessian216", "Hessian group character table", 10));
  v.push_back({"chartab.g648", "faithful characters of the order 648 group, signs corrected",
               [](ClaimContext &c) -> Outcome {
                 auto const &t = c.store.table("g648");
                 auto const &m = c.store.table_match_of("g648");
                 bool ok = t.irr.size() == 24 && orthogonality_report(t).ok();
                 return {ok, std::to_string(t.irr.size()) + " rows, 14 faithful matched, twist " + std::to_string(m.twist),
                         "24 rows, 14 faithful matched"};
               }});
  v.push_back({"chartab.g648.printed", "faithful characters of the order 648 group, as printed",
               [](ClaimContext &c) -> Outcome {
                 auto const &t = c.store.table("g648");
                 try {
                   auto m = table_match(t, quark_reference(true), c.store.match_options_of("g648"));
                   return {true, "matched, twist " + std::to_string(m.twist), "match"};
                 } catch (NoMatch const &e) {
                   return {false, std::string("no match: ") + e.what(), "match"};
                 }
               }});

  v.push_back({"decomp.alt2_8a", "antisymmetric square of 8a", [](ClaimContext &c) -> Outcome {
                 auto const &t = c.store.table("hessian216");
                 auto s = constituents(t, decompose(t, alt2(t.group, t["8a"])));
                 return {s == "2b+2c+8a+8b+8c", s, "2b+2c+8a+8b+8c"};
               }});
  v.push_back({"decomp.sym2_8a", "symmetric square of 8a", [](ClaimContext &c) -> Outcome {
                 auto const &t = c.store.table("hessian216");
                 auto s = constituents(t, decompose(t, sym2(t.group, t["8a"])));
                 return {s == "1a+3a+8a+8a+8b+8c", s, "1a+3a+8a+8a+8b+8c"};
               }});
  v.push_back(report_claim("decomp.tensor_relations", "relations among the faithful characters", "tensor",
                           [](ClaimContext &c) { return verify_tensor_relations(c.store.table("g648")); }));

  v.push_back(check_claim("reflect.count", "reflections and mirrors of the 648 group", reflections, "reflection count",
                          "24 reflections in 12 mirrors"));
  v.push_back(check_claim("reflect.formula", "reflection formula", reflections, "formula reproduces the reflections",
                          "holds"));
  v.push_back(check_claim("reflect.generate", "reflections generate the group", reflections,
                          "reflections generate the group", "648"));
  v.push_back(check_claim("reflect.e6", "realified reflections, Weyl group of E6", reflections, "realified lines",
                          "36 lines, order 51840"));
  v.push_back(report_claim("reflect.top_row", "mirrors of the printed top row", "top_row", [](ClaimContext &c) {
    CheckReport r;
    for (auto const &x : reflections(c).checks)
      if (x.name.rfind("top row: ", 0) == 0)
        r.add(x.name, x.pass, x.detail);
    return r;
  }));

  v.push_back(check_claim("geometry.points", "points of the Hermitian plane over F4", geometry,
                          "12 nonsingular and 9 singular points", "holds"));
  v.push_back(check_claim("geometry.printed_points", "printed point arrangement", geometry,
                          "printed point arrays match the classification", "holds"));
  v.push_back(check_claim("geometry.lines.nonsingular", "line profiles", geometry,
                          "nonsingular lines hold 2 nonsingular and 3 singular points", "holds"));
  v.push_back(check_claim("geometry.lines.singular", "line profiles", geometry,
                          "singular lines hold 1 singular and 4 nonsingular points", "holds"));
  v.push_back(check_claim("geometry.mirrors", "mirrors reduce onto nonsingular points", geometry,
                          "mirrors reduce bijectively onto the nonsingular points", "holds"));
  v.push_back(check_claim("geometry.u3f4", "unitary group U(3,F4)", geometry, "|U(3,F4)| = 648 by brute force",
                          "holds"));
  v.push_back(check_claim("geometry.reduction", "reduction onto U(3,F4)", geometry,
                          "reduction mod 2 maps the 648 group onto U(3,F4)", "holds"));
  v.push_back(check_claim("geometry.su2f9", "SU(2,F9) and the binary tetrahedral group", geometry,
                          "binary tetrahedral group is isomorphic to SU(2,F9)", "holds"));
  v.push_back(report_claim("geometry.quotient_chain", "chain of quotient maps 648, 24, 3", "qchain", [](ClaimContext &c) {
    return quotient_chain_check(*c.store.group("g648").cayley(), *c.store.group("btg").cayley());
  }));
  v.push_back(report_claim("geometry.all", "all finite geometry checks", "geometry_all",
                           [](ClaimContext &c) { return geometry(c); }));

  v.push_back(check_claim("normal.count", "normal subgroups of the 648 group", chain, "6 normal subgroups", "6"));
  v.push_back(check_claim("normal.chain", "normal subgroups form a chain", chain, "normal subgroups form a chain",
                          "1,3,27,54,216,648"));
  v.push_back(check_claim("normal.z3", "abelianization", chain, "quotient by the order 216 kernel is Z3", "holds"));
  v.push_back(check_claim("normal.a4", "alternating quotient", chain, "quotient by the order 54 kernel is A4", "12"));
  v.push_back(check_claim("normal.btg", "binary tetrahedral quotient", chain,
                          "quotient by the order 27 kernel is binary tetrahedral", "holds"));

  v.push_back(report_claim("dirac.clifford", "Clifford signatures Cl(3,1), Cl(2,3), Cl(2,4)", "clifford",
                           [](ClaimContext &) { return clifford_check(); }));
  v.push_back(check_claim("dirac.e128.extraspecial", "extraspecial group of order 128", census, "extraspecial",
                          "order 128, centre 2, rank 6"));
  v.push_back(check_claim("dirac.census.q8", "Q8 subgroups of E128", census, "q8", "120"));
  v.push_back(check_claim("dirac.census.factorizations", "factorizations into three commuting Q8", census,
                          "factorizations", "40"));
  v.push_back(check_claim("dirac.census.involutions", "involutions commuting with a Q8, up to sign", census,
                          "involutions", "9"));
  v.push_back(check_claim("dirac.census.anticommuting", "involutions anticommuting with a fixed one", census,
                          "anticommuting", "4"));
  v.push_back(report_claim("dirac.columns", "three commuting column copies of Q8", "columns",
                           [](ClaimContext &c) { return column_triple_check(c.store.group("e128")); }));
  v.push_back(report_claim("dirac.display.isospin", "isospin conjugation images of the first row", "isospin",
                           [](ClaimContext &) {
                             CheckReport r;
                             for (auto const &x : conjugation_display_check().checks)
                               if (x.name.rfind("pauli4q1 on", 0) == 0)
                                 r.add(x.name, x.pass, x.detail);
                             return r;
                           }));
  v.push_back(report_claim("dirac.display.gluon", "colourless gluon conjugation displays", "gluon_display",
                           [](ClaimContext &) {
                             CheckReport r;
                             for (auto const &x : conjugation_display_check().checks)
                               if (x.name.rfind("pauli4q1 on", 0) != 0)
                                 r.add(x.name, x.pass, x.detail);
                             return r;
                           }));
  v.push_back(report_claim("dirac.named_products", "named Dirac products", "named",
                           [](ClaimContext &) { return named_product_check(); }));
  v.push_back(report_claim("dirac.columns.preserved", "Gell-Mann matrices keep the factorization, Pauli do not",
                           "preserve", [](ClaimContext &) { return column_preservation_check(); }));
  v.push_back(report_claim("dirac.centre", "centre of the quaternionic G27 and fixed spaces", "centre",
                           [](ClaimContext &) { return center_action_check(); }));
  v.push_back(check_claim("dirac.combined.normal", "E128 normal in the combined group", combined, "E128 is normal",
                          "holds"));
  v.push_back(check_claim("dirac.combined.complement", "648 group complements E128", combined,
                          "648 group meets E128 trivially", "1"));
  v.push_back(check_claim("dirac.orbit", "copies of the spin Q8 under the 648 group", combined,
                          "spin Q8 orbit under the 648 group", "12"));
  v.push_back(check_claim("dirac.automorphism", "conjugation respects products", combined,
                          "conjugation respects products", "holds"));
  v.push_back(check_claim("dirac.spinor", "action on quaternionic spinors", spinor, "spinor", "2a+3b+3b*"));

  std::sort(v.begin(), v.end(), [](Claim const &a, Claim const &b) { return a.id < b.id; });
  return v;
}

std::string pad(std::string s, size_t n) {
  if (s.size() < n)
    s.append(n - s.size(), ' ');
  return s;
}

}  // namespace

std::vector<Claim> const &claims() {
  static std::vector<Claim> v = build_claims();
  return v;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](auto const &r) { return r.pass; }));
}
int VerificationReport::failed() const { return static_cast<int>(results.size()) - passed(); }

std::string VerificationReport::text() const {
  size_t w = 0;
  for (auto const &r : results)
    w = std::max(w, r.id.size());
  std::ostringstream os;
  for (auto const &r : results)
    os << (r.pass ? "PASS  " : "FAIL  ") << pad(r.id, w) << "  " << r.computed
       << (r.pass ? "" : "  (expected " + r.expected + ")") << "\n";
  os << results.size() << " claims, " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

std::string VerificationReport::json() const {
  nlohmann::ordered_json j;
  j["schema"] = "exactgrp-verify/1";
  auto &a = j["claims"] = nlohmann::ordered_json::array();
  for (auto const &r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["status"] = r.pass ? "pass" : "fail";
    c["computed"] = r.computed;
    c["expected"] = r.expected;
    a.push_back(c);
  }
  j["summary"] = {{"total", results.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

VerificationReport run_claims(GroupStore &store, std::string const &filter, int jobs) {
  std::vector<Claim const *> sel;
  for (auto const &c : claims())
    if (c.id.rfind(filter, 0) == 0)
      sel.push_back(&c);
  VerificationReport rep;
  rep.results.resize(sel.size());
  ClaimContext ctx(store);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t k; (k = next++) < sel.size();) {
      auto &r = rep.results[k];
      r.id = sel[k]->id;
      r.anchor = sel[k]->anchor;
      try {
        auto o = sel[k]->run(ctx);
        r.pass = o.pass;
        r.computed = o.computed;
        r.expected = o.expected;
      } catch (std::exception const &e) {
        r.pass = false;
        r.computed = std::string("error: ") + e.what();
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(sel.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();
  return rep;
}

}  // namespace exactgrp
