#include "exactgrp/claims.hpp"
#include "exactgrp/f4.hpp"
#include "exactgrp/reflect.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace exactgrp;
namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2, NoClaims = 3, Cache = 4 };

struct Options {
  std::string format = "text";
  std::string cache_dir;
  int jobs = 1;
  std::string filter;
  std::string output;
  std::string name;
};

std::string default_cache_dir() {
  if (char const *e = std::getenv("EXACTGRP_CACHE_DIR"); e && *e)
    return e;
  return ".exactgrp-cache";
}

GroupStore make_store(Options const &o, bool strict = false) {
  StoreOptions so;
  so.cache_dir = o.cache_dir;
  so.jobs = o.jobs;
  so.strict_cache = strict;
  return GroupStore(so);
}

void check(CheckReport const &rep, ojson &arr, std::ostream *text) {
  for (auto const &c : rep.checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (text)
      *text << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  }
}

int cmd_verify(Options const &o) {
  auto store = make_store(o, true);
  VerificationReport rep;
  try {
    rep = run_claims(store, o.filter, o.jobs);
  } catch (CacheError const &e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return Cache;
  }
  for (auto const &r : rep.results)
    if (r.computed.find("cache") != std::string::npos && r.computed.rfind("error: ", 0) == 0) {
      std::cerr << r.computed << "\n";
      return Cache;
    }
  if (rep.results.empty()) {
    std::cerr << "no claims matched '" << o.filter << "'\n";
    return NoClaims;
  }
  std::string out = o.format == "json" ? rep.json() : rep.text();
  std::cout << out;
  if (!o.output.empty())
    std::ofstream(o.output) << out;
  return rep.failed() ? Failed : Ok;
}

int cmd_group_info(Options const &o) {
  auto store = make_store(o);
  auto const &e = catalog::get(o.name);
  ojson j;
  j["name"] = o.name;
  j["anchor"] = e.anchor;
  auto const &fm = store.group(o.name);
  if (e.central_quotient)
    j["closure_order"] = fm.order();
  if (!e.central_quotient && fm.order() > 20000) {
    j["order"] = fm.order();
    j["note"] = "too large for a multiplication table; class data omitted";
  } else {
    auto const &cg = store.classed(o.name);
    auto const &g = *cg.group;
    auto gr = group_report(g);
    auto ns = normal_subgroups(g, cg.classes);
    bool chain = true;
    for (size_t k = 1; k < ns.size(); ++k)
      chain = chain && std::includes(ns[k].begin(), ns[k].end(), ns[k - 1].begin(), ns[k - 1].end());
    j["order"] = gr.order;
    j["classes"] = cg.count();
    j["center_order"] = gr.center_order;
    j["commutator_order"] = gr.commutator_order;
    j["exponent"] = gr.exponent;
    j["abelian"] = gr.abelian;
    j["extraspecial"] = gr.extraspecial;
    auto &n = j["normal_subgroups"] = ojson::array();
    for (auto const &s : ns)
      n.push_back(s.size());
    j["normal_chain"] = chain;
    auto &h = j["element_orders"] = ojson::object();
    for (auto const &[ord, cnt] : gr.order_histogram)
      h[std::to_string(ord)] = cnt;
  }
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return Ok;
  }
  std::cout << "group " << o.name << ": " << e.anchor << "\n";
  for (auto const &[k, v] : j.items()) {
    if (k == "name" || k == "anchor")
      continue;
    if (v.is_array() || v.is_object())
      std::cout << k << ": " << v.dump() << "\n";
    else
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return Ok;
}

int cmd_chartab(Options const &o) {
  auto store = make_store(o);
  auto const &e = catalog::get(o.name);
  if (e.kind != EntryKind::Group)
    throw UnknownName(o.name + " (not a group)");
  long n = e.central_quotient ? store.classed(o.name).order() : store.group(o.name).order();
  if (n > 1000)
    throw OrderExceeded("character tables are limited to order 1000; " + o.name + " has " + std::to_string(n));
  auto const &t = store.table(o.name);
  auto meta = class_metadata(t, e.central_quotient ? nullptr : &store.group(o.name), e.generator_names);
  std::cout << (o.format == "json" ? table_json(t, meta) : table_text(t, meta));
  return Ok;
}

int cmd_geometry(Options const &o) {
  auto store = make_store(o);
  auto pc = classify_points();
  auto lines = line_profile();
  ojson j;
  auto names = [](std::vector<ProjPoint> const &v) {
    ojson a = ojson::array();
    for (auto const &p : v)
      a.push_back(p.name());
    return a;
  };
  j["nonsingular"] = names(pc.nonsingular);
  j["singular"] = names(pc.singular);
  auto &ls = j["lines"] = ojson::array();
  for (auto const &l : lines)
    ls.push_back({{"pole", l.pole.name()}, {"nonsingular", l.nonsingular}, {"singular", l.singular}});
  auto &cs = j["checks"] = ojson::array();
  auto rep = f4_geometry_checks(store.group("g648"), *store.group("btg").cayley());
  if (o.format == "json") {
    check(rep, cs, nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "nonsingular points: " << j["nonsingular"].dump() << "\n";
    std::cout << "singular points:    " << j["singular"].dump() << "\n";
    for (auto const &l : lines)
      std::cout << "line perp " << l.pole.name() << ": " << l.nonsingular << " nonsingular, " << l.singular
                << " singular\n";
    check(rep, cs, &std::cout);
  }
  return rep.ok() ? Ok : Failed;
}

int cmd_reflections(Options const &o) {
  auto store = make_store(o);
  auto m = reflection_scan(store.group("g648"));
  std::vector<RowVector<CycNum>> roots;
  ojson j;
  auto &ms = j["mirrors"] = ojson::array();
  for (auto const &mir : m.mirrors) {
    roots.push_back(mir.root);
    ojson l = ojson::array();
    for (auto const &r : mir.reflections)
      l.push_back(r.lambda.pretty());
    ms.push_back({{"root", vector_pretty(mir.root)}, {"eigenvalues", l}});
  }
  j["reflections"] = m.reflection_count();
  auto e6 = realify_to_e6(roots, o.jobs);
  j["real_lines"] = e6.lines.size();
  j["real_group_order"] = e6.group.order();
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto const &x : ms)
      std::cout << "mirror " << x["root"].get<std::string>() << "  eigenvalues " << x["eigenvalues"].dump() << "\n";
    std::cout << m.reflection_count() << " reflections in " << m.mirrors.size() << " mirrors\n";
    std::cout << e6.lines.size() << " real lines generate a group of order " << e6.group.order() << "\n";
  }
  return Ok;
}

int cmd_cache(Options const &o, bool clear) {
  fs::path dir(o.cache_dir);
  if (!fs::exists(dir)) {
    std::cout << "cache " << dir.string() << ": empty\n";
    return Ok;
  }
  std::vector<fs::path> files;
  for (auto const &f : fs::directory_iterator(dir))
    if (f.path().extension() == ".grp")
      files.push_back(f.path());
  std::sort(files.begin(), files.end());
  if (clear) {
    for (auto const &f : files)
      fs::remove(f);
    std::cout << "removed " << files.size() << " entries from " << dir.string() << "\n";
    return Ok;
  }
  std::cout << "cache " << dir.string() << ": " << files.size() << " entries\n";
  for (auto const &f : files) {
    std::string name = f.stem().string(), state = "ok";
    try {
      auto const &e = catalog::get(name);
      if (e.domain == Domain::Cyc)
        FinMatGroup::load(f.string(), e.cyc);
      else
        FinMatGroup::load(f.string(), e.quat);
    } catch (std::exception const &ex) {
      state = ex.what();
    }
    std::cout << "  " << name << "  " << fs::file_size(f) << " bytes  " << state << "\n";
  }
  return Ok;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact finite group verification"};
  app.require_subcommand(1);
  Options o;
  o.cache_dir = default_cache_dir();
  app.add_option("--cache-dir", o.cache_dir, "group cache directory (env EXACTGRP_CACHE_DIR)");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto *verify = app.add_subcommand("verify", "run the registered claims");
  verify->add_option("--filter", o.filter, "claim id prefix");
  verify->add_option("--output", o.output, "also write the report here");
  auto *info = app.add_subcommand("group-info", "structure of a catalog group");
  info->add_option("name", o.name)->required();
  auto *chartab = app.add_subcommand("chartab", "character table of a catalog group");
  chartab->add_option("name", o.name)->required();
  auto *geometry = app.add_subcommand("geometry", "Hermitian plane over F4");
  auto *refl = app.add_subcommand("reflections", "mirrors of the 648 group");
  auto *cache = app.add_subcommand("cache", "group cache");
  cache->require_subcommand(1);
  auto *clear = cache->add_subcommand("clear", "remove cached groups");
  auto *status = cache->add_subcommand("status", "list cached groups");
  // options are accepted after the subcommand as well
  for (auto *s : {verify, info, chartab, geometry, refl, clear, status}) {
    s->add_option("--cache-dir", o.cache_dir);
    s->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    s->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify)
      return cmd_verify(o);
    if (*info)
      return cmd_group_info(o);
    if (*chartab)
      return cmd_chartab(o);
    if (*geometry)
      return cmd_geometry(o);
    if (*refl)
      return cmd_reflections(o);
    if (*clear)
      return cmd_cache(o, true);
    if (*status)
      return cmd_cache(o, false);
  } catch (CacheError const &e) {
    std::cerr << "cache error: " << e.what() << "\n";
    return Cache;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return Usage;
}
