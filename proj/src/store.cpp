#include "exactgrp/store.hpp"

#include <filesystem>

namespace exactgrp {

namespace fs = std::filesystem;

GroupStore::GroupStore(StoreOptions opt) : opt_(std::move(opt)) {}

GroupStore::Stats GroupStore::stats() const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return stats_;
}

FinMatGroup const &GroupStore::group(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = groups_.find(name);
  if (it != groups_.end())
    return *it->second;
  auto const &e = catalog::get(name);
  if (e.kind != EntryKind::Group)
    throw UnknownName(name + " (not a group)");
  ClosureOptions co;
  co.jobs = opt_.jobs;
  std::optional<FinMatGroup> g;
  std::string path;
  if (opt_.cache_dir) {
    fs::create_directories(*opt_.cache_dir);
    path = (fs::path(*opt_.cache_dir) / (name + ".grp")).string();
    if (fs::exists(path)) {
      try {
        g = e.domain == Domain::Cyc ? FinMatGroup::load(path, e.cyc) : FinMatGroup::load(path, e.quat);
        ++stats_.cache_hits;
      } catch (CacheError const &) {
        if (opt_.strict_cache)
          throw;
        g.reset();  // stale or corrupt: rebuild below
      }
    }
  }
  if (!g) {
    g = e.domain == Domain::Cyc ? FinMatGroup::closure(e.cyc, co) : FinMatGroup::closure(e.quat, co);
    ++stats_.closures;
    if (!path.empty()) {
      g->save(path);
      ++stats_.cache_writes;
    }
  }
  return *(groups_[name] = std::make_unique<FinMatGroup>(std::move(*g)));
}

QuotientGroup const &GroupStore::central_quotient(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = quotients_.find(name);
  if (it != quotients_.end())
    return *it->second;
  auto cg = group(name).cayley();
  auto q = quotient(*cg, center(*cg));
  return *(quotients_[name] = std::make_unique<QuotientGroup>(std::move(q)));
}

ClassedGroup const &GroupStore::classed(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = classed_.find(name);
  if (it != classed_.end())
    return *it->second;
  auto const &e = catalog::get(name);
  ClassedGroup c = e.central_quotient ? ClassedGroup::of(central_quotient(name).group)
                                      : ClassedGroup::of(group(name).cayley());
  return *(classed_[name] = std::make_unique<ClassedGroup>(std::move(c)));
}

CharTable const &GroupStore::table(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = tables_.find(name);
  if (it != tables_.end())
    return *it->second;
  auto m = std::make_unique<MatchResult>();
  MatchOptions mo;
  auto t = build_table(name, m.get(), &mo);
  matches_[name] = std::move(m);
  match_opts_[name] = std::move(mo);
  return *(tables_[name] = std::make_unique<CharTable>(std::move(t)));
}

MatchResult const &GroupStore::table_match_of(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  table(name);
  return *matches_.at(name);
}

MatchOptions const &GroupStore::match_options_of(std::string const &name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  table(name);
  return match_opts_.at(name);
}

namespace {

std::vector<Character> with_linear(ClassedGroup const &g, std::vector<Character> seeds) {
  for (auto &c : linear_characters(g))
    seeds.push_back(std::move(c));
  return seeds;
}

int row_of(CharTable const &t, Character const &c) {
  for (size_t k = 0; k < t.irr.size(); ++k)
    if (t.irr[k] == c)
      return static_cast<int>(k);
  return -1;
}

}  // namespace

CharTable GroupStore::build_table(std::string const &name, MatchResult *match, MatchOptions *opts) {
  if (name == "q8" || name == "g27" || name == "e128" || name == "btg") {
    auto const &g = classed(name);
    auto nat = natural_character(group(name), g);
    auto t = build_char_table(g, with_linear(g, {nat}));
    if (name == "btg") {
      MatchOptions &mo = *opts;
      mo.pins.emplace_back(row_of(t, nat), "2a");
      *match = table_match(t, btg_reference(), mo);
      apply_labels(t, btg_reference(), *match);
    }
    return t;
  }

  if (name == "hessian216") {
    auto const &h = classed(name);
    auto const &q = central_quotient(name);
    auto const &big = group(name);
    // lifts through the Hessian group onto the binary tetrahedral group
    auto const &hg = *h.group;
    Subgroup n9;
    for (auto const &s : normal_subgroups(hg, h.classes))
      if (s.size() == 9)
        n9 = s;
    auto top = quotient(hg, n9);
    auto const &btg = table("btg");
    auto phi = find_isomorphism(top.group, *btg.group.group);
    if (!phi)
      throw std::runtime_error("Hessian top quotient is not the binary tetrahedral group");
    std::vector<int> to_btg(hg.order());
    for (int x = 0; x < hg.order(); ++x)
      to_btg[x] = (*phi)[top.coset_of[x]];
    std::vector<Character> seeds;
    std::vector<std::pair<Character, std::string>> lifted;
    for (size_t k = 0; k < btg.irr.size(); ++k) {
      auto c = pullback(h, to_btg, btg.group, btg.irr[k]);
      seeds.push_back(c);
      lifted.emplace_back(c, btg.labels[k] == "3" ? "3a" : btg.labels[k]);
    }
    // |chi|^2 of the natural character is constant on cosets of the scalars
    Character norm2;
    for (auto const &cl : h.classes.classes) {
      CycNum x = big.complex_trace(q.reps[cl.rep]);
      norm2.values.push_back(x * x.conj());
    }
    seeds.push_back(norm2);
    auto t = build_char_table(h, seeds);
    MatchOptions &mo = *opts;
    for (auto const &[c, l] : lifted)
      mo.pins.emplace_back(row_of(t, c), l);
    *match = table_match(t, hessian_reference(), mo);
    apply_labels(t, hessian_reference(), *match);
    return t;
  }

  if (name == "g648") {
    auto const &g = classed(name);
    auto const &fm = group(name);
    auto const &hess = table("hessian216");
    auto const &q = central_quotient("hessian216");
    std::vector<Character> seeds;
    std::vector<std::pair<Character, std::string>> lifted;
    for (size_t k = 0; k < hess.irr.size(); ++k) {
      auto c = pullback(g, q.coset_of, hess.group, hess.irr[k]);
      seeds.push_back(c);
      lifted.emplace_back(c, hess.labels[k]);
    }
    auto nat = natural_character(fm, g);
    seeds.push_back(nat);
    auto t = build_char_table(g, seeds);

    MatchOptions &mo = *opts;
    for (auto const &[c, l] : lifted)
      mo.pins.emplace_back(row_of(t, c), l);
    for (auto const &cl : g.classes.classes)
      mo.block_of.push_back(hess.group.classes.class_of[q.coset_of[cl.rep]]);
    int z = fm.index_of(CycMatrix::scalar(3, CycNum::v()));
    std::vector<int> times_z;
    for (auto const &cl : g.classes.classes)
      times_z.push_back(g.classes.class_of[g.group->mul(z, cl.rep)]);
    mo.link_base.assign(20, -1);
    mo.link_map.assign(20, {});
    for (int j = 10; j < 20; ++j) {
      mo.link_base[j] = j - 10;
      mo.link_map[j] = times_z;
    }
    *match = table_match(t, quark_reference(), mo);
    apply_labels(t, quark_reference(), *match);
    return t;
  }
  throw UnknownName(name + " (no character table pipeline)");
}

}  // namespace exactgrp
