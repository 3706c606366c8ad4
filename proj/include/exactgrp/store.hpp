#pragma once

#include "exactgrp/catalog.hpp"
#include "exactgrp/chars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace exactgrp {

struct StoreOptions {
  std::optional<std::string> cache_dir;  // no disk cache when empty
  int jobs = 1;
  bool strict_cache = false;  // rethrow CacheError instead of rebuilding
};

// Lazily built catalog groups, their class data and labelled character tables.
// All accessors are thread-safe; returned references stay valid for the store's lifetime.
class GroupStore {
public:
  explicit GroupStore(StoreOptions opt = {});

  // closure of the catalog generators (for a central-quotient entry, the group before the quotient)
  FinMatGroup const &group(std::string const &name);
  // abstract group; for a central-quotient entry, closure modulo its centre
  ClassedGroup const &classed(std::string const &name);
  QuotientGroup const &central_quotient(std::string const &name);

  // labelled table for q8, btg, g27, e128, hessian216 or g648
  CharTable const &table(std::string const &name);
  MatchResult const &table_match_of(std::string const &name);  // btg, hessian216, g648
  MatchOptions const &match_options_of(std::string const &name);  // constraints used for that match

  struct Stats {
    int cache_hits = 0;
    int cache_writes = 0;
    int closures = 0;
  };
  Stats stats() const;
  StoreOptions const &options() const { return opt_; }

private:
  StoreOptions opt_;
  mutable std::recursive_mutex mu_;
  std::map<std::string, std::unique_ptr<FinMatGroup>> groups_;
  std::map<std::string, std::unique_ptr<ClassedGroup>> classed_;
  std::map<std::string, std::unique_ptr<QuotientGroup>> quotients_;
  std::map<std::string, std::unique_ptr<CharTable>> tables_;
  std::map<std::string, std::unique_ptr<MatchResult>> matches_;
  std::map<std::string, MatchOptions> match_opts_;
  Stats stats_;

  CharTable build_table(std::string const &name, MatchResult *match, MatchOptions *opts);
};

}  // namespace exactgrp
