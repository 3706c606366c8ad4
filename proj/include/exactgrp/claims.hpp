#pragma once

#include "exactgrp/report.hpp"
#include "exactgrp/store.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace exactgrp {

struct Outcome {
  bool pass = false;
  std::string computed, expected;
};

class ClaimContext;

struct Claim {
  std::string id;
  std::string anchor;  // where the claim comes from, in words
  std::function<Outcome(ClaimContext &)> run;
};

// Shared state for one verification run: the group store and memoized check reports.
class ClaimContext {
public:
  explicit ClaimContext(GroupStore &store) : store(store) {}
  GroupStore &store;
  CheckReport const &report(std::string const &key, std::function<CheckReport()> const &make);

private:
  struct Slot {
    std::once_flag once;
    CheckReport rep;
  };
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

// every registered claim, ordered by id
std::vector<Claim> const &claims();

struct ClaimResult {
  std::string id, anchor;
  bool pass = false;
  std::string computed, expected;
};

struct VerificationReport {
  std::vector<ClaimResult> results;  // ordered by id
  int passed() const;
  int failed() const;
  std::string text() const;
  std::string json() const;
};

// claims whose id starts with filter (all when empty); jobs > 1 runs claims concurrently
VerificationReport run_claims(GroupStore &store, std::string const &filter = "", int jobs = 1);

// 6 normal subgroups in a chain, quotients Z3, A4, binary tetrahedral
CheckReport normal_chain_check(CayleyGroup const &g648, CayleyGroup const &btg);

}  // namespace exactgrp
