#include "doctest.h"
#include "exactgrp/claims.hpp"

#include "json.hpp"

#include <set>

using namespace exactgrp;

TEST_CASE("claim ids are sorted and unique") {
  auto const &cs = claims();
  REQUIRE(cs.size() > 40);
  std::set<std::string> ids;
  for (size_t k = 0; k < cs.size(); ++k) {
    CHECK(ids.insert(cs[k].id).second);
    CHECK(!cs[k].anchor.empty());
    if (k)
      CHECK(cs[k - 1].id < cs[k].id);
  }
  for (auto const &id : {"orders.q8", "orders.g648", "orders.combined", "chartab.btg", "chartab.g648.printed",
                         "dirac.spinor"})
    CHECK(ids.count(id));
}

TEST_CASE("filtered verification") {
  GroupStore st;
  auto r = run_claims(st, "orders.q8");
  REQUIRE(r.results.size() == 2);  // q8 and q8q
  CHECK(r.failed() == 0);
  CHECK(r.results[0].computed == "8");
  CHECK(run_claims(st, "nonexistent.").results.empty());
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["schema"] == "exactgrp-verify/1");
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["claims"][0]["status"] == "pass");
  CHECK(r.text().find("2 claims, 2 passed, 0 failed") != std::string::npos);

  auto p = run_claims(st, "chartab.g648.printed");
  REQUIRE(p.results.size() == 1);
  CHECK_FALSE(p.results[0].pass);
}

TEST_CASE("normal chain report") {
  GroupStore st;
  auto rep = normal_chain_check(*st.group("g648").cayley(), *st.group("btg").cayley());
  for (auto const &c : rep.checks)
    CHECK_MESSAGE(c.pass, c.name);
  auto q = normal_chain_check(*st.group("q8").cayley(), *st.group("btg").cayley());
  CHECK_FALSE(q.ok());
}

TEST_CASE("jobs do not change the report") {
  GroupStore a, b;
  CHECK(run_claims(a, "decomp", 1).text() == run_claims(b, "decomp", 3).text());
}
