#include <set>

#include "doctest.h"
#include "rees/verify.hpp"

using namespace rees;
using nlohmann::json;

TEST_CASE("suite catalog") {
  const auto suites = list_suites();
  CHECK(suites.size() >= 14);
  std::set<std::string> ids;
  for (const auto& s : suites) {
    CHECK_FALSE(s.statement.empty());
    CHECK_FALSE(s.degree_convention.empty());
    ids.insert(s.id);
    CHECK(is_suite(s.id));
  }
  CHECK(ids.size() == suites.size());
  for (const char* id : {"jonsson", "eulerian", "q-eulerian", "q-derangement", "tree", "tree-corollary",
                         "tree-lemma-random", "uniform-recursion", "symgen", "bc", "bc-q", "gaussian-identity",
                         "cross-engine", "thm1.5", "cor5.2", "sundaram"})
    CHECK(ids.count(id) == 1);
  CHECK_FALSE(is_suite("nope"));
  // Deterministic ordering.
  const auto again = list_suites();
  for (std::size_t i = 0; i < suites.size(); ++i) CHECK(suites[i].id == again[i].id);
}

TEST_CASE("unknown suite") {
  SuiteConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(run_suite(c), std::invalid_argument);
}

TEST_CASE("small jonsson run") {
  SuiteConfig c;
  c.suite = "jonsson";
  c.n_max = 4;
  const Report r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.degree_convention == "n-1");
  CHECK(r.count(CaseStatus::skipped) == 0);
  const std::string expected[] = {"0", "1", "2", "9"};
  for (int n = 1; n <= 4; ++n) {
    bool found = false;
    for (const auto& cs : r.cases)
      if (cs.name == "n=" + std::to_string(n) + " homology") {
        found = true;
        CHECK(cs.lhs == expected[n - 1]);
        CHECK(cs.status == CaseStatus::pass);
      }
    CHECK(found);
  }
}

TEST_CASE("guard overruns are skipped, not failed") {
  SuiteConfig c;
  c.suite = "jonsson";
  c.n_max = 4;
  c.max_simplices = 10;
  const Report r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.count(CaseStatus::skipped) > 0);
  // The Möbius route still runs.
  CHECK(r.count(CaseStatus::pass) >= 4);

  SuiteConfig lattice;
  lattice.suite = "q-derangement";
  lattice.n_max = 3;
  lattice.q_values = {3};
  lattice.max_subspaces = 5;
  const Report lr = run_suite(lattice);
  CHECK(lr.passed());
  CHECK(lr.count(CaseStatus::skipped) > 0);
}

TEST_CASE("a failing case makes the report fail despite skips") {
  Report r{"demo", "x = y", "none", {}};
  r.skip("big", json::object(), "guard");
  r.add("small", json::object(), "1", "1");
  CHECK(r.passed());
  r.add("wrong", json::object(), "1", "2");
  CHECK_FALSE(r.passed());
}

TEST_CASE("report round trips through JSON") {
  SuiteConfig c;
  c.suite = "tree";
  c.n_max = 2;
  c.q_values = {2};
  c.t_values = {2};
  c.max_simplices = 20;
  const Report r = run_suite(c);
  const std::string first = r.to_json().dump();
  const Report back = Report::from_json(json::parse(first));
  CHECK(back.to_json().dump() == first);
  CHECK(back.degree_convention == "n-1");
}

TEST_CASE("csv export") {
  Report r{"demo", "x = y", "none", {}};
  r.add("a, b", json::object(), "1", "1");
  r.skip("c", json::object(), "guard");
  const std::string csv = r.to_csv();
  CHECK(csv.rfind("suite,case,lhs,rhs,pass\n", 0) == 0);
  CHECK(csv.find("demo,\"a, b\",1,1,true") != std::string::npos);
  CHECK(csv.find("demo,c,,,skipped") != std::string::npos);
  CHECK_THROWS_AS(r.render("xml"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  const SuiteConfig c = SuiteConfig::from_json(json::parse(
      R"({"suite":"tree","n_max":3,"q_values":[2,5],"t_values":2,"seed":7,"trials":5,"max_simplices":100})"));
  CHECK(c.suite == "tree");
  CHECK(*c.n_max == 3);
  CHECK(c.q_values == std::vector<int>{2, 5});
  CHECK(c.t_values == std::vector<int>{2});
  CHECK(c.seed == 7);
  CHECK(c.trials == 5);
  CHECK(c.simplex_limit() == 100);
  CHECK(SuiteConfig::from_json(c.to_json()).to_json() == c.to_json());
  CHECK_THROWS_AS(SuiteConfig::from_json(json::parse(R"({"suite":"tree","nmax":3})")), std::invalid_argument);
  CHECK_THROWS_AS(SuiteConfig::from_json(json::parse("[1]")), std::invalid_argument);
}

TEST_CASE("tree lemma trials are reproducible") {
  SuiteConfig c;
  c.suite = "tree-lemma-random";
  c.trials = 5;
  c.t_values = {1, 2};
  const Report a = run_suite(c);
  const Report b = run_suite(c);
  CHECK(a.passed());
  CHECK(a.to_json() == b.to_json());
  c.seed = 2;
  CHECK(run_suite(c).to_json() != a.to_json());
}

TEST_CASE("formal suites pass at small sizes") {
  for (const char* id : {"gaussian-identity", "uniform-recursion", "bc"}) {
    SuiteConfig c;
    c.suite = id;
    c.n_max = 3;
    c.q_values = {2};
    c.t_values = {1, 2};
    const Report r = run_suite(c);
    INFO(id);
    CHECK(r.passed());
    CHECK(r.count(CaseStatus::pass) > 0);
  }
}
