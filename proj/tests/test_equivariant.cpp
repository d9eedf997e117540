#include "doctest.h"

#include "rees/catalog.hpp"
#include "rees/equivariant.hpp"

using namespace rees;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Trace of g on H~_top computed from the fixed-chain complex's Betti numbers
// (reduced Euler characteristic of the fixed subcomplex).
Integer trace_by_betti(const PosetAction& a, const Permutation& g) {
  const Poset fixed = fixed_subposet(a.poset(), a(g));
  const Integer chi = betti(fixed).euler_characteristic();
  return a.poset().length() % 2 ? -chi : chi;
}

void check_report(const Report& r) {
  CHECK_MESSAGE(r.passed(), r.to_table());
  CHECK(r.count(CaseStatus::pass) > 0);
}

}  // namespace

TEST_CASE("actions are valid") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(boolean_action(n).is_valid());
    CHECK(jonsson_action(n).is_valid());
    for (int j = 0; j < n; ++j) CHECK(boolean_ideal_action(n, j).is_valid());
    CHECK(tree_action(n, 2).is_valid());
    CHECK(tree_action(n, 2, true).is_valid());
    CHECK(dual_action(boolean_action(n)).is_valid());
  }
  const PosetAction b3 = boolean_action(3);
  const auto img = b3(Permutation::parse("231"));
  CHECK(b3.poset().label(img[b3.poset().index_of("{1}")]) == "{2}");
  CHECK(b3.poset().label(img[b3.poset().index_of("{1,3}")]) == "{1,2}");
}

TEST_CASE("cycle type representatives") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions(n)) CHECK(Partition(cycle_type_representative(lambda).cycle_type()) == lambda);
}

TEST_CASE("Lefschetz traces match fixed-point Betti numbers") {
  for (int n = 2; n <= 4; ++n)
    for (int j = 0; j < n; ++j) {
      const PosetAction a = boolean_ideal_action(n, j);
      const HomologyCharacter hc = homology_character(a);
      CHECK(hc.concentration_checked);
      for (const auto& lambda : partitions(n))
        CHECK(hc.character(lambda) == Rational(trace_by_betti(a, cycle_type_representative(lambda))));
    }
}

TEST_CASE("characters are class functions") {
  // Two different representatives of each class give the same trace.
  for (int n = 2; n <= 4; ++n) {
    const PosetAction a = jonsson_action(n);
    for (const auto& lambda : partitions(n)) {
      const Permutation g = cycle_type_representative(lambda);
      const Permutation conj = Permutation::parse(n == 2 ? "21" : (n == 3 ? "312" : "2413"));
      const Permutation h = conj * g * conj.inverse();
      CHECK(h.cycle_type() == lambda.parts());
      CHECK(lefschetz_trace(a.poset(), a(g)) == lefschetz_trace(a.poset(), a(h)));
    }
  }
}

TEST_CASE("homology characters at the identity") {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j < n; ++j) {
      const HomologyCharacter hc = homology_character(boolean_ideal_action(n, j));
      CHECK(hc.character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) ==
            Rational(eulerian_number(n, j)));
    }
  CHECK(frobenius(homology_character(boolean_ideal_action(3, 1)).character) == omega(q_eulerian_sym(3, 1)));
}

TEST_CASE("non-concentrated homology is rejected") {
  // Two disjoint 2-element chains: H~_0 has dimension 1 but the length is 1.
  Poset p = build_poset({"a", "b", "c", "d"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "d"}});
  PosetAction act(p, 1, [](const Permutation&) { return std::vector<std::size_t>{0, 1, 2, 3}; });
  CHECK_THROWS_AS(homology_character(act), PosetError);
  CHECK_NOTHROW(homology_character(act, simplex_guard(), false));
  // Guard overrun: concentration is assumed rather than checked.
  const HomologyCharacter hc = homology_character(jonsson_action(3), 10);
  CHECK_FALSE(hc.concentration_checked);
  CHECK(frobenius(hc.character) == frobenius(homology_character(jonsson_action(3)).character));
}

TEST_CASE("equivariant suites") {
  for (const auto& id : equivariant_suites()) {
    SuiteConfig c;
    c.suite = id;
    c.n_max = 3;
    c.t_values = {1, 2};
    const Report r = verify_equivariant(c);
    CHECK(r.suite == id);
    check_report(r);
  }
  SuiteConfig bad;
  bad.suite = "nope";
  CHECK_THROWS(verify_equivariant(bad));
}

TEST_CASE("guard overruns become skipped cases") {
  SuiteConfig c;
  c.suite = "cor1.6";
  c.n_max = 3;
  c.max_simplices = 5;
  // Concentration is then assumed, so the cases still run.
  check_report(verify_equivariant(c));
}
