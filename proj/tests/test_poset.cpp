#include "doctest.h"

#include <map>
#include <set>

#include "rees/catalog.hpp"
#include "rees/poset.hpp"

using namespace rees;

namespace {

// Rees product straight from the order relation: (p1,q1) <= (p2,q2) iff
// p1 <= p2, q1 <= q2 and r(p2) - r(p1) >= r(q2) - r(q1). Covers come from a
// transitive reduction, independently of the cover rule used by the library.
Poset rees_by_order(const Poset& p, const Poset& q) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      if (p.rank(a) >= q.rank(b)) {
        pairs.emplace_back(a, b);
        labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
      }
  return build_poset_from_order(labels, [&](std::size_t x, std::size_t y) {
    auto [a1, b1] = pairs[x];
    auto [a2, b2] = pairs[y];
    return x != y && p.leq(a1, a2) && q.leq(b1, b2) && p.rank(a2) - p.rank(a1) >= q.rank(b2) - q.rank(b1);
  });
}

std::map<int, int> rank_counts(const Poset& p) {
  std::map<int, int> out;
  for (std::size_t i = 0; i < p.size(); ++i) ++out[p.rank(i)];
  return out;
}

bool order_preserving_bijection(const Poset& a, const Poset& b, const std::vector<std::size_t>& f) {
  if (f.size() != a.size() || a.size() != b.size()) return false;
  std::set<std::size_t> image(f.begin(), f.end());
  if (image.size() != f.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

}  // namespace

TEST_CASE("build_poset basic shapes") {
  Poset single = build_poset({"a"}, std::vector<std::pair<std::string, std::string>>{});
  CHECK(single.size() == 1);
  CHECK(single.length() == 0);
  CHECK(single.is_ranked());

  Poset c4 = chain(4);
  CHECK(c4.length() == 3);
  CHECK(c4.is_bounded());

  Poset diamond = build_poset({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(diamond.is_ranked());
  CHECK(diamond.length() == 2);
  CHECK(diamond.size() == 4);
  CHECK(poset_isomorphic(diamond, boolean_lattice(2)));
}

TEST_CASE("build_poset rejects bad input") {
  CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PosetError);
  CHECK_THROWS_AS(build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), PosetError);
  CHECK_THROWS_AS(build_poset({"a", "a"}, std::vector<std::pair<std::string, std::string>>{}), PosetError);
  CHECK_THROWS_AS(build_poset({"a"}, {{"a", "z"}}), PosetError);
}

TEST_CASE("unranked posets are flagged") {
  Poset p = build_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK_FALSE(p.is_ranked());
  CHECK_THROWS_AS(rees_product(p, chain(2)), PosetError);
}

TEST_CASE("canonical order is deterministic and a linear extension") {
  std::vector<std::string> labels{"top", "x", "bot", "y"};
  Poset a = build_poset(labels, {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
  Poset b = build_poset({"y", "bot", "top", "x"}, {{"y", "top"}, {"x", "top"}, {"bot", "y"}, {"bot", "x"}});
  CHECK(a == b);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.less(i, j)) CHECK(i < j);
}

TEST_CASE("dual, hat and truncation") {
  CHECK(poset_isomorphic(dual(chain(4)), chain(4)));
  CHECK(remove_bottom(boolean_lattice(3)).poset.size() == 7);
  CHECK_THROWS_AS(remove_bottom(build_poset({"a", "b"}, std::vector<std::pair<std::string, std::string>>{})),
                  PosetError);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Poset p = random_ranked_bounded_poset(4, 3, 0.5, seed);
    CHECK(dual(dual(p)) == p);
  }
  DerivedPoset hat = adjoin_bottom_and_top(chain(0));
  CHECK(hat.poset.size() == 2);
  CHECK(hat.poset.length() == 1);
  DerivedPoset plus = adjoin_top(boolean_lattice(2));
  CHECK(plus.poset.size() == 5);
  CHECK(plus.poset.length() == 3);
}

TEST_CASE("intervals and their duals") {
  Poset b3 = boolean_lattice(3);
  const auto lo = b3.index_of("{1}");
  const auto hi = b3.index_of("{1,2,3}");
  CHECK(interval(b3, lo, hi, IntervalKind::closed).poset.size() == 4);
  CHECK(interval(b3, lo, hi, IntervalKind::open).poset.size() == 2);
  CHECK_THROWS_AS(interval(b3, hi, lo, IntervalKind::open), PosetError);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_ranked_bounded_poset(4, 3, 0.6, seed);
    Poset d = dual(p);
    const auto x = *p.minimum();
    const auto y = *p.maximum();
    Poset a = dual(interval(p, x, y, IntervalKind::open).poset);
    Poset b = interval(d, d.index_of(p.label(y)), d.index_of(p.label(x)), IntervalKind::open).poset;
    CHECK(a == b);
  }
}

TEST_CASE("Rees product of the truncated Boolean algebra with a chain") {
  Poset r = rees_product(remove_bottom(boolean_lattice(3)).poset, chain(3));
  CHECK(r.size() == 12);
  CHECK(rank_counts(r) == std::map<int, int>{{0, 3}, {1, 6}, {2, 3}});
  CHECK(r == rees_by_order(remove_bottom(boolean_lattice(3)).poset, chain(3)));
}

TEST_CASE("Rees product cover rule agrees with the order relation") {
  Poset small = rees_product(chain(2), chain(1));
  CHECK(small == rees_by_order(chain(2), chain(1)));
  CHECK(small.size() == 2);
  CHECK(small.length() == 1);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Poset p = random_ranked_bounded_poset(1 + static_cast<int>(seed % 4), 3, 0.5, seed);
    Poset q = random_ranked_bounded_poset(1 + static_cast<int>(seed % 3), 2, 0.7, seed + 100);
    CHECK(rees_product(p, q) == rees_by_order(p, q));
    CHECK(rees_product(p, q).is_ranked());
  }
}

TEST_CASE("(B_1 * T_{t,1})^- is an antichain") {
  for (int t = 1; t <= 4; ++t) {
    Poset p = remove_bottom(rees_product(boolean_lattice(1), tary_tree(t, 1))).poset;
    CHECK(p.size() == static_cast<std::size_t>(t + 1));
    CHECK(p.cover_count() == 0);
  }
}

TEST_CASE("I_j(B_n) sizes") {
  Poset i0 = ideal_ij(boolean_lattice(3), 0).poset;
  CHECK(i0.size() == 6);
  CHECK(i0.length() == 1);
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j < n; ++j) {
      std::size_t expected = 0;
      // (S, i) lies below (top, j) iff i <= min(j, |S|-1) and n - |S| >= j - i.
      for (int k = 1; k < n; ++k) {
        const int lo = std::max(0, j - n + k), hi = std::min(j, k - 1);
        if (hi >= lo) expected += static_cast<std::size_t>(binomial(n, k)) * static_cast<std::size_t>(hi - lo + 1);
      }
      CHECK(ideal_ij(boolean_lattice(n), j).poset.size() == expected);
    }
  CHECK_THROWS_AS(ideal_ij(boolean_lattice(3), 3), PosetError);
  CHECK_THROWS_AS(ideal_ij(boolean_lattice(3), -1), PosetError);
  CHECK_THROWS_AS(ideal_ij(remove_bottom(boolean_lattice(3)).poset, 0), PosetError);
}

TEST_CASE("ideal origins point back into P and the chain") {
  Poset b3 = boolean_lattice(3);
  PairPoset ideal = ideal_ij(b3, 1);
  for (std::size_t k = 0; k < ideal.poset.size(); ++k) {
    auto [a, j] = ideal.origin[k];
    CHECK(ideal.poset.label(k) == "(" + b3.label(a) + "," + std::to_string(j) + ")");
    CHECK(j <= 1);
  }
}

namespace {

// R_i^+(P) is isomorphic to I_{i-1}(P)^+ via (a, x_j) -> (a, j-1).
bool check_r_plus_isomorphism(const Poset& p, int i) {
  PairPoset r = r_i_poset(p, i);
  Bitset keep(r.poset.size());
  for (std::size_t k = 0; k < r.poset.size(); ++k)
    if (r.origin[k].second > 0) keep.set(k);
  DerivedPoset plus = induced_subposet(r.poset, keep);
  PairPoset ideal = ideal_ij(p, i - 1);
  DerivedPoset target = adjoin_top(ideal.poset);
  const std::size_t top = *p.maximum();
  std::vector<std::size_t> f(plus.poset.size());
  for (std::size_t k = 0; k < plus.poset.size(); ++k) {
    auto [a, j] = r.origin[plus.origin[k]];
    if (a == top && static_cast<int>(j) == i) {
      f[k] = *target.poset.maximum();
      continue;
    }
    bool found = false;
    for (std::size_t m = 0; m < target.poset.size(); ++m) {
      const std::size_t o = target.origin[m];
      if (o != DerivedPoset::npos && ideal.origin[o] == std::make_pair(a, j - 1)) {
        f[k] = m;
        found = true;
      }
    }
    if (!found) return false;
  }
  return order_preserving_bijection(plus.poset, target.poset, f);
}

}  // namespace

TEST_CASE("psi_i is an antiisomorphism and an involution") {
  Poset b3 = boolean_lattice(3);
  for (int i = 0; i <= 3; ++i) {
    auto map = psi_i(b3, i);
    CHECK(is_antiisomorphism(r_i_poset(b3, i).poset, r_i_poset(dual(b3), i).poset, map));
  }
  CHECK_THROWS_AS(r_i_poset(b3, 4), PosetError);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_ranked_bounded_poset(3, 3, 0.5, seed);
    for (int i = 0; i <= 3; ++i) {
      auto forward = psi_i(p, i);
      auto back = psi_i(dual(p), i);
      bool identity = true;
      for (std::size_t k = 0; k < forward.size(); ++k) identity = identity && back[forward[k]] == k;
      CHECK(identity);
    }
  }
}

TEST_CASE("R_i^+ and I_{i-1}^+ on random posets") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    Poset p = random_ranked_bounded_poset(n, 4, 0.5, seed * 7919);
    for (int i = 1; i <= n; ++i) {
      CHECK(check_r_plus_isomorphism(p, i));
      CHECK(is_antiisomorphism(r_i_poset(p, i).poset, r_i_poset(dual(p), i).poset, psi_i(p, i)));
    }
  }
}

TEST_CASE("uniformity") {
  CHECK(is_uniform(boolean_lattice(4)));
  CHECK(is_uniform(subspace_lattice(3, 2)));
  CHECK(is_uniform(chain(5)));
  // Two atoms, one of which sits below an extra element before the top.
  Poset lopsided = build_poset({"0", "a", "b", "c", "d", "1"},
                               {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"c", "1"}, {"d", "1"}});
  CHECK_FALSE(is_uniform(lopsided));
  Poset unranked = build_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK_THROWS_AS(is_uniform(unranked), PosetError);
}

TEST_CASE("isomorphism search") {
  CHECK(poset_isomorphic(tary_tree(1, 3), chain(4)));
  CHECK_FALSE(poset_isomorphic(tary_tree(2, 1), chain(3)));
  Poset b3 = boolean_lattice(3);
  auto f = find_isomorphism(b3, dual(b3));
  REQUIRE(f.has_value());
  CHECK(order_preserving_bijection(b3, dual(b3), *f));
}

TEST_CASE("random posets") {
  Poset a = random_ranked_bounded_poset(4, 3, 0.4, 42);
  Poset b = random_ranked_bounded_poset(4, 3, 0.4, 42);
  CHECK(a == b);
  CHECK(a.cover_pairs() == b.cover_pairs());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Poset p = random_ranked_bounded_poset(1 + static_cast<int>(seed % 5), 4, 0.3, seed);
    CHECK(p.is_ranked());
    CHECK(p.is_bounded());
    CHECK(p.length() == 1 + static_cast<int>(seed % 5));
  }
  Poset full = random_ranked_bounded_poset(3, 3, 1.0, 9);
  for (std::size_t x = 0; x < full.size(); ++x)
    for (std::size_t y = 0; y < full.size(); ++y)
      if (full.rank(y) == full.rank(x) + 1) CHECK(full.less(x, y));
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(poset_isomorphic(random_ranked_bounded_poset(1, 4, 0.5, seed), chain(2)));
  CHECK_THROWS_AS(random_ranked_bounded_poset(0, 1, 0.5, 1), PosetError);
  CHECK_THROWS_AS(random_ranked_bounded_poset(2, 1, 0.0, 1), PosetError);
}

TEST_CASE("JSON and DOT") {
  Poset p = rees_product(remove_bottom(boolean_lattice(2)).poset, chain(2));
  auto j = to_json(p);
  CHECK(poset_from_json(j) == p);
  CHECK(to_json(poset_from_json(j)) == j);
  auto bad = j;
  bad["ranks"][0] = 5;
  CHECK_THROWS_AS(poset_from_json(bad), PosetError);
  const std::string dot = to_dot(p);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
}
