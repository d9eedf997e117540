#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "rees/catalog.hpp"
#include "rees/homology.hpp"
#include "rees/sparse_rank.hpp"

using namespace rees;

namespace {

Poset antichain(int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
  return build_poset(labels, std::vector<std::pair<std::string, std::string>>{});
}

Poset jonsson_poset(int n) { return rees_product(remove_bottom(boolean_lattice(n)).poset, chain(n)); }

// Chains by dimension, by brute force over all subsets of a small poset.
std::vector<std::size_t> chain_counts_brute(const Poset& p) {
  std::vector<std::size_t> counts;
  const std::size_t n = p.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) members.push_back(i);
    bool is_chain = true;
    for (std::size_t a = 0; a < members.size() && is_chain; ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (!p.comparable(members[a], members[b])) is_chain = false;
    if (!is_chain) continue;
    if (counts.size() < members.size()) counts.resize(members.size(), 0);
    ++counts[members.size() - 1];
  }
  return counts;
}

// Möbius function of an interval from the defining recursion over all pairs.
Integer mobius_brute(const Poset& p, std::size_t x, std::size_t y) {
  if (x == y) return 1;
  Integer sum = 0;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.less(z, y)) sum += mobius_brute(p, x, z);
  return -sum;
}

// sum over g-fixed chains of (-1)^dim, including the empty chain.
Integer fixed_chain_euler(const Poset& p, const std::vector<std::size_t>& g) {
  OrderComplex c(p);
  Integer chi = -1;
  for (int d = 0; d <= c.dimension(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) {
      auto s = c.simplex(d, i);
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return g[v] == v; })) chi += (d % 2 == 0 ? 1 : -1);
    }
  return chi;
}

}  // namespace

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    std::vector<std::vector<std::int64_t>> dense(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& r : dense)
      for (auto& v : r)
        if (rng() % 3 == 0) v = static_cast<std::int64_t>(rng() % 7) - 3;
    // Make some columns dependent.
    if (cols > 2)
      for (std::size_t r = 0; r < rows; ++r) dense[r][cols - 1] = 2 * dense[r][0] - dense[r][1];
    std::vector<SparseColumn> sparse(cols);
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t r = 0; r < rows; ++r)
        if (dense[r][c] != 0) sparse[c].emplace_back(static_cast<std::uint32_t>(r), dense[r][c]);
    CHECK(reduce_rank(sparse, rows).rank == dense_rank(dense));
  }
}

TEST_CASE("sparse rank survives int64 overflow") {
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<SparseColumn> cols{{{0, big + 1}, {1, 3}}, {{0, big - 1}, {1, big + 7}}, {{0, 1}, {1, big}}};
  std::vector<std::vector<std::int64_t>> dense{{big + 1, big - 1, 1}, {3, big + 7, big}};
  CHECK(reduce_rank(cols, 2).rank == dense_rank(dense));
  CHECK(dense_rank({{2, 4}, {1, 2}}) == 1);
}

TEST_CASE("order complex enumeration") {
  for (Poset p : {jonsson_poset(3), antichain(4), boolean_lattice(3), random_ranked_bounded_poset(3, 3, 0.5, 11)}) {
    OrderComplex c(p);
    auto brute = chain_counts_brute(p);
    REQUIRE(c.dimension() + 1 == static_cast<int>(brute.size()));
    for (int d = 0; d <= c.dimension(); ++d) {
      CHECK(c.count(d) == brute[d]);
      for (std::size_t i = 0; i < c.count(d); ++i) CHECK(c.index_of(c.simplex(d, i)) == i);
    }
  }
  CHECK(OrderComplex(chain(0)).dimension() == -1);
  CHECK(OrderComplex(chain(0)).count(-1) == 1);
  CHECK_THROWS_AS(OrderComplex(jonsson_poset(4), 100), GuardExceeded);
}

TEST_CASE("Betti numbers of small posets") {
  for (int k = 1; k <= 5; ++k) {
    Betti b = betti(antichain(k));
    CHECK(b.at(0) == k - 1);
    CHECK(b.at(-1) == 0);
  }
  CHECK(betti(chain(0)).values == std::vector<std::int64_t>{1});
  CHECK(betti(chain(4)).values == std::vector<std::int64_t>{0, 0, 0, 0, 0});
  CHECK(betti(jonsson_poset(3)).values == std::vector<std::int64_t>{0, 0, 0, 2});
  CHECK(betti(ideal_ij(boolean_lattice(3), 1).poset).top() == 4);
  // Proper part of B_3 is a circle.
  Poset proper = remove_bottom(boolean_lattice(3)).poset;
  proper = dual(remove_bottom(dual(proper)).poset);
  CHECK(betti(proper).values == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("Betti numbers agree with rank-nullity counts") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_ranked_bounded_poset(4, 3, 0.5, seed);
    OrderComplex c(p);
    Betti b = betti(c);
    Integer chi = -1;
    for (int d = 0; d <= c.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * Integer(c.count(d));
    CHECK(chi == b.euler_characteristic());
    for (auto v : b.values) CHECK(v >= 0);
  }
}

TEST_CASE("Mobius function") {
  for (int n = 0; n <= 6; ++n) CHECK(mobius_invariant(boolean_lattice(n)) == (n % 2 == 0 ? 1 : -1));
  for (int n = 3; n <= 6; ++n) CHECK(mobius_invariant(chain(n)) == 0);
  CHECK(mobius_invariant(chain(2)) == -1);
  CHECK(mobius_invariant(adjoin_bottom_and_top(jonsson_poset(3)).poset) == 2);
  CHECK(mobius_of_hat(jonsson_poset(3)) == 2);
  CHECK(mobius_of_hat(chain(0)) == -1);
  CHECK_THROWS_AS(mobius_invariant(antichain(2)), PosetError);
  Poset b3 = boolean_lattice(3);
  CHECK_THROWS_AS(mobius(b3, b3.index_of("{1}"), b3.index_of("{2}")), PosetError);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_ranked_bounded_poset(4, 3, 0.5, seed);
    MobiusTable mu(p);
    for (std::size_t x = 0; x < p.size(); ++x) {
      CHECK(mu(x, x) == 1);
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        CHECK(mu(x, y) == mobius_brute(p, x, y));
        if (x == y) continue;
        Integer sum = 0;
        for (std::size_t z = 0; z < p.size(); ++z)
          if (p.leq(x, z) && p.leq(z, y)) sum += mu(x, z);
        CHECK(sum == 0);
      }
    }
    CHECK(mobius_invariant(p) == mobius_invariant(dual(p)));
  }
}

TEST_CASE("Euler-Poincare") {
  CHECK(euler_poincare_check(jonsson_poset(4)));
  CHECK(euler_poincare_check(chain(0)));
  CHECK(euler_poincare_check(antichain(3)));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Poset p = random_ranked_bounded_poset(2 + static_cast<int>(seed % 4), 3, 0.5, seed);
    auto lo = *p.minimum(), hi = *p.maximum();
    CHECK(euler_poincare_check(interval(p, lo, hi, IntervalKind::open).poset));
  }
}

TEST_CASE("Cohen-Macaulay") {
  CHECK(is_cohen_macaulay(jonsson_poset(3)));
  CHECK(is_cohen_macaulay(rees_product(remove_bottom(subspace_lattice(3, 2)).poset, chain(3))));
  CHECK(is_cohen_macaulay(boolean_lattice(3)));
  // Bounded chains of different lengths glued at the ends.
  Poset uneven = build_poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK_FALSE(is_cohen_macaulay(uneven));
  // Two disjoint 2-chains: ranked, but disconnected in dimension 1.
  Poset two = build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK_FALSE(is_cohen_macaulay(two));
  // Ranked with a bad interval: a bowtie sits inside a length-3 poset.
  Poset bowtie = build_poset({"0", "a", "b", "c", "d", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
  CHECK(is_cohen_macaulay(bowtie));
  Poset broken = build_poset({"a", "b", "c", "d", "e", "f"},
                             {{"a", "c"}, {"b", "d"}, {"c", "e"}, {"d", "e"}, {"c", "f"}, {"d", "f"}});
  CHECK_FALSE(is_cohen_macaulay(broken));
}

TEST_CASE("Lefschetz traces") {
  Poset b3 = boolean_lattice(3);
  PairPoset ideal = ideal_ij(b3, 1);
  const Poset& p = ideal.poset;
  std::vector<std::size_t> id(p.size());
  std::iota(id.begin(), id.end(), 0);
  CHECK(lefschetz_trace(p, id) == betti(p).euler_characteristic());

  // g = (1 2 3) acting on subsets.
  auto act = [](std::uint32_t s) {
    std::uint32_t out = 0;
    for (int i = 0; i < 3; ++i)
      if (s >> i & 1u) out |= 1u << ((i + 1) % 3);
    return out;
  };
  std::vector<std::size_t> g(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    auto [a, j] = ideal.origin[k];
    std::uint32_t mask = 0;
    for (std::uint32_t m = 0; m < 8; ++m)
      if (subset_label(m) == b3.label(a)) mask = m;
    const std::size_t image_a = b3.index_of(subset_label(act(mask)));
    for (std::size_t m = 0; m < p.size(); ++m)
      if (ideal.origin[m] == std::make_pair(image_a, j)) g[k] = m;
  }
  CHECK(is_automorphism(p, g));
  CHECK(lefschetz_trace(p, g) == fixed_chain_euler(p, g));
  CHECK(lefschetz_trace(p, id) == fixed_chain_euler(p, id));

  std::vector<std::size_t> bad(id);
  std::swap(bad[0], bad[p.size() - 1]);
  CHECK_THROWS_AS(lefschetz_trace(p, bad), PosetError);
}

TEST_CASE("simplex guard reads the environment") {
  CHECK(simplex_guard() >= 1);
  setenv("REES_LAB_GUARD_SIMPLICES", "1234", 1);
  CHECK(simplex_guard() == 1234);
  setenv("REES_LAB_GUARD_SIMPLICES", "junk", 1);
  CHECK(simplex_guard() == kDefaultSimplexGuard);
  unsetenv("REES_LAB_GUARD_SIMPLICES");
}
