#include "rees/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rees/sparse_rank.hpp"

namespace rees {

std::size_t simplex_guard() {
  if (const char* env = std::getenv("REES_LAB_GUARD_SIMPLICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultSimplexGuard;
}

// ---------------------------------------------------------------------------
// OrderComplex

OrderComplex::OrderComplex(const Poset& p, std::size_t max_simplices) {
  std::size_t total = 0;
  std::vector<std::uint32_t> chain;
  auto visit = [&](auto&& self, std::size_t x) -> void {
    chain.push_back(static_cast<std::uint32_t>(x));
    if (++total > max_simplices)
      throw GuardExceeded("order complex exceeds the guard of " + std::to_string(max_simplices) + " simplices");
    const std::size_t d = chain.size() - 1;
    if (faces_.size() <= d) faces_.resize(d + 1);
    faces_[d].insert(faces_[d].end(), chain.begin(), chain.end());
    const Bitset& up = p.above(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) self(self, y);
    chain.pop_back();
  };
  for (std::size_t x = 0; x < p.size(); ++x) visit(visit, x);
}

std::size_t OrderComplex::count(int d) const {
  if (d == -1) return 1;
  if (d < -1 || d > dimension()) return 0;
  return faces_[d].size() / static_cast<std::size_t>(d + 1);
}

std::size_t OrderComplex::total() const {
  std::size_t t = 0;
  for (int d = 0; d <= dimension(); ++d) t += count(d);
  return t;
}

std::span<const std::uint32_t> OrderComplex::simplex(int d, std::size_t i) const {
  const std::size_t w = static_cast<std::size_t>(d + 1);
  if (d == -1) return {};
  return std::span<const std::uint32_t>(faces_.at(d).data() + i * w, w);
}

std::size_t OrderComplex::index_of(std::span<const std::uint32_t> chain) const {
  const int d = static_cast<int>(chain.size()) - 1;
  if (d == -1) return 0;
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto s = simplex(d, mid);
    if (std::lexicographical_compare(s.begin(), s.end(), chain.begin(), chain.end())) lo = mid + 1;
    else hi = mid;
  }
  if (lo == count(d) || !std::equal(chain.begin(), chain.end(), simplex(d, lo).begin()))
    throw PosetError("chain is not a simplex of the order complex");
  return lo;
}

// ---------------------------------------------------------------------------
// Betti numbers

std::int64_t Betti::at(int i) const {
  if (i < -1 || i > dimension()) return 0;
  return values[static_cast<std::size_t>(i + 1)];
}

bool Betti::concentrated_in_top() const {
  for (std::size_t k = 0; k + 1 < values.size(); ++k)
    if (values[k] != 0) return false;
  return true;
}

Integer Betti::euler_characteristic() const {
  Integer chi = 0;
  for (int i = -1; i <= dimension(); ++i) chi += (i % 2 == 0 ? 1 : -1) * Integer(at(i));
  return chi;
}

Betti betti(const OrderComplex& complex) {
  const int top = complex.dimension();
  // rank[d + 1] = rank of the boundary map out of dimension d.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);
  std::vector<std::uint32_t> previous_pivots;
  std::vector<std::uint32_t> face;
  for (int d = top; d >= 0; --d) {
    const std::size_t n = complex.count(d);
    std::vector<SparseColumn> columns(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto s = complex.simplex(d, i);
      auto& col = columns[i];
      for (int k = 0; k <= d; ++k) {
        face.assign(s.begin(), s.end());
        face.erase(face.begin() + k);
        col.emplace_back(static_cast<std::uint32_t>(complex.index_of(face)), k % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    std::vector<char> skip(n, 0);
    for (std::uint32_t r : previous_pivots) skip[r] = 1;
    auto result = reduce_rank(columns, complex.count(d - 1), &skip);
    rank[static_cast<std::size_t>(d + 1)] = result.rank;
    previous_pivots = std::move(result.pivot_rows);
  }
  Betti b;
  for (int d = -1; d <= top; ++d) {
    const std::size_t out = rank[static_cast<std::size_t>(d + 1)];
    const std::size_t in = rank[static_cast<std::size_t>(d + 2)];
    b.values.push_back(static_cast<std::int64_t>(complex.count(d) - out - in));
  }
  return b;
}

Betti betti(const Poset& p, std::size_t max_simplices) { return betti(OrderComplex(p, max_simplices)); }

// ---------------------------------------------------------------------------
// Möbius function

MobiusTable::MobiusTable(Poset p) : p_(std::move(p)), rows_(p_.size()), done_(p_.size(), 0) {}

const std::vector<Integer>& MobiusTable::row(std::size_t x) {
  if (done_.at(x)) return rows_[x];
  auto& r = rows_[x];
  r.assign(p_.size(), Integer(0));
  r[x] = 1;
  const Bitset& up = p_.above(x);
  // Canonical order is a linear extension, so ascending indices suffice.
  for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
    Integer sum = 1;
    const Bitset& down = p_.below(y);
    for (auto z = up.find_first(); z < y; z = up.find_next(z))
      if (down.test(z)) sum += r[z];
    r[y] = -sum;
  }
  done_[x] = 1;
  return r;
}

const Integer& MobiusTable::operator()(std::size_t x, std::size_t y) { return row(x).at(y); }

Integer mobius(const Poset& p, std::size_t x, std::size_t y) {
  if (x >= p.size() || y >= p.size() || !p.leq(x, y)) throw PosetError("mobius: requires x <= y");
  MobiusTable table(p);
  return table(x, y);
}

Integer mobius_invariant(const Poset& p) {
  auto lo = p.minimum();
  auto hi = p.maximum();
  if (!lo || !hi) throw PosetError("mobius_invariant: poset is not bounded");
  return mobius(p, *lo, *hi);
}

Integer mobius_of_hat(const Poset& p) {
  // f[x] = mu(new bottom, x) for x in P.
  std::vector<Integer> f(p.size());
  Integer total = 1;
  for (std::size_t x = 0; x < p.size(); ++x) {
    Integer sum = 1;
    const Bitset& down = p.below(x);
    for (auto y = down.find_first(); y != Bitset::npos; y = down.find_next(y)) sum += f[y];
    f[x] = -sum;
    total += f[x];
  }
  return -total;
}

bool euler_poincare_check(const Poset& p, std::size_t max_simplices) {
  return mobius_of_hat(p) == betti(p, max_simplices).euler_characteristic();
}

bool is_cohen_macaulay(const Poset& p, std::size_t max_simplices) {
  if (!p.is_ranked()) return false;
  if (!betti(p, max_simplices).concentrated_in_top()) return false;
  const DerivedPoset hat = adjoin_bottom_and_top(p);
  const Poset& h = hat.poset;
  for (std::size_t x = 0; x < h.size(); ++x) {
    const Bitset& up = h.above(x);
    for (auto y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
      if (h.rank(static_cast<std::size_t>(y)) - h.rank(x) <= 2) continue;
      if (hat.origin[x] == DerivedPoset::npos && hat.origin[y] == DerivedPoset::npos) continue;
      const DerivedPoset open = interval(h, x, y, IntervalKind::open);
      if (!betti(open.poset, max_simplices).concentrated_in_top()) return false;
    }
  }
  return true;
}

Poset fixed_subposet(const Poset& p, const std::vector<std::size_t>& g) {
  Bitset keep(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (g.at(i) == i) keep.set(i);
  return induced_subposet(p, keep).poset;
}

Integer lefschetz_trace(const Poset& p, const std::vector<std::size_t>& g) {
  if (!is_automorphism(p, g)) throw PosetError("lefschetz_trace: map is not an automorphism");
  return mobius_of_hat(fixed_subposet(p, g));
}

}  // namespace rees
