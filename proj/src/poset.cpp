#include "rees/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "rees/catalog.hpp"

namespace rees {

struct Poset::Impl {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<std::size_t>> up;
  std::vector<std::vector<std::size_t>> down;
  std::vector<int> rank;
  bool ranked = true;
  int length = -1;
  std::vector<Bitset> above;
  std::vector<Bitset> below;
  std::size_t cover_count = 0;
};

struct PosetFactory {
  static Poset make(const std::vector<std::string>& labels,
                    const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                    std::vector<std::size_t>* canonical);
};

Poset::Poset() : impl_(std::make_shared<Impl>()) {}
Poset::Poset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::size_t Poset::size() const { return impl_->labels.size(); }
const std::string& Poset::label(std::size_t i) const { return impl_->labels.at(i); }
const std::vector<std::string>& Poset::labels() const { return impl_->labels; }

std::optional<std::size_t> Poset::find(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Poset::index_of(std::string_view label) const {
  auto i = find(label);
  if (!i) throw PosetError("unknown element label '" + std::string(label) + "'");
  return *i;
}

const std::vector<std::size_t>& Poset::upper_covers(std::size_t i) const { return impl_->up.at(i); }
const std::vector<std::size_t>& Poset::lower_covers(std::size_t i) const { return impl_->down.at(i); }

std::vector<std::pair<std::size_t, std::size_t>> Poset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(impl_->cover_count);
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : impl_->up[a]) out.emplace_back(a, b);
  return out;
}

std::size_t Poset::cover_count() const { return impl_->cover_count; }
bool Poset::is_ranked() const { return impl_->ranked; }
int Poset::rank(std::size_t i) const { return impl_->rank.at(i); }
int Poset::length() const { return impl_->length; }
bool Poset::less(std::size_t a, std::size_t b) const { return impl_->below[b].test(a); }
bool Poset::leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
bool Poset::comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
const Bitset& Poset::above(std::size_t i) const { return impl_->above.at(i); }
const Bitset& Poset::below(std::size_t i) const { return impl_->below.at(i); }

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (impl_->down[i].empty()) out.push_back(i);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (impl_->up[i].empty()) out.push_back(i);
  return out;
}

std::optional<std::size_t> Poset::minimum() const {
  auto m = minimal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

std::optional<std::size_t> Poset::maximum() const {
  auto m = maximal_elements();
  if (m.size() == 1) return m.front();
  return std::nullopt;
}

bool Poset::is_bounded() const { return minimum() && maximum(); }

bool operator==(const Poset& a, const Poset& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->labels == b.impl_->labels && a.impl_->up == b.impl_->up;
}

std::optional<std::size_t> PairPoset::find(std::size_t a, std::size_t b) const {
  // Linear scan; callers needing many lookups build their own index.
  for (std::size_t i = 0; i < origin.size(); ++i)
    if (origin[i].first == a && origin[i].second == b) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Poset PosetFactory::make(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                         std::vector<std::size_t>* canonical) {
  const std::size_t n = labels.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw PosetError("duplicate element label '" + l + "'");
  }

  std::vector<std::vector<std::size_t>> up(n), down(n);
  {
    std::vector<std::pair<std::size_t, std::size_t>> cs(covers);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (auto [a, b] : cs) {
      if (a >= n || b >= n) throw PosetError("cover references an unknown element");
      if (a == b) throw PosetError("cycle detected: '" + labels[a] + "' covers itself");
      up[a].push_back(b);
      down[b].push_back(a);
    }
  }

  // Kahn's algorithm; the topological order drives the closure computation.
  std::vector<std::size_t> indeg(n), topo;
  topo.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    indeg[i] = down[i].size();
    if (indeg[i] == 0) topo.push_back(i);
  }
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (std::size_t b : up[topo[head]])
      if (--indeg[b] == 0) topo.push_back(b);
  if (topo.size() != n) throw PosetError("cycle detected in cover relation");

  std::vector<Bitset> below(n, Bitset(n));
  std::vector<int> level(n, 0);
  for (std::size_t b : topo) {
    for (std::size_t a : down[b]) {
      below[b] |= below[a];
      below[b].set(a);
      level[b] = std::max(level[b], level[a] + 1);
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a : down[b]) {
      for (std::size_t c : down[b]) {
        if (c != a && below[c].test(a))
          throw PosetError("cover '" + labels[a] + "' < '" + labels[b] +
                           "' is implied by transitivity through '" + labels[c] + "'");
      }
    }
  }

  bool ranked = true;
  int length = -1;
  for (std::size_t b = 0; b < n && ranked; ++b)
    for (std::size_t a : down[b])
      if (level[b] != level[a] + 1) ranked = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i].empty()) continue;
    if (length == -1) length = level[i];
    else if (length != level[i]) ranked = false;
    length = std::max(length, level[i]);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (level[x] != level[y]) return level[x] < level[y];
    return labels[x] < labels[y];
  });
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

  auto impl = std::make_shared<Poset::Impl>();
  impl->labels.resize(n);
  impl->up.resize(n);
  impl->down.resize(n);
  impl->rank.resize(n);
  impl->below.assign(n, Bitset(n));
  impl->above.assign(n, Bitset(n));
  impl->ranked = ranked;
  impl->length = length;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t old = order[k];
    impl->labels[k] = labels[old];
    impl->index.emplace(labels[old], k);
    impl->rank[k] = level[old];
    for (std::size_t b : up[old]) impl->up[k].push_back(pos[b]);
    for (std::size_t a : down[old]) impl->down[k].push_back(pos[a]);
    std::sort(impl->up[k].begin(), impl->up[k].end());
    std::sort(impl->down[k].begin(), impl->down[k].end());
    impl->cover_count += up[old].size();
    for (std::size_t a = below[old].find_first(); a != Bitset::npos; a = below[old].find_next(a)) {
      impl->below[k].set(pos[a]);
      impl->above[pos[a]].set(k);
    }
  }
  if (canonical) *canonical = std::move(pos);
  return Poset(std::move(impl));
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                  std::vector<std::size_t>* canonical) {
  return PosetFactory::make(labels, covers, canonical);
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<std::pair<std::size_t, std::size_t>> ic;
  ic.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end()) throw PosetError("cover references unknown label '" + a + "'");
    if (ib == index.end()) throw PosetError("cover references unknown label '" + b + "'");
    ic.emplace_back(ia->second, ib->second);
  }
  return PosetFactory::make(labels, ic, nullptr);
}

namespace detail {
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t n, const std::vector<Bitset>& strictly_below) {
  std::vector<Bitset> above(n, Bitset(n));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = strictly_below[b].find_first(); a != Bitset::npos;
         a = strictly_below[b].find_next(a))
      above[a].set(b);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = strictly_below[b].find_first(); a != Bitset::npos;
         a = strictly_below[b].find_next(a))
      if (!above[a].intersects(strictly_below[b])) covers.emplace_back(a, b);
  return covers;
}
}  // namespace detail

// ---------------------------------------------------------------------------

namespace {

std::string fresh_label(const Poset& p, std::string base) {
  while (p.find(base)) base += "'";
  return base;
}

// Rebuilds `p` with extra elements appended; `extra_covers` use indices past
// p.size() for the new elements.
DerivedPoset extend(const Poset& p, const std::vector<std::string>& new_labels,
                    const std::vector<std::pair<std::size_t, std::size_t>>& extra_covers) {
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), new_labels.begin(), new_labels.end());
  auto covers = p.cover_pairs();
  covers.insert(covers.end(), extra_covers.begin(), extra_covers.end());
  std::vector<std::size_t> canon;
  Poset out = build_poset(labels, covers, &canon);
  std::vector<std::size_t> origin(out.size(), DerivedPoset::npos);
  for (std::size_t i = 0; i < p.size(); ++i) origin[canon[i]] = i;
  return {std::move(out), std::move(origin)};
}

}  // namespace

Poset dual(const Poset& p) {
  auto covers = p.cover_pairs();
  for (auto& c : covers) std::swap(c.first, c.second);
  return build_poset(p.labels(), covers);
}

DerivedPoset adjoin_top(const Poset& p) {
  const std::size_t top = p.size();
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  for (std::size_t m : p.maximal_elements()) extra.emplace_back(m, top);
  return extend(p, {fresh_label(p, "<top>")}, extra);
}

DerivedPoset adjoin_bottom_and_top(const Poset& p) {
  const std::size_t bot = p.size(), top = p.size() + 1;
  std::vector<std::pair<std::size_t, std::size_t>> extra;
  for (std::size_t m : p.minimal_elements()) extra.emplace_back(bot, m);
  for (std::size_t m : p.maximal_elements()) extra.emplace_back(m, top);
  if (p.empty()) extra.emplace_back(bot, top);
  return extend(p, {fresh_label(p, "<bottom>"), fresh_label(p, "<top>")}, extra);
}

DerivedPoset remove_bottom(const Poset& p) {
  auto m = p.minimum();
  if (!m) throw PosetError("remove_bottom: poset has no unique minimum");
  Bitset keep(p.size());
  keep.set();
  keep.reset(*m);
  return induced_subposet(p, keep);
}

DerivedPoset induced_subposet(const Poset& p, const Bitset& keep) {
  const std::size_t n = p.size();
  if (keep.size() != n) throw PosetError("induced_subposet: mask size mismatch");
  std::vector<std::size_t> members;
  std::vector<std::size_t> local(n, DerivedPoset::npos);
  for (std::size_t i = keep.find_first(); i != Bitset::npos; i = keep.find_next(i)) {
    local[i] = members.size();
    members.push_back(i);
  }
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (std::size_t i : members) labels.push_back(p.label(i));

  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t b : members) {
    Bitset below_b = p.below(b) & keep;
    for (std::size_t a = below_b.find_first(); a != Bitset::npos; a = below_b.find_next(a)) {
      // a < b is a cover in the subposet iff no kept element lies strictly between.
      bool direct = std::binary_search(p.upper_covers(a).begin(), p.upper_covers(a).end(), b);
      if (!direct && (p.above(a) & below_b).any()) continue;
      covers.emplace_back(local[a], local[b]);
    }
  }
  std::vector<std::size_t> canon;
  Poset out = build_poset(labels, covers, &canon);
  std::vector<std::size_t> origin(out.size());
  for (std::size_t k = 0; k < members.size(); ++k) origin[canon[k]] = members[k];
  return {std::move(out), std::move(origin)};
}

DerivedPoset interval(const Poset& p, std::size_t x, std::size_t y, IntervalKind kind) {
  if (x >= p.size() || y >= p.size()) throw PosetError("interval: element out of range");
  if (!p.leq(x, y))
    throw PosetError("interval: '" + p.label(x) + "' is not below '" + p.label(y) + "'");
  Bitset keep = p.above(x) & p.below(y);
  if (kind == IntervalKind::closed) {
    keep.set(x);
    keep.set(y);
  }
  return induced_subposet(p, keep);
}

DerivedPoset lower_ideal(const Poset& p, std::size_t y, IntervalKind kind) {
  Bitset keep = p.below(y);
  if (kind == IntervalKind::closed) keep.set(y);
  return induced_subposet(p, keep);
}

DerivedPoset upper_ideal(const Poset& p, std::size_t x, IntervalKind kind) {
  Bitset keep = p.above(x);
  if (kind == IntervalKind::closed) keep.set(x);
  return induced_subposet(p, keep);
}

// ---------------------------------------------------------------------------

PairPoset rees_product_pairs(const Poset& p, const Poset& q) {
  if (!p.is_ranked() || !q.is_ranked())
    throw PosetError("rees_product: both factors must be ranked");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<std::size_t>> slot(p.size(), std::vector<std::size_t>(q.size(), DerivedPoset::npos));
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < q.size(); ++b) {
      if (p.rank(a) < q.rank(b)) continue;
      slot[a][b] = pairs.size();
      pairs.emplace_back(a, b);
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    for (std::size_t a2 : p.upper_covers(a)) {
      covers.emplace_back(k, slot[a2][b]);
      for (std::size_t b2 : q.upper_covers(b))
        if (slot[a2][b2] != DerivedPoset::npos) covers.emplace_back(k, slot[a2][b2]);
    }
  }
  std::vector<std::size_t> canon;
  Poset out = build_poset(labels, covers, &canon);
  std::vector<std::pair<std::size_t, std::size_t>> origin(out.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) origin[canon[k]] = pairs[k];
  return {std::move(out), std::move(origin)};
}

Poset rees_product(const Poset& p, const Poset& q) { return rees_product_pairs(p, q).poset; }

namespace {

void require_bounded_ranked(const Poset& p, const char* what) {
  if (!p.is_ranked() || !p.is_bounded())
    throw PosetError(std::string(what) + ": poset must be bounded and ranked");
}

Poset labelled_chain(int length, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int i = 0; i <= length; ++i) {
    labels.push_back(prefix + std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return build_poset(labels, covers);
}

PairPoset restrict_pairs(const PairPoset& whole, const DerivedPoset& sub,
                         const std::vector<std::size_t>& first_map) {
  PairPoset out{sub.poset, {}};
  out.origin.reserve(sub.origin.size());
  for (std::size_t o : sub.origin) {
    auto [a, b] = whole.origin[o];
    out.origin.emplace_back(first_map.empty() ? a : first_map[a], b);
  }
  return out;
}

}  // namespace

PairPoset ideal_ij(const Poset& p, int j) {
  require_bounded_ranked(p, "ideal_ij");
  const int n = p.length();
  if (n < 1) throw PosetError("ideal_ij: poset must have length at least 1");
  if (j < 0 || j > n - 1)
    throw PosetError("ideal_ij: j = " + std::to_string(j) + " outside 0.." + std::to_string(n - 1));
  DerivedPoset truncated = remove_bottom(p);
  PairPoset rp = rees_product_pairs(truncated.poset, chain(n));
  const std::size_t top_local = truncated.poset.index_of(p.label(*p.maximum()));
  // C_n is stored in canonical order, so chain value j has index j.
  auto generator = rp.find(top_local, static_cast<std::size_t>(j));
  if (!generator) throw PosetError("ideal_ij: generator (top, j) missing");
  DerivedPoset ideal = lower_ideal(rp.poset, *generator, IntervalKind::open);
  return restrict_pairs(rp, ideal, truncated.origin);
}

PairPoset r_i_poset(const Poset& p, int i) {
  require_bounded_ranked(p, "r_i_poset");
  const int n = p.length();
  if (i < 0 || i > n)
    throw PosetError("r_i_poset: i = " + std::to_string(i) + " outside 0.." + std::to_string(n));
  PairPoset rp = rees_product_pairs(p, labelled_chain(n, "x"));
  auto generator = rp.find(*p.maximum(), static_cast<std::size_t>(i));
  if (!generator) throw PosetError("r_i_poset: generator (top, x_i) missing");
  DerivedPoset ideal = lower_ideal(rp.poset, *generator, IntervalKind::closed);
  return restrict_pairs(rp, ideal, {});
}

std::vector<std::size_t> psi_i(const Poset& p, int i) {
  PairPoset source = r_i_poset(p, i);
  Poset pd = dual(p);
  PairPoset target = r_i_poset(pd, i);
  std::unordered_map<std::uint64_t, std::size_t> lookup;
  auto key = [](std::size_t a, std::size_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; };
  for (std::size_t k = 0; k < target.origin.size(); ++k)
    lookup.emplace(key(target.origin[k].first, target.origin[k].second), k);
  std::vector<std::size_t> map(source.poset.size());
  for (std::size_t k = 0; k < source.origin.size(); ++k) {
    auto [a, j] = source.origin[k];
    const std::size_t a_dual = pd.index_of(p.label(a));
    auto it = lookup.find(key(a_dual, static_cast<std::size_t>(i) - j));
    if (it == lookup.end()) throw PosetError("psi_i: image of (" + p.label(a) + ", x_j) missing");
    map[k] = it->second;
  }
  return map;
}

// ---------------------------------------------------------------------------

bool is_automorphism(const Poset& p, const std::vector<std::size_t>& map) {
  if (map.size() != p.size()) return false;
  std::vector<char> hit(p.size(), 0);
  for (std::size_t v : map) {
    if (v >= p.size() || hit[v]) return false;
    hit[v] = 1;
  }
  // An injective map on covers between equal-size cover sets is a bijection
  // on covers, so the inverse preserves covers as well.
  for (auto [a, b] : p.cover_pairs()) {
    const auto& ups = p.upper_covers(map[a]);
    if (!std::binary_search(ups.begin(), ups.end(), map[b])) return false;
  }
  return true;
}

bool is_antiisomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map) {
  if (map.size() != p.size() || q.size() != p.size() || p.cover_count() != q.cover_count())
    return false;
  std::vector<char> hit(q.size(), 0);
  for (std::size_t v : map) {
    if (v >= q.size() || hit[v]) return false;
    hit[v] = 1;
  }
  for (auto [a, b] : p.cover_pairs()) {
    const auto& ups = q.upper_covers(map[b]);
    if (!std::binary_search(ups.begin(), ups.end(), map[a])) return false;
  }
  return true;
}

namespace {

struct Signature {
  int rank;
  std::size_t up, down, above, below;
  bool operator==(const Signature&) const = default;
};

Signature signature(const Poset& p, std::size_t i) {
  return {p.rank(i), p.upper_covers(i).size(), p.lower_covers(i).size(), p.above(i).count(),
          p.below(i).count()};
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Poset& p, const Poset& q) : p_(p), q_(q) {}

  std::optional<std::vector<std::size_t>> run() {
    if (p_.size() != q_.size() || p_.cover_count() != q_.cover_count() ||
        p_.is_ranked() != q_.is_ranked() || p_.length() != q_.length())
      return std::nullopt;
    const std::size_t n = p_.size();
    sig_p_.reserve(n);
    sig_q_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig_p_.push_back(signature(p_, i));
      sig_q_.push_back(signature(q_, i));
    }
    // Quick multiset comparison of signatures.
    auto key = [](const Signature& s) {
      return std::make_tuple(s.rank, s.up, s.down, s.above, s.below);
    };
    std::vector<std::tuple<int, std::size_t, std::size_t, std::size_t, std::size_t>> kp, kq;
    for (std::size_t i = 0; i < n; ++i) {
      kp.push_back(key(sig_p_[i]));
      kq.push_back(key(sig_q_[i]));
    }
    std::sort(kp.begin(), kp.end());
    std::sort(kq.begin(), kq.end());
    if (kp != kq) return std::nullopt;

    // Assign elements so that each one is related to as many already
    // assigned elements as possible; this prunes symmetric choices early.
    std::vector<std::size_t> weight(n, 0);
    std::vector<char> placed(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t x = 0; x < n; ++x)
        if (!placed[x] && (best == n || weight[x] > weight[best])) best = x;
      placed[best] = 1;
      order_.push_back(best);
      for (std::size_t x = 0; x < n; ++x)
        if (!placed[x] && p_.comparable(x, best)) ++weight[x];
    }
    image_.assign(n, n);
    used_.assign(n, 0);
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  bool extend(std::size_t step) {
    const std::size_t n = p_.size();
    if (step == n) return true;
    const std::size_t x = order_[step];
    for (std::size_t y = 0; y < n; ++y) {
      if (used_[y] || !(sig_p_[x] == sig_q_[y])) continue;
      if (!consistent(step, x, y)) continue;
      image_[x] = y;
      used_[y] = 1;
      if (extend(step + 1)) return true;
      used_[y] = 0;
    }
    image_[x] = n;
    return false;
  }

  bool consistent(std::size_t step, std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < step; ++k) {
      const std::size_t u = order_[k];
      if (p_.less(u, x) != q_.less(image_[u], y)) return false;
      if (p_.less(x, u) != q_.less(y, image_[u])) return false;
    }
    return true;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<Signature> sig_p_, sig_q_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q) {
  return IsomorphismSearch(p, q).run();
}

bool poset_isomorphic(const Poset& p, const Poset& q) { return find_isomorphism(p, q).has_value(); }

bool is_uniform(const Poset& p) {
  require_bounded_ranked(p, "is_uniform");
  const std::size_t top = *p.maximum();
  std::vector<std::optional<Poset>> representative(p.length() + 1);
  for (std::size_t x = 0; x < p.size(); ++x) {
    Poset upper = interval(p, x, top, IntervalKind::closed).poset;
    auto& rep = representative[p.rank(x)];
    if (!rep) {
      rep = std::move(upper);
      continue;
    }
    if (!poset_isomorphic(*rep, upper)) return false;
  }
  return true;
}

}  // namespace rees
