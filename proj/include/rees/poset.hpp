#pragma once

// Finite posets given by a cover relation, and the structural operators used
// throughout the library: duals, bounding, truncation, intervals, Rees
// products and the ideal families built from them.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include "json.hpp"

namespace rees {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable finite poset.
///
/// Elements are stored in canonical order: sorted by (rank, label bytes).
/// For posets that are not ranked the "rank" used for ordering is the level,
/// i.e. the length of the longest chain ending at the element. Either way the
/// canonical order is a linear extension, so `i < j` whenever element i lies
/// strictly below element j.
///
/// Copies share the underlying storage.
class Poset {
 public:
  Poset();

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const;
  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find(), but throws PosetError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  const std::vector<std::size_t>& upper_covers(std::size_t i) const;
  const std::vector<std::size_t>& lower_covers(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;
  std::size_t cover_count() const;

  /// True iff all maximal chains have the same length.
  bool is_ranked() const;
  /// Rank of an element if the poset is ranked, otherwise its level.
  int rank(std::size_t i) const;
  /// Common length of the maximal chains (ranked) or the longest chain
  /// length; -1 for the empty poset.
  int length() const;

  bool leq(std::size_t a, std::size_t b) const;
  bool less(std::size_t a, std::size_t b) const;
  bool comparable(std::size_t a, std::size_t b) const;
  /// Elements strictly above / strictly below `i`.
  const Bitset& above(std::size_t i) const;
  const Bitset& below(std::size_t i) const;

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  std::optional<std::size_t> minimum() const;
  std::optional<std::size_t> maximum() const;
  bool is_bounded() const;

  /// Element-wise equality: same labels in the same order and same covers.
  friend bool operator==(const Poset& a, const Poset& b);

 private:
  struct Impl;
  explicit Poset(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend struct PosetFactory;
};

/// A poset together with the element of some source poset each element came
/// from (for subposets and adjoinings).
struct DerivedPoset {
  Poset poset;
  /// origin[i] is the index in the source of element i, or npos for new
  /// elements.
  std::vector<std::size_t> origin;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// A poset whose elements are pairs drawn from two source posets.
struct PairPoset {
  Poset poset;
  /// origin[i] = (index in first source, index in second source).
  std::vector<std::pair<std::size_t, std::size_t>> origin;

  /// Index of the pair (a, b), if present.
  std::optional<std::size_t> find(std::size_t a, std::size_t b) const;
};

// ---------------------------------------------------------------------------
// Construction

/// Builds a poset from labels and (lower, upper) cover pairs given by label.
/// Throws PosetError on duplicate or unknown labels, cycles, and covers that
/// are implied by transitivity.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers);

/// Index-based variant. `canonical` (if non-null) receives, for every input
/// index, the canonical index of that element in the result.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                  std::vector<std::size_t>* canonical = nullptr);

/// Builds a poset from an arbitrary order relation by transitive reduction.
/// `less(a, b)` must be a strict partial order on the indices of `labels`.
template <typename Less>
Poset build_poset_from_order(const std::vector<std::string>& labels, Less&& less,
                             std::vector<std::size_t>* canonical = nullptr);

// ---------------------------------------------------------------------------
// Operators

Poset dual(const Poset& p);
/// P^+ : adjoins a new maximum.
DerivedPoset adjoin_top(const Poset& p);
/// P-hat : adjoins a new minimum and a new maximum.
DerivedPoset adjoin_bottom_and_top(const Poset& p);
/// P^- : removes the unique minimum. Throws if there is none.
DerivedPoset remove_bottom(const Poset& p);

enum class IntervalKind { open, closed };

/// [x, y] or (x, y) as an induced subposet. Throws unless x <= y.
DerivedPoset interval(const Poset& p, std::size_t x, std::size_t y, IntervalKind kind);

/// Subposet on the elements flagged in `keep`, with the induced order.
DerivedPoset induced_subposet(const Poset& p, const Bitset& keep);

/// Open or closed principal lower order ideal generated by y.
DerivedPoset lower_ideal(const Poset& p, std::size_t y, IntervalKind kind);
/// Open or closed principal upper order ideal generated by x.
DerivedPoset upper_ideal(const Poset& p, std::size_t x, IntervalKind kind);

/// Rees product. Both factors must be ranked. Elements are pairs (p, q) with
/// rank(p) >= rank(q), labelled "(p,q)"; (p2,q2) covers (p1,q1) iff p2 covers
/// p1 and q2 equals or covers q1.
PairPoset rees_product_pairs(const Poset& p, const Poset& q);
Poset rees_product(const Poset& p, const Poset& q);

/// I_j(P): the open principal lower ideal of (top, j) in P^- * C_n, where P
/// is bounded ranked of length n >= 1 and 0 <= j <= n-1. The origin pairs
/// refer to indices of P (not P^-) and chain values j.
PairPoset ideal_ij(const Poset& p, int j);

/// R_i(P): the closed lower ideal of (top, x_i) in P * {x_0 < ... < x_n}.
/// Origin pairs are (index in P, chain position).
PairPoset r_i_poset(const Poset& p, int i);

/// The bijection R_i(P) -> R_i(P*) sending (a, x_j) to (a, x_{i-j}), as a
/// vector of target indices.
std::vector<std::size_t> psi_i(const Poset& p, int i);

// ---------------------------------------------------------------------------
// Isomorphism and uniformity

/// Rank-respecting backtracking search for an isomorphism p -> q. Returns
/// the image of every element of p.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q);
bool poset_isomorphic(const Poset& p, const Poset& q);

/// True iff [x, top] is isomorphic to [y, top] whenever rank(x) == rank(y).
/// Throws PosetError unless the poset is bounded and ranked.
bool is_uniform(const Poset& p);

/// True iff `map` is an order-preserving bijection whose inverse is also
/// order preserving.
bool is_automorphism(const Poset& p, const std::vector<std::size_t>& map);

/// True iff `map` is a bijection from p onto q that reverses order in both
/// directions.
bool is_antiisomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& map);

// ---------------------------------------------------------------------------
// Random bounded ranked posets

/// Bounded ranked poset of length n. Levels 1..n-1 hold between 1 and
/// `width` elements. Covers between consecutive levels are kept with
/// probability `density`; every element is then patched to cover and be
/// covered by at least one neighbour. Deterministic in `seed`.
Poset random_ranked_bounded_poset(int n, int width, double density, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Serialization

/// {"elements":[labels...],"covers":[[i,j],...],"ranks":[...]}
nlohmann::json to_json(const Poset& p);
Poset poset_from_json(const nlohmann::json& j);
/// Rank-layered Hasse diagram in Graphviz DOT.
std::string to_dot(const Poset& p, const std::string& name = "P");

// ---------------------------------------------------------------------------

namespace detail {
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t n, const std::vector<Bitset>& strictly_below);
}

template <typename Less>
Poset build_poset_from_order(const std::vector<std::string>& labels, Less&& less,
                             std::vector<std::size_t>* canonical) {
  const std::size_t n = labels.size();
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && less(a, b)) below[b].set(a);
  return build_poset(labels, detail::transitive_reduction(n, below), canonical);
}

}  // namespace rees
