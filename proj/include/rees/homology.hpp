#pragma once

// Order complexes, reduced rational homology, Möbius functions and
// Lefschetz traces of finite posets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rees/integer.hpp"
#include "rees/poset.hpp"

namespace rees {

inline constexpr std::size_t kDefaultSimplexGuard = 60000;

/// The simplex guard: REES_LAB_GUARD_SIMPLICES if set to a positive integer,
/// otherwise kDefaultSimplexGuard.
std::size_t simplex_guard();

/// Chains of a poset grouped by dimension (a chain with d+1 elements is a
/// d-simplex). Dimension -1 holds the empty chain. Within each dimension the
/// chains are sorted lexicographically by element index.
class OrderComplex {
 public:
  /// Throws GuardExceeded if the complex has more than `max_simplices`
  /// nonempty simplices.
  explicit OrderComplex(const Poset& p, std::size_t max_simplices = simplex_guard());

  /// Largest simplex dimension; -1 for the empty poset.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  /// Number of d-simplices, d >= -1.
  std::size_t count(int d) const;
  std::size_t total() const;
  std::span<const std::uint32_t> simplex(int d, std::size_t i) const;
  /// Index of a d-simplex given by its sorted vertices; throws if absent.
  std::size_t index_of(std::span<const std::uint32_t> chain) const;

 private:
  // faces_[d] stores the d-simplices as consecutive runs of d+1 vertices.
  std::vector<std::vector<std::uint32_t>> faces_;
};

/// Reduced Betti numbers dim H~_i for i = -1 .. dim.
struct Betti {
  std::vector<std::int64_t> values;  // values[i + 1] = dim H~_i

  std::int64_t at(int i) const;
  /// Dimension of the complex the numbers came from.
  int dimension() const { return static_cast<int>(values.size()) - 2; }
  std::int64_t top() const { return values.back(); }
  /// True iff every nonzero Betti number sits in the top dimension.
  bool concentrated_in_top() const;
  /// sum_i (-1)^i dim H~_i.
  Integer euler_characteristic() const;

  friend bool operator==(const Betti&, const Betti&) = default;
};

Betti betti(const OrderComplex& complex);
Betti betti(const Poset& p, std::size_t max_simplices = simplex_guard());

/// Memoized Möbius function of a poset, one row mu(x, .) at a time.
class MobiusTable {
 public:
  explicit MobiusTable(Poset p);
  /// mu(x, y); zero when x is not below y.
  const Integer& operator()(std::size_t x, std::size_t y);
  const std::vector<Integer>& row(std::size_t x);

 private:
  Poset p_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<char> done_;
};

/// mu_P(x, y). Throws PosetError unless x <= y.
Integer mobius(const Poset& p, std::size_t x, std::size_t y);
/// mu(P) = mu(bottom, top) of a bounded poset.
Integer mobius_invariant(const Poset& p);
/// mu(P-hat), computed without materializing the bounded poset.
Integer mobius_of_hat(const Poset& p);

/// mu(P-hat) == sum_i (-1)^i dim H~_i(P).
bool euler_poincare_check(const Poset& p, std::size_t max_simplices = simplex_guard());

/// True iff P is ranked and every open interval of P-hat (P itself included)
/// has homology concentrated in its top dimension.
bool is_cohen_macaulay(const Poset& p, std::size_t max_simplices = simplex_guard());

/// Subposet of elements fixed by an automorphism.
Poset fixed_subposet(const Poset& p, const std::vector<std::size_t>& g);

/// sum_j (-1)^j trace(g | H~_j(P)), computed as mu of the hat of the fixed
/// subposet. Throws PosetError if g is not an automorphism.
Integer lefschetz_trace(const Poset& p, const std::vector<std::size_t>& g);

}  // namespace rees
