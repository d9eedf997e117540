#pragma once

// S_n actions on posets built from Boolean lattices, and the characters of
// their homology computed from fixed-point Möbius invariants.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rees/homology.hpp"
#include "rees/permstat.hpp"
#include "rees/poset.hpp"
#include "rees/report.hpp"
#include "rees/symfunc.hpp"

namespace rees {

/// A poset with S_n acting by order-preserving bijections.
class PosetAction {
 public:
  /// `map(g)` returns the image of every element under g.
  using Map = std::function<std::vector<std::size_t>(const Permutation&)>;

  PosetAction(Poset p, int degree, Map map);

  const Poset& poset() const { return poset_; }
  int degree() const { return degree_; }
  std::vector<std::size_t> operator()(const Permutation& g) const;
  /// Identity acts trivially, every element of S_n acts by an automorphism
  /// and g(h(x)) = (gh)(x). Exhaustive over S_n, so only for small n.
  bool is_valid() const;

 private:
  Poset poset_;
  int degree_;
  Map map_;
};

/// B_n with sigma{a_1,...,a_s} = {sigma(a_1),...,sigma(a_s)}.
PosetAction boolean_action(int n);
/// The same action on the dual poset.
PosetAction dual_action(const PosetAction& a);
/// P^-, P^+ and P-hat with the new elements fixed.
PosetAction remove_bottom_action(const PosetAction& a);
/// P * Q with (a, x)g = (ag, x).
PosetAction rees_action(const PosetAction& a, const Poset& q);
/// I_j(P) with the action inherited from P^- * C_n.
PosetAction ideal_ij_action(const PosetAction& a, int j);

/// B_n^- * C_n.
PosetAction jonsson_action(int n);
/// (B_n * T_{t,n})^-, or (B_n^* * T_{t,n})^- when `dual` is set.
PosetAction tree_action(int n, int t, bool dual = false);
/// I_j(B_n).
PosetAction boolean_ideal_action(int n, int j);

/// The permutation (1 2 ... l1)(l1+1 ... l1+l2)... of cycle type lambda.
Permutation cycle_type_representative(const Partition& lambda);

/// g -> sum_j (-1)^j trace(g | H~_j), from the Möbius invariant of the
/// fixed subposet.
ClassFunction lefschetz_character(const PosetAction& a);

struct HomologyCharacter {
  ClassFunction character;
  /// Homology degree the character lives in (the length of the poset).
  int degree = 0;
  /// False when the complex exceeded the simplex guard and concentration in
  /// top degree was assumed rather than checked.
  bool concentration_checked = false;
  /// Reduced Betti numbers, when the complex fit under the guard.
  std::optional<Betti> betti;
};

/// Character of H~_top of a poset whose homology is concentrated in top
/// degree. Throws PosetError when the Betti numbers show otherwise and
/// `require_concentrated` is set.
HomologyCharacter homology_character(const PosetAction& a, std::size_t max_simplices = simplex_guard(),
                                     bool require_concentrated = true);

/// Suites: "thm1.5", "cor1.6", "cor5.2", "cor5.4", "cor5.6",
/// "tree-equivariant", "tree-lemma-equivariant", "sundaram", "g-uniform".
std::vector<std::string> equivariant_suites();
Report verify_equivariant(const SuiteConfig& config);

}  // namespace rees
