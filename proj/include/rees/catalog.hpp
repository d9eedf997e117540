#pragma once

// Builders for the concrete poset families: Boolean lattices, chains,
// complete t-ary trees, subspace lattices over prime fields, cross-polytope
// face posets and totally isotropic subspace posets.

#include <cstdint>
#include <string>
#include <vector>

#include "rees/integer.hpp"
#include "rees/poset.hpp"

namespace rees {

inline constexpr std::size_t kDefaultMaxSubspaces = 5000;

/// C_n = {0 < 1 < ... < n-1}; C_0 is empty.
Poset chain(int n);

/// B_n, subsets of [n] under inclusion, labelled "{}", "{1}", "{1,3}", ...
Poset boolean_lattice(int n);
/// Label of the subset with bit i-1 set for every member i.
std::string subset_label(std::uint32_t mask);

/// Complete t-ary tree of height n with the root at the bottom. Nodes are
/// labelled by their path from the root: "r", "r.0", "r.0.2", ...
Poset tary_tree(int t, int n);

bool is_prime(int q);

/// A subspace of F_q^n stored by its reduced row-echelon basis.
class Subspace {
 public:
  Subspace(int ambient_dim, int q, std::vector<std::vector<int>> rref_rows);

  int ambient_dimension() const { return ambient_; }
  int field_size() const { return q_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool contains(const std::vector<int>& v) const;
  bool contains(const Subspace& other) const;
  /// "0" for the zero space, otherwise "[r1|r2|...]" with one character per entry.
  std::string label() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_;
  int q_;
  std::vector<std::vector<int>> rows_;
};

/// All k-dimensional subspaces of F_q^n, by iterating pivot patterns and
/// free entries of reduced row-echelon matrices.
std::vector<Subspace> enumerate_subspaces(int n, int q, int k);

/// Number of k-dimensional subspaces of F_q^n.
Integer gaussian_binomial_value(int n, int k, Integer q);

/// B_n(q). Throws PosetError for non-prime q and GuardExceeded if the
/// lattice would hold more than `max_subspaces` elements.
Poset subspace_lattice(int n, int q, std::size_t max_subspaces = kDefaultMaxSubspaces);

/// PCP_n: faces of the n-dimensional cross-polytope including the empty face,
/// ranked by cardinality. Faces are labelled like "{1,-3}" where -i is the
/// vertex antipodal to i.
Poset crosspolytope_faces(int n);

/// <u,v> = sum_i (u_i v_{n+i} - u_{n+i} v_i) mod q on F_q^{2n}.
int symplectic_form(const std::vector<int>& u, const std::vector<int>& v, int q);
bool is_totally_isotropic(const Subspace& s);

/// PCP_n(q): totally isotropic subspaces of F_q^{2n} (including 0) under
/// inclusion. `max_subspaces` bounds the number of candidate subspaces
/// examined.
Poset isotropic_subspace_poset(int n, int q, std::size_t max_subspaces = kDefaultMaxSubspaces);

/// W_k(P): number of elements of rank k. Throws unless P is ranked.
std::vector<Integer> whitney_numbers(const Poset& p);

}  // namespace rees
