#pragma once

// Permutations, barred permutations and multiset derangements together with
// their statistics and generating polynomials.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rees/integer.hpp"
#include "rees/polynomial.hpp"

namespace rees {

inline constexpr int kMaxEnumerationDegree = 8;

/// A permutation of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `word` is a permutation of 1..n.
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  /// "42153" (single digits, n <= 9) or "4,2,1,5,3" / "4 2 1 5 3".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(word_.size()); }
  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& word() const { return word_; }
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// Cycle lengths, weakly decreasing.
  std::vector<int> cycle_type() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

struct PermStats {
  int exc = 0;
  int maj = 0;
  int comaj = 0;
  int des = 0;
  int fix = 0;
};

PermStats stats(const Permutation& s);
int excedances(const Permutation& s);
int major_index(const Permutation& s);
int descents(const Permutation& s);
int fixed_points(const Permutation& s);

/// Descent set of the word with bars on excedance positions, in the order
/// 1bar < ... < nbar < 1 < ... < n.
std::vector<int> exd_set(const Permutation& s);

/// Calls f on every permutation of [n] in lexicographic order. Throws
/// GuardExceeded for n > max_n.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& f,
                          int max_n = kMaxEnumerationDegree);
std::vector<Permutation> all_permutations(int n, int max_n = kMaxEnumerationDegree);

enum class EulerianFlavor {
  maj_exc,        // sum q^maj t^exc
  comaj_exc,      // sum q^comaj t^exc
  comaj_exc_fix,  // sum q^comaj t^exc r^fix
  maj_exc_fix,    // sum q^maj t^exc r^fix
};
EulerianFlavor parse_flavor(const std::string& name);
std::string flavor_name(EulerianFlavor f);

/// Generating polynomial of S_n in the variables q, t (and r).
Polynomial q_eulerian(int n, EulerianFlavor flavor);
/// A_n(t) = sum over S_n of t^des.
Polynomial eulerian_polynomial(int n);
/// a_{n,j}: permutations of [n] with j descents.
Integer eulerian_number(int n, int j);

/// d_n(q,t) = sum over derangements of q^comaj t^exc.
Polynomial derangement_poly(int n);
/// Number of derangements of [n], by enumeration.
Integer d_count(int n);

/// A permutation with a subset of its letters barred; bars are attached to
/// positions.
class BarredPermutation {
 public:
  BarredPermutation(Permutation perm, std::vector<bool> barred);
  /// "-3-25-4-61-7": a '-' before a letter bars it. Letters are single digits
  /// unless separated by commas or spaces.
  static BarredPermutation parse(const std::string& text);

  const Permutation& underlying() const { return perm_; }
  int size() const { return perm_.size(); }
  bool barred(int position) const { return barred_.at(static_cast<std::size_t>(position - 1)); }
  /// True iff no unbarred letter sits at its own position.
  bool is_bc_derangement() const;
  std::string to_string() const;

  friend bool operator==(const BarredPermutation&, const BarredPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<bool> barred_;
};

/// Bar index: move the fixed points of the underlying permutation to the
/// front in increasing order, keep the other letters in order, and add up
/// the positions that carry bars.
int bnd(const BarredPermutation& s);

/// D_n^BC in lexicographic order of the underlying word, then of the bar
/// set read as a binary number with position 1 least significant.
std::vector<BarredPermutation> bc_derangements(int n, int max_n = kMaxEnumerationDegree - 2);
/// sum over D_n^BC of q^(comaj + exc + bnd).
Polynomial bc_poly(int n);
/// sum over D_n^BC of q^(comaj + exc) p^bnd.
Polynomial bc_poly_two_variable(int n);

/// 2 x n matrix with top row weakly increasing, rows equal as multisets and
/// no column constant.
struct MultisetDerangement {
  std::vector<int> top;
  std::vector<int> bottom;
};

/// All multiset derangements whose top row is the sorted `content`.
std::vector<MultisetDerangement> multiset_derangements(std::vector<int> content);
/// All weakly increasing words of length n over [m] (candidate contents).
std::vector<std::vector<int>> multisets(int n, int m);

/// Words of length n over [m] with no equal adjacent letters and exactly j
/// descents.
std::vector<std::vector<int>> words_W(int n, int j, int m);

}  // namespace rees
