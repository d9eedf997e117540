#pragma once

// Symmetric functions of bounded degree stored in the monomial basis, finite
// quasisymmetric expansions, class functions of S_n and the Frobenius
// characteristic.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rees/integer.hpp"
#include "rees/polynomial.hpp"

namespace rees {

class Partition {
 public:
  Partition() = default;
  /// Sorts the parts into weakly decreasing order and drops zeros. Negative
  /// parts throw std::invalid_argument.
  explicit Partition(std::vector<int> parts);
  /// "[3,1,1]" or "3,1,1"; "[]" is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }
  Partition conjugate() const;
  /// z_lambda = prod_i i^{m_i} m_i!.
  Integer z() const;
  /// Size of the conjugacy class of S_n with this cycle type.
  Integer class_size() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions(int n);

enum class Basis { m, h, e, p, s };
Basis parse_basis(const std::string& name);
std::string basis_name(Basis b);

/// Homogeneous symmetric function of a fixed degree with rational
/// coefficients in the monomial basis.
class SymFunc {
 public:
  explicit SymFunc(int degree = 0);
  static SymFunc one();
  static SymFunc monomial(const Partition& lambda);
  static SymFunc h(int n);
  static SymFunc e(int n);
  static SymFunc p(int n);
  /// Products h_{l1} h_{l2} ..., and likewise for e and p.
  static SymFunc h(const Partition& lambda);
  static SymFunc e(const Partition& lambda);
  static SymFunc p(const Partition& lambda);
  static SymFunc schur(const Partition& lambda);

  int degree() const { return degree_; }
  const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const Rational& c);
  bool is_zero() const { return coeffs_.empty(); }
  /// Sets x_{m+1} = x_{m+2} = ... = 0.
  SymFunc restrict_variables(int m) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
  /// Product of symmetric functions; degrees add.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  /// Expansion in the given basis, e.g. "2*m[2,1] + m[1,1,1]".
  std::string to_string(Basis b = Basis::m) const;
  /// {"degree":n,"basis":"m","coeffs":{"[3,1]":"2",...}}
  nlohmann::json to_json(Basis b = Basis::m) const;
  static SymFunc from_json(const nlohmann::json& j);

 private:
  int degree_;
  std::map<Partition, Rational> coeffs_;
};

/// Coefficient of m_nu in m_lambda * m_mu, for every nu with a nonzero
/// coefficient. Cached.
const std::vector<std::pair<Partition, Integer>>& monomial_product(const Partition& lambda,
                                                                   const Partition& mu);

/// Transition data between a basis and the monomial basis in degree n.
/// to_monomial[i][k] is the coefficient of m_{index[k]} in b_{index[i]}; the
/// rows of from_monomial expand m_{index[i]} in the basis b.
struct BasisMatrix {
  int degree = 0;
  Basis basis = Basis::m;
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> to_monomial;
  std::vector<std::vector<Rational>> from_monomial;
};
/// Computed once per (degree, basis) and shared; thread safe.
const BasisMatrix& basis_matrix(int n, Basis b);

/// Coefficients of f in basis b (zero coefficients omitted).
std::map<Partition, Rational> expand(const SymFunc& f, Basis b);
SymFunc from_basis(int degree, const std::map<Partition, Rational>& coeffs, Basis b);

/// omega(p_lambda) = (-1)^{n - l(lambda)} p_lambda.
SymFunc omega(const SymFunc& f);

/// Homogeneous polynomial of degree n in x_1..x_m with integer coefficients.
class QSymExpansion {
 public:
  QSymExpansion(int degree, int variables);

  int degree() const { return degree_; }
  int variables() const { return variables_; }
  const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
  Integer coefficient(const std::vector<int>& exponents) const;
  void add(const std::vector<int>& exponents, const Integer& c);

  /// True iff coefficients are constant on orbits of exponent vectors. On
  /// failure `witness` names two monomials with different coefficients.
  bool is_symmetric(std::string* witness = nullptr) const;
  /// Substitutes x_i = q^{i-1}.
  Polynomial principal_specialization(const std::string& var = "q") const;

  QSymExpansion& operator+=(const QSymExpansion& other);
  friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;

 private:
  int degree_;
  int variables_;
  std::map<std::vector<int>, Integer> terms_;
};

/// F_{S,n} in m variables: sum over i_1 >= ... >= i_n with i_j > i_{j+1} for
/// j in S. S must be a subset of [n-1] and m >= n.
QSymExpansion f_qsym(const std::vector<int>& S, int n, int m);
/// Q_{n,j,k}: sum of F_{Exd(s),n} over s in S_n with exc = j and fix = k.
QSymExpansion q_eulerian_qsym(int n, int j, int k, int m);
/// Q_{n,j} = sum over k of Q_{n,j,k}.
QSymExpansion q_eulerian_qsym(int n, int j, int m);

/// Throws std::domain_error naming a violating monomial pair when the input
/// is not symmetric.
SymFunc to_monomial_basis(const QSymExpansion& f);
/// Q_{n,j,k} and Q_{n,j} as symmetric functions.
SymFunc q_eulerian_sym(int n, int j, int k);
SymFunc q_eulerian_sym(int n, int j);

/// Character value chi^lambda(mu) by the Murnaghan-Nakayama rule.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// Rational-valued class function of S_n, indexed by cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int degree = 0);
  static ClassFunction trivial(int n);
  static ClassFunction sign(int n);
  static ClassFunction regular(int n);
  static ClassFunction irreducible(const Partition& lambda);

  int degree() const { return degree_; }
  const std::map<Partition, Rational>& values() const { return values_; }
  Rational operator()(const Partition& cycle_type) const;
  void set(const Partition& cycle_type, const Rational& value);

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product (character of the tensor product).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  /// <a, b> = (1/n!) sum over g of a(g) b(g).
  Rational inner(const ClassFunction& other) const;
  nlohmann::json to_json() const;

 private:
  int degree_;
  std::map<Partition, Rational> values_;
};

/// ch(chi) = sum over lambda of chi(lambda) p_lambda / z_lambda.
SymFunc frobenius(const ClassFunction& chi);
/// Inverse of frobenius().
ClassFunction class_function_of(const SymFunc& f);

struct SchurDecomposition {
  std::map<Partition, Rational> multiplicities;
  bool integral = true;
  bool nonnegative = true;
};
/// Multiplicities of the irreducible characters, computed from the
/// Murnaghan-Nakayama character table.
SchurDecomposition schur_decompose(const SymFunc& f);

/// Symmetric function of fixed degree whose monomial coefficients are
/// polynomials in auxiliary variables such as t and r.
class SymPoly {
 public:
  explicit SymPoly(int degree = 0) : degree_(degree) {}
  /// Requires integral monomial coefficients.
  static SymPoly from(const SymFunc& f, const Polynomial& weight = Polynomial(1));

  int degree() const { return degree_; }
  const std::map<Partition, Polynomial>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add(const Partition& lambda, const Polynomial& c);
  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;
  /// Product that discards m_nu with more than max_parts parts.
  static SymPoly multiply(const SymPoly& a, const SymPoly& b, int max_parts);
  std::string to_string() const;

 private:
  int degree_;
  std::map<Partition, Polynomial> coeffs_;
};

/// Power series in z truncated after index size()-1.
using SymSeries = std::vector<SymPoly>;
SymSeries series_multiply(const SymSeries& a, const SymSeries& b, int degree_cap, int max_parts);

struct SeriesCheck {
  std::string identity;
  int degree_cap = 0;
  int variables = 0;
  bool pass = false;
  int coefficients_checked = 0;
  /// Empty on success, else "z^n m[...]: lhs != rhs".
  std::string first_failure;
};

/// Identities: "symgen-1", "symgen-2", "cor5.2", "h-e-inverse". Each is
/// verified cross-multiplied through z^degree_cap in m variables.
SeriesCheck series_identity_check(const std::string& identity, int degree_cap, int m);
std::vector<std::string> series_identities();

}  // namespace rees
