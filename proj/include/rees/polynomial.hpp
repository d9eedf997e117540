#pragma once

// Sparse multivariate Laurent polynomials with exact integer coefficients in
// named variables, plus the usual q-analogues.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rees/integer.hpp"

namespace rees {

class Polynomial {
 public:
  /// Exponents aligned with variables().
  using Exponents = std::vector<int>;

  Polynomial() = default;
  Polynomial(Integer c);  // NOLINT: implicit constants keep formulas readable
  Polynomial(int c) : Polynomial(Integer(c)) {}

  static Polynomial variable(const std::string& name, int power = 1);
  static Polynomial monomial(const std::map<std::string, int>& exponents, Integer coefficient = 1);

  /// Sorted names of the variables that occur with a nonzero exponent.
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the monomial with the given exponents (missing
  /// variables have exponent 0).
  Integer coefficient(const std::map<std::string, int>& exponents) const;
  /// Sum of the terms with var^power, with var removed.
  Polynomial coefficient_of(const std::string& var, int power) const;
  /// Highest / lowest exponent of var; 0 for the zero polynomial.
  int degree(const std::string& var) const;
  int min_degree(const std::string& var) const;

  /// Drops every term whose exponent of var exceeds max_degree.
  Polynomial truncate(const std::string& var, int max_degree) const;
  /// Replaces var by value. Negative powers of var need value to be a unit
  /// monomial (coefficient +-1).
  Polynomial substitute(const std::string& var, const Polynomial& value) const;
  /// Exact value at the given point; every variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Like evaluate() for integer points; throws if the value is not an integer.
  Integer evaluate_integer(const std::map<std::string, Integer>& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// In-place accumulation of c * prod var^e.
  void add_monomial(const std::map<std::string, int>& exponents, const Integer& c);

  Polynomial pow(int e) const;
  /// Product with per-variable truncation: terms whose exponent of a listed
  /// variable exceeds its bound are never formed.
  static Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b,
                                       const std::map<std::string, int>& max_degree);

  std::string to_string() const;
  /// {"variables":[...],"terms":[{"exponents":[...],"coefficient":"..."}]}
  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  Polynomial aligned(const std::vector<std::string>& vars) const;
  void normalize();

  std::vector<std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

/// [n]_q = 1 + q + ... + q^{n-1}.
Polynomial q_integer(int n, const std::string& var = "q");
/// [n]_q! = [1]_q [2]_q ... [n]_q.
Polynomial q_factorial(int n, const std::string& var = "q");
/// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
Polynomial q_binomial(int n, int k, const std::string& var = "q");
/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
Polynomial q_pochhammer(int n, const std::string& var = "q");

}  // namespace rees
