#include "doctest.h"

#include <random>

#include "rees/permstat.hpp"
#include "rees/symfunc.hpp"

using namespace rees;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::string xname(int i) { return "x" + std::to_string(i); }

// m_lambda as an explicit polynomial in x1..xN.
Polynomial explicit_monomial(const Partition& lambda, int vars) {
  std::vector<int> exps(static_cast<std::size_t>(vars), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  Polynomial out;
  do {
    std::map<std::string, int> mono;
    for (int i = 0; i < vars; ++i) mono[xname(i + 1)] = exps[static_cast<std::size_t>(i)];
    out.add_monomial(mono, 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

Integer coefficient_at(const Polynomial& f, const Partition& nu, int vars) {
  std::map<std::string, int> mono;
  for (int i = 0; i < vars; ++i) mono[xname(i + 1)] = i < nu.length() ? nu[i] : 0;
  return f.coefficient(mono);
}

// Standard Young tableaux count by the hook length formula.
Integer hook_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.weight()) / hooks;
}

std::vector<int> complement(const std::vector<int>& S, int n) {
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (std::find(S.begin(), S.end(), i) == S.end()) out.push_back(i);
  return out;
}

SymFunc random_symfunc(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  SymFunc f(n);
  for (const auto& lambda : partitions(n)) f.add(lambda, Rational(coeff(rng), 1 + (coeff(rng) + 5) % 3));
  return f;
}

}  // namespace

TEST_CASE("partitions") {
  std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions(n).size() == static_cast<std::size_t>(counts[n]));
  CHECK(partitions(3).front() == P({3}));
  CHECK(partitions(3).back() == P({1, 1, 1}));
  CHECK(P({1, 2, 0, 1}).parts() == std::vector<int>{2, 1, 1});
  CHECK(Partition::parse("[3,1]") == P({3, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK_THROWS(Partition::parse("[1,3]"));
  CHECK_THROWS(Partition::parse("[a]"));
  CHECK(P({2, 1, 1}).z() == 4);
  CHECK(P({3, 2, 2, 1}).conjugate() == P({4, 3, 1}));
  for (int n = 1; n <= 7; ++n) {
    Integer total = 0;
    for (const auto& lambda : partitions(n)) total += lambda.class_size();
    CHECK(total == factorial(n));
  }
}

TEST_CASE("monomial products agree with explicit multiplication") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4 && a + b <= 6; ++b) {
      const int vars = a + b;
      for (const auto& lambda : partitions(a))
        for (const auto& mu : partitions(b)) {
          const Polynomial prod = explicit_monomial(lambda, vars) * explicit_monomial(mu, vars);
          const SymFunc f = SymFunc::monomial(lambda) * SymFunc::monomial(mu);
          for (const auto& nu : partitions(vars)) CHECK(f.coefficient(nu) == Rational(coefficient_at(prod, nu, vars)));
        }
    }
}

TEST_CASE("basic expansions") {
  CHECK(SymFunc::h(2) == SymFunc::monomial(P({2})) + SymFunc::monomial(P({1, 1})));
  CHECK(SymFunc::e(3) == SymFunc::monomial(P({1, 1, 1})));
  CHECK(SymFunc::p(2) == SymFunc::monomial(P({2})));
  CHECK(SymFunc::p(2).coefficient(P({1, 1})) == 0);
  const SymFunc p11 = SymFunc::p(P({1, 1}));
  CHECK(p11.coefficient(P({2})) == 1);
  CHECK(p11.coefficient(P({1, 1})) == 2);
  CHECK(SymFunc::schur(P({2, 1})) == SymFunc::monomial(P({2, 1})) + 2 * SymFunc::monomial(P({1, 1, 1})));
  CHECK(SymFunc::schur(P({3})) == SymFunc::h(3));
  CHECK(SymFunc::schur(P({1, 1, 1})) == SymFunc::e(3));
  CHECK_THROWS(SymFunc::h(2) + SymFunc::h(3));
  CHECK((SymFunc::h(2) - SymFunc::h(2)).is_zero());
  CHECK(SymFunc::h(3).restrict_variables(2) == SymFunc::monomial(P({3})) + SymFunc::monomial(P({2, 1})));
}

TEST_CASE("transition matrices round trip") {
  for (int n = 0; n <= 6; ++n)
    for (Basis b : {Basis::h, Basis::e, Basis::p, Basis::s}) {
      const BasisMatrix& bm = basis_matrix(n, b);
      const std::size_t k = bm.index.size();
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          Rational v = 0;
          for (std::size_t l = 0; l < k; ++l) v += bm.to_monomial[i][l] * bm.from_monomial[l][j];
          CHECK(v == (i == j ? 1 : 0));
        }
    }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const SymFunc f = random_symfunc(5, rng);
    for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      CHECK(from_basis(5, expand(f, b), b) == f);
  }
}

TEST_CASE("omega") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(omega(SymFunc::h(n)) == SymFunc::e(n));
    CHECK(omega(SymFunc::e(n)) == SymFunc::h(n));
  }
  CHECK(omega(SymFunc::schur(P({3, 1}))) == SymFunc::schur(P({2, 1, 1})));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const SymFunc f = random_symfunc(1 + trial % 6, rng);
    CHECK(omega(omega(f)) == f);
  }
}

TEST_CASE("fundamental quasisymmetric functions") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> all;
    for (int i = 1; i < n; ++i) all.push_back(i);
    CHECK(to_monomial_basis(f_qsym({}, n, n)) == SymFunc::h(n));
    CHECK(to_monomial_basis(f_qsym(all, n, n + 1)) == SymFunc::e(n));
  }
  CHECK_THROWS(f_qsym({}, 4, 3));
  CHECK_THROWS(f_qsym({4}, 4, 4));
  CHECK(f_qsym({1}, 2, 2).is_symmetric());  // x1 x2 only
  QSymExpansion f = f_qsym({1}, 3, 3);
  std::string witness;
  CHECK_FALSE(f.is_symmetric(&witness));
  CHECK(witness.find("x1") != std::string::npos);
  CHECK_THROWS_AS(to_monomial_basis(f), std::domain_error);
}

TEST_CASE("principal specialization of F_Exd") {
  for (int n = 1; n <= 4; ++n) {
    const int m = 2 * n;
    for_each_permutation(n, [&](const Permutation& s) {
      const Polynomial spec = f_qsym(exd_set(s), n, m).principal_specialization();
      const Polynomial lhs = Polynomial::multiply_truncated(q_pochhammer(n), spec, {{"q", m - 1}});
      const PermStats st = stats(s);
      CHECK(lhs == Polynomial::variable("q", st.maj - st.exc).truncate("q", m - 1));
    });
  }
}

TEST_CASE("Eulerian quasisymmetric functions") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(q_eulerian_sym(n, 0, n) == SymFunc::h(n));
    const Partition squarefree(std::vector<int>(static_cast<std::size_t>(n), 1));
    Rational total = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= n; ++k) {
        std::string witness;
        CHECK_MESSAGE(q_eulerian_qsym(n, j, k, n).is_symmetric(&witness), witness);
      }
    for (int j = 0; j < n; ++j) {
      const SymFunc q = q_eulerian_sym(n, j);
      total += q.coefficient(squarefree);
      CHECK(q.coefficient(squarefree) == Rational(eulerian_number(n, j)));
      CHECK(q == q_eulerian_sym(n, n - 1 - j));
    }
    CHECK(total == Rational(factorial(n)));
  }
  CHECK(q_eulerian_sym(3, 1).coefficient(P({1, 1, 1})) == 4);
  CHECK(q_eulerian_sym(0, 0, 0) == SymFunc::one());
  CHECK_THROWS(q_eulerian_qsym(3, 3, 0, 3));
}

TEST_CASE("omega on Q matches complemented descent sets") {
  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= n; ++k) {
        QSymExpansion comp(n, n);
        for_each_permutation(n, [&](const Permutation& s) {
          if (excedances(s) == j && fixed_points(s) == k) comp += f_qsym(complement(exd_set(s), n), n, n);
        });
        CHECK(omega(q_eulerian_sym(n, j, k)) == to_monomial_basis(comp));
      }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  // Character table of S_3, rows [3],[2,1],[1,1,1], columns [1,1,1],[2,1],[3].
  CHECK(mn_character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(mn_character(P({2, 1}), P({2, 1})) == 0);
  CHECK(mn_character(P({2, 1}), P({3})) == -1);
  CHECK(mn_character(P({1, 1, 1}), P({2, 1})) == -1);
  CHECK(mn_character(P({2, 2}), P({2, 2})) == 2);
  for (int n = 1; n <= 7; ++n) {
    const auto parts = partitions(n);
    const Partition id(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& lambda : parts) CHECK(mn_character(lambda, id) == hook_count(lambda));
    for (const auto& a : parts)
      for (const auto& b : parts)
        CHECK(ClassFunction::irreducible(a).inner(ClassFunction::irreducible(b)) == (a == b ? 1 : 0));
  }
}

TEST_CASE("Frobenius characteristic") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(frobenius(ClassFunction::trivial(n)) == SymFunc::h(n));
    CHECK(frobenius(ClassFunction::sign(n)) == SymFunc::e(n));
    const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
    CHECK(frobenius(ClassFunction::regular(n)) == SymFunc::p(ones));
  }
  const ClassFunction reg = ClassFunction::regular(4);
  CHECK(frobenius(reg * ClassFunction::sign(4)) == omega(frobenius(reg)));
  ClassFunction perm(3);  // permutation character on three points
  for (const auto& lambda : partitions(3)) {
    int fixed = 0;
    for (int v : lambda.parts()) fixed += v == 1;
    perm.set(lambda, fixed);
  }
  CHECK(frobenius(perm) == SymFunc::h(3) + SymFunc::schur(P({2, 1})));
  CHECK(class_function_of(frobenius(perm)) == perm);
  const SchurDecomposition dec = schur_decompose(frobenius(reg));
  CHECK(dec.integral);
  CHECK(dec.nonnegative);
  for (const auto& [lambda, mult] : dec.multiplicities) CHECK(mult == Rational(hook_count(lambda)));
  const SchurDecomposition virt = schur_decompose(SymFunc::h(2) - SymFunc::e(2) - SymFunc::e(2));
  CHECK_FALSE(virt.nonnegative);
  CHECK(schur_decompose(SymFunc::h(2) * Rational(1, 2)).integral == false);
}

TEST_CASE("generating function identities") {
  for (const auto& id : {"symgen-1", "symgen-2", "cor5.2"}) {
    const SeriesCheck c = series_identity_check(id, 5, 5);
    CHECK_MESSAGE(c.pass, id, " ", c.first_failure);
    CHECK(c.coefficients_checked > 0);
  }
  const SeriesCheck he = series_identity_check("h-e-inverse", 8, 8);
  CHECK(he.pass);
  CHECK_THROWS(series_identity_check("nope", 3, 3));
  // Breaking one coefficient is detected.
  SymSeries h{SymPoly::from(SymFunc::one()), SymPoly::from(SymFunc::h(1))};
  SymSeries sq = series_multiply(h, h, 1, 2);
  CHECK(sq[1].coeffs().at(P({1})) == Polynomial(2));
}

TEST_CASE("JSON and printing") {
  const SymFunc f = SymFunc::h(3) * Rational(2) - SymFunc::e(3) * Rational(1, 2);
  CHECK(SymFunc::from_json(f.to_json()) == f);
  for (Basis b : {Basis::h, Basis::e, Basis::p, Basis::s}) CHECK(SymFunc::from_json(f.to_json(b)) == f);
  CHECK(f.to_json().dump() == SymFunc::from_json(f.to_json()).to_json().dump());
  CHECK(SymFunc::h(2).to_string() == "m[2] + m[1,1]");
  CHECK(SymFunc::h(2).to_string(Basis::h) == "h[2]");
  CHECK(SymFunc(4).to_string() == "0");
  CHECK(parse_basis("s") == Basis::s);
  CHECK_THROWS(parse_basis("q"));
}
