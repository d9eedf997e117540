#include "rees/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "rees/catalog.hpp"
#include "rees/equivariant.hpp"
#include "rees/homology.hpp"
#include "rees/permstat.hpp"
#include "rees/polynomial.hpp"
#include "rees/poset.hpp"
#include "rees/symfunc.hpp"

namespace rees {

namespace {

using nlohmann::json;

int choose2(int n) { return n * (n - 1) / 2; }

Polynomial qpow(int e, const std::string& var = "q") { return Polynomial::variable(var, e); }

// prod_{i=from}^{to} (1 + var^i)
Polynomial one_plus_product(int from, int to, const std::string& var = "q") {
  Polynomial out = 1;
  for (int i = from; i <= to; ++i) out *= Polynomial(1) + qpow(i, var);
  return out;
}

// d_m(q) = sum over derangements of q^(comaj + exc), by enumeration.
Polynomial d_q(int m) {
  Polynomial out;
  for_each_permutation(m, [&](const Permutation& s) {
    const PermStats st = stats(s);
    if (st.fix == 0) out.add_monomial({{"q", st.comaj + st.exc}}, 1);
  });
  return out;
}

// a_m(q) = sum over S_m of q^(comaj + exc), by enumeration.
Polynomial a_q(int m) {
  Polynomial out;
  for_each_permutation(m, [&](const Permutation& s) {
    const PermStats st = stats(s);
    out.add_monomial({{"q", st.comaj + st.exc}}, 1);
  });
  return out;
}

Integer value_at(const Polynomial& f, int q, const std::string& var = "q") {
  return f.evaluate_integer({{var, Integer(q)}});
}

Integer sign(int e) { return e % 2 ? Integer(-1) : Integer(1); }

Poset jonsson_poset(const Poset& p) { return rees_product(remove_bottom(p).poset, chain(p.length())); }

Poset tree_poset(const Poset& p, const Poset& tree) { return remove_bottom(rees_product(p, tree)).poset; }

json betti_json(const Betti& b) { return b.values; }

// Top Betti number by homology, followed by the Euler-Poincare comparison on
// the same poset.
void homology_case(Report& r, const std::string& name, const json& params, const Poset& p, int degree,
                   const std::string& expected, const SuiteConfig& c) {
  run_guarded(r, name + " homology", params, [&] {
    const Betti b = betti(p, c.simplex_limit());
    r.add(name + " homology", params, std::to_string(b.at(degree)), expected,
          {{"betti", betti_json(b)},
           {"homology_degree", degree},
           {"concentrated", b.concentrated_in_top()},
           {"elements", p.size()}});
    r.add(name + " euler-poincare", params, to_string(mobius_of_hat(p)), to_string(b.euler_characteristic()));
  });
}

// Top Betti number as (-1)^degree mu(P-hat), valid for posets with homology
// concentrated in top degree.
void mobius_case(Report& r, const std::string& name, const json& params, const Poset& p, int degree,
                 const std::string& expected) {
  const Integer mu = mobius_of_hat(p);
  r.add(name + " mobius", params, to_string(sign(degree) * mu), expected,
        {{"mu_hat", to_string(mu)}, {"homology_degree", degree}, {"elements", p.size()}});
}

void both_routes(Report& r, const std::string& name, const json& params, const Poset& p, int degree,
                 const std::string& expected, const SuiteConfig& c) {
  homology_case(r, name, params, p, degree, expected, c);
  mobius_case(r, name, params, p, degree, expected);
}

// Subspace or isotropic lattice; a guard overrun becomes a skipped case.
template <typename Build, typename Body>
void with_lattice(Report& r, const std::string& name, const json& params, Build&& build, Body&& body) {
  run_guarded(r, name, params, [&] { body(build()); });
}

bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<std::size_t>& f) {
  if (p.size() != q.size() || f.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (std::size_t x : f) {
    if (x >= q.size() || hit[x]) return false;
    hit[x] = 1;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(f[a], f[b])) return false;
  return true;
}

// R_i(P) with its bottom row removed, mapped onto I_{i-1}(P)^+ by
// (a, x_j) -> (a, j-1) and (top, x_i) -> the new top.
bool r_plus_isomorphic(const Poset& p, int i) {
  const PairPoset r = r_i_poset(p, i);
  Bitset keep(r.poset.size());
  for (std::size_t k = 0; k < r.poset.size(); ++k)
    if (r.origin[k].second > 0) keep.set(k);
  const DerivedPoset plus = induced_subposet(r.poset, keep);
  const PairPoset ideal = ideal_ij(p, i - 1);
  const DerivedPoset target = adjoin_top(ideal.poset);
  const std::size_t top = *p.maximum();
  std::vector<std::size_t> f(plus.poset.size());
  for (std::size_t k = 0; k < plus.poset.size(); ++k) {
    const auto [a, j] = r.origin[plus.origin[k]];
    if (a == top && static_cast<int>(j) == i) {
      f[k] = *target.poset.maximum();
      continue;
    }
    bool found = false;
    for (std::size_t m = 0; m < target.poset.size(); ++m) {
      const std::size_t o = target.origin[m];
      if (o != DerivedPoset::npos && ideal.origin[o] == std::make_pair(a, j - 1)) {
        f[k] = m;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return is_isomorphism(plus.poset, target.poset, f);
}

std::string list_string(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

// ------------------------------------------------------------------ suites

void jonsson(Report& r, const SuiteConfig& c) {
  for (int n = 1; n <= c.n_max.value_or(7); ++n) {
    const json params{{"n", n}};
    const Poset p = jonsson_poset(boolean_lattice(n));
    both_routes(r, case_key(params), params, p, n - 1, d_count(n).str(), c);
  }
}

void eulerian(Report& r, const SuiteConfig& c) {
  for (int n = 1; n <= c.n_max.value_or(5); ++n) {
    const Poset b = boolean_lattice(n);
    for (int j = 0; j < n; ++j) {
      const json params{{"n", n}, {"j", j}};
      both_routes(r, case_key(params), params, ideal_ij(b, j).poset, n - 2, eulerian_number(n, j).str(), c);
    }
  }
}

// q^{C(n,2)+j} a^{maj,exc}_{n,j}(q^{-1})
Polynomial q_eulerian_dimension(int n, int j) {
  const Polynomial a = q_eulerian(n, EulerianFlavor::maj_exc).coefficient_of("t", j);
  return a.substitute("q", qpow(-1)) * qpow(choose2(n) + j);
}

void q_eulerian_suite(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  for (int n = 1; n <= nmax; ++n)
    for (int j = 0; j < n; ++j) {
      Polynomial direct;
      for_each_permutation(n, [&](const Permutation& s) {
        const PermStats st = stats(s);
        if (st.exc == j) direct.add_monomial({{"q", st.comaj + st.exc}}, 1);
      });
      const json params{{"n", n}, {"j", j}};
      r.add(case_key(params) + " polynomial", params, q_eulerian_dimension(n, j).to_string(), direct.to_string());
    }
  if (nmax >= 3) {
    const Polynomial example = qpow(1) + qpow(2) + qpow(3) * 2;
    r.add("n=3 j=1 example", {{"n", 3}, {"j", 1}}, q_eulerian_dimension(3, 1).to_string(), example.to_string());
  }
  for (int q : c.q_values)
    for (int n = 1; n <= nmax; ++n) {
      const json lattice_params{{"n", n}, {"q", q}};
      with_lattice(
          r, case_key(lattice_params), lattice_params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
          [&](const Poset& b) {
            for (int j = 0; j < n; ++j) {
              const json params{{"n", n}, {"q", q}, {"j", j}};
              both_routes(r, case_key(params), params, ideal_ij(b, j).poset, n - 2,
                          value_at(q_eulerian_dimension(n, j), q).str(), c);
            }
          });
    }
}

void q_derangement(Report& r, const SuiteConfig& c) {
  for (int q : c.q_values)
    for (int n = 1; n <= c.n_max.value_or(4); ++n) {
      const json params{{"n", n}, {"q", q}};
      const std::string name = case_key(params);
      Polynomial rhs;
      for_each_permutation(n, [&](const Permutation& s) {
        const PermStats st = stats(s);
        if (st.fix == 0) rhs.add_monomial({{"q", choose2(n) - st.maj + st.exc}}, 1);
      });
      with_lattice(
          r, name, params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
          [&](const Poset& b) { both_routes(r, name, params, jonsson_poset(b), n - 1, value_at(rhs, q).str(), c); });
    }
}

void tree(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  for (int t : c.t_values)
    for (int n = 1; n <= nmax; ++n) {
      const json params{{"n", n}, {"t", t}};
      const Integer rhs = value_at(eulerian_polynomial(n), t, "t") * t;
      both_routes(r, case_key(params), params, tree_poset(boolean_lattice(n), tary_tree(t, n)), n - 1, rhs.str(), c);
    }
  for (int q : c.q_values)
    for (int t : c.t_values)
      for (int n = 1; n < nmax; ++n) {
        const json params{{"n", n}, {"q", q}, {"t", t}};
        const std::string name = case_key(params);
        const Polynomial a = q_eulerian(n, EulerianFlavor::comaj_exc);
        const Polynomial shifted = a.substitute("t", qpow(1) * qpow(1, "t")) * qpow(1, "t");
        const Integer rhs = shifted.evaluate_integer({{"q", Integer(q)}, {"t", Integer(t)}});
        with_lattice(
            r, name, params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
            [&](const Poset& b) { both_routes(r, name, params, tree_poset(b, tary_tree(t, n)), n - 1, rhs.str(), c); });
      }
}

void tree_corollary(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  for (int n = 1; n <= nmax; ++n) {
    const json params{{"n", n}};
    both_routes(r, case_key(params), params, tree_poset(boolean_lattice(n), chain(n + 1)), n - 1,
                factorial(n).str(), c);
  }
  for (int q : c.q_values)
    for (int n = 1; n < nmax; ++n) {
      const json params{{"n", n}, {"q", q}};
      const std::string name = case_key(params);
      const Integer rhs = value_at(a_q(n), q);
      with_lattice(
          r, name, params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
          [&](const Poset& b) { both_routes(r, name, params, tree_poset(b, chain(n + 1)), n - 1, rhs.str(), c); });
    }
}

void tree_lemma_random(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> pick_n(1, nmax);
  std::uniform_int_distribution<int> pick_width(1, 4);
  std::uniform_real_distribution<double> pick_density(0.3, 0.9);
  for (int trial = 0; trial < c.trials; ++trial) {
    const int n = pick_n(rng);
    const int width = pick_width(rng);
    const double density = pick_density(rng);
    const std::uint64_t seed = rng();
    const Poset p = random_ranked_bounded_poset(n, width, density, seed);
    const json base{{"trial", trial}, {"n", n}, {"width", width}, {"elements", p.size()}};
    const std::string name = "trial=" + std::to_string(trial);

    std::vector<Integer> mu_ideals;
    for (int j = 1; j <= n; ++j) mu_ideals.push_back(mobius_of_hat(ideal_ij(p, j - 1).poset));
    const Poset pd = dual(p);
    for (int t : c.t_values) {
      json params = base;
      params["t"] = t;
      Integer lhs = 0;
      Integer tp = 1;
      for (int j = 1; j <= n; ++j) {
        tp *= t;
        lhs += mu_ideals[static_cast<std::size_t>(j - 1)] * tp;
      }
      const Integer rhs = -mobius_invariant(adjoin_top(rees_product(pd, tary_tree(t, n))).poset);
      r.add(name + " t=" + std::to_string(t), params, lhs.str(), rhs.str(), {{"mu_ideals", list_string(mu_ideals)}});
    }
    int iso = 0;
    int anti = 0;
    for (int i = 1; i <= n; ++i) {
      if (r_plus_isomorphic(p, i)) ++iso;
      if (is_antiisomorphism(r_i_poset(p, i).poset, r_i_poset(pd, i).poset, psi_i(p, i))) ++anti;
    }
    r.add(name + " R_i^+ = I_{i-1}^+", base, std::to_string(iso), std::to_string(n));
    r.add(name + " psi_i antiisomorphism", base, std::to_string(anti), std::to_string(n));
  }
}

// 1 + sum_k W_k(P) [k+1]_t mu(([x_k, top] * T_{t,n-k})^+), one x_k per rank.
Integer uniform_sum(const Poset& p, int t) {
  const int n = p.length();
  const std::vector<Integer> w = whitney_numbers(p);
  Integer total = 1;
  for (int k = 0; k <= n; ++k) {
    std::size_t x = 0;
    while (p.rank(x) != k) ++x;
    const Poset upper = upper_ideal(p, x, IntervalKind::closed).poset;
    const Integer mu = mobius_invariant(adjoin_top(rees_product(upper, tary_tree(t, n - k))).poset);
    total += w[static_cast<std::size_t>(k)] * value_at(q_integer(k + 1, "t"), t, "t") * mu;
  }
  return total;
}

void uniform_recursion(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  auto check = [&](const std::string& family, int n, const json& extra, auto&& build) {
    json params = extra;
    params["family"] = family;
    params["n"] = n;
    const std::string name = case_key(params);
    with_lattice(r, name, params, build, [&](const Poset& p) {
      r.add(name + " uniform", params, is_uniform(p) ? "uniform" : "not uniform", "uniform");
      for (int t : c.t_values) {
        json tp = params;
        tp["t"] = t;
        r.add(name + " t=" + std::to_string(t), tp, uniform_sum(p, t).str(), "0");
      }
    });
  };
  for (int n = 0; n <= nmax; ++n) check("B", n, json::object(), [n] { return boolean_lattice(n); });
  for (int q : c.q_values)
    for (int n = 0; n < nmax; ++n)
      check("B(q)", n, {{"q", q}}, [&, n, q] { return subspace_lattice(n, q, c.max_subspaces); });
  for (int n = 1; n < nmax; ++n)
    check("PCP-hat", n + 1, json::object(), [n] { return adjoin_top(crosspolytope_faces(n)).poset; });
}

void symgen(Report& r, const SuiteConfig& c) {
  const int cap = c.degree_cap.value_or(5);
  const int m = c.variables.value_or(5);
  for (const std::string id : {"symgen-1", "symgen-2", "h-e-inverse"}) {
    const SeriesCheck s = series_identity_check(id, cap, m);
    const json params{{"identity", id}, {"degree_cap", cap}, {"variables", m}};
    r.add(id, params, s.pass ? "equal" : s.first_failure, "equal", {{"coefficients_checked", s.coefficients_checked}});
  }

  // sum_{a+b=N} [N a]_q A_a(q,t,r) c_b = (q - t) q^{C(N,2)} r^N with
  // c_b = q^{C(b,2)+1-b} t^b - t q^{C(b,2)}.
  const Polynomial q = qpow(1);
  const Polynomial t = qpow(1, "t");
  const Polynomial rr = qpow(1, "r");
  std::vector<Polynomial> a;
  for (int N = 0; N <= cap + 1; ++N) {
    a.push_back(q_eulerian(N, EulerianFlavor::comaj_exc_fix));
    Polynomial lhs;
    for (int i = 0; i <= N; ++i) {
      const int b = N - i;
      const Polynomial cb = qpow(choose2(b) + 1 - b) * t.pow(b) - t * qpow(choose2(b));
      lhs += q_binomial(N, i) * a[static_cast<std::size_t>(i)] * cb;
    }
    const json params{{"N", N}};
    r.add("exponential form " + case_key(params), params, lhs.to_string(),
          ((q - t) * qpow(choose2(N)) * rr.pow(N)).to_string());
  }

  for (int n = 0; n <= 7; ++n) {
    const Polynomial full = q_eulerian(n, EulerianFlavor::comaj_exc_fix);
    for (int k = 0; k <= n; ++k) {
      const json params{{"n", n}, {"k", k}};
      const Polynomial rhs = qpow(choose2(k)) * q_binomial(n, k) * derangement_poly(n - k);
      r.add("fixed points " + case_key(params), params, full.coefficient_of("r", k).to_string(), rhs.to_string());
    }
    Polynomial inversion;
    for (int k = 0; k <= n; ++k)
      inversion += q_binomial(n, k) * q_eulerian(n - k, EulerianFlavor::comaj_exc) * Polynomial(sign(k));
    const json params{{"n", n}};
    r.add("derangement inversion " + case_key(params), params, derangement_poly(n).to_string(), inversion.to_string());
  }

  for (int n = 1; n <= 4; ++n) {
    const int vars = 2 * n;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k <= n; ++k) {
        Polynomial direct;
        for_each_permutation(n, [&](const Permutation& s) {
          const PermStats st = stats(s);
          if (st.exc == j && st.fix == k) direct.add_monomial({{"q", st.maj - st.exc}}, 1);
        });
        const Polynomial spec = q_eulerian_qsym(n, j, k, vars).principal_specialization();
        const Polynomial lhs = Polynomial::multiply_truncated(q_pochhammer(n), spec, {{"q", vars - 1}});
        const json params{{"n", n}, {"j", j}, {"k", k}, {"variables", vars}};
        r.add("principal specialization " + case_key(params), params, lhs.to_string(),
              direct.truncate("q", vars - 1).to_string());
      }
  }

  for (int n = 1; n <= 6; ++n)
    for (int j = 0; j < n; ++j) {
      const json params{{"n", n}, {"j", j}};
      std::string witness;
      const bool symmetric = q_eulerian_qsym(n, j, n).is_symmetric(&witness);
      r.add("symmetric " + case_key(params), params, symmetric ? "symmetric" : witness, "symmetric");
      r.add("palindromic " + case_key(params), params, q_eulerian_sym(n, j).to_string(),
            q_eulerian_sym(n, n - 1 - j).to_string());
    }
}

Integer bc_formula(int n) {
  Integer total = 0;
  for (int j = 0; j <= n; ++j) total += sign(j) * binomial(n, j) * (Integer(1) << (n - j)) * factorial(n - j);
  return total;
}

// sum_r (-1)^{r-1} W_r(P) f(r)
Integer whitney_sum(const Poset& p, const std::function<Integer(int)>& f) {
  const std::vector<Integer> w = whitney_numbers(p);
  Integer total = 0;
  for (std::size_t r = 0; r < w.size(); ++r) total -= sign(static_cast<int>(r)) * w[r] * f(static_cast<int>(r));
  return total;
}

void bc(Report& r, const SuiteConfig& c) {
  for (int n = 1; n <= c.n_max.value_or(4); ++n) {
    const json params{{"n", n}};
    const std::string name = case_key(params);
    const Integer formula = bc_formula(n);
    r.add(name + " enumeration", params, std::to_string(bc_derangements(n).size()), formula.str());
    const Poset pcp = crosspolytope_faces(n);
    const Poset p = jonsson_poset(pcp);
    both_routes(r, name, params, p, n - 1, formula.str(), c);
    const auto fact = [](int k) { return factorial(k); };
    r.add(name + " simplicial PCP", params, to_string(mobius_of_hat(p)), whitney_sum(pcp, fact).str());
    const Poset b = boolean_lattice(n);
    r.add(name + " simplicial B", params, to_string(mobius_of_hat(jonsson_poset(b))), whitney_sum(b, fact).str());
  }
}

// sum_k [n k]_q q^{k^2} prod_{i=k+1}^n (1+q^i) d_{n-k}(q)
Polynomial pcp_q_dimension(int n) {
  Polynomial out;
  for (int k = 0; k <= n; ++k) out += q_binomial(n, k) * qpow(k * k) * one_plus_product(k + 1, n) * d_q(n - k);
  return out;
}

// [n r]_q prod_{i=n-r+1}^n (q^i + 1)
Polynomial pcp_whitney(int n, int r) { return q_binomial(n, r) * one_plus_product(n - r + 1, n); }

void bc_q(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(3);
  for (int n = 1; n <= nmax; ++n) {
    std::vector<Integer> expected;
    for (int k = 0; k <= n; ++k) expected.push_back(value_at(pcp_whitney(n, k), 1));
    const json params{{"n", n}, {"q", 1}};
    r.add(case_key(params) + " whitney", params, list_string(whitney_numbers(crosspolytope_faces(n))),
          list_string(expected));
  }
  for (int q : c.q_values)
    for (int n = 1; n <= nmax; ++n) {
      const json params{{"n", n}, {"q", q}};
      const std::string name = case_key(params);
      with_lattice(
          r, name, params, [&] { return isotropic_subspace_poset(n, q, c.max_subspaces); },
          [&](const Poset& pcp) {
            std::vector<Integer> expected;
            for (int k = 0; k <= n; ++k) expected.push_back(value_at(pcp_whitney(n, k), q));
            r.add(name + " whitney", params, list_string(whitney_numbers(pcp)), list_string(expected));
            const Poset p = jonsson_poset(pcp);
            both_routes(r, name, params, p, n - 1, value_at(pcp_q_dimension(n), q).str(), c);
            const auto perms = [q](int k) { return value_at(a_q(k), q); };
            r.add(name + " q-simplicial PCP(q)", params, to_string(mobius_of_hat(p)), whitney_sum(pcp, perms).str());
          });
      with_lattice(
          r, name + " q-simplicial B(q)", params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
          [&](const Poset& b) {
            const auto perms = [q](int k) { return value_at(a_q(k), q); };
            r.add(name + " q-simplicial B(q)", params, to_string(mobius_of_hat(jonsson_poset(b))),
                  whitney_sum(b, perms).str());
          });
    }
  for (int n = 0; n <= std::max(nmax, 5); ++n) {
    const json params{{"n", n}};
    const std::string name = case_key(params);
    Polynomial rhs;
    for (int k = 0; k <= n; ++k)
      rhs += q_binomial(n, k) * qpow(choose2(k)) * d_q(n - k) * qpow(choose2(k + 1), "p") *
             one_plus_product(k + 1, n, "p");
    r.add(name + " bar index two-variable", params, bc_poly_two_variable(n).to_string(), rhs.to_string());
    r.add(name + " bar index", params, bc_poly(n).to_string(), pcp_q_dimension(n).to_string());
  }
}

void gaussian_identity(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(6);
  const Polynomial x = qpow(1, "x");
  const Polynomial y = qpow(1, "y");
  for (int n = 0; n <= nmax; ++n) {
    for (int j = 0; j <= n; ++j) {
      const json params{{"n", n}, {"j", j}};
      const std::string name = case_key(params);
      Polynomial first;
      Polynomial second;
      for (int k = 0; k <= j; ++k) {
        first += q_binomial(j, k) * qpow(k * k) * one_plus_product(k + 1, n) * Polynomial(sign(k));
        second += q_binomial(j, k) * Polynomial(sign(j - k)) * qpow(choose2(j - k)) * one_plus_product(k + 1, n);
      }
      r.add(name + " product expansion", params, one_plus_product(j + 1, n).to_string(), first.to_string());
      r.add(name + " inverted", params,
            (qpow(j * j) * Polynomial(sign(j)) * one_plus_product(j + 1, n)).to_string(), second.to_string());
    }
    const json params{{"n", n}};
    const std::string name = case_key(params);

    Polynomial reduced;
    for (int k = 0; k <= n; ++k)
      reduced += q_binomial(n, k) * Polynomial(sign(n - k)) * qpow(choose2(n - k)) * one_plus_product(k + 1, n);
    r.add(name + " reduced", params, (qpow(n * n) * Polynomial(sign(n))).to_string(), reduced.to_string());

    Polynomial product = 1;
    for (int i = 0; i < n; ++i) product *= x + y * qpow(i);
    Polynomial binomial_side;
    for (int k = 0; k <= n; ++k) binomial_side += q_binomial(n, k) * qpow(choose2(k)) * x.pow(n - k) * y.pow(k);
    r.add(name + " q-binomial formula", params, product.to_string(), binomial_side.to_string());

    Polynomial power_side;
    Polynomial at_qn;
    Polynomial factored;
    for (int k = 0; k <= n; ++k) {
      Polynomial shifted = 1;
      Polynomial evaluated = 1;
      Polynomial pulled_out = 1;
      for (int i = 0; i < k; ++i) {
        shifted *= x + qpow(i);
        evaluated *= qpow(n) + qpow(i);
        pulled_out *= qpow(n - i) + Polynomial(1);
      }
      const Polynomial coeff = q_binomial(n, k) * Polynomial(sign(n - k));
      power_side += coeff * shifted;
      at_qn += coeff * evaluated;
      factored += coeff * qpow(choose2(k)) * pulled_out;
    }
    r.add(name + " inversion at y=1", params, x.pow(n).to_string(), power_side.to_string());
    r.add(name + " at x=q^n", params, qpow(n * n).to_string(), at_qn.to_string());
    r.add(name + " factored", params, qpow(n * n).to_string(), factored.to_string());

    Polynomial alternating;
    for (int j = 0; j <= n; ++j)
      alternating += Polynomial(sign(j)) * q_binomial(n, j) * one_plus_product(j + 1, n) * a_q(n - j);
    r.add(name + " dimension formula", params, alternating.to_string(), pcp_q_dimension(n).to_string());
  }
}

void cross_engine(Report& r, const SuiteConfig& c) {
  const int nmax = c.n_max.value_or(4);
  auto cm = [&](const std::string& name, const json& params, const Poset& p) {
    run_guarded(r, name + " cohen-macaulay", params, [&] {
      r.add(name + " cohen-macaulay", params, is_cohen_macaulay(p, c.simplex_limit()) ? "yes" : "no", "yes",
            {{"elements", p.size()}});
    });
  };
  auto ep = [&](const std::string& name, const json& params, const Poset& p) {
    run_guarded(r, name + " euler-poincare", params, [&] {
      const Betti b = betti(p, c.simplex_limit());
      r.add(name + " euler-poincare", params, to_string(mobius_of_hat(p)), to_string(b.euler_characteristic()),
            {{"betti", betti_json(b)}});
    });
  };
  for (int n = 1; n <= nmax; ++n) {
    const json params{{"family", "B^- * C"}, {"n", n}};
    const Poset b = boolean_lattice(n);
    const Poset p = jonsson_poset(b);
    cm(case_key(params), params, p);
    ep(case_key(params), params, p);
    for (int j = 0; j < n; ++j) {
      const json ip{{"family", "I_j(B)"}, {"n", n}, {"j", j}};
      ep(case_key(ip), ip, ideal_ij(b, j).poset);
    }
    for (int t : c.t_values) {
      const json tp{{"family", "(B * T)^-"}, {"n", n}, {"t", t}};
      ep(case_key(tp), tp, tree_poset(b, tary_tree(t, n)));
      const json dp{{"family", "(B^* * T)^-"}, {"n", n}, {"t", t}};
      ep(case_key(dp), dp, tree_poset(dual(b), tary_tree(t, n)));
    }
  }
  for (int n = 1; n < nmax; ++n) {
    const json pp{{"family", "PCP^- * C"}, {"n", n}};
    const Poset pcp = jonsson_poset(crosspolytope_faces(n));
    cm(case_key(pp), pp, pcp);
    ep(case_key(pp), pp, pcp);
    const json bp{{"family", "B(q)^- * C"}, {"n", n}, {"q", 2}};
    with_lattice(
        r, case_key(bp), bp, [&] { return subspace_lattice(n, 2, c.max_subspaces); },
        [&](const Poset& b) {
          const Poset p = jonsson_poset(b);
          cm(case_key(bp), bp, p);
          ep(case_key(bp), bp, p);
        });
  }
  for (int q : c.q_values)
    for (int n = 1; n < nmax; ++n) {
      const json params{{"n", n}, {"q", q}};
      with_lattice(
          r, case_key(params), params, [&] { return subspace_lattice(n, q, c.max_subspaces); },
          [&](const Poset& b) {
            for (int j = 0; j < n; ++j) {
              const json ip{{"family", "I_j(B(q))"}, {"n", n}, {"q", q}, {"j", j}};
              ep(case_key(ip), ip, ideal_ij(b, j).poset);
            }
            const json tp{{"family", "(B(q) * C)^-"}, {"n", n}, {"q", q}};
            ep(case_key(tp), tp, tree_poset(b, chain(n + 1)));
          });
      const json ip{{"family", "PCP(q)^- * C"}, {"n", n}, {"q", q}};
      with_lattice(
          r, case_key(ip), ip, [&] { return isotropic_subspace_poset(n, q, c.max_subspaces); },
          [&](const Poset& pcp) { ep(case_key(ip), ip, jonsson_poset(pcp)); });
    }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> pick_n(1, nmax);
  std::uniform_int_distribution<int> pick_width(1, 4);
  const int trials = std::min(c.trials, 20);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = pick_n(rng);
    const Poset p = random_ranked_bounded_poset(n, pick_width(rng), 0.6, rng());
    const json params{{"family", "random"}, {"trial", trial}, {"n", n}};
    ep(case_key(params), params, p);
    for (int j = 0; j < n; ++j) {
      json ip = params;
      ip["j"] = j;
      ep(case_key(ip) + " ideal", ip, ideal_ij(p, j).poset);
    }
    json tp = params;
    tp["t"] = 2;
    ep(case_key(tp) + " dual tree", tp, adjoin_top(rees_product(dual(p), tary_tree(2, n))).poset);
  }
}

// ------------------------------------------------------------------ catalog

struct Entry {
  SuiteInfo info;
  std::function<void(Report&, const SuiteConfig&)> run;
};

const std::vector<Entry>& own_suites() {
  static const std::vector<Entry> entries{
      {{"jonsson", "dim H~_{n-1}(B_n^- * C_n) = d_n, the number of derangements of [n]", "n-1"}, jonsson},
      {{"eulerian", "dim H~_{n-2}(I_j(B_n)) = a_{n,j}, the number of permutations of [n] with j descents", "n-2"},
       eulerian},
      {{"q-eulerian", "dim H~_{n-2}(I_j(B_n(q))) = q^{C(n,2)+j} a^{maj,exc}_{n,j}(q^{-1})", "n-2"}, q_eulerian_suite},
      {{"q-derangement", "dim H~_{n-1}(B_n(q)^- * C_n) = sum over derangements of q^{C(n,2)-maj+exc}", "n-1"},
       q_derangement},
      {{"tree",
        "dim H~_{n-1}((B_n * T_{t,n})^-) = t A_n(t); dim H~_{n-1}((B_n(q) * T_{t,n})^-) = t A^{comaj,exc}_n(q,qt)",
        "n-1"},
       tree},
      {{"tree-corollary",
        "dim H~_{n-1}((B_n * C_{n+1})^-) = n!; dim H~_{n-1}((B_n(q) * C_{n+1})^-) = sum over S_n of "
        "q^{comaj+exc}",
        "n-1"},
       tree_corollary},
      {{"tree-lemma-random",
        "sum_{j=1}^n mu(hat I_{j-1}(P)) t^j = -mu((P^* * T_{t,n})^+) for random bounded ranked P; R_i(P)^+ = "
        "I_{i-1}(P)^+ and psi_i: R_i(P) -> R_i(P^*) reverses order",
        "none (Mobius functions only)"},
       tree_lemma_random},
      {{"uniform-recursion", "1 + sum_k W_k(P) [k+1]_t mu((P_{n-k} * T_{t,n-k})^+) = 0 for uniform P",
        "none (Mobius functions only)"},
       uniform_recursion},
      {{"symgen",
        "sum Q_{n,j,k} t^j r^k z^n = (1-t)H(rz)/(H(zt)-tH(z)) = H(rz)/(1 - sum_{n>=2} t[n-1]_t h_n z^n); the "
        "q-exponential form of A^{comaj,exc,fix}_n; sum_{fix=k} q^comaj t^exc = q^{C(k,2)} [n k]_q d_{n-k}(q,t)",
        "none"},
       symgen},
      {{"bc",
        "dim H~_{n-1}(PCP_n^- * C_n) = d^BC_n = sum_j (-1)^j C(n,j) 2^{n-j} (n-j)!; mu(hat(P^- * C_n)) = sum_r "
        "(-1)^{r-1} W_r(P) r! for simplicial P",
        "n-1"},
       bc},
      {{"bc-q",
        "dim H~_{n-1}(PCP_n(q)^- * C_n) = sum_k [n k]_q q^{k^2} prod_{i=k+1}^n (1+q^i) d_{n-k}(q) = sum over D^BC_n "
        "of q^{comaj+exc+bnd}; W_r(PCP_n(q)) = [n r]_q prod_{i=n-r+1}^n (q^i+1); mu(hat(P^- * C_n)) = sum_r "
        "(-1)^{r-1} W_r(P) sum_{S_r} q^{comaj+exc} for q-simplicial P",
        "n-1"},
       bc_q},
      {{"gaussian-identity",
        "Gaussian inversion chain from the q-binomial formula to the PCP_n(q) dimension formula, as formal "
        "polynomial identities",
        "none"},
       gaussian_identity},
      {{"cross-engine",
        "mu(hat P) = sum_i (-1)^i dim H~_i(P) on the constructed posets; B_n^- * C_n, B_n(2)^- * C_n and PCP_n^- * "
        "C_n are Cohen-Macaulay",
        "all degrees"},
       cross_engine},
  };
  return entries;
}

}  // namespace

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  for (const auto& e : own_suites()) out.push_back(e.info);
  for (const auto& id : equivariant_suites()) {
    SuiteConfig empty;
    empty.suite = id;
    empty.n_max = 0;
    const Report header = verify_equivariant(empty);
    out.push_back({id, header.statement, header.degree_convention});
  }
  return out;
}

bool is_suite(const std::string& id) {
  for (const auto& e : own_suites())
    if (e.info.id == id) return true;
  const auto eq = equivariant_suites();
  return std::find(eq.begin(), eq.end(), id) != eq.end();
}

Report run_suite(const SuiteConfig& config) {
  for (const auto& e : own_suites()) {
    if (e.info.id != config.suite) continue;
    Report r{e.info.id, e.info.statement, e.info.degree_convention, {}};
    e.run(r, config);
    return r;
  }
  const auto eq = equivariant_suites();
  if (std::find(eq.begin(), eq.end(), config.suite) != eq.end()) return verify_equivariant(config);
  throw std::invalid_argument("unknown suite '" + config.suite + "'");
}

}  // namespace rees
