#include "rees/equivariant.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "rees/catalog.hpp"

namespace rees {

PosetAction::PosetAction(Poset p, int degree, Map map) : poset_(std::move(p)), degree_(degree), map_(std::move(map)) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

std::vector<std::size_t> PosetAction::operator()(const Permutation& g) const {
  if (g.size() != degree_) throw std::invalid_argument("permutation of the wrong size");
  return map_(g);
}

bool PosetAction::is_valid() const {
  const auto id = (*this)(Permutation::identity(degree_));
  for (std::size_t i = 0; i < id.size(); ++i)
    if (id[i] != i) return false;
  const auto perms = all_permutations(degree_);
  std::map<Permutation, std::vector<std::size_t>> images;
  for (const auto& g : perms) {
    images[g] = (*this)(g);
    if (!is_automorphism(poset_, images[g])) return false;
  }
  for (const auto& g : perms)
    for (const auto& h : perms) {
      const auto& gi = images[g];
      const auto& hi = images[h];
      const auto& ghi = images[g * h];
      for (std::size_t x = 0; x < gi.size(); ++x)
        if (gi[hi[x]] != ghi[x]) return false;
    }
  return true;
}

namespace {

std::uint32_t parse_subset(const std::string& label) {
  std::uint32_t mask = 0;
  std::string cur;
  for (char c : label) {
    if (c >= '0' && c <= '9') {
      cur += c;
    } else if (!cur.empty()) {
      mask |= 1u << (std::stoi(cur) - 1);
      cur.clear();
    }
  }
  return mask;
}

// Action on a subposet / extension: element i came from origin[i] of the
// base, new elements stay put.
PosetAction derived_action(const PosetAction& base, const DerivedPoset& d) {
  auto back = std::make_shared<std::vector<std::size_t>>(base.poset().size(), DerivedPoset::npos);
  for (std::size_t i = 0; i < d.origin.size(); ++i)
    if (d.origin[i] != DerivedPoset::npos) (*back)[d.origin[i]] = i;
  auto origin = std::make_shared<std::vector<std::size_t>>(d.origin);
  return PosetAction(d.poset, base.degree(), [base, back, origin](const Permutation& g) {
    const auto gb = base(g);
    std::vector<std::size_t> out(origin->size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::size_t o = (*origin)[i];
      if (o == DerivedPoset::npos) {
        out[i] = i;
        continue;
      }
      const std::size_t image = (*back)[gb[o]];
      if (image == DerivedPoset::npos) throw PosetError("subposet is not invariant under the action");
      out[i] = image;
    }
    return out;
  });
}

// Action on pairs (a, x) through the first coordinate.
PosetAction pair_action(const PosetAction& base, const PairPoset& pp) {
  auto index = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, std::size_t>>();
  for (std::size_t i = 0; i < pp.origin.size(); ++i) (*index)[pp.origin[i]] = i;
  auto origin = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>(pp.origin);
  return PosetAction(pp.poset, base.degree(), [base, index, origin](const Permutation& g) {
    const auto gb = base(g);
    std::vector<std::size_t> out(origin->size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto it = index->find({gb[(*origin)[i].first], (*origin)[i].second});
      if (it == index->end()) throw PosetError("pair poset is not invariant under the action");
      out[i] = it->second;
    }
    return out;
  });
}

}  // namespace

PosetAction boolean_action(int n) {
  Poset b = boolean_lattice(n);
  auto masks = std::make_shared<std::vector<std::uint32_t>>();
  auto where = std::make_shared<std::vector<std::size_t>>(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    masks->push_back(parse_subset(b.label(i)));
    (*where)[masks->back()] = i;
  }
  return PosetAction(b, n, [masks, where, n](const Permutation& g) {
    std::vector<std::size_t> out(masks->size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::uint32_t image = 0;
      for (int k = 1; k <= n; ++k)
        if ((*masks)[i] >> (k - 1) & 1u) image |= 1u << (g(k) - 1);
      out[i] = (*where)[image];
    }
    return out;
  });
}

PosetAction dual_action(const PosetAction& a) {
  Poset d = dual(a.poset());
  auto to_base = std::make_shared<std::vector<std::size_t>>();
  auto from_base = std::make_shared<std::vector<std::size_t>>(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    to_base->push_back(a.poset().index_of(d.label(i)));
    (*from_base)[to_base->back()] = i;
  }
  return PosetAction(d, a.degree(), [a, to_base, from_base](const Permutation& g) {
    const auto gb = a(g);
    std::vector<std::size_t> out(to_base->size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*from_base)[gb[(*to_base)[i]]];
    return out;
  });
}

PosetAction remove_bottom_action(const PosetAction& a) { return derived_action(a, remove_bottom(a.poset())); }

PosetAction rees_action(const PosetAction& a, const Poset& q) { return pair_action(a, rees_product_pairs(a.poset(), q)); }

PosetAction ideal_ij_action(const PosetAction& a, int j) { return pair_action(a, ideal_ij(a.poset(), j)); }

PosetAction jonsson_action(int n) { return rees_action(remove_bottom_action(boolean_action(n)), chain(n)); }

PosetAction tree_action(int n, int t, bool dual) {
  PosetAction b = boolean_action(n);
  if (dual) b = dual_action(b);
  return remove_bottom_action(rees_action(b, tary_tree(t, n)));
}

PosetAction boolean_ideal_action(int n, int j) { return ideal_ij_action(boolean_action(n), j); }

Permutation cycle_type_representative(const Partition& lambda) {
  std::vector<int> w;
  int start = 1;
  for (int len : lambda.parts()) {
    for (int k = 0; k < len; ++k) w.push_back(start + (k + 1) % len);
    start += len;
  }
  return Permutation(std::move(w));
}

ClassFunction lefschetz_character(const PosetAction& a) {
  ClassFunction chi(a.degree());
  for (const auto& lambda : partitions(a.degree()))
    chi.set(lambda, Rational(lefschetz_trace(a.poset(), a(cycle_type_representative(lambda)))));
  return chi;
}

HomologyCharacter homology_character(const PosetAction& a, std::size_t max_simplices, bool require_concentrated) {
  const Poset& p = a.poset();
  if (!p.is_ranked()) throw PosetError("homology_character: poset is not ranked");
  HomologyCharacter out;
  out.degree = p.length();
  try {
    const Betti b = betti(p, max_simplices);
    out.betti = b;
    out.concentration_checked = true;
    if (require_concentrated && !b.concentrated_in_top())
      throw PosetError("homology_character: homology is not concentrated in top degree");
  } catch (const GuardExceeded&) {
    out.concentration_checked = false;
  }
  const ClassFunction lef = lefschetz_character(a);
  out.character = ClassFunction(a.degree());
  const int sign = out.degree % 2 ? -1 : 1;
  for (const auto& [lambda, v] : lef.values()) out.character.set(lambda, v * sign);
  return out;
}

// ------------------------------------------------------------------ suites

namespace {

using nlohmann::json;

std::string str(const SymFunc& f) { return f.to_string(); }

Integer identity_value(const ClassFunction& chi) {
  const Rational v = chi(Partition(std::vector<int>(static_cast<std::size_t>(chi.degree()), 1)));
  return boost::multiprecision::numerator(v);
}

json schur_json(const SchurDecomposition& d) {
  json out = json::object();
  for (const auto& [lambda, m] : d.multiplicities) out[lambda.to_string()] = to_string(m);
  return out;
}

// Homology character as a Frobenius characteristic plus witness data.
struct ChResult {
  SymFunc ch;
  HomologyCharacter hc;
};

// Also records the Euler-Poincare comparison for the poset, once per label.
ChResult homology_ch(const PosetAction& a, const SuiteConfig& c, Report& r, const std::string& label,
                     const json& params) {
  HomologyCharacter hc = homology_character(a, c.simplex_limit());
  const std::string name = label + " euler-poincare";
  const bool seen =
      std::any_of(r.cases.begin(), r.cases.end(), [&](const CaseResult& cr) { return cr.name == name; });
  if (hc.betti && !seen)
    r.add(name, params, to_string(mobius_of_hat(a.poset())), to_string(hc.betti->euler_characteristic()));
  return {frobenius(hc.character), std::move(hc)};
}

json ch_witness(const ChResult& r) {
  const SchurDecomposition d = schur_decompose(r.ch);
  return {{"dimension", identity_value(r.hc.character).str()},
          {"homology_degree", r.hc.degree},
          {"concentration_checked", r.hc.concentration_checked},
          {"schur", schur_json(d)},
          {"schur_nonnegative_integral", d.integral && d.nonnegative}};
}

// Sum of x_{w_1} ... x_{w_n} over the given words.
QSymExpansion word_expansion(const std::vector<std::vector<int>>& words, int n, int m) {
  QSymExpansion out(n, m);
  for (const auto& w : words) {
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (int letter : w) ++exps[static_cast<std::size_t>(letter - 1)];
    out.add(exps, 1);
  }
  return out;
}

SymFunc sum_omega_q(int n, bool derangements) {
  SymFunc out(n);
  for (int j = 0; j < n; ++j) out += omega(derangements ? q_eulerian_sym(n, j, 0) : q_eulerian_sym(n, j));
  return out;
}

Report thm15(const SuiteConfig& c) {
  Report r{"thm1.5", "ch H~_{n-2}(I_j(B_n)) = omega Q_{n,j}; dimension a_{n,j}; Schur multiplicities are nonnegative integers",
           "n-2", {}};
  for (int n = 1; n <= c.n_max.value_or(5); ++n)
    for (int j = 0; j < n; ++j) {
      const json params{{"n", n}, {"j", j}};
      const std::string name = case_key(params);
      run_guarded(r, name, params, [&] {
        const ChResult res = homology_ch(boolean_ideal_action(n, j), c, r, name, params);
        const json w = ch_witness(res);
        r.add(name, params, str(res.ch), str(omega(q_eulerian_sym(n, j))), w);
        r.add(name + " dim", params, w["dimension"].get<std::string>(), eulerian_number(n, j).str());
        r.add(name + " schur", params, w["schur_nonnegative_integral"].get<bool>() ? "nonnegative integral" : "other",
              "nonnegative integral", w["schur"]);
      });
    }
  return r;
}

Report cor16(const SuiteConfig& c) {
  Report r{"cor1.6", "ch H~_{n-1}(B_n^- * C_n) = sum_j omega Q_{n,j,0}", "n-1", {}};
  for (int n = 1; n <= c.n_max.value_or(5); ++n) {
    const json params{{"n", n}};
    const std::string name = case_key(params);
    run_guarded(r, name, params, [&] {
      const ChResult res = homology_ch(jonsson_action(n), c, r, name, params);
      const json w = ch_witness(res);
      r.add(name, params, str(res.ch), str(sum_omega_q(n, true)), w);
      r.add(name + " dim", params, w["dimension"].get<std::string>(), d_count(n).str());
      r.add(name + " schur", params, w["schur_nonnegative_integral"].get<bool>() ? "nonnegative integral" : "other",
            "nonnegative integral", w["schur"]);
    });
  }
  return r;
}

Report cor52(const SuiteConfig& c) {
  Report r{"cor5.2",
           "(sum_n ch H~_{n-1}(B_n^- * C_n) z^n) * (1 - sum_{i>=2} (i-1) e_i z^i) = 1, checked on the homology side and "
           "with sum_j omega Q_{n,j,0} in place of the homology", "n-1", {}};
  const int nmax = c.n_max.value_or(5);
  std::vector<SymFunc> series{SymFunc::one()};
  for (int n = 1; n <= nmax; ++n) {
    const json params{{"n", n}};
    const std::string name = case_key(params);
    try {
      series.push_back(homology_ch(jonsson_action(n), c, r, name, params).ch);
    } catch (const GuardExceeded& e) {
      r.skip(name, params, e.what());
      break;
    }
    SymFunc coeff = series[static_cast<std::size_t>(n)];
    for (int i = 2; i <= n; ++i) coeff -= SymFunc::e(i) * series[static_cast<std::size_t>(n - i)] * Rational(i - 1);
    r.add(name, params, str(coeff), "0", {{"ch", str(series.back())}});
  }
  if (nmax > 0) {
    const int m = c.variables.value_or(nmax);
    const SeriesCheck s = series_identity_check("cor5.2", nmax, m);
    const json params{{"degree_cap", nmax}, {"variables", m}};
    r.add("sum_j omega Q_{n,j,0} side", params, s.pass ? "equal" : s.first_failure, "equal",
          {{"coefficients_checked", s.coefficients_checked}});
  }
  return r;
}

Report cor54(const SuiteConfig& c) {
  Report r{"cor5.4", "ch H~_{n-2}(I_j(B_n)) = sum over W_{n,j} of x_w, in n variables", "n-2", {}};
  for (int n = 1; n <= c.n_max.value_or(4); ++n)
    for (int j = 0; j < n; ++j) {
      const int m = c.variables.value_or(n);
      const json params{{"n", n}, {"j", j}, {"m", m}};
      const std::string name = case_key(params);
      run_guarded(r, name, params, [&] {
        const SymFunc lhs = homology_ch(boolean_ideal_action(n, j), c, r, name, params).ch.restrict_variables(m);
        const QSymExpansion words = word_expansion(words_W(n, j, m), n, m);
        std::string witness;
        if (!words.is_symmetric(&witness)) {
          r.add(name, params, str(lhs), "not symmetric", {{"words", witness}});
          return;
        }
        r.add(name, params, str(lhs), str(to_monomial_basis(words)), {{"word_count", words_W(n, j, m).size()}});
      });
    }
  return r;
}

Report cor56(const SuiteConfig& c) {
  Report r{"cor5.6", "ch H~_{n-1}(B_n^- * C_n) = sum over multiset derangements D of x^D, in n variables", "n-1",
           {}};
  for (int n = 1; n <= c.n_max.value_or(4); ++n) {
    const int m = c.variables.value_or(n);
    const json params{{"n", n}, {"m", m}};
    const std::string name = case_key(params);
    run_guarded(r, name, params, [&] {
      const SymFunc lhs = homology_ch(jonsson_action(n), c, r, name, params).ch.restrict_variables(m);
      QSymExpansion md(n, m);
      std::size_t total = 0;
      for (const auto& content : multisets(n, m)) {
        const auto ds = multiset_derangements(content);
        if (ds.empty()) continue;
        std::vector<int> exps(static_cast<std::size_t>(m), 0);
        for (int letter : content) ++exps[static_cast<std::size_t>(letter - 1)];
        md.add(exps, Integer(ds.size()));
        total += ds.size();
      }
      std::string witness;
      const std::string rhs = md.is_symmetric(&witness) ? str(to_monomial_basis(md)) : "not symmetric: " + witness;
      r.add(name, params, str(lhs), rhs, {{"multiset_derangements", total}});
    });
  }
  return r;
}

Report tree_equivariant(const SuiteConfig& c) {
  Report r{"tree-equivariant", "ch H~_{n-1}((B_n * T_{t,n})^-) = t sum_j omega Q_{n,j} t^j", "n-1", {}};
  for (int n = 1; n <= c.n_max.value_or(4); ++n)
    for (int t : c.t_values) {
      const json params{{"n", n}, {"t", t}};
      const std::string name = case_key(params);
      run_guarded(r, name, params, [&] {
        const ChResult res = homology_ch(tree_action(n, t), c, r, name, params);
        SymFunc rhs(n);
        Integer tp = t;
        for (int j = 0; j < n; ++j) {
          rhs += omega(q_eulerian_sym(n, j)) * Rational(tp);
          tp *= t;
        }
        const json w = ch_witness(res);
        r.add(name, params, str(res.ch), str(rhs), w);
        r.add(name + " schur", params, w["schur_nonnegative_integral"].get<bool>() ? "nonnegative integral" : "other",
              "nonnegative integral", w["schur"]);
      });
    }
  return r;
}

Report tree_lemma_equivariant(const SuiteConfig& c) {
  Report r{"tree-lemma-equivariant",
           "sum_j t^j L(I_{j-1}(B_n)) = -L((B_n^* * T_{t,n})^-); homology form sum_j t^j ch H~_{n-2}(I_{j-1}(B_n)) = ch "
           "H~_{n-1}((B_n^* * T_{t,n})^-)",
           "n-2 (ideals), n-1 (tree product)",
           {}};
  for (int n = 1; n <= c.n_max.value_or(4); ++n)
    for (int t : c.t_values) {
      const json params{{"n", n}, {"t", t}};
      const std::string name = case_key(params);
      run_guarded(r, name, params, [&] {
        ClassFunction lef_sum(n);
        SymFunc hom_sum(n);
        Integer tp = 1;
        for (int j = 1; j <= n; ++j) {
          tp *= t;
          const PosetAction ideal = boolean_ideal_action(n, j - 1);
          const ClassFunction lef = lefschetz_character(ideal);
          for (const auto& [lambda, v] : lef.values())
            lef_sum.set(lambda, lef_sum(lambda) + v * Rational(tp));
          hom_sum += homology_ch(ideal, c, r, "n=" + std::to_string(n) + " I_" + std::to_string(j - 1), {{"n", n}, {"j", j - 1}}).ch * Rational(tp);
        }
        const PosetAction tree = tree_action(n, t, true);
        const SymFunc tree_lef = frobenius(lefschetz_character(tree));
        r.add(name + " lefschetz", params, str(frobenius(lef_sum)), str(-tree_lef));
        r.add(name + " homology", params, str(hom_sum), str(homology_ch(tree, c, r, name + " dual tree", params).ch));
      });
    }
  return r;
}

Report sundaram(const SuiteConfig& c) {
  Report r{"sundaram",
           "ch H~_{n-1}(B_n^- * C_n) = sum_m (-1)^{n-m} (sum_j ch H~_{m-2}(I_j(B_m))) h_{n-m}, with the m = 0 term "
           "taken as 1",
           "n-1 (B_n^- * C_n), m-2 (ideals)",
           {}};
  const int nmax = c.n_max.value_or(4);
  std::vector<SymFunc> ideal_sums{SymFunc::one()};
  for (int n = 1; n <= nmax; ++n) {
    const json params{{"n", n}};
    const std::string name = case_key(params);
    try {
      SymFunc s(n);
      for (int j = 0; j < n; ++j) s += homology_ch(boolean_ideal_action(n, j), c, r, "I_j(B_n) n=" + std::to_string(n) + " j=" + std::to_string(j), {{"n", n}, {"j", j}}).ch;
      ideal_sums.push_back(s);
      SymFunc rhs(n);
      for (int m = 0; m <= n; ++m)
        rhs += ideal_sums[static_cast<std::size_t>(m)] * SymFunc::h(n - m) * Rational((n - m) % 2 ? -1 : 1);
      r.add(name, params, str(homology_ch(jonsson_action(n), c, r, name, params).ch), str(rhs));
    } catch (const GuardExceeded& e) {
      r.skip(name, params, e.what());
      break;
    }
  }
  return r;
}

Report g_uniform(const SuiteConfig& c) {
  Report r{"g-uniform",
           "sum_k [k+1]_t h_k L_{n-k}(t) = -h_n, L_m(t) = ch L((B_m * T_{t,m})^-), L_0 = -1", "Lefschetz (all degrees)",
           {}};
  const int nmax = c.n_max.value_or(5);
  for (int t : c.t_values) {
    std::vector<SymFunc> lef{SymFunc::one() * Rational(-1)};
    for (int n = 1; n <= nmax; ++n) {
      const json params{{"n", n}, {"t", t}};
      const std::string name = case_key(params);
      lef.push_back(frobenius(lefschetz_character(tree_action(n, t))));
      SymFunc lhs(n);
      for (int k = 0; k <= n; ++k) {
        const Integer weight = q_integer(k + 1, "t").evaluate_integer({{"t", t}});
        lhs += SymFunc::h(k) * lef[static_cast<std::size_t>(n - k)] * Rational(weight);
      }
      r.add(name, params, str(lhs), str(-SymFunc::h(n)));
    }
  }
  return r;
}

}  // namespace

std::vector<std::string> equivariant_suites() {
  return {"thm1.5", "cor1.6", "cor5.2", "cor5.4", "cor5.6", "tree-equivariant", "tree-lemma-equivariant",
          "sundaram", "g-uniform"};
}

Report verify_equivariant(const SuiteConfig& c) {
  if (c.suite == "thm1.5") return thm15(c);
  if (c.suite == "cor1.6") return cor16(c);
  if (c.suite == "cor5.2") return cor52(c);
  if (c.suite == "cor5.4") return cor54(c);
  if (c.suite == "cor5.6") return cor56(c);
  if (c.suite == "tree-equivariant") return tree_equivariant(c);
  if (c.suite == "tree-lemma-equivariant") return tree_lemma_equivariant(c);
  if (c.suite == "sundaram") return sundaram(c);
  if (c.suite == "g-uniform") return g_uniform(c);
  throw std::invalid_argument("unknown equivariant suite '" + c.suite + "'");
}

}  // namespace rees
