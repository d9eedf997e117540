#include "rees/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

Polynomial::Polynomial(Integer c) {
  if (c != 0) terms_.emplace(Exponents{}, std::move(c));
}

Polynomial Polynomial::variable(const std::string& name, int power) {
  return monomial({{name, power}}, 1);
}

Polynomial Polynomial::monomial(const std::map<std::string, int>& exponents, Integer coefficient) {
  Polynomial p;
  p.add_monomial(exponents, coefficient);
  return p;
}

void Polynomial::add_monomial(const std::map<std::string, int>& exponents, const Integer& c) {
  if (c == 0) return;
  std::vector<std::string> wanted = vars_;
  for (const auto& [v, e] : exponents)
    if (e != 0 && !std::binary_search(vars_.begin(), vars_.end(), v)) wanted.push_back(v);
  if (wanted.size() != vars_.size()) {
    std::sort(wanted.begin(), wanted.end());
    *this = aligned(wanted);
  }
  Exponents key(vars_.size(), 0);
  for (const auto& [v, e] : exponents) {
    if (e == 0) continue;
    key[std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin()] = e;
  }
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
      normalize();
    }
  }
}

Polynomial Polynomial::aligned(const std::vector<std::string>& vars) const {
  Polynomial out;
  out.vars_ = vars;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  std::vector<char> used(vars_.size(), 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = 1;
  if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  std::map<Exponents, Integer> terms;
  for (auto& [e, c] : terms_) {
    Exponents f;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) f.push_back(e[i]);
    terms.emplace(std::move(f), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

namespace {

std::vector<std::string> union_of(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Integer Polynomial::coefficient(const std::map<std::string, int>& exponents) const {
  Exponents key(vars_.size(), 0);
  for (const auto& [v, e] : exponents) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) {
      if (e != 0) return 0;
      continue;
    }
    key[it - vars_.begin()] = e;
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Integer(0) : it->second;
}

Polynomial Polynomial::coefficient_of(const std::string& var, int power) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return power == 0 ? *this : Polynomial();
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (e[k] == power) {
      Exponents f = e;
      f[k] = 0;
      out.terms_.emplace(std::move(f), c);
    }
  out.normalize();
  return out;
}

int Polynomial::degree(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (terms_.empty()) return 0;
  if (it == vars_.end() || *it != var) return 0;
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

int Polynomial::min_degree(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (terms_.empty()) return 0;
  if (it == vars_.end() || *it != var) return 0;
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  int d = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) d = std::min(d, e[k]);
  return d;
}

Polynomial Polynomial::truncate(const std::string& var, int max_degree) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return max_degree >= 0 ? *this : Polynomial();
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_)
    if (e[k] <= max_degree) out.terms_.emplace(e, c);
  out.normalize();
  return out;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return *this;
  const std::size_t k = static_cast<std::size_t>(it - vars_.begin());
  // The inverse exists only for unit monomials.
  Polynomial inverse;
  bool have_inverse = false;
  if (value.terms_.size() == 1 && (value.terms_.begin()->second == 1 || value.terms_.begin()->second == -1)) {
    std::map<std::string, int> e;
    for (std::size_t i = 0; i < value.vars_.size(); ++i) e[value.vars_[i]] = -value.terms_.begin()->first[i];
    inverse = monomial(e, value.terms_.begin()->second);
    have_inverse = true;
  }
  std::map<int, Polynomial> powers;
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    const int d = e[k];
    if (d < 0 && !have_inverse) throw std::domain_error("substitute: negative power of a non-unit value");
    auto pw = powers.find(d);
    if (pw == powers.end()) pw = powers.emplace(d, d >= 0 ? value.pow(d) : inverse.pow(-d)).first;
    std::map<std::string, int> rest;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != k) rest[vars_[i]] = e[i];
    out += monomial(rest, c) * pw->second;
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("evaluate: no value for variable '" + v + "'");
    values.push_back(it->second);
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = Rational(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i] == 0) throw std::domain_error("evaluate: negative power of zero");
      Rational base = e[i] > 0 ? values[i] : Rational(1) / values[i];
      for (int r = 0; r < std::abs(e[i]); ++r) term *= base;
    }
    total += term;
  }
  return total;
}

Integer Polynomial::evaluate_integer(const std::map<std::string, Integer>& point) const {
  std::map<std::string, Rational> rp;
  for (const auto& [v, x] : point) rp.emplace(v, Rational(x));
  Rational r = evaluate(rp);
  if (denominator(r) != 1) throw std::domain_error("evaluate_integer: value is not an integer");
  return numerator(r);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  if (vars_ != other.vars_) {
    auto vars = union_of(vars_, other.vars_);
    if (vars != vars_) *this = aligned(vars);
    Polynomial o = other.aligned(vars);
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
  } else {
    for (const auto& [e, c] : other.terms_) terms_[e] += c;
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::multiply_truncated(const Polynomial& a, const Polynomial& b,
                                          const std::map<std::string, int>& max_degree) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  auto vars = union_of(a.vars_, b.vars_);
  Polynomial x = a.vars_ == vars ? a : a.aligned(vars);
  Polynomial y = b.vars_ == vars ? b : b.aligned(vars);
  std::vector<std::pair<std::size_t, int>> bounds;
  for (const auto& [v, d] : max_degree) {
    auto it = std::lower_bound(vars.begin(), vars.end(), v);
    if (it != vars.end() && *it == v) bounds.emplace_back(static_cast<std::size_t>(it - vars.begin()), d);
  }
  Polynomial out;
  out.vars_ = vars;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      bool keep = true;
      for (auto [i, d] : bounds) keep = keep && e[i] <= d;
      if (keep) out.terms_[e] += ca * cb;
    }
  out.normalize();
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return Polynomial::multiply_truncated(a, b, {}); }

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  Polynomial result = 1, base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (mag != 1 || constant) out << mag;
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << vars_[i];
      if (e[i] != 1) out << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exponents", e}, {"coefficient", c.str()}});
  return {{"variables", vars_}, {"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  auto vars = j.at("variables").get<std::vector<std::string>>();
  Polynomial out;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != vars.size()) throw std::invalid_argument("polynomial JSON: exponent length mismatch");
    std::map<std::string, int> m;
    for (std::size_t i = 0; i < e.size(); ++i) m[vars[i]] += e[i];
    out.add_monomial(m, Integer(t.at("coefficient").get<std::string>()));
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial q_integer(int n, const std::string& var) {
  Polynomial out;
  for (int i = 0; i < n; ++i) out.add_monomial({{var, i}}, 1);
  return out;
}

Polynomial q_factorial(int n, const std::string& var) {
  Polynomial out = 1;
  for (int i = 2; i <= n; ++i) out *= q_integer(i, var);
  return out;
}

Polynomial q_binomial(int n, int k, const std::string& var) {
  if (k < 0 || n < 0 || k > n) return {};
  // Row-by-row q-Pascal: [m k] = [m-1 k-1] + q^k [m-1 k].
  std::vector<Polynomial> row{Polynomial(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Polynomial> next(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
      Polynomial v;
      if (i >= 1) v += row[static_cast<std::size_t>(i - 1)];
      if (i <= m - 1) v += Polynomial::variable(var, i) * row[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Polynomial q_pochhammer(int n, const std::string& var) {
  Polynomial out = 1;
  for (int i = 1; i <= n; ++i) out *= Polynomial(1) - Polynomial::variable(var, i);
  return out;
}

}  // namespace rees
