#include "rees/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "rees/permstat.hpp"

namespace rees {

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
  for (int v : parts) {
    if (v < 0) throw std::invalid_argument("negative part in partition");
    if (v > 0) parts_.push_back(v);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int v : parts_) weight_ += v;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cur.size() || v <= 0) throw std::invalid_argument("bad partition '" + text + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("partition parts must be weakly decreasing: '" + text + "'");
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int i = 1; !parts_.empty() && i <= parts_[0]; ++i) {
    int c = 0;
    for (int v : parts_) c += v >= i;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

Integer Partition::z() const {
  Integer r = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    const int mult = static_cast<int>(j - i);
    for (int k = 0; k < mult; ++k) r *= parts_[i];
    r *= factorial(mult);
    i = j;
  }
  return r;
}

Integer Partition::class_size() const { return factorial(weight_) / z(); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Basis parse_basis(const std::string& name) {
  if (name == "m") return Basis::m;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown basis '" + name + "' (expected m, h, e, p or s)");
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

// ------------------------------------------------------- monomial products

namespace {

// Number of pairs (alpha, beta) of exponent vectors with alpha + beta = nu,
// alpha a rearrangement of lambda and beta a rearrangement of mu.
Integer product_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int len = nu.length();
  std::vector<int> alpha(static_cast<std::size_t>(len), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), alpha.begin());
  std::sort(alpha.begin(), alpha.end());
  Integer count = 0;
  std::vector<int> beta(static_cast<std::size_t>(len));
  do {
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      beta[static_cast<std::size_t>(i)] = nu[i] - alpha[static_cast<std::size_t>(i)];
      ok = beta[static_cast<std::size_t>(i)] >= 0;
    }
    if (ok && Partition(beta) == mu) ++count;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return count;
}

}  // namespace

const std::vector<std::pair<Partition, Integer>>& monomial_product(const Partition& lambda,
                                                                   const Partition& mu) {
  using Key = std::pair<Partition, Partition>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<std::vector<std::pair<Partition, Integer>>>> cache;
  const Key key = lambda < mu ? Key{lambda, mu} : Key{mu, lambda};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto result = std::make_unique<std::vector<std::pair<Partition, Integer>>>();
  const int lo = std::max(lambda.length(), mu.length());
  const int hi = lambda.length() + mu.length();
  for (const auto& nu : partitions(lambda.weight() + mu.weight())) {
    if (nu.length() < lo || nu.length() > hi) continue;
    Integer c = product_coefficient(lambda, mu, nu);
    if (c != 0) result->emplace_back(nu, std::move(c));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(result));
  return *it->second;
}

// ----------------------------------------------------------------- SymFunc

SymFunc::SymFunc(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

SymFunc SymFunc::one() {
  SymFunc f(0);
  f.add(Partition(), 1);
  return f;
}

SymFunc SymFunc::monomial(const Partition& lambda) {
  SymFunc f(lambda.weight());
  f.add(lambda, 1);
  return f;
}

SymFunc SymFunc::h(int n) {
  SymFunc f(n);
  for (const auto& lambda : partitions(n)) f.add(lambda, 1);
  return f;
}

SymFunc SymFunc::e(int n) {
  return monomial(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

SymFunc SymFunc::p(int n) {
  if (n == 0) return one();
  return monomial(Partition({n}));
}

SymFunc SymFunc::h(const Partition& lambda) {
  SymFunc f = one();
  for (int v : lambda.parts()) f = f * h(v);
  return f;
}

SymFunc SymFunc::e(const Partition& lambda) {
  SymFunc f = one();
  for (int v : lambda.parts()) f = f * e(v);
  return f;
}

SymFunc SymFunc::p(const Partition& lambda) {
  SymFunc f = one();
  for (int v : lambda.parts()) f = f * p(v);
  return f;
}

SymFunc SymFunc::schur(const Partition& lambda) { return frobenius(ClassFunction::irreducible(lambda)); }

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
  if (lambda.weight() != degree_)
    throw std::invalid_argument("partition " + lambda.to_string() + " has the wrong weight for degree " +
                                std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SymFunc SymFunc::restrict_variables(int m) const {
  SymFunc out(degree_);
  for (const auto& [lambda, c] : coeffs_)
    if (lambda.length() <= m) out.coeffs_.emplace(lambda, c);
  return out;
}

SymFunc SymFunc::operator-() const {
  SymFunc out = *this;
  for (auto& [lambda, c] : out.coeffs_) c = -c;
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw std::invalid_argument("adding symmetric functions of different degrees");
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, v] : coeffs_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc out(a.degree_ + b.degree_);
  for (const auto& [lambda, ca] : a.coeffs_)
    for (const auto& [mu, cb] : b.coeffs_)
      for (const auto& [nu, k] : monomial_product(lambda, mu)) out.add(nu, ca * cb * Rational(k));
  return out;
}

namespace {

std::string format_expansion(const std::map<Partition, Rational>& coeffs, Basis b) {
  if (coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  // Print in the conventional order: [n] first.
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) s += to_string(c) + "*";
    s += basis_name(b) + it->first.to_string();
    first = false;
  }
  return s;
}

}  // namespace

std::string SymFunc::to_string(Basis b) const { return format_expansion(expand(*this, b), b); }

nlohmann::json SymFunc::to_json(Basis b) const {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [lambda, c] : expand(*this, b)) coeffs[lambda.to_string()] = rees::to_string(c);
  return {{"degree", degree_}, {"basis", basis_name(b)}, {"coeffs", coeffs}};
}

SymFunc SymFunc::from_json(const nlohmann::json& j) {
  const int degree = j.at("degree").get<int>();
  const Basis b = parse_basis(j.value("basis", std::string("m")));
  std::map<Partition, Rational> coeffs;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    Partition lambda = Partition::parse(key);
    if (lambda.weight() != degree) throw std::invalid_argument("partition " + key + " has the wrong weight");
    coeffs[lambda] += parse_rational(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return from_basis(degree, coeffs, b);
}

// ------------------------------------------------------------ basis change

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular basis transition matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

SymFunc basis_element(const Partition& lambda, Basis b) {
  switch (b) {
    case Basis::m: return SymFunc::monomial(lambda);
    case Basis::h: return SymFunc::h(lambda);
    case Basis::e: return SymFunc::e(lambda);
    case Basis::p: return SymFunc::p(lambda);
    case Basis::s: return SymFunc::schur(lambda);
  }
  throw std::logic_error("unreachable");
}

std::unique_ptr<BasisMatrix> build_basis_matrix(int n, Basis b) {
  auto out = std::make_unique<BasisMatrix>();
  out->degree = n;
  out->basis = b;
  out->index = partitions(n);
  const std::size_t size = out->index.size();
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < size; ++i) pos[out->index[i]] = i;
  out->to_monomial.assign(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    const SymFunc f = basis_element(out->index[i], b);
    for (const auto& [mu, c] : f.coeffs()) out->to_monomial[i][pos.at(mu)] = c;
  }
  out->from_monomial = invert(out->to_monomial);
  return out;
}

}  // namespace

const BasisMatrix& basis_matrix(int n, Basis b) {
  using Key = std::pair<int, Basis>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<BasisMatrix>> cache;
  const Key key{n, b};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  // Built outside the lock: the Schur matrix needs the power-sum one.
  auto built = build_basis_matrix(n, b);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(built));
  return *it->second;
}

std::map<Partition, Rational> expand(const SymFunc& f, Basis b) {
  if (b == Basis::m) return f.coeffs();
  const BasisMatrix& bm = basis_matrix(f.degree(), b);
  std::map<Partition, Rational> out;
  for (std::size_t i = 0; i < bm.index.size(); ++i) {
    const Rational c = f.coefficient(bm.index[i]);
    if (c == 0) continue;
    for (std::size_t k = 0; k < bm.index.size(); ++k) {
      if (bm.from_monomial[i][k] == 0) continue;
      out[bm.index[k]] += c * bm.from_monomial[i][k];
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymFunc from_basis(int degree, const std::map<Partition, Rational>& coeffs, Basis b) {
  SymFunc out(degree);
  if (b == Basis::m) {
    for (const auto& [lambda, c] : coeffs) out.add(lambda, c);
    return out;
  }
  const BasisMatrix& bm = basis_matrix(degree, b);
  std::map<Partition, std::size_t> pos;
  for (std::size_t i = 0; i < bm.index.size(); ++i) pos[bm.index[i]] = i;
  for (const auto& [lambda, c] : coeffs) {
    auto it = pos.find(lambda);
    if (it == pos.end()) throw std::invalid_argument("partition " + lambda.to_string() + " has the wrong weight");
    for (std::size_t k = 0; k < bm.index.size(); ++k)
      if (bm.to_monomial[it->second][k] != 0) out.add(bm.index[k], c * bm.to_monomial[it->second][k]);
  }
  return out;
}

SymFunc omega(const SymFunc& f) {
  auto coeffs = expand(f, Basis::p);
  for (auto& [lambda, c] : coeffs)
    if ((f.degree() - lambda.length()) % 2) c = -c;
  return from_basis(f.degree(), coeffs, Basis::p);
}

// ----------------------------------------------------------- QSymExpansion

QSymExpansion::QSymExpansion(int degree, int variables) : degree_(degree), variables_(variables) {
  if (degree < 0 || variables < 0) throw std::invalid_argument("negative degree or variable count");
}

Integer QSymExpansion::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QSymExpansion::add(const std::vector<int>& exponents, const Integer& c) {
  if (static_cast<int>(exponents.size()) != variables_)
    throw std::invalid_argument("exponent vector has the wrong length");
  int total = 0;
  for (int v : exponents) total += v;
  if (total != degree_) throw std::invalid_argument("monomial has the wrong degree");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

std::string monomial_name(const std::vector<int>& exponents) {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
  }
  return s.empty() ? "1" : s;
}

// Number of distinct rearrangements of `exponents`.
Integer orbit_size(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end());
  Integer r = factorial(static_cast<int>(exponents.size()));
  std::size_t i = 0;
  while (i < exponents.size()) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    r /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

std::vector<int> sorted_exponents(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
  return exponents;
}

}  // namespace

bool QSymExpansion::is_symmetric(std::string* witness) const {
  std::map<std::vector<int>, Integer> seen;
  for (const auto& [exps, c] : terms_) {
    const auto key = sorted_exponents(exps);
    const Integer ref = coefficient(key);
    if (ref != c) {
      if (witness)
        *witness = monomial_name(exps) + " has coefficient " + c.str() + " but " + monomial_name(key) + " has " +
                   ref.str();
      return false;
    }
    seen[key] += 1;
  }
  for (const auto& [key, count] : seen) {
    if (count == orbit_size(key)) continue;
    if (witness) {
      auto missing = key;
      std::sort(missing.begin(), missing.end());
      while (terms_.count(missing)) std::next_permutation(missing.begin(), missing.end());
      *witness = monomial_name(key) + " has coefficient " + coefficient(key).str() + " but " +
                 monomial_name(missing) + " has 0";
    }
    return false;
  }
  return true;
}

Polynomial QSymExpansion::principal_specialization(const std::string& var) const {
  Polynomial out;
  for (const auto& [exps, c] : terms_) {
    int e = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) e += static_cast<int>(i) * exps[i];
    out.add_monomial({{var, e}}, c);
  }
  return out;
}

QSymExpansion& QSymExpansion::operator+=(const QSymExpansion& other) {
  if (degree_ != other.degree_ || variables_ != other.variables_)
    throw std::invalid_argument("adding expansions of different shapes");
  for (const auto& [exps, c] : other.terms_) add(exps, c);
  return *this;
}

namespace {

void f_words(int pos, int prev, const std::vector<char>& strict, std::vector<int>& exps, QSymExpansion& out) {
  const int n = static_cast<int>(strict.size());
  if (pos == n) {
    out.add(exps, 1);
    return;
  }
  // Position pos (0-based) must be below position pos-1, strictly if pos is
  // in S (1-based index pos).
  const int top = pos == 0 ? static_cast<int>(exps.size()) : (strict[static_cast<std::size_t>(pos)] ? prev - 1 : prev);
  for (int v = 1; v <= top; ++v) {
    ++exps[static_cast<std::size_t>(v - 1)];
    f_words(pos + 1, v, strict, exps, out);
    --exps[static_cast<std::size_t>(v - 1)];
  }
}

}  // namespace

QSymExpansion f_qsym(const std::vector<int>& S, int n, int m) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (m < n) throw std::invalid_argument("f_qsym needs at least n variables");
  // strict[i] refers to the step from position i to i+1 (1-based i), stored at index i.
  std::vector<char> strict(static_cast<std::size_t>(n), 0);
  for (int s : S) {
    if (s < 1 || s > n - 1) throw std::invalid_argument("descent set must lie in [n-1]");
    strict[static_cast<std::size_t>(s)] = 1;
  }
  QSymExpansion out(n, m);
  std::vector<int> exps(static_cast<std::size_t>(m), 0);
  f_words(0, m, strict, exps, out);
  return out;
}

namespace {

// Counts of permutations by Exd set, restricted by exc and (optionally) fix.
std::map<std::vector<int>, int> exd_histogram(int n, int j, int k) {
  std::map<std::vector<int>, int> hist;
  for_each_permutation(n, [&](const Permutation& s) {
    if (excedances(s) != j) return;
    if (k >= 0 && fixed_points(s) != k) return;
    ++hist[exd_set(s)];
  });
  return hist;
}

QSymExpansion q_eulerian_impl(int n, int j, int k, int m) {
  if (n < 0 || j < 0 || j > std::max(n - 1, 0) || k > n) throw std::invalid_argument("Q index out of range");
  if (m < n) throw std::invalid_argument("Q needs at least n variables");
  QSymExpansion out(n, m);
  if (n == 0) {
    if (k <= 0) out.add(std::vector<int>(static_cast<std::size_t>(m), 0), 1);
    return out;
  }
  for (const auto& [S, count] : exd_histogram(n, j, k)) {
    QSymExpansion f = f_qsym(S, n, m);
    for (const auto& [exps, c] : f.terms()) out.add(exps, c * count);
  }
  return out;
}

}  // namespace

QSymExpansion q_eulerian_qsym(int n, int j, int k, int m) {
  if (k < 0) throw std::invalid_argument("Q index out of range");
  return q_eulerian_impl(n, j, k, m);
}

QSymExpansion q_eulerian_qsym(int n, int j, int m) { return q_eulerian_impl(n, j, -1, m); }

SymFunc to_monomial_basis(const QSymExpansion& f) {
  if (f.variables() < f.degree())
    throw std::invalid_argument("need at least as many variables as the degree");
  std::string witness;
  if (!f.is_symmetric(&witness)) throw std::domain_error("not symmetric: " + witness);
  SymFunc out(f.degree());
  for (const auto& [exps, c] : f.terms()) {
    if (!std::is_sorted(exps.begin(), exps.end(), std::greater<>())) continue;
    out.add(Partition(exps), Rational(c));
  }
  return out;
}

SymFunc q_eulerian_sym(int n, int j, int k) { return to_monomial_basis(q_eulerian_qsym(n, j, k, n)); }

SymFunc q_eulerian_sym(int n, int j) { return to_monomial_basis(q_eulerian_qsym(n, j, n)); }

// ------------------------------------------------------ characters of S_n

namespace {

// Beta-set of lambda with `len` beads.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta;
  for (int i = 0; i < len; ++i) {
    const int part = i < lambda.length() ? lambda[i] : 0;
    beta.push_back(part + len - 1 - i);
  }
  return beta;
}

Integer mn_rec(std::vector<int>& beads, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  const int r = mu[idx];
  Integer total = 0;
  for (std::size_t b = 0; b < beads.size(); ++b) {
    const int from = beads[b];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
    int between = 0;
    for (int v : beads) between += v > to && v < from;
    beads[b] = to;
    Integer sub = mn_rec(beads, mu, idx + 1);
    beads[b] = from;
    total += between % 2 ? -sub : sub;
  }
  return total;
}

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw std::invalid_argument("character arguments of different weight");
  std::vector<int> beads = beta_set(lambda, lambda.length());
  return mn_rec(beads, mu.parts(), 0);
}

ClassFunction::ClassFunction(int degree) : degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f(n);
  for (const auto& lambda : partitions(n)) f.set(lambda, 1);
  return f;
}

ClassFunction ClassFunction::sign(int n) {
  ClassFunction f(n);
  for (const auto& lambda : partitions(n)) f.set(lambda, (n - lambda.length()) % 2 ? -1 : 1);
  return f;
}

ClassFunction ClassFunction::regular(int n) {
  ClassFunction f(n);
  f.set(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Rational(factorial(n)));
  return f;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
  ClassFunction f(lambda.weight());
  for (const auto& mu : partitions(lambda.weight())) f.set(mu, Rational(mn_character(lambda, mu)));
  return f;
}

Rational ClassFunction::operator()(const Partition& cycle_type) const {
  auto it = values_.find(cycle_type);
  return it == values_.end() ? Rational(0) : it->second;
}

void ClassFunction::set(const Partition& cycle_type, const Rational& value) {
  if (cycle_type.weight() != degree_) throw std::invalid_argument("cycle type has the wrong weight");
  if (value == 0) {
    values_.erase(cycle_type);
  } else {
    values_[cycle_type] = value;
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (degree_ != other.degree_) throw std::invalid_argument("class functions of different degrees");
  for (const auto& [lambda, v] : other.values_) set(lambda, (*this)(lambda) + v);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (degree_ != other.degree_) throw std::invalid_argument("class functions of different degrees");
  for (const auto& [lambda, v] : other.values_) set(lambda, (*this)(lambda) - v);
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("class functions of different degrees");
  ClassFunction out(a.degree_);
  for (const auto& [lambda, v] : a.values_) out.set(lambda, v * b(lambda));
  return out;
}

Rational ClassFunction::inner(const ClassFunction& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("class functions of different degrees");
  Rational total = 0;
  for (const auto& [lambda, v] : values_) total += v * other(lambda) / Rational(lambda.z());
  return total;
}

nlohmann::json ClassFunction::to_json() const {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& lambda : partitions(degree_)) values[lambda.to_string()] = rees::to_string((*this)(lambda));
  return {{"degree", degree_}, {"values", values}};
}

SymFunc frobenius(const ClassFunction& chi) {
  std::map<Partition, Rational> coeffs;
  for (const auto& [lambda, v] : chi.values()) coeffs[lambda] = v / Rational(lambda.z());
  return from_basis(chi.degree(), coeffs, Basis::p);
}

ClassFunction class_function_of(const SymFunc& f) {
  ClassFunction chi(f.degree());
  for (const auto& [lambda, c] : expand(f, Basis::p)) chi.set(lambda, c * Rational(lambda.z()));
  return chi;
}

SchurDecomposition schur_decompose(const SymFunc& f) {
  SchurDecomposition out;
  const auto pcoeffs = expand(f, Basis::p);
  for (const auto& lambda : partitions(f.degree())) {
    Rational mult = 0;
    for (const auto& [mu, c] : pcoeffs) mult += c * Rational(mn_character(lambda, mu));
    if (mult == 0) continue;
    if (boost::multiprecision::denominator(mult) != 1) out.integral = false;
    if (mult < 0) out.nonnegative = false;
    out.multiplicities[lambda] = mult;
  }
  return out;
}

// ----------------------------------------------------------------- SymPoly

SymPoly SymPoly::from(const SymFunc& f, const Polynomial& weight) {
  SymPoly out(f.degree());
  for (const auto& [lambda, c] : f.coeffs()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::domain_error("non-integral coefficient of m" + lambda.to_string());
    out.add(lambda, weight * Polynomial(boost::multiprecision::numerator(c)));
  }
  return out;
}

void SymPoly::add(const Partition& lambda, const Polynomial& c) {
  if (lambda.weight() != degree_) throw std::invalid_argument("partition has the wrong weight");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw std::invalid_argument("adding symmetric functions of different degrees");
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw std::invalid_argument("adding symmetric functions of different degrees");
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
  return *this;
}

SymPoly SymPoly::multiply(const SymPoly& a, const SymPoly& b, int max_parts) {
  SymPoly out(a.degree_ + b.degree_);
  for (const auto& [lambda, ca] : a.coeffs_) {
    if (lambda.length() > max_parts) continue;
    for (const auto& [mu, cb] : b.coeffs_) {
      if (mu.length() > max_parts) continue;
      const Polynomial prod = ca * cb;
      for (const auto& [nu, k] : monomial_product(lambda, mu))
        if (nu.length() <= max_parts) out.add(nu, prod * Polynomial(k));
    }
  }
  return out;
}

std::string SymPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*m" + it->first.to_string();
  }
  return s;
}

SymSeries series_multiply(const SymSeries& a, const SymSeries& b, int degree_cap, int max_parts) {
  SymSeries out;
  for (int n = 0; n <= degree_cap; ++n) {
    SymPoly c(n);
    for (int i = 0; i <= n; ++i) {
      if (i >= static_cast<int>(a.size()) || n - i >= static_cast<int>(b.size())) continue;
      c += SymPoly::multiply(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(n - i)], max_parts);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// -------------------------------------------------------- series identities

namespace {

Polynomial var(const std::string& name, int power = 1) { return Polynomial::variable(name, power); }

SymPoly restricted(const SymFunc& f, int m, const Polynomial& weight = Polynomial(1)) {
  return SymPoly::from(f.restrict_variables(m), weight);
}

// sum over n of h_n * weight(n) z^n.
SymSeries h_series(int cap, int m, const std::function<Polynomial(int)>& weight) {
  SymSeries s;
  for (int n = 0; n <= cap; ++n) s.push_back(restricted(SymFunc::h(n), m, weight(n)));
  return s;
}

SymSeries e_series(int cap, int m, const std::function<Polynomial(int)>& weight) {
  SymSeries s;
  for (int n = 0; n <= cap; ++n) s.push_back(restricted(SymFunc::e(n), m, weight(n)));
  return s;
}

SymSeries fixed_point_q_series(int cap, int m) {
  SymSeries s;
  for (int n = 0; n <= cap; ++n) {
    SymPoly c(n);
    for (int j = 0; j <= std::max(n - 1, 0); ++j)
      for (int k = 0; k <= n; ++k) c += restricted(q_eulerian_sym(n, j, k), m, var("t", j) * var("r", k));
    s.push_back(std::move(c));
  }
  return s;
}

SeriesCheck compare(const std::string& id, int cap, int m, const SymSeries& lhs, const SymSeries& rhs) {
  SeriesCheck out;
  out.identity = id;
  out.degree_cap = cap;
  out.variables = m;
  out.pass = true;
  for (int n = 0; n <= cap; ++n) {
    const SymPoly& a = lhs[static_cast<std::size_t>(n)];
    const SymPoly& b = rhs[static_cast<std::size_t>(n)];
    std::map<Partition, std::pair<Polynomial, Polynomial>> both;
    for (const auto& [lambda, c] : a.coeffs()) both[lambda].first = c;
    for (const auto& [lambda, c] : b.coeffs()) both[lambda].second = c;
    for (const auto& [lambda, pair] : both) {
      ++out.coefficients_checked;
      if (pair.first == pair.second) continue;
      if (out.pass)
        out.first_failure = "z^" + std::to_string(n) + " m" + lambda.to_string() + ": " + pair.first.to_string() +
                            " != " + pair.second.to_string();
      out.pass = false;
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> series_identities() { return {"symgen-1", "symgen-2", "cor5.2", "h-e-inverse"}; }

SeriesCheck series_identity_check(const std::string& identity, int degree_cap, int m) {
  if (degree_cap < 0 || m < 1) throw std::invalid_argument("degree cap and variable count must be positive");
  const Polynomial t = var("t");
  const Polynomial r = var("r");
  auto one_series = [&] {
    SymSeries s;
    s.push_back(SymPoly::from(SymFunc::one()));
    for (int n = 1; n <= degree_cap; ++n) s.emplace_back(n);
    return s;
  };
  if (identity == "symgen-1") {
    // Q(z) * (H(zt) - t H(z)) = (1 - t) H(rz)
    SymSeries q = fixed_point_q_series(degree_cap, m);
    SymSeries den = h_series(degree_cap, m, [&](int n) { return t.pow(n) - t; });
    SymSeries num = h_series(degree_cap, m, [&](int n) { return (Polynomial(1) - t) * r.pow(n); });
    return compare(identity, degree_cap, m, series_multiply(q, den, degree_cap, m), num);
  }
  if (identity == "symgen-2") {
    // Q(z) * (1 - sum_{n>=2} t [n-1]_t h_n z^n) = H(rz)
    SymSeries q = fixed_point_q_series(degree_cap, m);
    SymSeries den = h_series(degree_cap, m, [&](int n) {
      if (n == 0) return Polynomial(1);
      if (n == 1) return Polynomial(0);
      return -(t * q_integer(n - 1, "t"));
    });
    SymSeries num = h_series(degree_cap, m, [&](int n) { return r.pow(n); });
    return compare(identity, degree_cap, m, series_multiply(q, den, degree_cap, m), num);
  }
  if (identity == "cor5.2") {
    // (sum_n sum_j omega Q_{n,j,0} z^n) * (1 - sum_{i>=2} (i-1) e_i z^i) = 1
    SymSeries lhs;
    lhs.push_back(SymPoly::from(SymFunc::one()));
    for (int n = 1; n <= degree_cap; ++n) {
      SymFunc c(n);
      for (int j = 0; j < n; ++j) c += omega(q_eulerian_sym(n, j, 0));
      lhs.push_back(restricted(c, m));
    }
    SymSeries den = e_series(degree_cap, m, [](int n) {
      if (n == 0) return Polynomial(1);
      return Polynomial(-(n - 1));
    });
    return compare(identity, degree_cap, m, series_multiply(lhs, den, degree_cap, m), one_series());
  }
  if (identity == "h-e-inverse") {
    // H(z) E(-z) = 1
    SymSeries h = h_series(degree_cap, m, [](int) { return Polynomial(1); });
    SymSeries e = e_series(degree_cap, m, [](int n) { return Polynomial(n % 2 ? -1 : 1); });
    return compare(identity, degree_cap, m, series_multiply(h, e, degree_cap, m), one_series());
  }
  throw std::invalid_argument("unknown series identity '" + identity + "'");
}

}  // namespace rees
