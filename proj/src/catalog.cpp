#include "rees/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rees {

Poset chain(int n) {
  if (n < 0) throw PosetError("chain: n must be nonnegative");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return build_poset(labels, covers);
}

std::string subset_label(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Poset boolean_lattice(int n) {
  if (n < 0 || n > 20) throw PosetError("boolean_lattice: n must lie in 0..20");
  const std::uint32_t count = 1u << n;
  std::vector<std::string> labels(count);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::uint32_t s = 0; s < count; ++s) {
    labels[s] = subset_label(s);
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1u)) covers.emplace_back(s, s | (1u << i));
  }
  return build_poset(labels, covers);
}

Poset tary_tree(int t, int n) {
  if (t < 1) throw PosetError("tary_tree: t must be at least 1");
  if (n < 0) throw PosetError("tary_tree: n must be nonnegative");
  std::vector<std::string> labels{"r"};
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> frontier{0};
  for (int depth = 0; depth < n; ++depth) {
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      for (int c = 0; c < t; ++c) {
        next.push_back(labels.size());
        covers.emplace_back(parent, labels.size());
        labels.push_back(labels[parent] + "." + std::to_string(c));
      }
    }
    frontier = std::move(next);
  }
  return build_poset(labels, covers);
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

int mod(long long a, int q) {
  long long r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
  // q is prime and small: Fermat by repeated multiplication.
  long long result = 1, base = mod(a, q);
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<int>(result);
}

char entry_char(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

// Reduced row-echelon form of the span of `rows` over F_q.
std::vector<std::vector<int>> rref(std::vector<std::vector<int>> rows, int q) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const int inv = inverse_mod(rows[r][c], q);
    for (auto& v : rows[r]) v = mod(static_cast<long long>(v) * inv, q);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const int f = rows[o][c];
      for (std::size_t k = 0; k < cols; ++k) rows[o][k] = mod(rows[o][k] - static_cast<long long>(f) * rows[r][k], q);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

void require_prime(int q) {
  if (!is_prime(q)) throw PosetError("field size q = " + std::to_string(q) + " is not prime");
}

}  // namespace

Subspace::Subspace(int ambient_dim, int q, std::vector<std::vector<int>> rref_rows)
    : ambient_(ambient_dim), q_(q), rows_(std::move(rref_rows)) {
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) != ambient_) throw PosetError("Subspace: row length mismatch");
  if (rref(rows_, q_) != rows_) throw PosetError("Subspace: basis is not in reduced row-echelon form");
}

bool Subspace::contains(const std::vector<int>& v) const {
  std::vector<int> w(v);
  for (const auto& row : rows_) {
    const auto pivot = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](int x) { return x != 0; }) - row.begin());
    const int f = w[pivot];
    if (f == 0) continue;
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = mod(w[k] - static_cast<long long>(f) * row[k], q_);
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const std::vector<int>& r) { return contains(r); });
}

std::string Subspace::label() const {
  if (rows_.empty()) return "0";
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += "|";
    for (int v : rows_[i]) out += entry_char(v);
  }
  return out + "]";
}

std::vector<Subspace> enumerate_subspaces(int n, int q, int k) {
  require_prime(q);
  if (q > 36) throw PosetError("enumerate_subspaces: q must be at most 36");
  std::vector<Subspace> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pivots(k);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // Free entries: row i, columns right of its pivot that are not pivots.
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i < k; ++i)
        for (int c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
        for (int i = 0; i < k; ++i) rows[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
        out.emplace_back(n, q, std::move(rows));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      return;
    }
    for (int c = start; c <= n - (k - idx); ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

Integer gaussian_binomial_value(int n, int k, Integer q) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow(q, n - i) - 1;
    den *= pow(q, i + 1) - 1;
  }
  return num / den;
}

namespace {

Poset inclusion_poset(const std::vector<std::vector<Subspace>>& by_dim) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> ids(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d)
    for (const auto& s : by_dim[d]) {
      ids[d].push_back(labels.size());
      labels.push_back(s.label());
    }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t d = 0; d + 1 < by_dim.size(); ++d)
    for (std::size_t a = 0; a < by_dim[d].size(); ++a)
      for (std::size_t b = 0; b < by_dim[d + 1].size(); ++b)
        if (by_dim[d + 1][b].contains(by_dim[d][a])) covers.emplace_back(ids[d][a], ids[d + 1][b]);
  return build_poset(labels, covers);
}

}  // namespace

Poset subspace_lattice(int n, int q, std::size_t max_subspaces) {
  require_prime(q);
  if (n < 0) throw PosetError("subspace_lattice: n must be nonnegative");
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += gaussian_binomial_value(n, k, q);
  if (total > max_subspaces)
    throw GuardExceeded("B_" + std::to_string(n) + "(" + std::to_string(q) + ") has " + total.str() +
                        " subspaces, above the guard of " + std::to_string(max_subspaces));
  std::vector<std::vector<Subspace>> by_dim;
  for (int k = 0; k <= n; ++k) by_dim.push_back(enumerate_subspaces(n, q, k));
  return inclusion_poset(by_dim);
}

Poset crosspolytope_faces(int n) {
  if (n < 1 || n > 12) throw PosetError("crosspolytope_faces: n must lie in 1..12");
  // Encode a face as a vector of signs in {-1, 0, +1}.
  std::vector<std::vector<int>> faces{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& f : faces)
      for (int s : {0, 1, -1}) {
        auto g = f;
        g.push_back(s);
        next.push_back(std::move(g));
      }
    faces = std::move(next);
  }
  auto label = [](const std::vector<int>& f) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      if (!first) out += ",";
      out += (f[i] < 0 ? "-" : "") + std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  };
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> labels;
  for (const auto& f : faces) {
    index.emplace(f, labels.size());
    labels.push_back(label(f));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& f : faces)
    for (int i = 0; i < n; ++i) {
      if (f[i] != 0) continue;
      for (int s : {1, -1}) {
        auto g = f;
        g[i] = s;
        covers.emplace_back(index.at(f), index.at(g));
      }
    }
  return build_poset(labels, covers);
}

int symplectic_form(const std::vector<int>& u, const std::vector<int>& v, int q) {
  if (u.size() != v.size() || u.size() % 2) throw PosetError("symplectic_form: vectors must have equal even length");
  const std::size_t n = u.size() / 2;
  long long acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<long long>(u[i]) * v[n + i] - static_cast<long long>(u[n + i]) * v[i];
  return mod(acc, q);
}

bool is_totally_isotropic(const Subspace& s) {
  const auto& rows = s.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (symplectic_form(rows[a], rows[b], s.field_size()) != 0) return false;
  return true;
}

Poset isotropic_subspace_poset(int n, int q, std::size_t max_subspaces) {
  require_prime(q);
  if (n < 1) throw PosetError("isotropic_subspace_poset: n must be at least 1");
  Integer candidates = 0;
  for (int k = 0; k <= n; ++k) candidates += gaussian_binomial_value(2 * n, k, q);
  if (candidates > max_subspaces)
    throw GuardExceeded("PCP_" + std::to_string(n) + "(" + std::to_string(q) + ") requires scanning " +
                        candidates.str() + " subspaces, above the guard of " + std::to_string(max_subspaces));
  std::vector<std::vector<Subspace>> by_dim;
  for (int k = 0; k <= n; ++k) {
    std::vector<Subspace> iso;
    for (auto& s : enumerate_subspaces(2 * n, q, k))
      if (is_totally_isotropic(s)) iso.push_back(std::move(s));
    by_dim.push_back(std::move(iso));
  }
  return inclusion_poset(by_dim);
}

std::vector<Integer> whitney_numbers(const Poset& p) {
  if (!p.is_ranked()) throw PosetError("whitney_numbers: poset is not ranked");
  std::vector<Integer> w(static_cast<std::size_t>(std::max(p.length() + 1, 0)), 0);
  for (std::size_t i = 0; i < p.size(); ++i) w[p.rank(i)] += 1;
  return w;
}

}  // namespace rees
