#include "rees/permstat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rees {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v])
      throw std::invalid_argument("not a permutation: " + to_string());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

namespace {

// Splits "4,2,1" / "4 2 1" into tokens, or "421" into single characters.
std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  const bool separated = text.find_first_of(", ") != std::string::npos;
  if (separated) {
    std::string cur;
    for (char c : text) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }
  std::string pending;
  for (char c : text) {
    pending += c;
    if (c != '-') {
      out.push_back(pending);
      pending.clear();
    }
  }
  if (!pending.empty()) throw std::invalid_argument("dangling bar in '" + text + "'");
  return out;
}

int parse_letter(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad letter '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad letter '" + s + "'");
  return v;
}

}  // namespace

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  for (const auto& t : tokens(text)) w.push_back(parse_letter(t));
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(w));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> w(a.word_.size());
  for (int i = 1; i <= a.size(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(w));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<char> seen(word_.size(), 0);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(word_[j] - 1)) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  const bool wide = word_.size() > 9;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (wide && i) out << ",";
    out << word_[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int excedances(const Permutation& s) {
  int e = 0;
  for (int i = 1; i <= s.size(); ++i) e += s(i) > i ? 1 : 0;
  return e;
}

int major_index(const Permutation& s) {
  int m = 0;
  for (int i = 1; i < s.size(); ++i) m += s(i) > s(i + 1) ? i : 0;
  return m;
}

int descents(const Permutation& s) {
  int d = 0;
  for (int i = 1; i < s.size(); ++i) d += s(i) > s(i + 1) ? 1 : 0;
  return d;
}

int fixed_points(const Permutation& s) {
  int f = 0;
  for (int i = 1; i <= s.size(); ++i) f += s(i) == i ? 1 : 0;
  return f;
}

PermStats stats(const Permutation& s) {
  PermStats st;
  st.exc = excedances(s);
  st.maj = major_index(s);
  st.comaj = s.size() * (s.size() - 1) / 2 - st.maj;
  st.des = descents(s);
  st.fix = fixed_points(s);
  return st;
}

std::vector<int> exd_set(const Permutation& s) {
  const int n = s.size();
  // Barred letters v sort as v, unbarred letters as v + n.
  auto key = [&](int i) { return s(i) > i ? s(i) : s(i) + n; };
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (key(i) > key(i + 1)) out.push_back(i);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& f, int max_n) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: n must be nonnegative");
  if (n > max_n)
    throw GuardExceeded("enumerating S_" + std::to_string(n) + " exceeds the guard of " + std::to_string(max_n) + "!");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n, int max_n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& s) { out.push_back(s); }, max_n);
  return out;
}

EulerianFlavor parse_flavor(const std::string& name) {
  if (name == "maj-exc") return EulerianFlavor::maj_exc;
  if (name == "comaj-exc") return EulerianFlavor::comaj_exc;
  if (name == "comaj-exc-fix") return EulerianFlavor::comaj_exc_fix;
  if (name == "maj-exc-fix") return EulerianFlavor::maj_exc_fix;
  throw std::invalid_argument("unknown flavor '" + name + "'");
}

std::string flavor_name(EulerianFlavor f) {
  switch (f) {
    case EulerianFlavor::maj_exc: return "maj-exc";
    case EulerianFlavor::comaj_exc: return "comaj-exc";
    case EulerianFlavor::comaj_exc_fix: return "comaj-exc-fix";
    case EulerianFlavor::maj_exc_fix: return "maj-exc-fix";
  }
  return "";
}

Polynomial q_eulerian(int n, EulerianFlavor flavor) {
  Polynomial out;
  for_each_permutation(n, [&](const Permutation& s) {
    const PermStats st = stats(s);
    switch (flavor) {
      case EulerianFlavor::maj_exc: out.add_monomial({{"q", st.maj}, {"t", st.exc}}, 1); break;
      case EulerianFlavor::comaj_exc: out.add_monomial({{"q", st.comaj}, {"t", st.exc}}, 1); break;
      case EulerianFlavor::comaj_exc_fix:
        out.add_monomial({{"q", st.comaj}, {"t", st.exc}, {"r", st.fix}}, 1);
        break;
      case EulerianFlavor::maj_exc_fix: out.add_monomial({{"q", st.maj}, {"t", st.exc}, {"r", st.fix}}, 1); break;
    }
  });
  return out;
}

Polynomial eulerian_polynomial(int n) {
  Polynomial out;
  for_each_permutation(n, [&](const Permutation& s) { out.add_monomial({{"t", descents(s)}}, 1); });
  return out;
}

Integer eulerian_number(int n, int j) { return eulerian_polynomial(n).coefficient({{"t", j}}); }

Polynomial derangement_poly(int n) {
  Polynomial out;
  for_each_permutation(n, [&](const Permutation& s) {
    const PermStats st = stats(s);
    if (st.fix == 0) out.add_monomial({{"q", st.comaj}, {"t", st.exc}}, 1);
  });
  return out;
}

Integer d_count(int n) {
  Integer c = 0;
  for_each_permutation(n, [&](const Permutation& s) {
    if (fixed_points(s) == 0) ++c;
  });
  return c;
}

// ---------------------------------------------------------------------------

BarredPermutation::BarredPermutation(Permutation perm, std::vector<bool> barred)
    : perm_(std::move(perm)), barred_(std::move(barred)) {
  if (static_cast<int>(barred_.size()) != perm_.size())
    throw std::invalid_argument("bar vector length differs from the permutation length");
}

BarredPermutation BarredPermutation::parse(const std::string& text) {
  std::vector<int> w;
  std::vector<bool> bars;
  for (auto t : tokens(text)) {
    const bool bar = !t.empty() && t.front() == '-';
    if (bar) t.erase(t.begin());
    w.push_back(parse_letter(t));
    bars.push_back(bar);
  }
  return BarredPermutation(Permutation(std::move(w)), std::move(bars));
}

bool BarredPermutation::is_bc_derangement() const {
  for (int i = 1; i <= size(); ++i)
    if (perm_(i) == i && !barred(i)) return false;
  return true;
}

std::string BarredPermutation::to_string() const {
  std::ostringstream out;
  const bool wide = size() > 9;
  for (int i = 1; i <= size(); ++i) {
    if (wide && i > 1) out << ",";
    if (barred(i)) out << "-";
    out << perm_(i);
  }
  return out.str();
}

int bnd(const BarredPermutation& s) {
  const int n = s.size();
  std::vector<bool> rearranged_bars;
  for (int v = 1; v <= n; ++v)
    if (s.underlying()(v) == v) rearranged_bars.push_back(s.barred(v));
  for (int i = 1; i <= n; ++i)
    if (s.underlying()(i) != i) rearranged_bars.push_back(s.barred(i));
  int total = 0;
  for (std::size_t k = 0; k < rearranged_bars.size(); ++k)
    if (rearranged_bars[k]) total += static_cast<int>(k + 1);
  return total;
}

std::vector<BarredPermutation> bc_derangements(int n, int max_n) {
  if (n > max_n)
    throw GuardExceeded("enumerating D_" + std::to_string(n) + "^BC exceeds the guard of n = " + std::to_string(max_n));
  std::vector<BarredPermutation> out;
  for_each_permutation(n, [&](const Permutation& s) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> bars(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) bars[static_cast<std::size_t>(i)] = (mask >> i & 1u) != 0;
      BarredPermutation b(s, std::move(bars));
      if (b.is_bc_derangement()) out.push_back(std::move(b));
    }
  });
  return out;
}

Polynomial bc_poly(int n) {
  Polynomial out;
  for (const auto& b : bc_derangements(n)) {
    const PermStats st = stats(b.underlying());
    out.add_monomial({{"q", st.comaj + st.exc + bnd(b)}}, 1);
  }
  return out;
}

Polynomial bc_poly_two_variable(int n) {
  Polynomial out;
  for (const auto& b : bc_derangements(n)) {
    const PermStats st = stats(b.underlying());
    out.add_monomial({{"q", st.comaj + st.exc}, {"p", bnd(b)}}, 1);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<MultisetDerangement> multiset_derangements(std::vector<int> content) {
  std::sort(content.begin(), content.end());
  std::vector<MultisetDerangement> out;
  std::vector<int> bottom = content;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < content.size() && ok; ++j) ok = bottom[j] != content[j];
    if (ok) out.push_back({content, bottom});
  } while (std::next_permutation(bottom.begin(), bottom.end()));
  return out;
}

std::vector<std::vector<int>> multisets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int low) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = low; v <= m; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<std::vector<int>> words_W(int n, int j, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int des) -> void {
    if (des > j) return;
    if (static_cast<int>(cur.size()) == n) {
      if (des == j) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (!cur.empty() && cur.back() == v) continue;
      const int d = !cur.empty() && cur.back() > v ? 1 : 0;
      cur.push_back(v);
      self(self, des + d);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace rees
