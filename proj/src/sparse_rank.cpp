#include "rees/sparse_rank.hpp"

#include <numeric>

#include "rees/integer.hpp"

namespace rees {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) { return checked_mul(a, b); }
std::int64_t sub(std::int64_t a, std::int64_t b) { return checked_sub(a, b); }
std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
Integer mul(const Integer& a, const Integer& b) { return a * b; }
Integer sub(const Integer& a, const Integer& b) { return a - b; }
Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

template <typename T>
using Column = std::vector<std::pair<std::uint32_t, T>>;

// col := (a/g) col - (b/g) pivot, where a, b are the lowest entries.
template <typename T>
void eliminate(Column<T>& col, const Column<T>& pivot, Column<T>& scratch) {
  const T a = pivot.back().second;
  const T b = col.back().second;
  const T g = gcd_of(a, b);
  const T fa = a / g, fb = b / g;
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      scratch.emplace_back(col[i].first, mul(fa, col[i].second));
      ++i;
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      scratch.emplace_back(pivot[j].first, sub(T(0), mul(fb, pivot[j].second)));
      ++j;
    } else {
      T v = sub(mul(fa, col[i].second), mul(fb, pivot[j].second));
      if (v != 0) scratch.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  col.swap(scratch);
  if (col.empty()) return;
  T content = 0;
  for (const auto& e : col) {
    content = gcd_of(content, e.second < 0 ? T(-e.second) : e.second);
    if (content == 1) return;
  }
  for (auto& e : col) e.second /= content;
}

template <typename T>
ReductionResult reduce(const std::vector<SparseColumn>& columns, std::size_t rows,
                       const std::vector<char>* skip) {
  ReductionResult out;
  std::vector<std::int32_t> pivot_of_row(rows, -1);
  std::vector<Column<T>> reduced;
  Column<T> col, scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (skip && (*skip)[c]) continue;
    col.clear();
    for (const auto& [r, v] : columns[c]) col.emplace_back(r, T(v));
    while (!col.empty()) {
      const std::int32_t p = pivot_of_row[col.back().first];
      if (p < 0) break;
      eliminate(col, reduced[p], scratch);
    }
    if (col.empty()) continue;
    pivot_of_row[col.back().first] = static_cast<std::int32_t>(reduced.size());
    out.pivot_rows.push_back(col.back().first);
    reduced.push_back(col);
  }
  out.rank = reduced.size();
  return out;
}

}  // namespace

ReductionResult reduce_rank(const std::vector<SparseColumn>& columns, std::size_t rows,
                            const std::vector<char>* skip) {
  try {
    return reduce<std::int64_t>(columns, rows, skip);
  } catch (const OverflowError&) {
    return reduce<Integer>(columns, rows, skip);
  }
}

std::size_t dense_rank(const std::vector<std::vector<std::int64_t>>& matrix) {
  std::vector<std::vector<Integer>> m;
  for (const auto& row : matrix) m.emplace_back(row.begin(), row.end());
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[rank], m[p]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k)
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace rees
