#ifndef PUSHCAT_SSET_SMITH_HPP
#define PUSHCAT_SSET_SMITH_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pushcat {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix given by its nonzero entries, one sorted row per
/// vector entry.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// row -> (column, value) sorted by column, no zero values
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;

  explicit SparseMatrix(std::size_t r = 0, std::size_t c = 0) : rows(r), cols(c), entries(r) {}

  void add(std::uint32_t r, std::uint32_t c, std::int64_t v) {
    auto& row = entries[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    if (it != row.end() && it->first == c) {
      it->second += v;
      if (it->second == 0) row.erase(it);
    } else if (v != 0) {
      row.insert(it, {c, v});
    }
  }
};

namespace detail {

struct Overflow {};

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t m, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(m, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}

inline BigInt checked_sub_mul(const BigInt& a, const BigInt& m, const BigInt& b) { return a - m * b; }

template <typename T>
using SparseRow = std::vector<std::pair<std::uint32_t, T>>;

/// Eliminates unit pivots, returning how many were removed. The remaining
/// rows hold the residual matrix whose invariant factors are still unknown.
template <typename T>
std::size_t eliminate_units(std::vector<SparseRow<T>>& rows, std::size_t num_cols) {
  std::vector<std::unordered_set<std::uint32_t>> col_rows(num_cols);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
  std::vector<bool> row_done(rows.size(), false);
  std::size_t units = 0;
  for (;;) {
    // Markowitz choice among unit entries.
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::uint32_t pr = 0, pc = 0;
    for (std::uint32_t r = 0; r < rows.size(); ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[r].size() - 1) * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          pr = r;
          pc = c;
          if (cost == 0) break;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_cost == std::numeric_limits<std::size_t>::max()) break;

    const SparseRow<T> pivot_row = rows[pr];
    T pivot_value{};
    for (const auto& [c, v] : pivot_row)
      if (c == pc) pivot_value = v;
    const std::vector<std::uint32_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (std::uint32_t r : targets) {
      if (r == pr) continue;
      T factor{};
      for (const auto& [c, v] : rows[r])
        if (c == pc) factor = v;
      factor = factor * pivot_value;  // pivot_value is ±1, its own inverse
      SparseRow<T> merged;
      merged.reserve(rows[r].size() + pivot_row.size());
      auto a = rows[r].begin();
      auto b = pivot_row.begin();
      while (a != rows[r].end() || b != pivot_row.end()) {
        if (b == pivot_row.end() || (a != rows[r].end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == rows[r].end() || b->first < a->first) {
          T v = checked_sub_mul(T{0}, factor, b->second);
          merged.emplace_back(b->first, v);
          col_rows[b->first].insert(r);
          ++b;
        } else {
          T v = checked_sub_mul(a->second, factor, b->second);
          if (v != 0) {
            merged.emplace_back(a->first, v);
          } else {
            col_rows[a->first].erase(r);
          }
          ++a;
          ++b;
        }
      }
      rows[r] = std::move(merged);
    }
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(pr);
    rows[pr].clear();
    row_done[pr] = true;
    ++units;
  }
  return units;
}

/// Invariant factors of a dense matrix by the classical Smith reduction.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < m && t < n) {
    // Smallest nonzero entry in the remaining block.
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide the whole remaining block.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
    }
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

template <typename T>
std::vector<BigInt> invariant_factors_as(const SparseMatrix& mat) {
  std::vector<SparseRow<T>> rows(mat.rows);
  for (std::size_t r = 0; r < mat.rows; ++r)
    for (const auto& [c, v] : mat.entries[r]) rows[r].emplace_back(c, T(v));
  const std::size_t units = eliminate_units(rows, mat.cols);
  std::vector<std::uint32_t> live_cols;
  std::vector<std::int64_t> col_pos(mat.cols, -1);
  std::vector<std::size_t> live_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& [c, v] : rows[r])
      if (col_pos[c] < 0) {
        col_pos[c] = static_cast<std::int64_t>(live_cols.size());
        live_cols.push_back(c);
      }
  }
  std::vector<BigInt> factors(units, BigInt(1));
  if (!live_rows.empty()) {
    std::vector<std::vector<BigInt>> dense(live_rows.size(), std::vector<BigInt>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) dense[i][col_pos[c]] = BigInt(v);
    auto rest = dense_smith(std::move(dense));
    factors.insert(factors.end(), rest.begin(), rest.end());
  }
  // Normalize to a divisibility chain.
  for (std::size_t i = units; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const BigInt g = gcd(factors[i], factors[j]);
      const BigInt l = factors[i] / g * factors[j];
      factors[i] = g;
      factors[j] = l;
    }
  return factors;
}

}  // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix; their
/// count is the rank.
inline std::vector<BigInt> invariant_factors(const SparseMatrix& mat) {
  try {
    return detail::invariant_factors_as<std::int64_t>(mat);
  } catch (const detail::Overflow&) {
    return detail::invariant_factors_as<BigInt>(mat);
  }
}

}  // namespace pushcat

#endif  // PUSHCAT_SSET_SMITH_HPP
