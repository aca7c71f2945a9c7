#pragma once

// Reference computations that share no code with the library: compositions
// are listed by their own recursion, diagrams are handled as row lengths, and
// rounding is done in closed integer form.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Nat = std::uint64_t;
using List = std::vector<Nat>;

inline void trim(List& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// -1, 0, 1 after zero padding.
inline int lex(const List& a, const List& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Nat x = i < a.size() ? a[i] : 0;
    const Nat y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

/// All compositions of n into positive parts, every length.
inline std::vector<List> compositions(Nat n) {
  if (n == 0) return {List{}};
  std::vector<List> out;
  for (Nat first = 1; first <= n; ++first) {
    for (List rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

/// Minimal operad in (N; max, +): terms past the seeds are the max over every
/// composition with 2 <= k <= n-1 of max(C(k), sum C(j_i)). Index 0 unused.
inline List min_nat(const List& seeds, std::size_t bound) {
  List c(1, 0);
  c.insert(c.end(), seeds.begin(), seeds.end());
  for (std::size_t n = c.size(); n <= bound; ++n) {
    Nat best = 0;
    for (const List& js : compositions(n)) {
      if (js.size() < 2 || js.size() >= n) continue;
      Nat sum = 0;
      for (Nat j : js) sum += c[j];
      best = std::max({best, c[js.size()], sum});
    }
    c.push_back(best);
  }
  c.resize(bound + 1);
  return c;
}

// Diagrams as row lengths, longest first.

inline List rows_from_cols(const List& cols) {
  List rows(cols.empty() ? 0 : cols.front(), 0);
  for (Nat h : cols)
    for (Nat r = 0; r < h; ++r) rows[r] += 1;
  return rows;
}

inline List cols_from_rows(const List& rows) { return rows_from_cols(rows); }

/// Side by side: row lengths add.
inline List rows_side(const List& a, const List& b) {
  List out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

/// One on top of the other: the rows of both, re-sorted.
inline List rows_stack(const List& a, const List& b) {
  List out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), std::greater<Nat>());
  trim(out);
  return out;
}

/// Minimal Young operad from B (column heights); returns column heights for
/// arities 1..bound at index 1..bound. Order and products use the row form.
inline std::vector<List> min_young(const List& b_cols, std::size_t bound) {
  std::vector<List> rows{List{}, List{}, rows_from_cols(b_cols)};
  for (std::size_t n = 3; n <= bound; ++n) {
    List best;
    bool have = false;
    for (const List& js : compositions(n)) {
      if (js.size() < 2 || js.size() >= n) continue;
      List inner;
      for (Nat j : js) inner = rows_stack(inner, rows[j]);
      List value = rows_side(rows[js.size()], inner);
      if (!have || lex(cols_from_rows(value), cols_from_rows(best)) > 0) best = value;
      have = true;
    }
    rows.push_back(best);
  }
  std::vector<List> cols;
  for (std::size_t n = 0; n <= bound && n < rows.size(); ++n) cols.push_back(cols_from_rows(rows[n]));
  return cols;
}

/// n / 2^k rounded to nearest with halves rounded down: ceil((2n - 2^k) / 2^(k+1)).
inline Nat round_half_down(Nat n, unsigned k) {
  const std::int64_t num = 2 * static_cast<std::int64_t>(n) - (std::int64_t{1} << k);
  const std::int64_t den = std::int64_t{1} << (k + 1);
  if (num <= 0) return 0;
  return static_cast<Nat>((num + den - 1) / den);
}

}  // namespace oracle
