#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itmon/order.hpp"

namespace itmon {

/// Finitely supported sequence over an ordered carrier whose unit is T{}.
/// Stored without trailing units so that equality is structural.
template <class T>
class BasicFinSeq {
 public:
  BasicFinSeq() = default;
  BasicFinSeq(std::initializer_list<T> entries) : BasicFinSeq(std::vector<T>(entries)) {}
  explicit BasicFinSeq(std::vector<T> entries) : entries_(std::move(entries)) { trim(); }

  /// Index of the last non-unit entry, counting from 1; 0 for the zero sequence.
  std::size_t length() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Entry at 0-based position i, unit past the end.
  T operator[](std::size_t i) const { return i < entries_.size() ? entries_[i] : T{}; }

  std::span<const T> entries() const noexcept { return entries_; }

  friend bool operator==(const BasicFinSeq&, const BasicFinSeq&) = default;

 private:
  void trim() {
    while (!entries_.empty() && entries_.back() == T{}) entries_.pop_back();
  }

  std::vector<T> entries_;
};

using FinSeq = BasicFinSeq<Nat>;

/// Lexicographic order, decided at the first differing index over
/// max(l(A), l(B)) entries.
template <class T, class Compare = std::compare_three_way>
std::weak_ordering lex_compare(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b,
                               Compare cmp = {}) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i) {
    std::weak_ordering c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return std::weak_ordering::equivalent;
}

template <class T>
BasicFinSeq<T> lex_max(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b) {
  return lex_compare(a, b) < 0 ? b : a;
}

template <class T>
BasicFinSeq<T> concat(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b) {
  std::vector<T> out(a.entries().begin(), a.entries().end());
  out.insert(out.end(), b.entries().begin(), b.entries().end());
  return BasicFinSeq<T>(std::move(out));
}

/// Entrywise application of a monoid operation whose unit is T{}.
template <class T, class Op>
BasicFinSeq<T> pointwise(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b, Op op) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = op(a[i], b[i]);
  return BasicFinSeq<T>(std::move(out));
}

template <class T>
BasicFinSeq<T> pointwise_add(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b) {
  return pointwise(a, b, std::plus<T>{});
}

/// Non-increasing rearrangement of the entries (stable, for determinism).
template <class T>
BasicFinSeq<T> sort_desc(const BasicFinSeq<T>& a) {
  std::vector<T> out(a.entries().begin(), a.entries().end());
  std::stable_sort(out.begin(), out.end(), std::greater<T>{});
  return BasicFinSeq<T>(std::move(out));
}

/// s(A + B) <= s(A) + s(B). Always true; a false return means a bug.
template <class T>
bool check_sort_triangle(const BasicFinSeq<T>& a, const BasicFinSeq<T>& b) {
  return lex_compare(sort_desc(pointwise_add(a, b)), pointwise_add(sort_desc(a), sort_desc(b))) <= 0;
}

// Text form: "[0,1,2]", "[]" for the zero sequence.
std::vector<Nat> parse_nat_list(std::string_view text);
std::string format_nat_list(std::span<const Nat> values);
FinSeq parse_seq(std::string_view text);
std::string format_seq(const FinSeq& s);

}  // namespace itmon
