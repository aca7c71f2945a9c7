#pragma once

// Random objects for the property suites. Every generator takes the engine
// explicitly so a failing case can be replayed from its seed.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "itmon/freecat.hpp"
#include "itmon/seq.hpp"
#include "itmon/young.hpp"

namespace gen {

using itmon::Nat;
using Rng = std::mt19937_64;

inline Nat uniform(Rng& rng, Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng); }

inline std::vector<Nat> list(Rng& rng, std::size_t max_len, Nat max_entry) {
  std::vector<Nat> out(uniform(rng, 0, max_len));
  for (auto& x : out) x = uniform(rng, 0, max_entry);
  return out;
}

inline itmon::FinSeq finseq(Rng& rng, std::size_t max_len = 5, Nat max_entry = 3) {
  return itmon::FinSeq(list(rng, max_len, max_entry));
}

inline itmon::Young young(Rng& rng, std::size_t max_cols = 5, Nat max_height = 4) {
  auto cols = list(rng, max_cols, max_height);
  std::sort(cols.begin(), cols.end(), std::greater<Nat>());
  return itmon::Young(std::move(cols));
}

inline void sort_lines(std::vector<Nat>& data, const std::vector<std::size_t>& shape, std::size_t axis) {
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) stride *= shape[a];
  const std::size_t len = shape[axis];
  const std::size_t block = stride * len;
  for (std::size_t base = 0; base < data.size(); base += block) {
    for (std::size_t s = 0; s < stride; ++s) {
      std::vector<Nat> line(len);
      for (std::size_t t = 0; t < len; ++t) line[t] = data[base + s + t * stride];
      std::sort(line.begin(), line.end(), std::greater<Nat>());
      for (std::size_t t = 0; t < len; ++t) data[base + s + t * stride] = line[t];
    }
  }
}

/// Random array sorted along every axis in turn, which leaves it monotone in all.
inline itmon::YoungN youngn(Rng& rng, std::size_t dim, std::size_t max_side = 3, Nat max_entry = 3) {
  std::vector<std::size_t> shape(dim);
  std::size_t volume = 1;
  for (auto& s : shape) {
    s = uniform(rng, 0, max_side);
    volume *= s;
  }
  std::vector<Nat> data(volume);
  for (auto& x : data) x = uniform(rng, 0, max_entry);
  if (volume)
    for (std::size_t a = 0; a < dim; ++a) sort_lines(data, shape, a);
  return itmon::YoungN(std::move(shape), std::move(data));
}

inline itmon::Young3 young3(Rng& rng, std::size_t max_side = 3, Nat max_entry = 3) {
  return youngn(rng, 2, max_side, max_entry).to_young3();
}

inline std::vector<std::string> symbols(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

namespace detail {

inline itmon::Expr tree(Rng& rng, const std::vector<std::string>& syms, std::size_t lo,
                        std::size_t hi, int n) {
  if (hi - lo == 1) return itmon::Expr::symbol(syms[lo]);
  const std::size_t cut = uniform(rng, lo + 1, hi - 1);
  const int index = static_cast<int>(uniform(rng, 1, static_cast<Nat>(n)));
  return itmon::Expr::product(index, {tree(rng, syms, lo, cut, n), tree(rng, syms, cut, hi, n)});
}

}  // namespace detail

/// Linear expression over the first `count` letters in random order, with
/// products indexed 1..n, returned unnormalized.
inline itmon::Expr linear_expr(Rng& rng, std::size_t count, int n) {
  auto syms = symbols(count);
  std::shuffle(syms.begin(), syms.end(), rng);
  if (count == 0) return itmon::Expr::unit();
  return detail::tree(rng, syms, 0, count, n);
}

}  // namespace gen
