#pragma once

// Randomized and exhaustive law checks shared by the unit tests and the
// acceptance runner. Each suite reports how many cases ran and the first
// failure it met.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "itmon/categories.hpp"
#include "itmon/freecat.hpp"
#include "itmon/json_io.hpp"
#include "oracles.hpp"

namespace props {

using itmon::Nat;

struct Outcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }

  void record(bool pass, const std::function<std::string()>& describe) {
    ++cases;
    if (pass) return;
    if (failures++ == 0) first_failure = describe();
  }
};

inline std::string show(const std::vector<Nat>& v) { return itmon::format_nat_list(v); }

// ---------------------------------------------------------------------------
// Sorting lemmas

inline Outcome sort_triangle(std::size_t trials, std::uint64_t seed = 11) {
  Outcome o{"sort triangle inequality"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto a = gen::finseq(rng, 7, 6), b = gen::finseq(rng, 7, 6);
    o.record(itmon::check_sort_triangle(a, b), [&] { return itmon::format_seq(a) + " " + itmon::format_seq(b); });
  }
  return o;
}

inline Outcome minmax_exhaustive() {
  Outcome o{"min/max lemma, lengths <= 3, entries <= 3, all permutations"};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::size_t>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * len; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Nat> a(len), b(len);
      std::size_t c = code;
      for (auto& x : a) x = c % 4, c /= 4;
      for (auto& x : b) x = c % 4, c /= 4;
      for (const auto& s : perms)
        for (const auto& t : perms)
          o.record(itmon::check_minmax(a, b, s, t), [&] { return show(a) + " " + show(b); });
    }
  }
  return o;
}

inline Outcome minmax_random(std::size_t trials, std::uint64_t seed = 12) {
  Outcome o{"min/max lemma, random"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t len = gen::uniform(rng, 1, 8);
    std::vector<Nat> a(len), b(len);
    for (auto& x : a) x = gen::uniform(rng, 0, 20);
    for (auto& x : b) x = gen::uniform(rng, 0, 20);
    std::vector<std::size_t> s(len), u(len);
    std::iota(s.begin(), s.end(), 0);
    std::iota(u.begin(), u.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(u.begin(), u.end(), rng);
    // Oracle: the lemma's right side bounds every individual min.
    const Nat bound = std::min(*std::max_element(a.begin(), a.end()), *std::max_element(b.begin(), b.end()));
    bool each = true;
    for (std::size_t i = 0; i < len; ++i) each = each && std::min(a[s[i]], b[u[i]]) <= bound;
    o.record(itmon::check_minmax(a, b, s, u) && each, [&] { return show(a) + " " + show(b); });
  }
  return o;
}

inline Outcome matrixsort_exhaustive() {
  Outcome o{"matrix-sort lemma, 3x3 entries <= 2"};
  for (std::size_t code = 0; code < 19683; ++code) {
    itmon::Matrix m(3, std::vector<Nat>(3));
    std::size_t c = code;
    for (auto& row : m)
      for (auto& x : row) x = c % 3, c /= 3;
    o.record(itmon::check_matrixsort(m), [&] { return std::to_string(code); });
  }
  return o;
}

inline Outcome matrixsort_random(std::size_t trials, std::uint64_t seed = 13) {
  Outcome o{"matrix-sort lemma, random"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    itmon::Matrix m(gen::uniform(rng, 1, 6));
    const std::size_t w = gen::uniform(rng, 1, 6);
    for (auto& row : m) {
      row.resize(w);
      for (auto& x : row) x = gen::uniform(rng, 0, 9);
    }
    o.record(itmon::check_matrixsort(m), [&] { return itmon::Json(m).dump(); });
  }
  return o;
}

// ---------------------------------------------------------------------------
// Category laws
//
// Interchange is checked per pair p<q and the product laws (associativity,
// units, functoriality) per product, so each outcome names exactly one claim.

template <class T>
std::string show_args(const itmon::LawViolation<T>& v) {
  std::string s = v.law + ":";
  for (const auto& x : v.args) s += " " + itmon::format_object(x);
  if (v.lhs && v.rhs) s += " gives " + itmon::format_object(*v.lhs) + " vs " + itmon::format_object(*v.rhs);
  return s;
}

template <class T, class Tuples>
std::vector<Outcome> category_claims(const itmon::PosetCategory<T>& cat, Tuples&& for_each_tuple) {
  const int n = cat.product_count();
  std::vector<Outcome> out;
  out.push_back({cat.name + " order"});
  for (int i = 1; i <= n; ++i) out.push_back({cat.name + " product " + std::to_string(i) + " laws"});
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      out.push_back({cat.name + " interchange " + std::to_string(p) + "<" + std::to_string(q)});
  for_each_tuple([&](const T& a, const T& b, const T& c, const T& d) {
    std::size_t slot = 0;
    auto rec = [&](const itmon::detail::LawResult<T>& v) {
      out[slot++].record(!v, [&] { return show_args(*v); });
    };
    rec(itmon::detail::order_laws(cat.compare, a, b, c));
    for (int i = 1; i <= n; ++i)
      rec(itmon::detail::product_laws<T>("product " + std::to_string(i), cat.compare, cat.product(i), cat.unit,
                                         a, b, c, d));
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) rec(itmon::detail::interchange_tuple(cat, p, q, a, b, c, d));
  });
  return out;
}

template <class T>
std::vector<Outcome> category_random(const itmon::PosetCategory<T>& cat, const itmon::Sampler<T>& sample,
                                     std::size_t trials, std::uint64_t seed) {
  return category_claims(cat, [&](auto&& f) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      T a = sample(rng), b = sample(rng), c = sample(rng), d = sample(rng);
      f(a, b, c, d);
    }
  });
}

template <class T>
std::vector<Outcome> category_exhaustive(const itmon::PosetCategory<T>& cat, const std::vector<T>& domain) {
  auto out = category_claims(cat, [&](auto&& f) {
    for (const T& a : domain)
      for (const T& b : domain)
        for (const T& c : domain)
          for (const T& d : domain) f(a, b, c, d);
  });
  for (auto& o : out) o.name += " (exhaustive)";
  return out;
}

/// Every claim of every implemented category: randomized, then exhaustively
/// over tiny domains.
inline std::vector<Outcome> all_category_claims(std::size_t trials) {
  std::vector<Outcome> out;
  auto add = [&](std::vector<Outcome> v) {
    for (auto& o : v) out.push_back(std::move(o));
  };
  add(category_random<Nat>(itmon::nat_category(), [](auto& r) { return gen::uniform(r, 0, 12); }, trials, 21));
  add(category_random<itmon::FinSeq>(itmon::seq_category(), [](auto& r) { return gen::finseq(r); }, trials, 22));
  add(category_random<itmon::FinSeq>(itmon::seq_plus_category(), [](auto& r) { return gen::finseq(r); }, trials,
                                     23));
  add(category_random<itmon::Young>(itmon::young2_category(), [](auto& r) { return gen::young(r); }, trials, 24));
  add(category_random<itmon::Young3>(itmon::young3_category(), [](auto& r) { return gen::young3(r); }, trials,
                                     25));
  add(category_random<itmon::YoungN>(itmon::youngn_category(3), [](auto& r) { return gen::youngn(r, 3, 2, 3); },
                                     trials, 26));

  std::vector<Nat> nats{0, 1, 2, 3, 4, 5};
  add(category_exhaustive(itmon::nat_category(), nats));
  std::vector<itmon::FinSeq> seqs;
  for (Nat x = 0; x <= 2; ++x)
    for (Nat y = 0; y <= 2; ++y) seqs.push_back(itmon::FinSeq{x, y});
  add(category_exhaustive(itmon::seq_plus_category(), seqs));
  std::vector<itmon::Young> ys;
  for (const auto& c : std::vector<std::vector<Nat>>{{}, {1}, {2}, {1, 1}, {2, 1}, {3}, {1, 1, 1}, {2, 2}})
    ys.emplace_back(c);
  add(category_exhaustive(itmon::young2_category(), ys));
  return out;
}

inline bool is_interchange(const Outcome& o) { return o.name.find(" interchange ") != std::string::npos; }

// ---------------------------------------------------------------------------
// Diagram identities

inline Outcome block_conservation(std::size_t trials, std::uint64_t seed = 31) {
  Outcome o{"block count conservation"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto a = gen::young(rng), b = gen::young(rng);
    const Nat s2 = a.blocks() + b.blocks();
    o.record(itmon::hstack(a, b).blocks() == s2 && itmon::vstack(a, b).blocks() == s2,
             [&] { return show({a.cols().begin(), a.cols().end()}) + " " + show({b.cols().begin(), b.cols().end()}); });
    auto x = gen::young3(rng), y = gen::young3(rng);
    const Nat s3 = x.blocks() + y.blocks();
    o.record(itmon::zstack(x, y).blocks() == s3 && itmon::ystack(x, y).blocks() == s3 &&
                 itmon::xstack(x, y).blocks() == s3,
             [&] { return itmon::format_object(x) + " " + itmon::format_object(y); });
    auto p = gen::youngn(rng, 3), q = gen::youngn(rng, 3);
    bool all = true;
    for (int k = 1; k <= 4; ++k) all = all && itmon::nd_product(p, q, k).blocks() == p.blocks() + q.blocks();
    o.record(all, [&] { return itmon::format_object(p) + " " + itmon::format_object(q); });
  }
  return o;
}

inline Outcome conjugation_duality(std::size_t trials, std::uint64_t seed = 32) {
  Outcome o{"conjugation duality"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto a = gen::young(rng), b = gen::young(rng);
    const bool dual = itmon::conjugate(itmon::hstack(a, b)) ==
                      itmon::vstack(itmon::conjugate(a), itmon::conjugate(b));
    const bool involution = itmon::conjugate(itmon::conjugate(a)) == a;
    o.record(dual && involution, [&] { return itmon::format_object(a) + " " + itmon::format_object(b); });
  }
  return o;
}

inline Outcome hstack_dual_construction(std::size_t trials, std::uint64_t seed = 33) {
  Outcome o{"merge equals row addition"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto a = gen::young(rng, 6, 6), b = gen::young(rng, 6, 6);
    const oracle::List ca(a.cols().begin(), a.cols().end()), cb(b.cols().begin(), b.cols().end());
    const auto by_rows =
        oracle::cols_from_rows(oracle::rows_side(oracle::rows_from_cols(ca), oracle::rows_from_cols(cb)));
    const auto merged = itmon::hstack(a, b);
    o.record(by_rows == oracle::List(merged.cols().begin(), merged.cols().end()),
             [&] { return itmon::format_object(a) + " " + itmon::format_object(b); });
  }
  return o;
}

// ---------------------------------------------------------------------------
// Free categories

inline itmon::Expr interchange_source(int p, int q) {
  using itmon::Expr;
  auto s = [](const char* x) { return Expr::symbol(x); };
  return Expr::product(p, {Expr::product(q, {s("a"), s("b")}), Expr::product(q, {s("c"), s("d")})})
      .normalized();
}

inline itmon::Expr interchange_target(int p, int q) {
  using itmon::Expr;
  auto s = [](const char* x) { return Expr::symbol(x); };
  return Expr::product(q, {Expr::product(p, {s("a"), s("c")}), Expr::product(p, {s("b"), s("d")})})
      .normalized();
}

inline Outcome interchanger_shapes() {
  Outcome o{"interchanger shapes exist one way only, n <= 4"};
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        const auto src = interchange_source(p, q), dst = interchange_target(p, q);
        o.record(itmon::morphism_exists(src, dst) && !itmon::morphism_exists(dst, src),
                 [&] { return itmon::print_expr(src) + " vs " + itmon::print_expr(dst); });
      }
  return o;
}

inline Outcome fast_vs_reference(std::size_t trials, std::uint64_t seed = 41) {
  Outcome o{"pair table agrees with restriction"};
  gen::Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t count = gen::uniform(rng, 1, 8);
    const int n = static_cast<int>(gen::uniform(rng, 1, 4));
    const auto a = gen::linear_expr(rng, count, n);
    const auto b = gen::linear_expr(rng, count, n);
    const int hom = itmon::hom_count(a, b);
    bool same = (hom == 1) == itmon::morphism_exists_reference(a, b) && (hom == 0 || hom == 1);
    // Restriction commutes with normalization, and both paths see the same shapes.
    const itmon::PairTable raw(a), norm(a.normalized());
    const auto syms = gen::symbols(count);
    for (std::size_t i = 0; i < count && same; ++i)
      for (std::size_t j = 0; j < count && same; ++j) {
        if (i == j) continue;
        const auto r = itmon::restrict_pair(a, syms[i], syms[j]);
        same = r == itmon::restrict_pair(a.normalized(), syms[i], syms[j]) && r == raw.shape(syms[i], syms[j]) &&
               r == norm.shape(syms[i], syms[j]);
      }
    o.record(same, [&] { return itmon::print_expr(a) + " -> " + itmon::print_expr(b); });
  }
  return o;
}

/// All normalized linear expressions over `count` symbols with products 1..n.
inline std::vector<itmon::Expr> all_linear(std::size_t count, int n) {
  std::function<std::vector<itmon::Expr>(const std::vector<std::string>&)> build =
      [&](const std::vector<std::string>& syms) {
        std::vector<itmon::Expr> out;
        if (syms.size() == 1) return std::vector<itmon::Expr>{itmon::Expr::symbol(syms[0])};
        for (std::size_t cut = 1; cut < syms.size(); ++cut) {
          auto left = build({syms.begin(), syms.begin() + static_cast<std::ptrdiff_t>(cut)});
          auto right = build({syms.begin() + static_cast<std::ptrdiff_t>(cut), syms.end()});
          for (const auto& l : left)
            for (const auto& r : right)
              for (int k = 1; k <= n; ++k) out.push_back(itmon::Expr::product(k, {l, r}));
        }
        return out;
      };
  auto syms = gen::symbols(count);
  std::map<std::string, itmon::Expr> unique;
  do {
    for (auto& e : build(syms)) {
      auto norm = e.normalized();
      unique.emplace(itmon::print_expr(norm), norm);
    }
  } while (std::next_permutation(syms.begin(), syms.end()));
  std::vector<itmon::Expr> out;
  for (auto& [k, e] : unique) out.push_back(e);
  return out;
}

inline Outcome hom_preorder() {
  Outcome o{"morphism existence is reflexive and transitive (3 symbols, n = 2)"};
  const auto all = all_linear(3, 2);
  const std::size_t m = all.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) rel[i][j] = itmon::morphism_exists(all[i], all[j]);
  for (std::size_t i = 0; i < m; ++i) {
    o.record(rel[i][i], [&] { return itmon::print_expr(all[i]); });
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (rel[i][j] && rel[j][k])
          o.record(rel[i][k], [&] {
            return itmon::print_expr(all[i]) + " -> " + itmon::print_expr(all[j]) + " -> " +
                   itmon::print_expr(all[k]);
          });
  }
  return o;
}

}  // namespace props
