#pragma once

// Collections, operad verification over poset categories, minimal operads,
// tensor products of operads, and operad algebras.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itmon/categories.hpp"
#include "itmon/order.hpp"

namespace itmon {

/// Terms C(0..bound) over a category; bottom is available through Bottomed.
template <class T>
struct Collection {
  PosetCategory<T> category;
  std::vector<Bottomed<T>> terms;

  std::size_t bound() const noexcept { return terms.empty() ? 0 : terms.size() - 1; }

  const Bottomed<T>& operator()(std::size_t j) const {
    if (j >= terms.size()) {
      throw UsageError("arity " + std::to_string(j) + " beyond collection bound " +
                       std::to_string(bound()));
    }
    return terms[j];
  }
};

// ---------------------------------------------------------------------------
// Compositions

/// Calls f on every composition of n into k positive parts in colexicographic
/// order (the last part varies slowest). Stops early when f returns false.
/// Returns false iff stopped early.
template <class F>
bool for_each_composition(std::size_t n, std::size_t k, F&& f) {
  if (k == 0 || k > n) return true;
  std::vector<std::size_t> parts(k);
  auto fill = [&](auto&& self, std::size_t slots, std::size_t total) -> bool {
    if (slots == 1) {
      parts[0] = total;
      return f(static_cast<const std::vector<std::size_t>&>(parts));
    }
    for (std::size_t last = 1; last + (slots - 1) <= total; ++last) {
      parts[slots - 1] = last;
      if (!self(self, slots - 1, total - last)) return false;
    }
    return true;
  };
  return fill(fill, k, n);
}

template <class T>
struct CompositionCheck {
  std::size_t n = 0;
  std::vector<std::size_t> composition;  // j_1..j_k
  Bottomed<T> lhs;                       // C(k) *p (C(j_1) *q ... *q C(j_k))
  Bottomed<T> rhs;                       // C(n)

  std::size_t k() const noexcept { return composition.size(); }
};

/// Evaluates one instance of the composition inequality.
template <class T>
CompositionCheck<T> composite(const Collection<T>& c, int p, int q,
                              const std::vector<std::size_t>& composition) {
  const auto& cat = c.category;
  CompositionCheck<T> out;
  out.composition = composition;
  if (composition.empty()) throw UsageError("composition needs at least one part");
  Bottomed<T> inner = c(composition.front());
  std::size_t n = composition.front();
  for (std::size_t s = 1; s < composition.size(); ++s) {
    inner = lifted_product(cat, q, inner, c(composition[s]));
    n += composition[s];
  }
  out.n = n;
  out.lhs = lifted_product(cat, p, c(composition.size()), inner);
  out.rhs = c(n);
  return out;
}

template <class T>
bool holds(const Collection<T>& c, const CompositionCheck<T>& check) {
  return lifted_compare(c.category, check.lhs, check.rhs) <= 0;
}

// ---------------------------------------------------------------------------
// Verification

template <class T>
struct OperadWitness {
  enum class Kind { Unit, Composition };
  Kind kind = Kind::Composition;
  int p = 0;
  int q = 0;
  CompositionCheck<T> check;  // for Kind::Unit: lhs = C(1), rhs = unit, n = 1
};

template <class T>
using OperadVerdict = Verdict<OperadWitness<T>>;

namespace detail {

template <class T>
void check_pair(const Collection<T>& c, int p, int q) {
  if (p >= q) {
    throw UsageError("operad composition needs p < q, got p=" + std::to_string(p) +
                     " q=" + std::to_string(q));
  }
  if (p < 1 || q > c.category.product_count()) {
    throw UsageError("pair (" + std::to_string(p) + "," + std::to_string(q) +
                     ") outside the products 1.." + std::to_string(c.category.product_count()) +
                     " of " + c.category.name);
  }
}

template <class T>
std::optional<OperadWitness<T>> unit_failure(const Collection<T>& c, int p, int q) {
  const Bottomed<T> unit(c.category.unit);
  if (c.bound() >= 1 && lifted_compare(c.category, c(1), unit) == 0) return std::nullopt;
  OperadWitness<T> w;
  w.kind = OperadWitness<T>::Kind::Unit;
  w.p = p;
  w.q = q;
  w.check.n = 1;
  w.check.composition = {1};
  w.check.lhs = c.bound() >= 1 ? c(1) : Bottomed<T>::bottom();
  w.check.rhs = unit;
  return w;
}

// Failures for one arity n in enumeration order (k ascending, then colex).
// Parts equal to 0 never occur; bottom terms annihilate through the lifted
// products.
template <class T>
std::vector<CompositionCheck<T>> arity_failures(const Collection<T>& c, int p, int q, std::size_t n,
                                                std::size_t limit) {
  std::vector<CompositionCheck<T>> out;
  for (std::size_t k = 1; k <= n && out.size() < limit; ++k) {
    for_each_composition(n, k, [&](const std::vector<std::size_t>& js) {
      auto check = composite(c, p, q, js);
      if (!holds(c, check)) out.push_back(std::move(check));
      return out.size() < limit;
    });
  }
  return out;
}

}  // namespace detail

/// Up to `limit` failing compositions, n ascending, then k ascending, then
/// colexicographic.
template <class T>
std::vector<OperadWitness<T>> find_operad_failures(const Collection<T>& c, int p, int q,
                                                   std::size_t bound, std::size_t limit) {
  detail::check_pair(c, p, q);
  if (bound > c.bound()) throw UsageError("verification bound exceeds collection bound");
  std::vector<OperadWitness<T>> out;
  if (auto u = detail::unit_failure(c, p, q)) {
    out.push_back(std::move(*u));
    if (out.size() >= limit) return out;
  }
  for (std::size_t n = 1; n <= bound && out.size() < limit; ++n) {
    for (auto& check : detail::arity_failures(c, p, q, n, limit - out.size())) {
      out.push_back({OperadWitness<T>::Kind::Composition, p, q, std::move(check)});
    }
  }
  return out;
}

/// Checks every composition of every arity n <= bound. Arities are split
/// across `jobs` workers; the reported witness is the first in enumeration
/// order regardless of the job count.
template <class T>
OperadVerdict<T> verify_operad(const Collection<T>& c, int p, int q, std::size_t bound,
                               unsigned jobs = 1) {
  detail::check_pair(c, p, q);
  if (bound > c.bound()) throw UsageError("verification bound exceeds collection bound");
  if (auto u = detail::unit_failure(c, p, q)) return OperadVerdict<T>::failure(std::move(*u));

  auto first_in = [&](std::size_t n) -> std::optional<CompositionCheck<T>> {
    auto f = detail::arity_failures(c, p, q, n, 1);
    if (f.empty()) return std::nullopt;
    return std::move(f.front());
  };
  auto wrap = [&](CompositionCheck<T> check) {
    return OperadVerdict<T>::failure({OperadWitness<T>::Kind::Composition, p, q, std::move(check)});
  };

  if (jobs <= 1) {
    for (std::size_t n = 1; n <= bound; ++n)
      if (auto f = first_in(n)) return wrap(std::move(*f));
    return OperadVerdict<T>::success();
  }
  // Worker w takes arities w+1, w+1+jobs, ...
  std::vector<std::future<std::optional<CompositionCheck<T>>>> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w]() -> std::optional<CompositionCheck<T>> {
      for (std::size_t n = w + 1; n <= bound; n += jobs)
        if (auto f = first_in(n)) return f;
      return std::nullopt;
    }));
  }
  std::optional<CompositionCheck<T>> best;
  for (auto& fut : workers) {
    auto f = fut.get();
    if (f && (!best || f->n < best->n)) best = std::move(f);
  }
  if (best) return wrap(std::move(*best));
  return OperadVerdict<T>::success();
}

/// One named instance of the inequality, e.g. (k=3; 1,3,2).
template <class T>
CompositionCheck<T> check_composition(const Collection<T>& c, int p, int q,
                                      const std::vector<std::size_t>& composition) {
  detail::check_pair(c, p, q);
  return composite(c, p, q, composition);
}

/// Pairs p < q <= m, adjacent pairs (1,2),(2,3),... first.
inline std::vector<std::pair<int, int>> pair_order(int m) {
  std::vector<std::pair<int, int>> out;
  for (int q = 2; q <= m; ++q) out.emplace_back(q - 1, q);
  for (int gap = 2; gap < m; ++gap)
    for (int p = 1; p + gap <= m; ++p) out.emplace_back(p, p + gap);
  return out;
}

/// First failure over all pairs p < q <= m. When every adjacent pair passes,
/// the remaining pairs must pass too; a failure there throws InvariantViolation.
template <class T>
OperadVerdict<T> verify_all_pairs(const Collection<T>& c, int m, std::size_t bound,
                                  unsigned jobs = 1) {
  if (m < 2 || m > c.category.product_count()) {
    throw UsageError("fold " + std::to_string(m) + " outside 2.." +
                     std::to_string(c.category.product_count()));
  }
  for (auto [p, q] : pair_order(m)) {
    auto v = verify_operad(c, p, q, bound, jobs);
    if (!v) {
      if (q - p > 1) {
        throw InvariantViolation("pair (" + std::to_string(p) + "," + std::to_string(q) +
                                 ") fails although every adjacent pair passes");
      }
      return v;
    }
  }
  return OperadVerdict<T>::success();
}

// ---------------------------------------------------------------------------
// Minimal operads

/// Generic minimal extension: C(n) for n beyond the seeds is the max over all
/// compositions with 2 <= k <= n-1 of C(k) *p (C(j_1) *q ... *q C(j_k)).
/// k = 1 and k = n only reproduce C(n) itself. seeds[i] is C(i+1).
template <class T>
Collection<T> minimal_by_enumeration(const PosetCategory<T>& cat, int p, int q,
                                     const std::vector<T>& seeds, std::size_t bound) {
  Collection<T> c{cat, {Bottomed<T>::bottom()}};
  for (const T& s : seeds) c.terms.emplace_back(s);
  while (c.terms.size() <= bound) {
    const std::size_t n = c.terms.size();
    c.terms.push_back(Bottomed<T>::bottom());
    Bottomed<T> best = Bottomed<T>::bottom();
    for (std::size_t k = 2; k + 1 <= n; ++k) {
      for_each_composition(n, k, [&](const std::vector<std::size_t>& js) {
        best = lifted_coproduct(cat, best, composite(c, p, q, js).lhs);
        return true;
      });
    }
    c.terms[n] = best;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Tensor products and algebras

/// Termwise product at one index, truncated to the shorter collection.
template <class T>
Collection<T> termwise_product(const Collection<T>& c, const Collection<T>& d, int index) {
  Collection<T> out{c.category, {}};
  c.category.product(index);  // range check
  const std::size_t n = std::min(c.bound(), d.bound());
  for (std::size_t j = 0; j <= n; ++j) out.terms.push_back(lifted_product(c.category, index, c(j), d(j)));
  return out;
}

/// (C *'_i D)(j) = C(j) *_{i+m} D(j) for m-fold operads C, D.
template <class T>
Collection<T> tensor_operads(const Collection<T>& c, const Collection<T>& d, int i, int m) {
  const int n = c.category.product_count();
  if (m < 1) throw UsageError("operad fold m must be >= 1");
  if (i < 1 || i + m > n) {
    throw UsageError("tensor index i=" + std::to_string(i) + " needs 1 <= i <= n-m = " +
                     std::to_string(n - m));
  }
  return termwise_product(c, d, i + m);
}

template <class T>
struct AlgebraWitness {
  std::size_t j = 0;
  Bottomed<T> lhs;  // C(j) *p (A *q ... *q A)
  Bottomed<T> rhs;  // A
};

/// C(j) *p (A *q ... *q A) <= A for 1 <= j <= bound.
template <class T>
Verdict<AlgebraWitness<T>> is_algebra(const Collection<T>& c, const Bottomed<T>& a, int p, int q,
                                      std::size_t bound) {
  detail::check_pair(c, p, q);
  if (bound > c.bound()) throw UsageError("algebra bound exceeds collection bound");
  if (detail::unit_failure(c, p, q)) throw UsageError("algebra check needs C(1) to be the unit");
  Bottomed<T> power = a;
  for (std::size_t j = 1; j <= bound; ++j) {
    if (j > 1) power = lifted_product(c.category, q, power, a);
    Bottomed<T> lhs = lifted_product(c.category, p, c(j), power);
    if (lifted_compare(c.category, lhs, a) > 0) {
      return Verdict<AlgebraWitness<T>>::failure({j, std::move(lhs), a});
    }
  }
  return Verdict<AlgebraWitness<T>>::success();
}

/// A *_{i+m} B against C *'_i D.
template <class T>
Verdict<AlgebraWitness<T>> verify_algebra_tensor(const Collection<T>& c, const Collection<T>& d,
                                                 const Bottomed<T>& a, const Bottomed<T>& b, int i,
                                                 int m, int p, int q, std::size_t bound) {
  auto cd = tensor_operads(c, d, i, m);
  return is_algebra(cd, lifted_product(c.category, i + m, a, b), p, q, bound);
}

// ---------------------------------------------------------------------------
// Operads in N and in Young diagrams

/// Minimal operad in (N; max, +) from seeds C(1..l) = (0, a_2, ..., a_l).
/// Terms past the seeds come from term(n) = max_i term(i) + term(n-i).
/// Throws StructureError naming the first violated inequality among the seeds.
Collection<Nat> minimal_nat(const std::vector<Nat>& seeds, std::size_t bound);

enum class QConvention {
  OneBased,  // n = p*k + q, 1 <= q <= k
  ZeroBased  // n = p*k + q, 0 <= q < k, a_0 = 0
};

/// a_q + p*a_k with k = seeds.size().
Nat closed_form_nat(const std::vector<Nat>& seeds, std::size_t n,
                    QConvention convention = QConvention::OneBased);

enum class YoungMode {
  Enumerate,  // full composition enumeration
  Binary      // C(2) *2 (C(i) *3 C(n-i)); checked against Enumerate for n <= 12
};

/// C(0) = bottom, C(1) = 0, C(2) = b, and each later term the lexicographic
/// max of C(k) *2 (C(j_1) *3 ... *3 C(j_k)) over earlier terms.
Collection<Young> minimal_young(const Young& b, std::size_t bound,
                                YoungMode mode = YoungMode::Enumerate);

/// Column k of C(n) is n/2^k rounded to nearest, halves rounded down.
Young round_formula(std::size_t n);

/// f(1) = 0 and f(i+j) >= f(i) + f(j) for i + j <= bound.
bool suff_check(const std::function<Nat(std::size_t)>& f, std::size_t bound);

/// Predecessor in the order of each carrier: n-1, or bottom for 0.
std::optional<Nat> nat_predecessor(Nat n);

// Operads used in the examples. All put bottom at arity 0.
/// B(j) = j-1 ones in Seq(N,+).
Collection<FinSeq> seq_operad_b(std::size_t bound);
/// C(j) = the one-entry sequence (j-1) in Seq(N,+).
Collection<FinSeq> seq_operad_c(std::size_t bound);
/// C(n) = the (n-1) x (n-1) square in Young diagrams.
Collection<Young> square_operad(std::size_t bound);
/// B(j) = a single row of j-1 boxes in Young diagrams preordered by height.
Collection<Young> height_operad_b(std::size_t bound);
/// C(j) = 0 for j >= 1.
template <class T>
Collection<T> trivial_operad(const PosetCategory<T>& cat, std::size_t bound) {
  Collection<T> c{cat, {Bottomed<T>::bottom()}};
  for (std::size_t j = 1; j <= bound; ++j) c.terms.emplace_back(cat.unit);
  return c;
}

}  // namespace itmon
