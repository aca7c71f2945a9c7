#pragma once

// Ordered monoids, poset categories with several products, the compactification
// that adjoins a bottom object, and the sampled/exhaustive axiom harness shared
// by every concrete category in the library.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "itmon/errors.hpp"

namespace itmon {

using Nat = std::uint64_t;

template <class T>
using Comparator = std::function<std::weak_ordering(const T&, const T&)>;

template <class T>
using BinaryOp = std::function<T(const T&, const T&)>;

template <class T>
using Sampler = std::function<T(std::mt19937_64&)>;

/// Outcome of a verifier: success, or the first counterexample found in the
/// verifier's deterministic enumeration order.
template <class W>
class Verdict {
 public:
  static Verdict success() { return Verdict{}; }
  static Verdict failure(W witness) {
    Verdict v;
    v.witness_ = std::move(witness);
    return v;
  }

  bool ok() const noexcept { return !witness_.has_value(); }
  explicit operator bool() const noexcept { return ok(); }

  const W& witness() const {
    if (!witness_) throw UsageError("successful verdict carries no witness");
    return *witness_;
  }

 private:
  std::optional<W> witness_;
};

/// A value that is either the adjoined initial object (bottom) or an X.
template <class T>
class Bottomed {
 public:
  Bottomed() = default;
  Bottomed(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static Bottomed bottom() { return Bottomed{}; }

  bool is_bottom() const noexcept { return !value_.has_value(); }

  const T& value() const {
    if (!value_) throw UsageError("bottom has no underlying value");
    return *value_;
  }

  friend bool operator==(const Bottomed&, const Bottomed&) = default;

 private:
  std::optional<T> value_;
};

/// Total order, monoid product, unit and least element over one carrier.
template <class T>
struct OrderedMonoid {
  std::string name;
  Comparator<T> compare;
  BinaryOp<T> op;
  T unit;
  T least;
};

/// A category whose morphisms are the relations of a (pre)order and which
/// carries products numbered 1..n sharing a common strict unit.
template <class T>
struct PosetCategory {
  std::string name;
  Comparator<T> compare;
  std::vector<BinaryOp<T>> products;  // products[0] is the first product
  T unit;

  int product_count() const noexcept { return static_cast<int>(products.size()); }

  const BinaryOp<T>& product(int index) const {
    if (index < 1 || index > product_count()) {
      throw UsageError("product index " + std::to_string(index) + " outside 1.." +
                       std::to_string(product_count()) + " for category " + name);
    }
    return products[static_cast<std::size_t>(index - 1)];
  }

  T apply(int index, const T& a, const T& b) const { return product(index)(a, b); }

  bool leq(const T& a, const T& b) const { return compare(a, b) <= 0; }
  bool equivalent(const T& a, const T& b) const { return compare(a, b) == 0; }
};

template <class T>
Comparator<T> natural_order() {
  return [](const T& a, const T& b) -> std::weak_ordering { return a <=> b; };
}

/// The compare-greater of two values; ties keep the first argument.
template <class T, class Compare = std::compare_three_way>
T omax(const T& a, const T& b, Compare cmp = {}) {
  return cmp(a, b) < 0 ? b : a;
}

// ---------------------------------------------------------------------------
// Compactification

template <class T>
std::weak_ordering lifted_compare(const PosetCategory<T>& cat, const Bottomed<T>& a,
                                  const Bottomed<T>& b) {
  if (a.is_bottom() || b.is_bottom()) {
    return b.is_bottom() <=> a.is_bottom();
  }
  return cat.compare(a.value(), b.value());
}

/// Every product annihilates on bottom, including products that were max.
template <class T>
Bottomed<T> lifted_product(const PosetCategory<T>& cat, int index, const Bottomed<T>& a,
                           const Bottomed<T>& b) {
  const auto& op = cat.product(index);
  if (a.is_bottom() || b.is_bottom()) return Bottomed<T>::bottom();
  return op(a.value(), b.value());
}

/// Coproduct of the compactification: max, with bottom as strict unit.
template <class T>
Bottomed<T> lifted_coproduct(const PosetCategory<T>& cat, const Bottomed<T>& a,
                             const Bottomed<T>& b) {
  return lifted_compare(cat, a, b) < 0 ? b : a;
}

template <class T>
PosetCategory<Bottomed<T>> compactify(const PosetCategory<T>& cat) {
  PosetCategory<Bottomed<T>> out;
  out.name = cat.name + "+bottom";
  out.compare = [cat](const Bottomed<T>& a, const Bottomed<T>& b) {
    return lifted_compare(cat, a, b);
  };
  for (int i = 1; i <= cat.product_count(); ++i) {
    out.products.push_back([cat, i](const Bottomed<T>& a, const Bottomed<T>& b) {
      return lifted_product(cat, i, a, b);
    });
  }
  out.unit = Bottomed<T>(cat.unit);
  return out;
}

// ---------------------------------------------------------------------------
// Interchange

template <class T>
struct InterchangeSides {
  T lhs;  // (A *q B) *p (C *q D)
  T rhs;  // (A *p C) *q (B *p D)
  std::weak_ordering order = std::weak_ordering::equivalent;

  bool holds() const noexcept { return order <= 0; }
};

/// Existence of the interchanger for two products over one order:
/// (A *q B) *p (C *q D) <= (A *p C) *q (B *p D).
template <class T, class ProdP, class ProdQ, class Compare>
bool check_interchange(const ProdP& prod_p, const ProdQ& prod_q, const Compare& cmp, const T& a,
                       const T& b, const T& c, const T& d) {
  T lhs = prod_p(prod_q(a, b), prod_q(c, d));
  T rhs = prod_q(prod_p(a, c), prod_p(b, d));
  return cmp(lhs, rhs) <= 0;
}

template <class T>
InterchangeSides<T> interchange_sides(const PosetCategory<T>& cat, int p, int q, const T& a,
                                      const T& b, const T& c, const T& d) {
  if (p >= q) {
    throw UsageError("interchange needs p < q, got p=" + std::to_string(p) +
                     " q=" + std::to_string(q));
  }
  const auto& pp = cat.product(p);
  const auto& pq = cat.product(q);
  InterchangeSides<T> s{pp(pq(a, b), pq(c, d)), pq(pp(a, c), pp(b, d))};
  s.order = cat.compare(s.lhs, s.rhs);
  return s;
}

template <class T>
bool check_interchange(const PosetCategory<T>& cat, int p, int q, const T& a, const T& b,
                       const T& c, const T& d) {
  return interchange_sides(cat, p, q, a, b, c, d).holds();
}

// ---------------------------------------------------------------------------
// Axiom harness

template <class T>
struct LawViolation {
  std::string law;
  std::vector<T> args;
  std::optional<T> lhs;
  std::optional<T> rhs;
};

template <class T>
struct MonoidReport {
  Verdict<LawViolation<T>> verdict;
  // Set only when the verdict succeeded and every sampled 0<a<b, c<=d gave a
  // strict increase on both sides.
  bool strict_monotone = false;
};

namespace detail {

template <class T>
using LawResult = std::optional<LawViolation<T>>;

template <class T>
LawViolation<T> violation(std::string law, std::vector<T> args, std::optional<T> lhs = {},
                          std::optional<T> rhs = {}) {
  return LawViolation<T>{std::move(law), std::move(args), std::move(lhs), std::move(rhs)};
}

template <class T>
std::pair<T, T> ordered_pair(const Comparator<T>& cmp, const T& x, const T& y) {
  return cmp(x, y) <= 0 ? std::pair<T, T>{x, y} : std::pair<T, T>{y, x};
}

// Order axioms on a tuple. Totality is structural: compare always answers.
template <class T>
LawResult<T> order_laws(const Comparator<T>& cmp, const T& a, const T& b, const T& c) {
  if (cmp(a, a) != 0) return violation<T>("reflexivity", {a});
  if (cmp(a, b) == 0 && !(a == b)) return violation<T>("antisymmetry", {a, b});
  if (cmp(a, b) != (0 <=> cmp(b, a))) return violation<T>("order duality", {a, b});
  if (cmp(a, b) <= 0 && cmp(b, c) <= 0 && cmp(a, c) > 0) {
    return violation<T>("transitivity", {a, b, c});
  }
  return std::nullopt;
}

template <class T>
LawResult<T> product_laws(const std::string& label, const Comparator<T>& cmp, const BinaryOp<T>& op,
                          const T& unit, const T& a, const T& b, const T& c, const T& d) {
  T left = op(op(a, b), c);
  T right = op(a, op(b, c));
  if (!(left == right)) return violation<T>(label + " associativity", {a, b, c}, left, right);
  T ua = op(unit, a);
  if (!(ua == a)) return violation<T>(label + " left unit", {a}, ua, a);
  T au = op(a, unit);
  if (!(au == a)) return violation<T>(label + " right unit", {a}, au, a);
  auto [lo1, hi1] = ordered_pair(cmp, a, b);
  auto [lo2, hi2] = ordered_pair(cmp, c, d);
  T small = op(lo1, lo2);
  T large = op(hi1, hi2);
  if (cmp(small, large) > 0) {
    return violation<T>(label + " functoriality", {lo1, hi1, lo2, hi2}, small, large);
  }
  return std::nullopt;
}

template <class T>
bool strictness_holds(const Comparator<T>& cmp, const BinaryOp<T>& op, const T& unit, const T& a,
                      const T& b, const T& c, const T& d) {
  auto [lo, hi] = ordered_pair(cmp, a, b);
  auto [lo2, hi2] = ordered_pair(cmp, c, d);
  if (!(cmp(unit, lo) < 0 && cmp(lo, hi) < 0)) return true;
  return cmp(op(lo, lo2), op(hi, hi2)) < 0 && cmp(op(lo2, lo), op(hi2, hi)) < 0;
}

template <class T>
LawResult<T> monoid_tuple(const OrderedMonoid<T>& m, const T& a, const T& b, const T& c,
                          const T& d) {
  if (auto v = order_laws(m.compare, a, b, c)) return v;
  if (m.compare(m.least, a) > 0) return violation<T>("least element", {m.least, a});
  return product_laws<T>(m.name, m.compare, m.op, m.unit, a, b, c, d);
}

// Interchange for one pair p < q plus the internal/external unit conditions.
template <class T>
LawResult<T> interchange_tuple(const PosetCategory<T>& cat, int p, int q, const T& a, const T& b,
                               const T& c, const T& d) {
  const std::string tag = std::to_string(p) + "<" + std::to_string(q);
  auto s = interchange_sides(cat, p, q, a, b, c, d);
  if (!s.holds()) return violation<T>("interchange " + tag, {a, b, c, d}, s.lhs, s.rhs);
  const T& u = cat.unit;
  // Both legs of each unit condition must coincide.
  const std::pair<const char*, std::vector<T>> unit_cases[] = {
      {"internal unit", {a, b, u, u}},
      {"internal unit", {u, u, a, b}},
      {"external unit", {a, u, b, u}},
      {"external unit", {u, a, u, b}},
  };
  for (const auto& [law, args] : unit_cases) {
    auto us = interchange_sides(cat, p, q, args[0], args[1], args[2], args[3]);
    if (!(us.lhs == us.rhs)) return violation<T>(std::string(law) + " " + tag, args, us.lhs, us.rhs);
  }
  return std::nullopt;
}

template <class T>
LawResult<T> nfold_tuple(const PosetCategory<T>& cat, const T& a, const T& b, const T& c,
                         const T& d) {
  if (auto v = order_laws(cat.compare, a, b, c)) return v;
  const int n = cat.product_count();
  for (int i = 1; i <= n; ++i) {
    if (auto v = product_laws<T>("product " + std::to_string(i), cat.compare, cat.product(i),
                                 cat.unit, a, b, c, d)) {
      return v;
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n; ++q) {
      if (auto v = interchange_tuple(cat, p, q, a, b, c, d)) return v;
    }
  }
  return std::nullopt;
}

// Calls f on every 4-tuple of the domain in lexicographic index order; stops at
// the first violation.
template <class T, class F>
auto scan_exhaustive(std::span<const T> domain, F&& f) -> LawResult<T> {
  for (const T& a : domain)
    for (const T& b : domain)
      for (const T& c : domain)
        for (const T& d : domain)
          if (auto v = f(a, b, c, d)) return v;
  return std::nullopt;
}

}  // namespace detail

template <class T>
MonoidReport<T> verify_ordered_monoid(const OrderedMonoid<T>& m, const Sampler<T>& sampler,
                                      std::size_t trials, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  bool strict = true;
  for (std::size_t t = 0; t < trials; ++t) {
    T a = sampler(rng), b = sampler(rng), c = sampler(rng), d = sampler(rng);
    if (auto v = detail::monoid_tuple(m, a, b, c, d)) {
      return {Verdict<LawViolation<T>>::failure(std::move(*v)), false};
    }
    strict = strict && detail::strictness_holds(m.compare, m.op, m.unit, a, b, c, d);
  }
  return {Verdict<LawViolation<T>>::success(), strict};
}

/// Exhaustive mode: every 4-tuple over the given finite domain.
template <class T>
MonoidReport<T> verify_ordered_monoid(const OrderedMonoid<T>& m, std::span<const T> domain) {
  bool strict = true;
  auto v = detail::scan_exhaustive<T>(domain, [&](const T& a, const T& b, const T& c, const T& d) {
    auto r = detail::monoid_tuple(m, a, b, c, d);
    if (!r) strict = strict && detail::strictness_holds(m.compare, m.op, m.unit, a, b, c, d);
    return r;
  });
  if (v) return {Verdict<LawViolation<T>>::failure(std::move(*v)), false};
  return {Verdict<LawViolation<T>>::success(), strict};
}

/// Checks order axioms, associativity/unit/functoriality of every product,
/// interchange for every pair p < q and the internal/external unit conditions.
/// Pentagon-style coherence diagrams commute automatically in a poset.
template <class T>
Verdict<LawViolation<T>> verify_nfold(const PosetCategory<T>& cat, const Sampler<T>& sampler,
                                      std::size_t trials, std::uint64_t seed = 0x5eed) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    T a = sampler(rng), b = sampler(rng), c = sampler(rng), d = sampler(rng);
    if (auto v = detail::nfold_tuple(cat, a, b, c, d)) {
      return Verdict<LawViolation<T>>::failure(std::move(*v));
    }
  }
  return Verdict<LawViolation<T>>::success();
}

template <class T>
Verdict<LawViolation<T>> verify_nfold(const PosetCategory<T>& cat, std::span<const T> domain) {
  auto v = detail::scan_exhaustive<T>(domain, [&](const T& a, const T& b, const T& c,
                                                  const T& d) {
    return detail::nfold_tuple(cat, a, b, c, d);
  });
  if (v) return Verdict<LawViolation<T>>::failure(std::move(*v));
  return Verdict<LawViolation<T>>::success();
}

}  // namespace itmon
