#include "itmon/operad.hpp"

namespace itmon {

namespace {

std::string join(const std::vector<std::size_t>& js) {
  std::string out;
  for (std::size_t i = 0; i < js.size(); ++i) out += (i ? "," : "") + std::to_string(js[i]);
  return out;
}

}  // namespace

Collection<Nat> minimal_nat(const std::vector<Nat>& seeds, std::size_t bound) {
  if (seeds.empty()) throw StructureError("at least the seed C(1) = 0 is required");
  if (seeds.front() != 0) {
    throw StructureError("unit axiom: C(1) must be 0, got " + std::to_string(seeds.front()));
  }
  Collection<Nat> c{nat_category(), {Bottomed<Nat>::bottom()}};
  for (Nat s : seeds) c.terms.emplace_back(s);

  // Every composite among the seeds must already sit below its target.
  for (std::size_t n = 2; n <= seeds.size(); ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      std::string message;
      for_each_composition(n, k, [&](const std::vector<std::size_t>& js) {
        auto check = composite(c, 1, 2, js);
        if (holds(c, check)) return true;
        message = "seeds violate max(C(" + std::to_string(k) + "), C(" + join(js) +
                  ") summed) <= C(" + std::to_string(n) + "): " +
                  std::to_string(check.lhs.value()) + " > " + std::to_string(check.rhs.value());
        return false;
      });
      if (!message.empty()) throw StructureError(message);
    }
  }

  for (std::size_t n = seeds.size() + 1; n <= bound; ++n) {
    Nat best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      best = std::max(best, c.terms[i].value() + c.terms[n - i].value());
    }
    c.terms.emplace_back(best);
  }
  if (c.terms.size() > bound + 1) c.terms.resize(bound + 1);
  return c;
}

Nat closed_form_nat(const std::vector<Nat>& seeds, std::size_t n, QConvention convention) {
  if (seeds.empty()) throw UsageError("closed form needs at least one seed");
  if (n == 0) throw UsageError("closed form is defined for n >= 1");
  const std::size_t k = seeds.size();
  auto a = [&](std::size_t i) -> Nat { return i == 0 ? 0 : seeds[i - 1]; };
  std::size_t p = n / k;
  std::size_t q = n % k;
  if (convention == QConvention::OneBased && q == 0) {
    q = k;
    p -= 1;
  }
  return a(q) + static_cast<Nat>(p) * a(k);
}

namespace {

Collection<Young> binary_extend(Collection<Young> c, std::size_t from, std::size_t bound) {
  const auto& cat = c.category;
  for (std::size_t n = from; n <= bound; ++n) {
    Bottomed<Young> best = Bottomed<Young>::bottom();
    for (std::size_t i = 1; i < n; ++i) {
      auto inner = lifted_product(cat, 3, c(i), c(n - i));
      best = lifted_coproduct(cat, best, lifted_product(cat, 2, c(2), inner));
    }
    c.terms.push_back(best);
  }
  return c;
}

}  // namespace

Collection<Young> minimal_young(const Young& b, std::size_t bound, YoungMode mode) {
  if (b.empty()) throw UsageError("the generating diagram must be nonempty");
  const auto cat = young2_category();
  std::vector<Young> seeds{Young{}, b};
  if (bound < 2) seeds.resize(bound);
  if (mode == YoungMode::Enumerate) return minimal_by_enumeration(cat, 2, 3, seeds, bound);

  // Binary partial composites are trusted only after agreeing with the
  // enumeration on every arity up to 12.
  const std::size_t checked = std::min<std::size_t>(bound, 12);
  auto reference = minimal_by_enumeration(cat, 2, 3, seeds, checked);
  const auto head = static_cast<std::ptrdiff_t>(std::min<std::size_t>(3, reference.terms.size()));
  Collection<Young> prefix{cat, {reference.terms.begin(), reference.terms.begin() + head}};
  auto fast = binary_extend(prefix, prefix.terms.size(), checked);
  for (std::size_t n = 0; n <= checked; ++n) {
    if (!(fast.terms[n] == reference.terms[n])) {
      throw InvariantViolation("binary generation disagrees with enumeration at arity " +
                               std::to_string(n));
    }
  }
  return binary_extend(std::move(reference), checked + 1, bound);
}

Young round_formula(std::size_t n) {
  std::vector<Nat> cols;
  for (std::size_t k = 1; (std::size_t{1} << k) <= 2 * n; ++k) {
    const std::size_t denom = std::size_t{1} << k;
    std::size_t value = n / denom;
    const std::size_t rest = n % denom;
    if (2 * rest > denom) ++value;  // an exact half stays down
    cols.push_back(value);
  }
  return Young(std::move(cols));
}

bool suff_check(const std::function<Nat(std::size_t)>& f, std::size_t bound) {
  if (f(1) != 0) return false;
  for (std::size_t i = 1; i < bound; ++i)
    for (std::size_t j = 1; i + j <= bound; ++j)
      if (f(i + j) < f(i) + f(j)) return false;
  return true;
}

std::optional<Nat> nat_predecessor(Nat n) {
  if (n == 0) return std::nullopt;
  return n - 1;
}

namespace {

template <class T, class F>
Collection<T> build(PosetCategory<T> cat, std::size_t bound, F term) {
  Collection<T> c{std::move(cat), {Bottomed<T>::bottom()}};
  for (std::size_t j = 1; j <= bound; ++j) c.terms.emplace_back(term(j));
  return c;
}

}  // namespace

Collection<FinSeq> seq_operad_b(std::size_t bound) {
  return build(seq_plus_category(), bound,
               [](std::size_t j) { return FinSeq(std::vector<Nat>(j - 1, 1)); });
}

Collection<FinSeq> seq_operad_c(std::size_t bound) {
  return build(seq_plus_category(), bound, [](std::size_t j) { return FinSeq{j - 1}; });
}

Collection<Young> square_operad(std::size_t bound) {
  return build(young2_category(), bound,
               [](std::size_t j) { return Young(std::vector<Nat>(j - 1, j - 1)); });
}

Collection<Young> height_operad_b(std::size_t bound) {
  return build(young_height_category(), bound,
               [](std::size_t j) { return Young(std::vector<Nat>(j - 1, 1)); });
}

}  // namespace itmon
