#include "itmon/categories.hpp"

#include <algorithm>
#include <numeric>

namespace itmon {

OrderedMonoid<Nat> nat_plus_monoid() {
  return {"nat+", natural_order<Nat>(), [](const Nat& a, const Nat& b) { return a + b; }, 0, 0};
}

OrderedMonoid<Nat> nat_max_monoid() {
  return {"natmax", natural_order<Nat>(), [](const Nat& a, const Nat& b) { return std::max(a, b); },
          0, 0};
}

PosetCategory<Nat> nat_category() {
  return {"nat",
          natural_order<Nat>(),
          {[](const Nat& a, const Nat& b) { return std::max(a, b); },
           [](const Nat& a, const Nat& b) { return a + b; }},
          0};
}

namespace {

std::weak_ordering seq_order(const FinSeq& a, const FinSeq& b) { return lex_compare(a, b); }

}  // namespace

PosetCategory<FinSeq> seq_category() {
  return {"seq",
          seq_order,
          {[](const FinSeq& a, const FinSeq& b) { return lex_max(a, b); },
           [](const FinSeq& a, const FinSeq& b) { return concat(a, b); }},
          FinSeq{}};
}

PosetCategory<FinSeq> seq_plus_category(const OrderedMonoid<Nat>& monoid) {
  if (monoid.unit != 0) throw StructureError("monoid " + monoid.name + " must have unit 0");
  std::vector<Nat> domain(7);
  std::iota(domain.begin(), domain.end(), Nat{0});
  auto report = verify_ordered_monoid<Nat>(monoid, domain);
  if (!report.verdict) {
    throw StructureError("monoid " + monoid.name + " violates " + report.verdict.witness().law);
  }
  if (!report.strict_monotone) {
    throw StructureError("monoid " + monoid.name +
                         " does not strictly preserve strict order; pointwise products would "
                         "break functoriality");
  }
  auto op = monoid.op;
  auto cat = seq_category();
  cat.name = "seq-" + monoid.name;
  cat.products.push_back([op](const FinSeq& a, const FinSeq& b) { return pointwise(a, b, op); });
  return cat;
}

PosetCategory<FinSeq> seq_plus_category() {
  auto cat = seq_plus_category(nat_plus_monoid());
  cat.name = "seq-nat";
  return cat;
}

PosetCategory<Young> young2_category() {
  return {"young2",
          [](const Young& a, const Young& b) { return lex_compare(a, b); },
          {ymax, hstack, vstack},
          Young{}};
}

PosetCategory<Young> young_height_category() {
  return {"young-height", hpre_compare, {hmax, hstack, vstack}, Young{}};
}

PosetCategory<Young3> young3_category() {
  return {"young3", lex3_compare, {zstack, ystack, xstack}, Young3{}};
}

PosetCategory<YoungN> youngn_category(std::size_t dim) {
  PosetCategory<YoungN> cat{"youngN", ndlex_compare, {}, YoungN(dim)};
  for (int k = 1; k <= static_cast<int>(dim) + 1; ++k) {
    cat.products.push_back([k](const YoungN& a, const YoungN& b) { return nd_product(a, b, k); });
  }
  return cat;
}

}  // namespace itmon
