#pragma once

// The concrete poset categories: natural numbers, sequences, and Young
// diagrams in two, three and n dimensions.

#include <cstddef>

#include "itmon/order.hpp"
#include "itmon/seq.hpp"
#include "itmon/young.hpp"

namespace itmon {

OrderedMonoid<Nat> nat_plus_monoid();
OrderedMonoid<Nat> nat_max_monoid();

/// (N; max, +).
PosetCategory<Nat> nat_category();

/// Seq(N): lexicographic max and concatenation.
PosetCategory<FinSeq> seq_category();

/// Seq(M,+): lexmax, concatenation and pointwise application of the monoid
/// operation. The monoid unit must be 0. Throws StructureError unless the
/// monoid passes its laws and strictly preserves strict order on 0..6.
PosetCategory<FinSeq> seq_plus_category(const OrderedMonoid<Nat>& monoid);
PosetCategory<FinSeq> seq_plus_category();

/// Young diagrams: lexmax, hstack, vstack.
PosetCategory<Young> young2_category();

/// Young diagrams preordered by height: height-max, hstack, vstack.
PosetCategory<Young> young_height_category();

/// 3-d diagrams: zstack, ystack, xstack under row-major lexicographic order.
PosetCategory<Young3> young3_category();

/// Diagrams stored as arrays of dimension `dim`: dim merges, then addition.
PosetCategory<YoungN> youngn_category(std::size_t dim);

}  // namespace itmon
