#pragma once

// JSON and text forms of objects, collections and verdicts. Bottom is null in
// JSON and "∅" in text.

#include <cstddef>
#include <string>
#include <variant>

#include <json.hpp>

#include "itmon/operad.hpp"

namespace itmon {

using Json = nlohmann::ordered_json;

template <class T>
struct ObjectCodec;

template <>
struct ObjectCodec<Nat> {
  static Json encode(const Nat& x) { return x; }
  static Nat decode(const Json& j, std::size_t dim);
};

template <>
struct ObjectCodec<FinSeq> {
  static Json encode(const FinSeq& x);
  static FinSeq decode(const Json& j, std::size_t dim);
};

template <>
struct ObjectCodec<Young> {
  static Json encode(const Young& x);  // column heights
  static Young decode(const Json& j, std::size_t dim);
};

template <>
struct ObjectCodec<Young3> {
  static Json encode(const Young3& x);  // rows
  static Young3 decode(const Json& j, std::size_t dim);
};

template <>
struct ObjectCodec<YoungN> {
  static Json encode(const YoungN& x);  // nested arrays, depth = dim
  static YoungN decode(const Json& j, std::size_t dim);
};

template <class T>
Json encode(const Bottomed<T>& x) {
  return x.is_bottom() ? Json(nullptr) : ObjectCodec<T>::encode(x.value());
}

template <class T>
Bottomed<T> decode_bottomed(const Json& j, std::size_t dim = 0) {
  if (j.is_null()) return Bottomed<T>::bottom();
  return ObjectCodec<T>::decode(j, dim);
}

template <class T>
std::string format_object(const T& x) {
  return ObjectCodec<T>::encode(x).dump();
}

template <class T>
std::string format_object(const Bottomed<T>& x) {
  return x.is_bottom() ? "∅" : format_object(x.value());
}

// ---------------------------------------------------------------------------
// Categories by name: nat, seq, seq-nat, young2, young-height, young3, youngN.

using AnyCategory = std::variant<PosetCategory<Nat>, PosetCategory<FinSeq>, PosetCategory<Young>,
                                 PosetCategory<Young3>, PosetCategory<YoungN>>;

/// `dim` is the array dimension and only used by youngN.
AnyCategory category_by_name(const std::string& name, std::size_t dim = 0);

/// Array dimension of a youngN category, 0 for everything else.
std::size_t category_dim(const AnyCategory& cat);

using AnyCollection = std::variant<Collection<Nat>, Collection<FinSeq>, Collection<Young>,
                                   Collection<Young3>, Collection<YoungN>>;

template <class T>
std::size_t collection_dim(const Collection<T>& c) {
  if constexpr (std::is_same_v<T, YoungN>) {
    return c.category.unit.dim();
  } else {
    return 0;
  }
}

/// {"category": name, "dim": d (youngN only), "bound": N, "terms": {"0": ..., ...}}
template <class T>
Json collection_to_json(const Collection<T>& c) {
  Json out;
  out["category"] = c.category.name;
  if (const auto d = collection_dim(c)) out["dim"] = d;
  out["bound"] = c.bound();
  Json terms = Json::object();
  for (std::size_t j = 0; j < c.terms.size(); ++j) terms[std::to_string(j)] = encode(c.terms[j]);
  out["terms"] = std::move(terms);
  return out;
}

Json collection_to_json(const AnyCollection& c);

/// Throws UsageError for anything malformed.
AnyCollection collection_from_json(const Json& j);

template <class T>
Json witness_to_json(const OperadWitness<T>& w) {
  Json out;
  out["kind"] = w.kind == OperadWitness<T>::Kind::Unit ? "unit" : "composition";
  out["p"] = w.p;
  out["q"] = w.q;
  out["n"] = w.check.n;
  out["k"] = w.check.k();
  out["composition"] = w.check.composition;
  out["lhs"] = encode(w.check.lhs);
  out["rhs"] = encode(w.check.rhs);
  return out;
}

template <class T>
Json verdict_to_json(const OperadVerdict<T>& v) {
  if (v) return Json{{"status", "success"}};
  return Json{{"status", "counterexample"}, {"witness", witness_to_json(v.witness())}};
}

/// "(k=3, j=(1,3,2))"
std::string format_composition(const std::vector<std::size_t>& composition);

}  // namespace itmon
