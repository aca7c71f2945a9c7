#include "itmon/json_io.hpp"

#include <algorithm>

namespace itmon {

namespace {

Nat to_nat(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw UsageError("expected a non-negative integer, got " + j.dump());
  }
  return j.get<Nat>();
}

std::vector<Nat> to_nat_list(const Json& j) {
  if (!j.is_array()) throw UsageError("expected an array of non-negative integers, got " + j.dump());
  std::vector<Nat> out;
  for (const Json& x : j) out.push_back(to_nat(x));
  return out;
}

// Shape of a possibly ragged nested array of the given depth.
void measure(const Json& j, std::size_t depth, std::vector<std::size_t>& shape) {
  if (!j.is_array()) throw UsageError("expected nested arrays of depth " + std::to_string(shape.size()));
  shape[depth] = std::max(shape[depth], j.size());
  if (depth + 1 < shape.size())
    for (const Json& x : j) measure(x, depth + 1, shape);
}

void fill(const Json& j, std::size_t depth, const std::vector<std::size_t>& shape,
          std::size_t offset, std::vector<Nat>& data) {
  std::size_t stride = 1;
  for (std::size_t a = depth + 1; a < shape.size(); ++a) stride *= shape[a];
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (depth + 1 == shape.size()) {
      data[offset + i] = to_nat(j[i]);
    } else {
      fill(j[i], depth + 1, shape, offset + i * stride, data);
    }
  }
}

Json nest(const YoungN& y, std::size_t depth, std::vector<std::size_t>& index) {
  Json out = Json::array();
  for (std::size_t i = 0; i < y.shape()[depth]; ++i) {
    index[depth] = i;
    if (depth + 1 == y.dim()) {
      out.push_back(y.at(index));
    } else {
      out.push_back(nest(y, depth + 1, index));
    }
  }
  return out;
}

}  // namespace

Nat ObjectCodec<Nat>::decode(const Json& j, std::size_t) { return to_nat(j); }

Json ObjectCodec<FinSeq>::encode(const FinSeq& x) {
  return Json(std::vector<Nat>(x.entries().begin(), x.entries().end()));
}

FinSeq ObjectCodec<FinSeq>::decode(const Json& j, std::size_t) { return FinSeq(to_nat_list(j)); }

Json ObjectCodec<Young>::encode(const Young& x) {
  return Json(std::vector<Nat>(x.cols().begin(), x.cols().end()));
}

Young ObjectCodec<Young>::decode(const Json& j, std::size_t) { return Young(to_nat_list(j)); }

Json ObjectCodec<Young3>::encode(const Young3& x) { return Json(x.rows()); }

Young3 ObjectCodec<Young3>::decode(const Json& j, std::size_t) {
  if (!j.is_array()) throw UsageError("expected an array of rows, got " + j.dump());
  Matrix rows;
  for (const Json& r : j) rows.push_back(to_nat_list(r));
  return Young3(std::move(rows));
}

Json ObjectCodec<YoungN>::encode(const YoungN& x) {
  if (x.empty()) {
    Json out = Json::array();
    return out;
  }
  std::vector<std::size_t> index(x.dim(), 0);
  return nest(x, 0, index);
}

YoungN ObjectCodec<YoungN>::decode(const Json& j, std::size_t dim) {
  if (dim == 0) throw UsageError("n-dimensional diagram needs a dimension");
  std::vector<std::size_t> shape(dim, 0);
  measure(j, 0, shape);
  std::size_t volume = 1;
  for (std::size_t s : shape) volume *= s;
  std::vector<Nat> data(volume, 0);
  if (volume) fill(j, 0, shape, 0, data);
  return YoungN(std::move(shape), std::move(data));
}

// ---------------------------------------------------------------------------

AnyCategory category_by_name(const std::string& name, std::size_t dim) {
  if (name == "nat") return nat_category();
  if (name == "seq") return seq_category();
  if (name == "seq-nat") return seq_plus_category();
  if (name == "young2") return young2_category();
  if (name == "young-height") return young_height_category();
  if (name == "young3") return young3_category();
  if (name == "youngN") {
    if (dim == 0) throw UsageError("category youngN needs --dim >= 1");
    return youngn_category(dim);
  }
  throw UsageError("unknown category '" + name +
                   "' (expected nat, seq, seq-nat, young2, young-height, young3 or youngN)");
}

std::size_t category_dim(const AnyCategory& cat) {
  if (const auto* y = std::get_if<PosetCategory<YoungN>>(&cat)) return y->unit.dim();
  return 0;
}

Json collection_to_json(const AnyCollection& c) {
  return std::visit([](const auto& x) { return collection_to_json(x); }, c);
}

AnyCollection collection_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw UsageError("collection must be a JSON object");
    const std::string name = j.at("category").get<std::string>();
    const std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : 0;
    const std::size_t bound = j.at("bound").get<std::size_t>();
    const Json& terms = j.at("terms");
    if (!terms.is_object()) throw UsageError("collection terms must be an object keyed by arity");
    return std::visit(
        [&](auto cat) -> AnyCollection {
          using T = std::decay_t<decltype(cat.unit)>;
          Collection<T> c{std::move(cat), {}};
          for (std::size_t a = 0; a <= bound; ++a) {
            const std::string key = std::to_string(a);
            if (!terms.contains(key)) throw UsageError("collection has no term for arity " + key);
            c.terms.push_back(decode_bottomed<T>(terms.at(key), dim));
          }
          if (terms.size() != bound + 1) {
            throw UsageError("collection terms do not match bound " + std::to_string(bound));
          }
          return c;
        },
        category_by_name(name, dim));
  } catch (const nlohmann::ordered_json::exception& e) {
    throw UsageError(std::string("malformed collection: ") + e.what());
  }
}

std::string format_composition(const std::vector<std::size_t>& composition) {
  std::string out = "(k=" + std::to_string(composition.size()) + ", j=(";
  for (std::size_t i = 0; i < composition.size(); ++i) {
    out += (i ? "," : "") + std::to_string(composition[i]);
  }
  return out + "))";
}

}  // namespace itmon
