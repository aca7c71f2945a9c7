// itmon: generate and verify operads, decide morphisms in free iterated
// monoidal categories, and evaluate interchange inequalities.
//
// Exit status: 0 success, 1 counterexample or non-existence, 2 usage or parse
// error, 3 internal invariant broken.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "itmon/freecat.hpp"
#include "itmon/json_io.hpp"
#include "itmon/operad.hpp"

namespace {

using namespace itmon;

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

std::string relation(std::weak_ordering o) {
  if (o < 0) return "<";
  if (o > 0) return ">";
  return "=";
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

Json parse_object_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::ordered_json::parse_error& e) {
    throw ParseError("object '" + text + "' is not valid JSON", e.byte);
  }
}

std::vector<Nat> parse_csv_nats(const std::string& text) {
  return parse_nat_list("[" + text + "]");
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  std::string kind;
  std::string seeds;
  std::string b = "[1]";
  std::size_t n = 8;
  std::string format = "text";
  std::string mode = "enumerate";
};

template <class T>
void print_terms(const Collection<T>& c, const std::string& format) {
  if (format == "json") {
    std::cout << collection_to_json(c).dump(2) << '\n';
    return;
  }
  if constexpr (std::is_same_v<T, Nat>) {
    if (format == "text") {
      for (std::size_t j = 0; j < c.terms.size(); ++j) {
        std::cout << (j ? " " : "") << format_object(c.terms[j]);
      }
      std::cout << '\n';
      return;
    }
  }
  if constexpr (std::is_same_v<T, Young>) {
    if (format == "ascii") {
      for (std::size_t j = 0; j < c.terms.size(); ++j) {
        std::cout << "C(" << j << ")\n";
        std::cout << (c.terms[j].is_bottom() ? "∅\n" : render_ascii(c.terms[j].value()));
      }
      return;
    }
  }
  if (format == "ascii") throw UsageError("ascii rendering is only available for 2-d diagrams");
  for (std::size_t j = 0; j < c.terms.size(); ++j) {
    std::cout << "C(" << j << ") = " << format_object(c.terms[j]) << '\n';
  }
}

int run_gen(const GenOptions& o) {
  const std::string& k = o.kind;
  if (k == "nat") {
    if (o.seeds.empty()) throw UsageError("gen nat needs --seeds");
    print_terms(minimal_nat(parse_csv_nats(o.seeds), o.n), o.format);
  } else if (k == "young") {
    auto b = ObjectCodec<Young>::decode(parse_object_text(o.b), 0);
    const auto mode = o.mode == "binary" ? YoungMode::Binary : YoungMode::Enumerate;
    print_terms(minimal_young(b, o.n, mode), o.format);
  } else if (k == "seq-b") {
    print_terms(seq_operad_b(o.n), o.format);
  } else if (k == "seq-c") {
    print_terms(seq_operad_c(o.n), o.format);
  } else if (k == "seq-bc") {
    print_terms(tensor_operads(seq_operad_b(o.n), seq_operad_c(o.n), 1, 2), o.format);
  } else if (k == "square") {
    print_terms(square_operad(o.n), o.format);
  } else if (k == "height-b") {
    print_terms(height_operad_b(o.n), o.format);
  } else {
    throw UsageError("unknown kind '" + k + "'");
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string file;
  int p = 1;
  int q = 2;
  std::optional<std::size_t> n;
  int all_pairs = 0;
  std::size_t failures = 0;
  std::string composition;
  unsigned jobs = 1;
  bool json = false;
};

template <class T>
void print_witness(const OperadWitness<T>& w) {
  if (w.kind == OperadWitness<T>::Kind::Unit) {
    std::cout << "counterexample (p,q)=(" << w.p << "," << w.q
              << "): unit axiom, C(1) = " << format_object(w.check.lhs) << " is not the unit "
              << format_object(w.check.rhs) << '\n';
    return;
  }
  std::cout << "counterexample (p,q)=(" << w.p << "," << w.q << "): "
            << format_composition(w.check.composition) << " n=" << w.check.n
            << " lhs=" << format_object(w.check.lhs) << " rhs=" << format_object(w.check.rhs)
            << " lhs > rhs\n";
}

template <class T>
int verify_collection(const Collection<T>& c, const VerifyOptions& o) {
  const std::size_t bound = o.n.value_or(c.bound());
  if (!o.composition.empty()) {
    std::vector<std::size_t> js;
    for (Nat x : parse_csv_nats(o.composition)) js.push_back(static_cast<std::size_t>(x));
    auto check = check_composition(c, o.p, o.q, js);
    const auto ord = lifted_compare(c.category, check.lhs, check.rhs);
    std::cout << format_composition(js) << " n=" << check.n << " lhs=" << format_object(check.lhs)
              << " rhs=" << format_object(check.rhs) << " lhs " << relation(ord) << " rhs\n";
    return ord <= 0 ? kOk : kCounterexample;
  }
  if (o.failures > 0) {
    auto list = find_operad_failures(c, o.p, o.q, bound, o.failures);
    for (const auto& w : list) print_witness(w);
    if (list.empty()) std::cout << "no failures up to arity " << bound << '\n';
    return list.empty() ? kOk : kCounterexample;
  }
  auto v = o.all_pairs ? verify_all_pairs(c, o.all_pairs, bound, o.jobs)
                       : verify_operad(c, o.p, o.q, bound, o.jobs);
  if (o.json) {
    std::cout << verdict_to_json(v).dump(2) << '\n';
  } else if (v) {
    if (o.all_pairs) {
      std::cout << "operad: every pair p<q<=" << o.all_pairs;
    } else {
      std::cout << "operad: (p,q)=(" << o.p << "," << o.q << ")";
    }
    std::cout << " holds for all arities <= " << bound << '\n';
  } else {
    print_witness(v.witness());
  }
  return v ? kOk : kCounterexample;
}

int run_verify(const VerifyOptions& o) {
  auto c = collection_from_json(read_json(o.file));
  return std::visit([&](const auto& x) { return verify_collection(x, o); }, c);
}

// ---------------------------------------------------------------------------
// hom

struct HomOptions {
  std::string source;
  std::string target;
  int n = 2;
  std::string symbols;
};

int run_hom(const HomOptions& o) {
  const Expr a = parse_expr(o.source, o.n);
  const Expr b = parse_expr(o.target, o.n);
  if (!o.symbols.empty()) {
    std::set<std::string> s;
    std::stringstream in(o.symbols);
    for (std::string item; std::getline(in, item, ',');) s.insert(item);
    if (!is_linear(a, s)) throw UsageError("source is not linear over the given symbols");
    if (!is_linear(b, s)) throw UsageError("target is not linear over the given symbols");
  }
  const auto report = hom_report(a, b);
  std::cout << print_expr(a) << " -> " << print_expr(b) << ": "
            << (report.exists ? "exists" : "not-exists") << '\n';
  for (const auto& v : report.violations) {
    std::cout << "  pair (" << v.a << "," << v.b << "): source " << describe(v.in_source, v.a, v.b)
              << ", target " << describe(v.in_target, v.a, v.b) << '\n';
  }
  return report.exists ? kOk : kCounterexample;
}

// ---------------------------------------------------------------------------
// interchange

struct InterchangeOptions {
  std::string category;
  std::size_t dim = 0;
  int p = 0;
  int q = 0;
  std::vector<std::string> objects;
};

int run_interchange(const InterchangeOptions& o) {
  if (o.objects.size() != 4) throw UsageError("interchange needs four objects A B C D");
  const auto any = category_by_name(o.category, o.dim);
  return std::visit(
      [&](const auto& cat) {
        using T = std::decay_t<decltype(cat.unit)>;
        std::vector<T> x;
        for (const auto& s : o.objects) {
          x.push_back(ObjectCodec<T>::decode(parse_object_text(s), category_dim(any)));
        }
        std::vector<std::pair<int, int>> pairs;
        if (o.p || o.q) {
          pairs.emplace_back(o.p, o.q);
        } else {
          for (int p = 1; p <= cat.product_count(); ++p)
            for (int q = p + 1; q <= cat.product_count(); ++q) pairs.emplace_back(p, q);
        }
        bool all = true;
        for (auto [p, q] : pairs) {
          auto s = interchange_sides(cat, p, q, x[0], x[1], x[2], x[3]);
          const std::string P = std::to_string(p), Q = std::to_string(q);
          std::cout << "(A*" << Q << "B)*" << P << "(C*" << Q << "D) = " << format_object(s.lhs) << '\n'
                    << "(A*" << P << "C)*" << Q << "(B*" << P << "D) = " << format_object(s.rhs) << '\n'
                    << "lhs " << relation(s.order) << " rhs\n";
          all = all && s.holds();
        }
        return all ? kOk : kCounterexample;
      },
      any);
}

// ---------------------------------------------------------------------------
// algebra and tensor

struct AlgebraOptions {
  std::string file;
  std::string object;
  int p = 1;
  int q = 2;
  std::optional<std::size_t> n;
};

int run_algebra(const AlgebraOptions& o) {
  auto any = collection_from_json(read_json(o.file));
  return std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c.category.unit)>;
        const auto a = decode_bottomed<T>(parse_object_text(o.object), collection_dim(c));
        const std::size_t bound = o.n.value_or(c.bound());
        auto v = is_algebra(c, a, o.p, o.q, bound);
        if (v) {
          std::cout << "algebra: " << format_object(a) << " for (p,q)=(" << o.p << "," << o.q
                    << ") up to arity " << bound << '\n';
          return kOk;
        }
        const auto& w = v.witness();
        std::cout << "counterexample j=" << w.j << " lhs=" << format_object(w.lhs)
                  << " rhs=" << format_object(w.rhs) << " lhs > rhs\n";
        return kCounterexample;
      },
      any);
}

struct TensorOptions {
  std::string left;
  std::string right;
  int i = 1;
  int m = 2;
};

int run_tensor(const TensorOptions& o) {
  auto c = collection_from_json(read_json(o.left));
  auto d = collection_from_json(read_json(o.right));
  if (c.index() != d.index()) throw UsageError("collections live over different categories");
  return std::visit(
      [&](const auto& x) {
        using C = std::decay_t<decltype(x)>;
        const auto& y = std::get<C>(d);
        if (x.category.name != y.category.name) {
          throw UsageError("collections live over " + x.category.name + " and " + y.category.name);
        }
        std::cout << collection_to_json(tensor_operads(x, y, o.i, o.m)).dump(2) << '\n';
        return kOk;
      },
      c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated monoidal categories and n-fold operads"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate a collection");
  g->add_option("kind", gen.kind, "nat | young | seq-b | seq-c | seq-bc | square | height-b")
      ->required();
  g->add_option("--seeds", gen.seeds, "Seeds C(1..l) for nat, e.g. 0,1");
  g->add_option("--b", gen.b, "Generating diagram for young, as column heights");
  g->add_option("--n", gen.n, "Largest arity")->check(CLI::Range(0, 100000));
  g->add_option("--format", gen.format, "text | json | ascii")
      ->check(CLI::IsMember({"text", "json", "ascii"}));
  g->add_option("--mode", gen.mode, "enumerate | binary (young only)")
      ->check(CLI::IsMember({"enumerate", "binary"}));

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Verify a collection is an operad");
  v->add_option("file", ver.file, "Collection JSON, - for stdin")->required();
  v->add_option("--p", ver.p, "Outer product index");
  v->add_option("--q", ver.q, "Inner product index");
  v->add_option("--n", ver.n, "Largest arity checked (default: collection bound)");
  v->add_option("--all-pairs", ver.all_pairs, "Check every pair p<q<=M");
  v->add_option("--failures", ver.failures, "List up to this many failing compositions");
  v->add_option("--composition", ver.composition, "Check one composition, e.g. 1,3,2");
  v->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1, 256));
  v->add_flag("--json", ver.json, "Print the verdict as JSON");

  HomOptions hom;
  auto* h = app.add_subcommand("hom", "Decide whether a morphism A -> B exists");
  h->add_option("source", hom.source)->required();
  h->add_option("target", hom.target)->required();
  h->add_option("--n", hom.n, "Number of products")->check(CLI::Range(1, 1000));
  h->add_option("--symbols", hom.symbols, "Expected symbol set, e.g. a,b,c");

  InterchangeOptions ich;
  auto* x = app.add_subcommand("interchange", "Evaluate both sides of an interchange");
  x->add_option("--category", ich.category, "nat | seq | seq-nat | young2 | young-height | young3 | youngN")
      ->required();
  x->add_option("--dim", ich.dim, "Array dimension for youngN");
  x->add_option("--p", ich.p, "Outer index (default: every pair)");
  x->add_option("--q", ich.q, "Inner index");
  // One positional per object: a vector option would split "[1,2]" on commas.
  ich.objects.resize(4);
  for (std::size_t i = 0; i < 4; ++i) x->add_option(std::string(1, char('A' + i)), ich.objects[i], "Object as JSON")->required();

  AlgebraOptions alg;
  auto* a = app.add_subcommand("algebra", "Check whether an object is an algebra");
  a->add_option("file", alg.file, "Collection JSON")->required();
  a->add_option("--object", alg.object, "Object as JSON, null for bottom")->required();
  a->add_option("--p", alg.p);
  a->add_option("--q", alg.q);
  a->add_option("--n", alg.n);

  TensorOptions ten;
  auto* t = app.add_subcommand("tensor", "Tensor product of two operads");
  t->add_option("left", ten.left)->required();
  t->add_option("right", ten.right)->required();
  t->add_option("--i", ten.i);
  t->add_option("--m", ten.m, "Fold of the operads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*v) return run_verify(ver);
    if (*h) return run_hom(hom);
    if (*x) return run_interchange(ich);
    if (*a) return run_algebra(alg);
    if (*t) return run_tensor(ten);
  } catch (const itmon::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const itmon::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
