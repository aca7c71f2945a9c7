#include "itmon/freecat.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "itmon/errors.hpp"

namespace itmon {

Expr Expr::symbol(std::string name) {
  if (name.empty() || name == "0") throw UsageError("invalid symbol name '" + name + "'");
  Expr e;
  e.kind_ = Kind::Symbol;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::product(int index, std::vector<Expr> factors) {
  if (index < 1) throw UsageError("product index must be >= 1");
  Expr e;
  e.kind_ = Kind::Product;
  e.index_ = index;
  e.factors_ = std::move(factors);
  return e;
}

Expr Expr::normalized() const {
  if (kind_ != Kind::Product) return *this;
  std::vector<Expr> flat;
  for (const Expr& f : factors_) {
    Expr g = f.normalized();
    if (g.is_unit()) continue;
    if (g.kind_ == Kind::Product && g.index_ == index_) {
      flat.insert(flat.end(), g.factors_.begin(), g.factors_.end());
    } else {
      flat.push_back(std::move(g));
    }
  }
  if (flat.empty()) return Expr{};
  if (flat.size() == 1) return std::move(flat.front());
  return product(index_, std::move(flat));
}

bool Expr::is_normalized() const {
  if (kind_ != Kind::Product) return true;
  if (factors_.size() < 2) return false;
  return std::all_of(factors_.begin(), factors_.end(), [this](const Expr& f) {
    return !f.is_unit() && !(f.kind_ == Kind::Product && f.index_ == index_) && f.is_normalized();
  });
}

int Expr::max_index() const {
  int m = index_;
  for (const Expr& f : factors_) m = std::max(m, f.max_index());
  return m;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e.normalized();
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expr expr() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') return group();
    if (c == '0') {
      ++pos_;
      if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        throw ParseError("identifiers may not start with a digit", pos_ - 1);
      }
      return Expr::unit();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return Expr::symbol(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr group() {
    ++pos_;  // '('
    std::vector<Expr> factors{expr()};
    int index = 0;
    std::size_t first_index_pos = 0;
    while (!peek(')')) {
      if (!peek('*')) throw ParseError("expected '*' or ')'", pos_);
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      int k = 0;
      auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), k);
      if (ec != std::errc{}) throw ParseError("expected a product index after '*'", pos_);
      pos_ = static_cast<std::size_t>(end - text_.data());
      if (index == 0) {
        index = k;
        first_index_pos = at;
      } else if (k != index) {
        throw ParseError("mixed product indices " + std::to_string(index) + " and " +
                             std::to_string(k) + " in one group (index at " +
                             std::to_string(first_index_pos) + ")",
                         at);
      }
      if (k < 1 || k > n_) {
        throw UsageError("product index " + std::to_string(k) + " outside 1.." +
                         std::to_string(n_) + " at position " + std::to_string(at));
      }
      factors.push_back(expr());
    }
    ++pos_;  // ')'
    if (factors.size() < 2) throw ParseError("a group needs at least two factors", pos_ - 1);
    return Expr::product(index, std::move(factors));
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

void collect(const Expr& e, std::vector<std::string>& out) {
  if (e.kind() == Expr::Kind::Symbol) out.push_back(e.name());
  for (const Expr& f : e.factors()) collect(f, out);
}

Expr keep_only(const Expr& e, const std::string& a, const std::string& b) {
  switch (e.kind()) {
    case Expr::Kind::Unit:
      return e;
    case Expr::Kind::Symbol:
      return (e.name() == a || e.name() == b) ? e : Expr::unit();
    case Expr::Kind::Product: {
      std::vector<Expr> factors;
      for (const Expr& f : e.factors()) factors.push_back(keep_only(f, a, b));
      return Expr::product(e.index(), std::move(factors));
    }
  }
  return e;
}

}  // namespace

Expr parse_expr(std::string_view text, int n) { return Parser(text, n).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Unit:
      return "0";
    case Expr::Kind::Symbol:
      return e.name();
    case Expr::Kind::Product: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.factors().size(); ++i) {
        if (i) out += " *" + std::to_string(e.index()) + " ";
        out += print_expr(e.factors()[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::vector<std::string> symbol_occurrences(const Expr& e) {
  std::vector<std::string> out;
  collect(e, out);
  return out;
}

std::set<std::string> symbol_set(const Expr& e) {
  auto occ = symbol_occurrences(e);
  return {occ.begin(), occ.end()};
}

bool is_linear(const Expr& e, const std::set<std::string>& symbols) {
  auto occ = symbol_occurrences(e);
  std::sort(occ.begin(), occ.end());
  return std::equal(occ.begin(), occ.end(), symbols.begin(), symbols.end());
}

bool is_linear(const Expr& e) { return is_linear(e, symbol_set(e)); }

std::string describe(const PairShape& s, std::string_view a, std::string_view b) {
  const std::string sa(a), sb(b);
  switch (s.kind) {
    case PairShape::Kind::AB:
      return sa + " *" + std::to_string(s.index) + " " + sb;
    case PairShape::Kind::BA:
      return sb + " *" + std::to_string(s.index) + " " + sa;
    case PairShape::Kind::OnlyA:
      return sa;
    case PairShape::Kind::OnlyB:
      return sb;
    case PairShape::Kind::Empty:
      return "0";
  }
  return {};
}

PairShape restrict_pair(const Expr& e, const std::string& a, const std::string& b) {
  if (a == b) throw UsageError("restriction needs two distinct symbols");
  const Expr r = keep_only(e, a, b).normalized();
  switch (r.kind()) {
    case Expr::Kind::Unit:
      return {PairShape::Kind::Empty, 0};
    case Expr::Kind::Symbol:
      return {r.name() == a ? PairShape::Kind::OnlyA : PairShape::Kind::OnlyB, 0};
    case Expr::Kind::Product:
      break;
  }
  if (r.factors().size() != 2 || r.factors()[0].kind() != Expr::Kind::Symbol ||
      r.factors()[1].kind() != Expr::Kind::Symbol) {
    throw UsageError("restriction of a non-linear expression to {" + a + "," + b + "}");
  }
  const std::string& first = r.factors()[0].name();
  const std::string& second = r.factors()[1].name();
  if (first == second) throw UsageError("symbol '" + first + "' occurs twice");
  return {first == a ? PairShape::Kind::AB : PairShape::Kind::BA, r.index()};
}

// ---------------------------------------------------------------------------
// Pair table

PairTable::PairTable(const Expr& e) {
  std::map<std::string, std::vector<Step>> found;
  std::vector<Step> path;
  std::size_t counter = 0;
  auto walk = [&](auto&& self, const Expr& node) -> void {
    if (node.kind() == Expr::Kind::Symbol) {
      if (!found.emplace(node.name(), path).second) {
        throw UsageError("symbol '" + node.name() + "' occurs more than once");
      }
      return;
    }
    if (node.kind() != Expr::Kind::Product) return;
    const std::size_t id = counter++;
    for (std::size_t i = 0; i < node.factors().size(); ++i) {
      path.push_back({id, node.index(), i});
      self(self, node.factors()[i]);
      path.pop_back();
    }
  };
  walk(walk, e);
  for (auto& [name, p] : found) {
    symbols_.push_back(name);
    paths_.push_back(std::move(p));
  }
}

PairShape PairTable::shape(const std::string& a, const std::string& b) const {
  if (a == b) throw UsageError("pair shape needs two distinct symbols");
  auto locate = [this](const std::string& s) -> const std::vector<Step>* {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) return nullptr;
    return &paths_[static_cast<std::size_t>(it - symbols_.begin())];
  };
  const auto* pa = locate(a);
  const auto* pb = locate(b);
  if (!pa && !pb) return {PairShape::Kind::Empty, 0};
  if (!pb) return {PairShape::Kind::OnlyA, 0};
  if (!pa) return {PairShape::Kind::OnlyB, 0};
  // Walk both root paths down to where they separate.
  for (std::size_t d = 0; d < std::min(pa->size(), pb->size()); ++d) {
    const Step& sa = (*pa)[d];
    const Step& sb = (*pb)[d];
    if (sa.child != sb.child) {
      return {sa.child < sb.child ? PairShape::Kind::AB : PairShape::Kind::BA, sa.index};
    }
  }
  throw InvariantViolation("symbols '" + a + "' and '" + b + "' share a leaf");
}

// ---------------------------------------------------------------------------
// Decision procedure

namespace {

// Condition for one pair: x *i y in the source needs x *j y (j >= i) or
// y *j x (j > i) in the target.
bool pair_allowed(const PairShape& src, const PairShape& dst) {
  if (src.kind != PairShape::Kind::AB && src.kind != PairShape::Kind::BA) return true;
  if (dst.kind != PairShape::Kind::AB && dst.kind != PairShape::Kind::BA) return false;
  const bool same_order = src.kind == dst.kind;
  return same_order ? dst.index >= src.index : dst.index > src.index;
}

std::vector<std::string> common_symbols(const Expr& source, const Expr& target) {
  if (!is_linear(source)) throw UsageError("source expression is not linear: " + print_expr(source));
  if (!is_linear(target)) throw UsageError("target expression is not linear: " + print_expr(target));
  auto s = symbol_set(source);
  if (s != symbol_set(target)) throw UsageError("source and target use different symbol sets");
  return {s.begin(), s.end()};
}

}  // namespace

HomReport hom_report(const Expr& source, const Expr& target) {
  const auto symbols = common_symbols(source, target);
  const PairTable ts(source), tt(target);
  HomReport report;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      const auto s = ts.shape(symbols[i], symbols[j]);
      const auto t = tt.shape(symbols[i], symbols[j]);
      if (!pair_allowed(s, t)) {
        report.exists = false;
        report.violations.push_back({symbols[i], symbols[j], s, t});
      }
    }
  }
  return report;
}

bool morphism_exists(const Expr& source, const Expr& target) {
  return hom_report(source, target).exists;
}

bool morphism_exists_reference(const Expr& source, const Expr& target) {
  const auto symbols = common_symbols(source, target);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    for (std::size_t j = i + 1; j < symbols.size(); ++j) {
      if (!pair_allowed(restrict_pair(source, symbols[i], symbols[j]),
                        restrict_pair(target, symbols[i], symbols[j]))) {
        return false;
      }
    }
  }
  return true;
}

int hom_count(const Expr& source, const Expr& target) {
  return morphism_exists(source, target) ? 1 : 0;
}

}  // namespace itmon
