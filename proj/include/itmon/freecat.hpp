#pragma once

// Expressions of the free strict n-fold monoidal category on a symbol set,
// restriction to symbol pairs, and the pairwise decision procedure for the
// existence of a morphism between linear expressions.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace itmon {

class Expr {
 public:
  enum class Kind { Unit, Symbol, Product };

  Expr() = default;  // the empty expression
  static Expr unit() { return Expr{}; }
  static Expr symbol(std::string name);
  /// Raw product node; call normalized() to flatten and drop units.
  static Expr product(int index, std::vector<Expr> factors);

  Kind kind() const noexcept { return kind_; }
  bool is_unit() const noexcept { return kind_ == Kind::Unit; }
  const std::string& name() const noexcept { return name_; }
  int index() const noexcept { return index_; }
  const std::vector<Expr>& factors() const noexcept { return factors_; }

  /// Strict units and associativity: no unit factors, no factor sharing its
  /// parent's index, every product with at least two factors.
  Expr normalized() const;
  bool is_normalized() const;

  /// Largest product index used, 0 when there is none.
  int max_index() const;

  friend bool operator==(const Expr&, const Expr&) = default;

 private:
  Kind kind_ = Kind::Unit;
  std::string name_;
  int index_ = 0;
  std::vector<Expr> factors_;
};

/// expr := "0" | IDENT | "(" expr ("*" INT expr)+ ")", one index per group.
/// Syntax errors throw ParseError; indices outside 1..n throw UsageError.
Expr parse_expr(std::string_view text, int n);
std::string print_expr(const Expr& e);

/// Symbols in order of first occurrence, with repetitions.
std::vector<std::string> symbol_occurrences(const Expr& e);
std::set<std::string> symbol_set(const Expr& e);

/// Every symbol of `symbols` occurs exactly once and nothing else occurs.
bool is_linear(const Expr& e, const std::set<std::string>& symbols);
/// Linear over its own symbols.
bool is_linear(const Expr& e);

struct PairShape {
  enum class Kind { AB, BA, OnlyA, OnlyB, Empty };
  Kind kind = Kind::Empty;
  int index = 0;  // product index for AB / BA

  friend bool operator==(const PairShape&, const PairShape&) = default;
};

std::string describe(const PairShape& s, std::string_view a, std::string_view b);

/// Reference restriction: every other symbol becomes the unit, then normalize.
PairShape restrict_pair(const Expr& e, const std::string& a, const std::string& b);

/// Shapes of every ordered pair (a, b), a < b, computed in one pass from the
/// lowest common ancestor of a and b.
class PairTable {
 public:
  explicit PairTable(const Expr& e);

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  PairShape shape(const std::string& a, const std::string& b) const;

 private:
  struct Step {
    std::size_t node;  // preorder number of a product node
    int index;
    std::size_t child;
  };
  std::vector<std::string> symbols_;  // sorted
  std::vector<std::vector<Step>> paths_;
};

struct PairViolation {
  std::string a;
  std::string b;
  PairShape in_source;
  PairShape in_target;
};

struct HomReport {
  bool exists = true;
  std::vector<PairViolation> violations;  // every failing pair, a < b
};

/// Decides existence of a morphism source -> target. Both must be linear over
/// the same symbols, otherwise UsageError.
HomReport hom_report(const Expr& source, const Expr& target);
bool morphism_exists(const Expr& source, const Expr& target);
/// Same decision through restrict_pair on every pair.
bool morphism_exists_reference(const Expr& source, const Expr& target);
/// There is at most one morphism.
int hom_count(const Expr& source, const Expr& target);

}  // namespace itmon
