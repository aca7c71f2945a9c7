#pragma once

// Young diagrams in two, three and n dimensions. A 2-D diagram is stored as
// its non-increasing list of column heights; rows are derived by conjugation.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itmon/order.hpp"

namespace itmon {

using Matrix = std::vector<std::vector<Nat>>;

/// Zero-padded lexicographic comparison of two finite sequences.
std::weak_ordering lex_compare_padded(std::span<const Nat> a, std::span<const Nat> b);

class Young {
 public:
  Young() = default;
  /// Column heights; trailing zeros are dropped, anything non-monotone throws.
  explicit Young(std::vector<Nat> cols);
  static Young from_rows(std::vector<Nat> rows);

  std::span<const Nat> cols() const noexcept { return cols_; }
  std::vector<Nat> rows() const;
  bool empty() const noexcept { return cols_.empty(); }
  Nat height() const noexcept { return cols_.empty() ? 0 : cols_.front(); }
  Nat blocks() const noexcept;

  friend bool operator==(const Young&, const Young&) = default;

 private:
  std::vector<Nat> cols_;
};

/// Merging: the column multisets joined and sorted descending (adds row lengths).
Young hstack(const Young& a, const Young& b);
/// Adds column heights.
Young vstack(const Young& a, const Young& b);
Young ymax(const Young& a, const Young& b);
Young conjugate(const Young& a);
std::weak_ordering lex_compare(const Young& a, const Young& b);

/// Preorder by height (first column).
std::weak_ordering hpre_compare(const Young& a, const Young& b);
/// Max for the height preorder: a when height(b) <= height(a), else b.
Young hmax(const Young& a, const Young& b);

/// Greatest diagram lexicographically below `a` having at most as many blocks.
/// Empty for the empty diagram.
std::optional<Young> lex_predecessor(const Young& a);

/// One line per row, each box drawn as "[]"; the empty diagram renders as "0".
std::string render_ascii(const Young& a);

// ---------------------------------------------------------------------------

/// Three-dimensional diagram: a matrix non-increasing along rows and columns.
/// Rows are stored without trailing zeros; no empty rows are kept.
class Young3 {
 public:
  Young3() = default;
  explicit Young3(Matrix rows);

  const Matrix& rows() const noexcept { return rows_; }
  Nat entry(std::size_t row, std::size_t col) const noexcept;
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
  bool empty() const noexcept { return rows_.empty(); }
  Nat blocks() const noexcept;

  friend bool operator==(const Young3&, const Young3&) = default;

 private:
  Matrix rows_;
};

/// z-axis stacking: vertical concatenation, then each column sorted.
Young3 zstack(const Young3& a, const Young3& b);
/// y-axis stacking: horizontal concatenation, then each row sorted.
Young3 ystack(const Young3& a, const Young3& b);
/// x-axis stacking: entrywise addition.
Young3 xstack(const Young3& a, const Young3& b);
/// Row-major reading, zero-padded to a common shape.
std::weak_ordering lex3_compare(const Young3& a, const Young3& b);
Young3 lex3_max(const Young3& a, const Young3& b);

std::string render_matrix(const Young3& a);

// ---------------------------------------------------------------------------
// Sorting lemmas used by the interchange proofs.

/// max_i min(a[sigma[i]], b[tau[i]]) <= min(max a, max b).
bool check_minmax(std::span<const Nat> a, std::span<const Nat> b,
                  std::span<const std::size_t> sigma, std::span<const std::size_t> tau);

struct MatrixSortSides {
  Matrix rows_then_cols;  // each row sorted, then each column
  Matrix cols_then_rows;  // each column sorted, then each row
  std::weak_ordering order = std::weak_ordering::equivalent;
};

/// Both sort orders of a (ragged, zero-padded) matrix and their row-major order.
MatrixSortSides matrixsort_sides(const Matrix& m);
/// rows-then-columns <= columns-then-rows. Always true; false means a bug.
bool check_matrixsort(const Matrix& m);

// ---------------------------------------------------------------------------

/// n-dimensional diagram as an (n-1)-dimensional array, non-increasing along
/// every axis. Stored densely over its trimmed bounding box, row-major.
class YoungN {
 public:
  YoungN() : YoungN(1) {}
  explicit YoungN(std::size_t dim);
  /// Dense data over `shape` in row-major order. Validates monotonicity and trims.
  YoungN(std::vector<std::size_t> shape, std::vector<Nat> data);

  static YoungN from_young(const Young& y);
  static YoungN from_young3(const Young3& y);
  Young to_young() const;
  Young3 to_young3() const;

  std::size_t dim() const noexcept { return shape_.size(); }
  std::span<const std::size_t> shape() const noexcept { return shape_; }
  std::span<const Nat> data() const noexcept { return data_; }
  Nat at(std::span<const std::size_t> index) const;
  bool empty() const noexcept { return data_.empty(); }
  Nat blocks() const noexcept;

  friend bool operator==(const YoungN&, const YoungN&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::vector<Nat> data_;
};

/// Product k of the (dim+1)-fold category: for k <= dim, merge along axis k-1
/// (concatenate, then sort each line on that axis descending); k = dim+1 adds
/// entrywise.
YoungN nd_product(const YoungN& a, const YoungN& b, int k);
/// Lexicographic order with precedence to lower axes.
std::weak_ordering ndlex_compare(const YoungN& a, const YoungN& b);

}  // namespace itmon
