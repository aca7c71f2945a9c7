#include "itmon/young.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "itmon/seq.hpp"

namespace itmon {

namespace {

void trim_zeros(std::vector<Nat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

bool non_increasing(std::span<const Nat> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<Nat>{});
}

Nat padded(std::span<const Nat> v, std::size_t i) { return i < v.size() ? v[i] : 0; }

}  // namespace

std::weak_ordering lex_compare_padded(std::span<const Nat> a, std::span<const Nat> b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = padded(a, i) <=> padded(b, i); c != 0) return c;
  }
  return std::weak_ordering::equivalent;
}

// ---------------------------------------------------------------------------
// Young

Young::Young(std::vector<Nat> cols) : cols_(std::move(cols)) {
  trim_zeros(cols_);
  if (!non_increasing(cols_)) {
    throw UsageError("column heights must be non-increasing: " + format_nat_list(cols_));
  }
}

Young Young::from_rows(std::vector<Nat> rows) { return conjugate(Young(std::move(rows))); }

std::vector<Nat> Young::rows() const {
  const Young c = conjugate(*this);
  return {c.cols().begin(), c.cols().end()};
}

Nat Young::blocks() const noexcept { return std::accumulate(cols_.begin(), cols_.end(), Nat{0}); }

Young hstack(const Young& a, const Young& b) {
  std::vector<Nat> out;
  out.reserve(a.cols().size() + b.cols().size());
  std::merge(a.cols().begin(), a.cols().end(), b.cols().begin(), b.cols().end(),
             std::back_inserter(out), std::greater<Nat>{});
  return Young(std::move(out));
}

Young vstack(const Young& a, const Young& b) {
  const std::size_t n = std::max(a.cols().size(), b.cols().size());
  std::vector<Nat> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = padded(a.cols(), i) + padded(b.cols(), i);
  return Young(std::move(out));
}

std::weak_ordering lex_compare(const Young& a, const Young& b) {
  return lex_compare_padded(a.cols(), b.cols());
}

Young ymax(const Young& a, const Young& b) { return lex_compare(a, b) < 0 ? b : a; }

Young conjugate(const Young& a) {
  std::vector<Nat> out(static_cast<std::size_t>(a.height()), 0);
  for (Nat h : a.cols())
    for (Nat r = 0; r < h; ++r) ++out[static_cast<std::size_t>(r)];
  return Young(std::move(out));
}

std::weak_ordering hpre_compare(const Young& a, const Young& b) { return a.height() <=> b.height(); }

Young hmax(const Young& a, const Young& b) { return hpre_compare(b, a) <= 0 ? a : b; }

std::optional<Young> lex_predecessor(const Young& a) {
  if (a.empty()) return std::nullopt;
  std::vector<Nat> cols(a.cols().begin(), a.cols().end());
  if (cols.back() == 1) {
    cols.pop_back();
  } else {
    cols.back() -= 1;
    cols.push_back(1);
  }
  return Young(std::move(cols));
}

std::string render_ascii(const Young& a) {
  if (a.empty()) return "0\n";
  std::string out;
  for (Nat len : a.rows()) {
    for (Nat i = 0; i < len; ++i) out += "[]";
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Young3

Young3::Young3(Matrix rows) : rows_(std::move(rows)) {
  for (auto& r : rows_) trim_zeros(r);
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!non_increasing(rows_[i]) || rows_[i].empty()) {
      throw UsageError("3-d diagram row " + std::to_string(i) + " must be non-empty and non-increasing");
    }
    if (i > 0) {
      const auto& above = rows_[i - 1];
      for (std::size_t k = 0; k < rows_[i].size(); ++k) {
        if (padded(above, k) < rows_[i][k]) {
          throw UsageError("3-d diagram column " + std::to_string(k) + " increases at row " +
                           std::to_string(i));
        }
      }
    }
  }
}

Nat Young3::entry(std::size_t row, std::size_t col) const noexcept {
  return row < rows_.size() ? padded(rows_[row], col) : 0;
}

Nat Young3::blocks() const noexcept {
  Nat s = 0;
  for (const auto& r : rows_) s = std::accumulate(r.begin(), r.end(), s);
  return s;
}

Young3 zstack(const Young3& a, const Young3& b) {
  Matrix stacked = a.rows();
  stacked.insert(stacked.end(), b.rows().begin(), b.rows().end());
  const std::size_t width = std::max(a.col_count(), b.col_count());
  Matrix out(stacked.size(), std::vector<Nat>(width, 0));
  for (std::size_t k = 0; k < width; ++k) {
    std::vector<Nat> column;
    column.reserve(stacked.size());
    for (const auto& r : stacked) column.push_back(padded(r, k));
    std::sort(column.begin(), column.end(), std::greater<Nat>{});
    for (std::size_t i = 0; i < column.size(); ++i) out[i][k] = column[i];
  }
  return Young3(std::move(out));
}

Young3 ystack(const Young3& a, const Young3& b) {
  const std::size_t height = std::max(a.row_count(), b.row_count());
  Matrix out(height);
  for (std::size_t i = 0; i < height; ++i) {
    auto& r = out[i];
    if (i < a.row_count()) r = a.rows()[i];
    if (i < b.row_count()) r.insert(r.end(), b.rows()[i].begin(), b.rows()[i].end());
    std::sort(r.begin(), r.end(), std::greater<Nat>{});
  }
  return Young3(std::move(out));
}

Young3 xstack(const Young3& a, const Young3& b) {
  const std::size_t height = std::max(a.row_count(), b.row_count());
  const std::size_t width = std::max(a.col_count(), b.col_count());
  Matrix out(height, std::vector<Nat>(width, 0));
  for (std::size_t i = 0; i < height; ++i)
    for (std::size_t k = 0; k < width; ++k) out[i][k] = a.entry(i, k) + b.entry(i, k);
  return Young3(std::move(out));
}

std::weak_ordering lex3_compare(const Young3& a, const Young3& b) {
  const std::size_t height = std::max(a.row_count(), b.row_count());
  const std::size_t width = std::max(a.col_count(), b.col_count());
  for (std::size_t i = 0; i < height; ++i)
    for (std::size_t k = 0; k < width; ++k)
      if (auto c = a.entry(i, k) <=> b.entry(i, k); c != 0) return c;
  return std::weak_ordering::equivalent;
}

Young3 lex3_max(const Young3& a, const Young3& b) { return lex3_compare(a, b) < 0 ? b : a; }

std::string render_matrix(const Young3& a) {
  if (a.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& r : a.rows()) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sorting lemmas

bool check_minmax(std::span<const Nat> a, std::span<const Nat> b,
                  std::span<const std::size_t> sigma, std::span<const std::size_t> tau) {
  const std::size_t n = a.size();
  auto is_perm = [n](std::span<const std::size_t> p) {
    if (p.size() != n) return false;
    std::vector<std::size_t> s(p.begin(), p.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] != i) return false;
    return true;
  };
  if (n == 0 || b.size() != n || !is_perm(sigma) || !is_perm(tau)) {
    throw UsageError("check_minmax needs two non-empty lists of equal length and two permutations");
  }
  Nat lhs = 0;
  for (std::size_t i = 0; i < n; ++i) lhs = std::max(lhs, std::min(a[sigma[i]], b[tau[i]]));
  const Nat rhs = std::min(*std::max_element(a.begin(), a.end()), *std::max_element(b.begin(), b.end()));
  return lhs <= rhs;
}

namespace {

Matrix rectangular(const Matrix& m) {
  std::size_t width = 0;
  for (const auto& r : m) width = std::max(width, r.size());
  Matrix out = m;
  for (auto& r : out) r.resize(width, 0);
  return out;
}

void sort_rows(Matrix& m) {
  for (auto& r : m) std::sort(r.begin(), r.end(), std::greater<Nat>{});
}

void sort_cols(Matrix& m) {
  if (m.empty()) return;
  const std::size_t width = m.front().size();
  for (std::size_t k = 0; k < width; ++k) {
    std::vector<Nat> column;
    column.reserve(m.size());
    for (const auto& r : m) column.push_back(r[k]);
    std::sort(column.begin(), column.end(), std::greater<Nat>{});
    for (std::size_t i = 0; i < m.size(); ++i) m[i][k] = column[i];
  }
}

std::weak_ordering row_major_compare(const Matrix& a, const Matrix& b) {
  const std::size_t height = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < height; ++i) {
    std::span<const Nat> ra = i < a.size() ? std::span<const Nat>(a[i]) : std::span<const Nat>();
    std::span<const Nat> rb = i < b.size() ? std::span<const Nat>(b[i]) : std::span<const Nat>();
    if (auto c = lex_compare_padded(ra, rb); c != 0) return c;
  }
  return std::weak_ordering::equivalent;
}

}  // namespace

MatrixSortSides matrixsort_sides(const Matrix& m) {
  MatrixSortSides s;
  s.rows_then_cols = rectangular(m);
  sort_rows(s.rows_then_cols);
  sort_cols(s.rows_then_cols);
  s.cols_then_rows = rectangular(m);
  sort_cols(s.cols_then_rows);
  sort_rows(s.cols_then_rows);
  s.order = row_major_compare(s.rows_then_cols, s.cols_then_rows);
  return s;
}

bool check_matrixsort(const Matrix& m) { return matrixsort_sides(m).order <= 0; }

// ---------------------------------------------------------------------------
// YoungN

namespace {

std::size_t volume(std::span<const std::size_t> shape) {
  std::size_t v = 1;
  for (std::size_t s : shape) v *= s;
  return v;
}

// Row-major offset of `index` within `shape`; index must be inside.
std::size_t offset(std::span<const std::size_t> shape, std::span<const std::size_t> index) {
  std::size_t off = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) off = off * shape[a] + index[a];
  return off;
}

// Advances a row-major multi-index; false after the last position.
bool next_index(std::span<const std::size_t> shape, std::vector<std::size_t>& index) {
  for (std::size_t a = shape.size(); a-- > 0;) {
    if (++index[a] < shape[a]) return true;
    index[a] = 0;
  }
  return false;
}

}  // namespace

YoungN::YoungN(std::size_t dim) : shape_(dim, 0) {
  if (dim == 0) throw UsageError("n-dimensional diagram needs dimension >= 1");
}

YoungN::YoungN(std::vector<std::size_t> shape, std::vector<Nat> data) {
  if (shape.empty()) throw UsageError("n-dimensional diagram needs dimension >= 1");
  if (volume(shape) != data.size()) throw UsageError("diagram data does not match its shape");
  const std::size_t d = shape.size();

  // Monotone along every axis.
  if (!data.empty()) {
    std::vector<std::size_t> idx(d, 0);
    do {
      const Nat v = data[offset(shape, idx)];
      for (std::size_t a = 0; a < d; ++a) {
        if (idx[a] + 1 < shape[a]) {
          auto next = idx;
          ++next[a];
          if (data[offset(shape, next)] > v) {
            throw UsageError("diagram increases along axis " + std::to_string(a));
          }
        }
      }
    } while (next_index(shape, idx));
  }

  // Trim to the bounding box of the nonzero entries.
  std::vector<std::size_t> box(d, 0);
  bool any = false;
  if (!data.empty()) {
    std::vector<std::size_t> idx(d, 0);
    do {
      if (data[offset(shape, idx)] != 0) {
        any = true;
        for (std::size_t a = 0; a < d; ++a) box[a] = std::max(box[a], idx[a] + 1);
      }
    } while (next_index(shape, idx));
  }
  shape_ = any ? box : std::vector<std::size_t>(d, 0);
  if (any) {
    data_.resize(volume(shape_));
    std::vector<std::size_t> idx(d, 0);
    do {
      data_[offset(shape_, idx)] = data[offset(shape, idx)];
    } while (next_index(shape_, idx));
  }
}

YoungN YoungN::from_young(const Young& y) {
  return YoungN({y.cols().size()}, std::vector<Nat>(y.cols().begin(), y.cols().end()));
}

YoungN YoungN::from_young3(const Young3& y) {
  const std::size_t h = y.row_count(), w = y.col_count();
  std::vector<Nat> data(h * w);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t k = 0; k < w; ++k) data[i * w + k] = y.entry(i, k);
  return YoungN({h, w}, std::move(data));
}

Young YoungN::to_young() const {
  if (dim() != 1) throw UsageError("to_young needs a 1-dimensional array");
  return Young(std::vector<Nat>(data_.begin(), data_.end()));
}

Young3 YoungN::to_young3() const {
  if (dim() != 2) throw UsageError("to_young3 needs a 2-dimensional array");
  Matrix rows(shape_[0], std::vector<Nat>(shape_[1]));
  for (std::size_t i = 0; i < shape_[0]; ++i)
    for (std::size_t k = 0; k < shape_[1]; ++k) rows[i][k] = data_[i * shape_[1] + k];
  return Young3(std::move(rows));
}

Nat YoungN::at(std::span<const std::size_t> index) const {
  if (index.size() != dim()) throw UsageError("index arity does not match diagram dimension");
  for (std::size_t a = 0; a < dim(); ++a)
    if (index[a] >= shape_[a]) return 0;
  return data_[offset(shape_, index)];
}

Nat YoungN::blocks() const noexcept { return std::accumulate(data_.begin(), data_.end(), Nat{0}); }

YoungN nd_product(const YoungN& a, const YoungN& b, int k) {
  const std::size_t d = a.dim();
  if (b.dim() != d) {
    throw UsageError("dimension mismatch: " + std::to_string(d) + " vs " + std::to_string(b.dim()));
  }
  if (k < 1 || static_cast<std::size_t>(k) > d + 1) {
    throw UsageError("product index " + std::to_string(k) + " outside 1.." + std::to_string(d + 1));
  }
  std::vector<std::size_t> shape(d);
  for (std::size_t x = 0; x < d; ++x) shape[x] = std::max(a.shape()[x], b.shape()[x]);

  if (static_cast<std::size_t>(k) == d + 1) {
    std::vector<Nat> data(volume(shape));
    if (!data.empty()) {
      std::vector<std::size_t> idx(d, 0);
      do {
        data[offset(shape, idx)] = a.at(idx) + b.at(idx);
      } while (next_index(shape, idx));
    }
    return YoungN(std::move(shape), std::move(data));
  }

  const std::size_t axis = static_cast<std::size_t>(k - 1);
  const std::size_t split = a.shape()[axis];
  shape[axis] = a.shape()[axis] + b.shape()[axis];
  std::vector<Nat> data(volume(shape));
  if (data.empty()) return YoungN(std::move(shape), std::move(data));

  std::vector<std::size_t> idx(d, 0);
  do {
    Nat v;
    if (idx[axis] < split) {
      v = a.at(idx);
    } else {
      auto shifted = idx;
      shifted[axis] -= split;
      v = b.at(shifted);
    }
    data[offset(shape, idx)] = v;
  } while (next_index(shape, idx));

  // Sort every line along the merge axis, descending.
  auto line_shape = shape;
  line_shape[axis] = 1;
  std::vector<std::size_t> start(d, 0);
  std::vector<Nat> line(shape[axis]);
  do {
    auto pos = start;
    for (std::size_t t = 0; t < shape[axis]; ++t) {
      pos[axis] = t;
      line[t] = data[offset(shape, pos)];
    }
    std::sort(line.begin(), line.end(), std::greater<Nat>{});
    for (std::size_t t = 0; t < shape[axis]; ++t) {
      pos[axis] = t;
      data[offset(shape, pos)] = line[t];
    }
  } while (next_index(line_shape, start));

  return YoungN(std::move(shape), std::move(data));
}

std::weak_ordering ndlex_compare(const YoungN& a, const YoungN& b) {
  if (a.dim() != b.dim()) throw UsageError("dimension mismatch in comparison");
  const std::size_t d = a.dim();
  std::vector<std::size_t> shape(d);
  for (std::size_t x = 0; x < d; ++x) shape[x] = std::max(a.shape()[x], b.shape()[x]);
  if (volume(shape) == 0) return std::weak_ordering::equivalent;
  std::vector<std::size_t> idx(d, 0);
  do {
    if (auto c = a.at(idx) <=> b.at(idx); c != 0) return c;
  } while (next_index(shape, idx));
  return std::weak_ordering::equivalent;
}

}  // namespace itmon
