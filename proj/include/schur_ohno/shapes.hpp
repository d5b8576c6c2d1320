#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace schur_ohno {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// trimmed on construction, so (2,1,0) and (2,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Part in 1-based row `row`; zero past the end.
  int row(std::size_t row) const {
    return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
  }
  int weight() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Box (row, col) of a Young diagram, both 1-based. Ordering is row-major.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Skew Young diagram lambda/mu. Cells are stored in row-major order and
/// every per-cell query below uses indices into that order.
class SkewShape {
 public:
  explicit SkewShape(Partition lambda, Partition mu = {});

  /// Straight single column (1^height).
  static SkewShape column(int height);

  const Partition& outer() const { return lambda_; }
  const Partition& inner() const { return mu_; }

  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(Cell c) const;
  std::optional<std::size_t> index_of(Cell c) const;

  /// Index of the cell immediately left of / above cell `i`, or -1.
  std::ptrdiff_t left_of(std::size_t i) const { return left_[i]; }
  std::ptrdiff_t above(std::size_t i) const { return above_[i]; }
  /// Number of cells strictly below cell `i` in its column.
  int cells_below(std::size_t i) const { return below_[i]; }

  int num_columns() const { return lambda_.row(1); }
  /// Cell indices of column `col`, top to bottom; empty if the column has no cells.
  std::vector<std::size_t> column_cells(int col) const;
  /// True when every cell sits in one column.
  bool is_single_column() const;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
  }

 private:
  Partition lambda_;
  Partition mu_;
  std::vector<Cell> cells_;
  std::vector<std::ptrdiff_t> left_;
  std::vector<std::ptrdiff_t> above_;
  std::vector<int> below_;
};

/// Cells of the shape in row-major order.
std::vector<Cell> cells(const SkewShape& shape);

/// Cells with neither a right nor a lower neighbour, in row-major order.
std::vector<Cell> corners(const SkewShape& shape);

/// Assignment of a positive integer to every cell, stored in row-major
/// cell order.
class Filling {
 public:
  Filling(SkewShape shape, std::vector<int> entries);

  const SkewShape& shape() const { return shape_; }
  std::span<const int> entries() const { return entries_; }
  int at(Cell c) const;

 private:
  SkewShape shape_;
  std::vector<int> entries_;
};

/// Rows weakly increasing, columns strictly increasing, entries positive.
bool is_semistandard(const Filling& filling);

/// Streams the semistandard fillings of a skew shape with entries in
/// [1, max_entry], lexicographically in row-major cell order.
///
/// The optional range restricts the value of the first cell; partitioning
/// the stream by that value is how callers split the work across threads.
class SsytEnumerator {
 public:
  SsytEnumerator(const SkewShape& shape, int max_entry);
  SsytEnumerator(const SkewShape& shape, int max_entry, int first_lo, int first_hi);

  /// Advances to the next filling. The first call yields the first filling.
  bool next();
  std::span<const int> entries() const { return values_; }
  Filling filling() const { return Filling(shape_, values_); }

 private:
  int lower_bound(std::size_t i) const;
  int upper_bound(std::size_t i) const;

  SkewShape shape_;
  int max_entry_;
  int first_lo_;
  int first_hi_;
  std::vector<int> values_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Filling> enumerate_ssyt(const SkewShape& shape, int max_entry);

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry);

}  // namespace schur_ohno
