#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "schur_ohno/shapes.hpp"

namespace schur_ohno {

/// Euler-Zagier index (k_1, ..., k_r): nonempty, all exponents >= 1.
class EzIndex {
 public:
  explicit EzIndex(std::vector<int> exponents);

  std::span<const int> exponents() const { return exps_; }
  std::size_t depth() const { return exps_.size(); }
  int weight() const;
  int operator[](std::size_t i) const { return exps_[i]; }
  int back() const { return exps_.back(); }

  friend bool operator==(const EzIndex&, const EzIndex&) = default;
  friend auto operator<=>(const EzIndex&, const EzIndex&) = default;

 private:
  std::vector<int> exps_;
};

/// Last exponent >= 2.
bool is_admissible(const EzIndex& k);

/// The fragment ({1}^{a-1}, b+1).
struct AdmissiblePiece {
  int a = 1;
  int b = 1;

  std::vector<int> expand() const;
  AdmissiblePiece swapped() const { return {b, a}; }

  friend bool operator==(const AdmissiblePiece&, const AdmissiblePiece&) = default;
};

/// Unique split of an admissible index into pieces. Throws InadmissibleIndex.
std::vector<AdmissiblePiece> to_pieces(const EzIndex& k);
EzIndex from_pieces(std::span<const AdmissiblePiece> pieces);

/// Dual index: reverse the pieces and swap (a, b) in each.
EzIndex dual(const EzIndex& k);

/// Integer exponents attached to the cells of a skew shape, stored in the
/// shape's row-major cell order. Exponents may be any integer; domain
/// membership is a separate query.
class TableauIndex {
 public:
  TableauIndex(SkewShape shape, std::vector<int> exponents);

  /// Builds from rows as written: row r lists the exponents of the cells of
  /// row r from left to right (rows entirely inside mu are given empty).
  static TableauIndex from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows);
  /// Straight column (1^r) carrying k top to bottom.
  static TableauIndex column(const EzIndex& k);

  const SkewShape& shape() const { return shape_; }
  std::span<const int> exponents() const { return exps_; }
  int at(Cell c) const;
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const TableauIndex& a, const TableauIndex& b) {
    return a.shape_ == b.shape_ && a.exps_ == b.exps_;
  }

 private:
  SkewShape shape_;
  std::vector<int> exps_;
};

/// Exponents >= 1 everywhere and >= 2 on the corners.
bool is_in_W(const TableauIndex& k);

/// Exponent constant along every diagonal j - i.
bool is_diagonal_constant(const TableauIndex& k);

/// Column `j` read top to bottom. Throws InvalidArgument for an empty column
/// or a nonpositive exponent.
EzIndex column(const TableauIndex& k, int j);

/// Diagonal-constant, every column an admissible index, and the cell right
/// of each column's top cell (when present) does not carry 1.
bool is_in_ID(const TableauIndex& k);

/// Session store of user-supplied dual pairs. Lookups take a shared lock;
/// a registration is visible to every lookup that starts after it returns.
class DualRegistry {
 public:
  void add(const TableauIndex& k, const TableauIndex& k_dual);
  std::optional<TableauIndex> find(const TableauIndex& k) const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, TableauIndex> pairs_;
};

/// Process-wide registry used when no registry is passed explicitly.
DualRegistry& session_registry();

/// Registers k and k_dual as each other's dual. Both must be in I^D.
void register_dual_pair(const TableauIndex& k, const TableauIndex& k_dual,
                        DualRegistry& registry = session_registry());

/// Dual tableau. Single-column shapes reduce to the EZ dual (returned as a
/// straight column); other shapes need a registered pair, otherwise
/// UnsupportedShape is thrown.
TableauIndex dual_tableau(const TableauIndex& k,
                          const DualRegistry& registry = session_registry());

/// Nonnegative bumps epsilon_ij on the cells of a shape.
struct CompositionTableau {
  SkewShape shape;
  std::vector<int> bumps;

  int total() const;
};

/// Streams the weak compositions of `total` into `parts` parts in
/// lexicographic order (first part largest first).
class WeakCompositions {
 public:
  WeakCompositions(std::size_t parts, int total);

  bool next();
  std::span<const int> current() const { return parts_; }

 private:
  std::vector<int> parts_;
  int total_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<CompositionTableau> enumerate_bump_tableaux(const SkewShape& shape, int ell);

/// Cellwise k + epsilon on the same shape.
TableauIndex bumped(const TableauIndex& k, std::span<const int> bumps);

/// Canonical text key (lambda, mu, rows); equal keys iff equal indices.
std::string canonical_key(const TableauIndex& k);

}  // namespace schur_ohno
