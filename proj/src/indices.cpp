#include "schur_ohno/indices.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "schur_ohno/error.hpp"

namespace schur_ohno {

EzIndex::EzIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw InvalidArgument("index must have at least one exponent");
  if (std::any_of(exps_.begin(), exps_.end(), [](int k) { return k < 1; })) {
    throw InvalidArgument("index exponents must be positive");
  }
}

int EzIndex::weight() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool is_admissible(const EzIndex& k) { return k.back() >= 2; }

std::vector<int> AdmissiblePiece::expand() const {
  std::vector<int> out(static_cast<std::size_t>(a - 1), 1);
  out.push_back(b + 1);
  return out;
}

std::vector<AdmissiblePiece> to_pieces(const EzIndex& k) {
  if (!is_admissible(k)) throw InadmissibleIndex("index is not admissible (last exponent < 2)");
  std::vector<AdmissiblePiece> pieces;
  int ones = 0;
  for (const int e : k.exponents()) {
    if (e == 1) {
      ++ones;
    } else {
      pieces.push_back({ones + 1, e - 1});
      ones = 0;
    }
  }
  return pieces;
}

EzIndex from_pieces(std::span<const AdmissiblePiece> pieces) {
  std::vector<int> out;
  for (const auto& p : pieces) {
    if (p.a < 1 || p.b < 1) throw InvalidArgument("admissible piece needs a, b >= 1");
    auto e = p.expand();
    out.insert(out.end(), e.begin(), e.end());
  }
  return EzIndex(std::move(out));
}

EzIndex dual(const EzIndex& k) {
  auto pieces = to_pieces(k);
  std::reverse(pieces.begin(), pieces.end());
  for (auto& p : pieces) p = p.swapped();
  return from_pieces(pieces);
}

TableauIndex::TableauIndex(SkewShape shape, std::vector<int> exponents)
    : shape_(std::move(shape)), exps_(std::move(exponents)) {
  if (exps_.size() != shape_.size()) {
    throw InvalidArgument("tableau index has " + std::to_string(exps_.size()) +
                          " exponents for a shape with " + std::to_string(shape_.size()) +
                          " cells");
  }
}

TableauIndex TableauIndex::from_rows(SkewShape shape, const std::vector<std::vector<int>>& rows) {
  const auto& lambda = shape.outer();
  const auto& mu = shape.inner();
  if (rows.size() != lambda.length()) {
    throw InvalidArgument("expected " + std::to_string(lambda.length()) + " rows, got " +
                          std::to_string(rows.size()));
  }
  std::vector<int> exps;
  for (std::size_t r = 1; r <= rows.size(); ++r) {
    const auto want = static_cast<std::size_t>(lambda.row(r) - mu.row(r));
    if (rows[r - 1].size() != want) {
      throw InvalidArgument("row " + std::to_string(r) + " needs " + std::to_string(want) +
                            " entries, got " + std::to_string(rows[r - 1].size()));
    }
    exps.insert(exps.end(), rows[r - 1].begin(), rows[r - 1].end());
  }
  return TableauIndex(std::move(shape), std::move(exps));
}

TableauIndex TableauIndex::column(const EzIndex& k) {
  auto e = k.exponents();
  return TableauIndex(SkewShape::column(static_cast<int>(k.depth())), {e.begin(), e.end()});
}

int TableauIndex::at(Cell c) const {
  auto i = shape_.index_of(c);
  if (!i) throw InvalidArgument("cell is not part of the shape");
  return exps_[*i];
}

std::vector<std::vector<int>> TableauIndex::rows() const {
  std::vector<std::vector<int>> out(shape_.outer().length());
  const auto cells = shape_.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    out[static_cast<std::size_t>(cells[i].row - 1)].push_back(exps_[i]);
  }
  return out;
}

bool is_in_W(const TableauIndex& k) {
  const auto& shape = k.shape();
  const auto cells = shape.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    const bool corner = !shape.contains({c.row + 1, c.col}) && !shape.contains({c.row, c.col + 1});
    if (k.exponents()[i] < (corner ? 2 : 1)) return false;
  }
  return true;
}

bool is_diagonal_constant(const TableauIndex& k) {
  std::map<int, int> diag;
  const auto cells = k.shape().cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int d = cells[i].col - cells[i].row;
    auto [it, fresh] = diag.emplace(d, k.exponents()[i]);
    if (!fresh && it->second != k.exponents()[i]) return false;
  }
  return true;
}

EzIndex column(const TableauIndex& k, int j) {
  const auto idx = k.shape().column_cells(j);
  if (idx.empty()) throw InvalidArgument("column " + std::to_string(j) + " has no cells");
  std::vector<int> e;
  for (auto i : idx) e.push_back(k.exponents()[i]);
  return EzIndex(std::move(e));
}

bool is_in_ID(const TableauIndex& k) {
  if (!is_diagonal_constant(k)) return false;
  const auto& shape = k.shape();
  if (std::any_of(k.exponents().begin(), k.exponents().end(), [](int e) { return e < 1; })) {
    return false;
  }
  for (int j = 1; j <= shape.num_columns(); ++j) {
    const auto idx = shape.column_cells(j);
    if (idx.empty()) continue;
    if (!is_admissible(column(k, j))) return false;
    const Cell top = shape.cells()[idx.front()];
    if (auto right = shape.index_of({top.row, top.col + 1}); right && k.exponents()[*right] == 1) {
      return false;
    }
  }
  return true;
}

std::string canonical_key(const TableauIndex& k) {
  std::ostringstream os;
  auto put = [&os](std::span<const int> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  put(k.shape().outer().parts());
  os << '|';
  put(k.shape().inner().parts());
  os << '|';
  const auto rows = k.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '/';
    put(rows[r]);
  }
  return os.str();
}

void DualRegistry::add(const TableauIndex& k, const TableauIndex& k_dual) {
  std::unique_lock lock(mutex_);
  pairs_.insert_or_assign(canonical_key(k), k_dual);
  pairs_.insert_or_assign(canonical_key(k_dual), k);
}

std::optional<TableauIndex> DualRegistry::find(const TableauIndex& k) const {
  std::shared_lock lock(mutex_);
  auto it = pairs_.find(canonical_key(k));
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

void DualRegistry::clear() {
  std::unique_lock lock(mutex_);
  pairs_.clear();
}

DualRegistry& session_registry() {
  static DualRegistry registry;
  return registry;
}

void register_dual_pair(const TableauIndex& k, const TableauIndex& k_dual, DualRegistry& registry) {
  if (!is_in_ID(k)) throw InadmissibleIndex("index is not in I^D: " + canonical_key(k));
  if (!is_in_ID(k_dual)) throw InadmissibleIndex("dual is not in I^D: " + canonical_key(k_dual));
  registry.add(k, k_dual);
}

TableauIndex dual_tableau(const TableauIndex& k, const DualRegistry& registry) {
  if (!is_in_ID(k)) throw InadmissibleIndex("index is not in I^D: " + canonical_key(k));
  if (k.shape().is_single_column()) {
    return TableauIndex::column(dual(column(k, k.shape().cells().front().col)));
  }
  if (auto found = registry.find(k)) return *found;
  throw UnsupportedShape("no dual tableau known for multi-column shape " + canonical_key(k) +
                         "; register one with register_dual_pair");
}

int CompositionTableau::total() const { return std::accumulate(bumps.begin(), bumps.end(), 0); }

WeakCompositions::WeakCompositions(std::size_t parts, int total) : parts_(parts, 0), total_(total) {
  if (total < 0) throw InvalidArgument("composition total must be nonnegative");
}

bool WeakCompositions::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (parts_.empty()) {
      done_ = total_ != 0;
      return !done_;
    }
    parts_[0] = total_;
    return true;
  }
  if (parts_.size() < 2) {
    done_ = true;
    return false;
  }
  // Move one unit from the rightmost nonzero non-final part one step right,
  // gathering whatever sat in the final part along with it.
  const int tail = parts_.back();
  parts_.back() = 0;
  auto i = static_cast<std::ptrdiff_t>(parts_.size()) - 2;
  while (i >= 0 && parts_[static_cast<std::size_t>(i)] == 0) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  --parts_[static_cast<std::size_t>(i)];
  parts_[static_cast<std::size_t>(i) + 1] = tail + 1;
  return true;
}

std::vector<CompositionTableau> enumerate_bump_tableaux(const SkewShape& shape, int ell) {
  std::vector<CompositionTableau> out;
  WeakCompositions it(shape.size(), ell);
  while (it.next()) out.push_back({shape, {it.current().begin(), it.current().end()}});
  return out;
}

TableauIndex bumped(const TableauIndex& k, std::span<const int> bumps) {
  if (bumps.size() != k.exponents().size()) {
    throw InvalidArgument("bump tableau does not match the index shape");
  }
  std::vector<int> e(k.exponents().begin(), k.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += bumps[i];
  return TableauIndex(k.shape(), std::move(e));
}

}  // namespace schur_ohno
