#include "schur_ohno/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schur_ohno/error.hpp"

namespace schur_ohno {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw InvalidArgument("partition parts must be positive (trailing zeros excepted)");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

SkewShape::SkewShape(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (mu_.length() > lambda_.length()) {
    throw InvalidArgument("inner partition is longer than the outer partition");
  }
  for (std::size_t r = 1; r <= mu_.length(); ++r) {
    if (mu_.row(r) > lambda_.row(r)) {
      throw InvalidArgument("inner partition is not contained in the outer partition");
    }
  }
  for (std::size_t r = 1; r <= lambda_.length(); ++r) {
    for (int c = mu_.row(r) + 1; c <= lambda_.row(r); ++c) {
      cells_.push_back({static_cast<int>(r), c});
    }
  }
  if (cells_.empty()) throw InvalidArgument("skew shape has no cells");

  left_.resize(cells_.size());
  above_.resize(cells_.size());
  below_.resize(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto [r, c] = cells_[i];
    auto idx = [this](Cell x) -> std::ptrdiff_t {
      auto found = index_of(x);
      return found ? static_cast<std::ptrdiff_t>(*found) : -1;
    };
    left_[i] = idx({r, c - 1});
    above_[i] = idx({r - 1, c});
    int below = 0;
    while (contains({r + below + 1, c})) ++below;
    below_[i] = below;
  }
}

SkewShape SkewShape::column(int height) {
  if (height < 1) throw InvalidArgument("column height must be positive");
  return SkewShape(Partition(std::vector<int>(static_cast<std::size_t>(height), 1)));
}

bool SkewShape::contains(Cell c) const {
  if (c.row < 1 || c.col < 1) return false;
  const auto r = static_cast<std::size_t>(c.row);
  return c.col > mu_.row(r) && c.col <= lambda_.row(r);
}

std::optional<std::size_t> SkewShape::index_of(Cell c) const {
  if (!contains(c)) return std::nullopt;
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<std::size_t> SkewShape::column_cells(int col) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].col == col) out.push_back(i);
  }
  return out;
}

bool SkewShape::is_single_column() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [&](Cell c) { return c.col == cells_.front().col; });
}

std::vector<Cell> cells(const SkewShape& shape) {
  return {shape.cells().begin(), shape.cells().end()};
}

std::vector<Cell> corners(const SkewShape& shape) {
  std::vector<Cell> out;
  for (const Cell c : shape.cells()) {
    if (!shape.contains({c.row + 1, c.col}) && !shape.contains({c.row, c.col + 1})) {
      out.push_back(c);
    }
  }
  return out;
}

Filling::Filling(SkewShape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.size()) {
    throw InvalidArgument("filling has " + std::to_string(entries_.size()) +
                          " entries for a shape with " + std::to_string(shape_.size()) +
                          " cells");
  }
}

int Filling::at(Cell c) const {
  auto i = shape_.index_of(c);
  if (!i) throw InvalidArgument("cell is not part of the shape");
  return entries_[*i];
}

bool is_semistandard(const Filling& filling) {
  const auto& shape = filling.shape();
  const auto n = filling.entries();
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (n[i] < 1) return false;
    if (auto l = shape.left_of(i); l >= 0 && n[static_cast<std::size_t>(l)] > n[i]) return false;
    if (auto a = shape.above(i); a >= 0 && n[static_cast<std::size_t>(a)] >= n[i]) return false;
  }
  return true;
}

SsytEnumerator::SsytEnumerator(const SkewShape& shape, int max_entry)
    : SsytEnumerator(shape, max_entry, 1, max_entry) {}

SsytEnumerator::SsytEnumerator(const SkewShape& shape, int max_entry, int first_lo,
                               int first_hi)
    : shape_(shape),
      max_entry_(max_entry),
      first_lo_(first_lo),
      first_hi_(first_hi),
      values_(shape.size(), 0) {
  if (max_entry < 1) throw InvalidArgument("max_entry must be at least 1");
}

int SsytEnumerator::lower_bound(std::size_t i) const {
  int lo = i == 0 ? std::max(1, first_lo_) : 1;
  if (auto l = shape_.left_of(i); l >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(l)]);
  if (auto a = shape_.above(i); a >= 0) lo = std::max(lo, values_[static_cast<std::size_t>(a)] + 1);
  return lo;
}

int SsytEnumerator::upper_bound(std::size_t i) const {
  int hi = max_entry_ - shape_.cells_below(i);
  return i == 0 ? std::min(hi, first_hi_) : hi;
}

bool SsytEnumerator::next() {
  if (done_) return false;
  const auto d = static_cast<std::ptrdiff_t>(values_.size());
  std::ptrdiff_t i = d - 1;
  if (!started_) {
    started_ = true;
    i = 0;
    values_[0] = lower_bound(0) - 1;
  }
  // Bump position i, then reset everything after it to its minimum.
  while (i >= 0) {
    const auto ui = static_cast<std::size_t>(i);
    if (++values_[ui] > upper_bound(ui)) {
      --i;
      continue;
    }
    bool feasible = true;
    for (auto j = ui + 1; j < values_.size(); ++j) {
      values_[j] = lower_bound(j);
      if (values_[j] > upper_bound(j)) {
        feasible = false;
        break;
      }
    }
    if (feasible) return true;
    --i;
  }
  done_ = true;
  return false;
}

std::vector<Filling> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<Filling> out;
  SsytEnumerator it(shape, max_entry);
  while (it.next()) out.push_back(it.filling());
  return out;
}

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry) {
  std::uint64_t n = 0;
  SsytEnumerator it(shape, max_entry);
  while (it.next()) ++n;
  return n;
}

}  // namespace schur_ohno
