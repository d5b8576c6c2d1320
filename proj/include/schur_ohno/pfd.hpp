#pragma once

#include <gmpxx.h>

#include <complex>
#include <span>
#include <vector>

#include "schur_ohno/shapes.hpp"

namespace schur_ohno {

using Rational = mpq_class;

/// One distinct entry value and how many cells carry it.
struct Group {
  long value = 0;
  int multiplicity = 0;

  friend bool operator==(const Group&, const Group&) = default;
};

/// Distinct values of a filling with multiplicities, values strictly increasing.
class MultisetGrouping {
 public:
  MultisetGrouping() = default;
  explicit MultisetGrouping(std::vector<Group> groups);

  std::span<const Group> groups() const { return groups_; }
  std::size_t size() const { return groups_.size(); }
  const Group& operator[](std::size_t i) const { return groups_[i]; }
  int total_multiplicity() const;
  bool all_distinct() const;

  friend bool operator==(const MultisetGrouping&, const MultisetGrouping&) = default;

 private:
  std::vector<Group> groups_;
};

MultisetGrouping group_entries(std::span<const int> entries);
MultisetGrouping group_filling(const Filling& filling);

/// Partial-fraction coefficients of prod_b (w + n_b)^(-r_b):
/// the product equals sum_a sum_{l=1..r_a} D[a][l] / (w + n_a)^l.
class PfdTable {
 public:
  explicit PfdTable(std::vector<std::vector<Rational>> coefficients)
      : d_(std::move(coefficients)) {}

  /// `alpha` is 0-based, `ell` runs over 1..multiplicity.
  const Rational& at(std::size_t alpha, int ell) const {
    return d_[alpha][static_cast<std::size_t>(ell - 1)];
  }
  std::size_t groups() const { return d_.size(); }
  int orders(std::size_t alpha) const { return static_cast<int>(d_[alpha].size()); }

 private:
  std::vector<std::vector<Rational>> d_;
};

/// Exact coefficients. For each group a, every other factor
/// (w + n_b)^(-r_b) is expanded as a binomial series in u = w + n_a, the
/// series are multiplied to order r_a - 1, and D[a][l] is the coefficient
/// of u^(r_a - l).
PfdTable pfd_coefficients(const MultisetGrouping& g);

/// prod_{p=1}^{l-1} (s + l - p) / (l - p); equals binom(m+l-1, l-1) at s = m.
std::complex<double> gen_binom_factor(std::complex<double> s, int ell);

/// sum over |e| = m of prod_cells n^(-e), evaluated exactly through the
/// partial fractions: N^1 * sum_a sum_l binom(m+l-1, l-1) n_a^(-(m+l)) D[a][l].
Rational bump_sum_via_pfd(const MultisetGrouping& g, int m);

/// Per-filling series sum_a sum_l gen_binom(s, l) n_a^(-(s+l)) D[a][l] for a
/// fixed s, with n^(-(s+1)) tabulated for entries up to `max_entry`.
///
/// Coefficients are exact rationals converted once to double. All-distinct
/// groupings take an integer fast path (D = 1 / prod (n_b - n_a)) and fall
/// back to the rational engine on overflow. Instances hold scratch space and
/// must not be shared between threads.
class SeriesKernel {
 public:
  SeriesKernel(std::complex<double> s, int max_entry, std::size_t max_cells);

  std::complex<double> operator()(std::span<const int> entries);

 private:
  std::complex<double> from_grouping(const MultisetGrouping& g);

  std::complex<double> s_;
  std::vector<std::complex<double>> pow_s1_;
  std::vector<std::complex<double>> binom_;
  std::vector<int> sorted_;
  std::vector<double> coeff_;
};

}  // namespace schur_ohno
