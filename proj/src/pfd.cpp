#include "schur_ohno/pfd.hpp"

#include <algorithm>
#include <cmath>

#include "schur_ohno/error.hpp"

namespace schur_ohno {

MultisetGrouping::MultisetGrouping(std::vector<Group> groups) : groups_(std::move(groups)) {
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    if (groups_[i].multiplicity < 1) throw InvalidArgument("group multiplicity must be positive");
    if (groups_[i].value < 1) throw InvalidArgument("group value must be positive");
    if (i > 0 && groups_[i].value <= groups_[i - 1].value) {
      throw InvalidArgument("group values must be distinct and increasing");
    }
  }
}

int MultisetGrouping::total_multiplicity() const {
  int t = 0;
  for (const auto& g : groups_) t += g.multiplicity;
  return t;
}

bool MultisetGrouping::all_distinct() const {
  return std::all_of(groups_.begin(), groups_.end(),
                     [](const Group& g) { return g.multiplicity == 1; });
}

MultisetGrouping group_entries(std::span<const int> entries) {
  std::vector<int> v(entries.begin(), entries.end());
  std::sort(v.begin(), v.end());
  std::vector<Group> groups;
  for (const int n : v) {
    if (!groups.empty() && groups.back().value == n) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({n, 1});
    }
  }
  return MultisetGrouping(std::move(groups));
}

MultisetGrouping group_filling(const Filling& filling) { return group_entries(filling.entries()); }

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Coefficients u^0..u^order of (u + c)^(-r): (-1)^j binom(r+j-1, j) c^(-r-j).
std::vector<Rational> inverse_power_series(long c, int r, int order) {
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1);
  mpz_class cpow;
  mpz_pow_ui(cpow.get_mpz_t(), mpz_class(c).get_mpz_t(), static_cast<unsigned long>(r));
  for (int j = 0; j <= order; ++j) {
    mpz_class num = binomial(static_cast<unsigned long>(r + j - 1), static_cast<unsigned long>(j));
    if (j % 2) num = -num;
    q[static_cast<std::size_t>(j)] = Rational(num, cpow);
    q[static_cast<std::size_t>(j)].canonicalize();
    cpow *= c;
  }
  return q;
}

}  // namespace

PfdTable pfd_coefficients(const MultisetGrouping& g) {
  if (g.size() == 0) throw InvalidArgument("grouping is empty");
  std::vector<std::vector<Rational>> d(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const int order = g[a].multiplicity - 1;
    std::vector<Rational> series(static_cast<std::size_t>(order) + 1);
    series[0] = 1;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (b == a) continue;
      const auto q = inverse_power_series(g[b].value - g[a].value, g[b].multiplicity, order);
      std::vector<Rational> prod(series.size());
      for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i] == 0) continue;
        for (std::size_t j = 0; i + j < series.size(); ++j) prod[i + j] += series[i] * q[j];
      }
      series = std::move(prod);
    }
    d[a].resize(series.size());
    for (int ell = 1; ell <= g[a].multiplicity; ++ell) {
      d[a][static_cast<std::size_t>(ell - 1)] = series[static_cast<std::size_t>(g[a].multiplicity - ell)];
    }
  }
  return PfdTable(std::move(d));
}

std::complex<double> gen_binom_factor(std::complex<double> s, int ell) {
  if (ell < 1) throw InvalidArgument("gen_binom_factor needs ell >= 1");
  std::complex<double> out = 1.0;
  for (int q = 1; q < ell; ++q) out *= (s + static_cast<double>(q)) / static_cast<double>(q);
  return out;
}

Rational bump_sum_via_pfd(const MultisetGrouping& g, int m) {
  if (m < 0) throw InvalidArgument("bump total must be nonnegative");
  const auto table = pfd_coefficients(g);
  Rational total = 0;
  mpz_class n_one = 1;
  for (const auto& grp : g.groups()) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), mpz_class(grp.value).get_mpz_t(),
               static_cast<unsigned long>(grp.multiplicity));
    n_one *= p;
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (int ell = 1; ell <= g[a].multiplicity; ++ell) {
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), mpz_class(g[a].value).get_mpz_t(),
                 static_cast<unsigned long>(m + ell));
      Rational term(binomial(static_cast<unsigned long>(m + ell - 1),
                             static_cast<unsigned long>(ell - 1)),
                    den);
      term.canonicalize();
      total += term * table.at(a, ell);
    }
  }
  return total * Rational(n_one);
}

SeriesKernel::SeriesKernel(std::complex<double> s, int max_entry, std::size_t max_cells)
    : s_(s), pow_s1_(static_cast<std::size_t>(max_entry) + 1), binom_(max_cells + 1) {
  for (int n = 1; n <= max_entry; ++n) {
    pow_s1_[static_cast<std::size_t>(n)] = std::exp(-(s + 1.0) * std::log(static_cast<double>(n)));
  }
  for (std::size_t ell = 1; ell <= max_cells; ++ell) {
    binom_[ell] = gen_binom_factor(s, static_cast<int>(ell));
  }
  sorted_.reserve(max_cells);
  coeff_.reserve(max_cells);
}

std::complex<double> SeriesKernel::operator()(std::span<const int> entries) {
  sorted_.assign(entries.begin(), entries.end());
  std::sort(sorted_.begin(), sorted_.end());
  const std::size_t d = sorted_.size();
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) == sorted_.end()) {
    // D[a][1] = 1 / prod_{b != a} (n_b - n_a), exact in 64-bit when it fits.
    coeff_.assign(d, 0.0);
    bool fits = true;
    for (std::size_t a = 0; a < d && fits; ++a) {
      long long den = 1;
      for (std::size_t b = 0; b < d; ++b) {
        if (b == a) continue;
        if (__builtin_mul_overflow(den, static_cast<long long>(sorted_[b] - sorted_[a]), &den)) {
          fits = false;
          break;
        }
      }
      coeff_[a] = 1.0 / static_cast<double>(den);
    }
    if (fits) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t a = 0; a < d; ++a) {
        const auto& p = pow_s1_[static_cast<std::size_t>(sorted_[a])];
        re += coeff_[a] * p.real();
        im += coeff_[a] * p.imag();
      }
      return {re, im};
    }
  }
  return from_grouping(group_entries(sorted_));
}

std::complex<double> SeriesKernel::from_grouping(const MultisetGrouping& g) {
  const auto table = pfd_coefficients(g);
  std::complex<double> out = 0.0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const double n = static_cast<double>(g[a].value);
    const auto base = pow_s1_[static_cast<std::size_t>(g[a].value)];
    double inv = 1.0;
    for (int ell = 1; ell <= g[a].multiplicity; ++ell) {
      out += table.at(a, ell).get_d() * inv * binom_[static_cast<std::size_t>(ell)] * base;
      inv /= n;
    }
  }
  return out;
}

}  // namespace schur_ohno
