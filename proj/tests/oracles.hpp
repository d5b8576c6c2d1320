#pragma once

// Reference computations used only by the tests. Each one takes a route
// different from the library code it checks.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "schur_ohno/pfd.hpp"

namespace oracle {

using schur_ohno::Group;
using schur_ohno::MultisetGrouping;
using Rational = mpq_class;

inline Rational rpow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= x;
  return e >= 0 ? out : Rational(1) / out;
}

inline Rational factorial(int n) {
  Rational out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every grouping with values in [1, max_value] and total multiplicity in
/// [1, max_total].
inline std::vector<MultisetGrouping> all_groupings(int max_value, int max_total) {
  std::vector<MultisetGrouping> out;
  std::vector<Group> cur;
  std::function<void(int, int)> rec = [&](int next_value, int left) {
    if (!cur.empty()) out.emplace_back(cur);
    for (int v = next_value; v <= max_value; ++v) {
      for (int r = 1; r <= left; ++r) {
        cur.push_back({v, r});
        rec(v + 1, left - r);
        cur.pop_back();
      }
    }
  };
  rec(1, max_total);
  return out;
}

/// D[a][l] from Taylor coefficients: with u = w + n_a and
/// h(u) = prod_{b != a} (u + n_b - n_a)^(-r_b), D[a][l] = h^(r_a - l)(0) / (r_a - l)!.
/// Derivatives of h come from h' = h g, g = sum_b -r_b / (u + c_b), by Leibniz.
inline std::vector<std::vector<Rational>> pfd_by_derivatives(const MultisetGrouping& g) {
  std::vector<std::vector<Rational>> d(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    const int r = g[a].multiplicity;
    std::vector<Rational> gder(static_cast<std::size_t>(r));  // g^(j)(0)
    for (int j = 0; j < r; ++j) {
      Rational sum = 0;
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (b == a) continue;
        const Rational c = g[b].value - g[a].value;
        sum += Rational(-g[b].multiplicity) * ((j % 2 == 0) ? 1 : -1) * factorial(j) * rpow(c, -(j + 1));
      }
      gder[static_cast<std::size_t>(j)] = sum;
    }
    std::vector<Rational> h(static_cast<std::size_t>(r));  // h^(n)(0)
    h[0] = 1;
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (b != a) h[0] *= rpow(Rational(g[b].value - g[a].value), -g[b].multiplicity);
    }
    for (int n = 0; n + 1 < r; ++n) {
      Rational next = 0;
      for (int j = 0; j <= n; ++j) {
        next += Rational(binomial(n, j)) * h[static_cast<std::size_t>(n - j)] * gder[static_cast<std::size_t>(j)];
      }
      h[static_cast<std::size_t>(n + 1)] = next;
    }
    d[a].resize(static_cast<std::size_t>(r));
    for (int l = 1; l <= r; ++l) {
      d[a][static_cast<std::size_t>(l - 1)] = h[static_cast<std::size_t>(r - l)] / factorial(r - l);
    }
  }
  return d;
}

/// prod_b (w + n_b)^(-r_b).
inline Rational product_form(const MultisetGrouping& g, const Rational& w) {
  Rational out = 1;
  for (const auto& grp : g.groups()) out *= rpow(w + grp.value, -grp.multiplicity);
  return out;
}

/// Box values n_1..n_d of a grouping, one per cell.
inline std::vector<long> boxes(const MultisetGrouping& g) {
  std::vector<long> out;
  for (const auto& grp : g.groups()) out.insert(out.end(), static_cast<std::size_t>(grp.multiplicity), grp.value);
  return out;
}

/// sum over e in N^d with |e| = m of prod_i n_i^(-e_i), by recursion on cells.
inline Rational bump_sum_brute(const std::vector<long>& n, int m) {
  std::function<Rational(std::size_t, int)> rec = [&](std::size_t i, int left) -> Rational {
    if (i + 1 == n.size()) return rpow(Rational(n[i]), -left);
    Rational sum = 0;
    for (int e = 0; e <= left; ++e) sum += rpow(Rational(n[i]), -e) * rec(i + 1, left - e);
    return sum;
  };
  return rec(0, m);
}

/// Truncated Ohno function of [[k11, k12], [k21]] on the (2,1) shape, summed
/// over the three orderings of the running indices. With a = n11 = n12 < b = n21
/// the filling integral is (1+s) a^-s b/(b-a) - a^-s ab/(b-a)^2 + b^-s a^2/(a-b)^2;
/// the case a = n11 < b = n12 = n21 is the same with the roles swapped, and
/// distinct values give sum_i n_i^-s prod_{j!=i} n_j / (n_j - n_i).
inline std::complex<double> ohno_21_six_series(int k11, int k12, int k21, std::complex<double> s, int max_entry) {
  using C = std::complex<double>;
  std::vector<C> ps(static_cast<std::size_t>(max_entry) + 1);
  for (int n = 1; n <= max_entry; ++n) ps[static_cast<std::size_t>(n)] = std::exp(-s * std::log(double(n)));
  auto p = [&](double n) { return ps[static_cast<std::size_t>(n)]; };
  C total = 0.0;
  for (int a = 1; a <= max_entry; ++a) {
    for (int b = a + 1; b <= max_entry; ++b) {
      const double x = a, y = b;
      const double d = y - x;
      // n11 = n12 = a < n21 = b: cells carry a, a, b.
      const C f1 = (1.0 + s) * p(x) * y / d - p(x) * x * y / (d * d) + p(y) * x * x / (d * d);
      total += std::pow(x, -(k11 - 1)) * std::pow(x, -(k12 - 1)) * std::pow(y, -(k21 - 1)) * (f1 / (x * x * y));
      // n11 = a < n12 = n21 = b: cells carry a, b, b.
      const C f2 = (1.0 + s) * p(y) * x / (-d) - p(y) * x * y / (d * d) + p(x) * y * y / (d * d);
      total += std::pow(x, -(k11 - 1)) * std::pow(y, -(k12 - 1)) * std::pow(y, -(k21 - 1)) * (f2 / (x * y * y));
    }
  }
  // Distinct values n11 < n12, n11 < n21, n12 != n21.
  for (int a = 1; a <= max_entry; ++a) {
    for (int b = a + 1; b <= max_entry; ++b) {
      for (int c = a + 1; c <= max_entry; ++c) {
        if (b == c) continue;
        const double n[3] = {double(a), double(b), double(c)};
        C f = 0.0;
        for (int i = 0; i < 3; ++i) {
          C term = p(n[i]);
          for (int j = 0; j < 3; ++j) {
            if (j != i) term *= n[j] / (n[j] - n[i]);
          }
          f += term;
        }
        total += std::pow(n[0], -k11) * std::pow(n[1], -k12) * std::pow(n[2], -k21) * f;
      }
    }
  }
  return total;
}

}  // namespace oracle
