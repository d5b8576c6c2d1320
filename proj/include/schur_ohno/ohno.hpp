#pragma once

#include <complex>
#include <span>
#include <vector>

#include "schur_ohno/indices.hpp"
#include "schur_ohno/pfd.hpp"
#include "schur_ohno/summation.hpp"

namespace schur_ohno {

struct OhnoConfig {
  int max_entry = 2000;
  double quad_abs_tol = 1e-10;
  bool err_proxy_enabled = true;
  unsigned threads = 0;  // 0: all hardware threads
};

enum class OhnoMethod { series, quadrature };

/// Closed form of int_0^inf w^(-s-1) (w+n)^(-r) dw for -r < Re(s) < 0:
/// -pi / sin(pi s) * n^(-(s+r)) * gen_binom_factor(s, r).
std::complex<double> beta_closed_form(long n, int r, std::complex<double> s);

/// sum_a sum_l n_a^(-(s+l)) gen_binom_factor(s, l) D[a][l], for Re(s) > -1.
std::complex<double> filling_integral_series(const MultisetGrouping& g, std::complex<double> s);

/// -sin(pi s)/pi * int_0^inf w^(-s-1) prod_a (w+n_a)^(-r_a) dw for
/// -1 < Re(s) < 0, to absolute tolerance `tol`. The range is split at w = 1
/// and [1, inf) folded onto (0, 1] by w -> 1/w; both pieces go through
/// tanh-sinh quadrature. Throws ConvergenceFailure when the error estimate
/// stays above `tol` within 2^20 nodes.
std::complex<double> filling_integral_quadrature(const MultisetGrouping& g, std::complex<double> s,
                                                 double tol);

/// Interpolated Ohno function of a Schur index: sum over SSYT with entries
/// <= M of N^-(k-1) times the per-filling integral, evaluated by the series
/// (any Re(s) > -1) or by quadrature (-1 < Re(s) < 0 only).
EvalResult ohno_schur(const TableauIndex& k, std::complex<double> s, const OhnoConfig& cfg,
                      OhnoMethod method = OhnoMethod::series);

/// Ohno function of an EZ index straight from its defining sum:
/// sum_i sum_{n_1<...<n_r<=M} prod n_j^-k_j * n_i^-s * prod_{j!=i} n_j/(n_j-n_i).
EvalResult ohno_ez_direct(const EzIndex& k, std::complex<double> s, const OhnoConfig& cfg);

struct DualityPoint {
  std::complex<double> s;
  EvalResult lhs;
  EvalResult rhs;
  double abs_diff = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct DualityReport {
  std::vector<DualityPoint> points;

  bool all_pass() const;
};

/// Absolute slack added to the summed error estimates.
inline constexpr double kDualityFloor = 1e-9;

/// Compares I_k(s) with I_kdual(s) at every point; a point passes when
/// |difference| <= err_est(k) + err_est(kdual) + kDualityFloor.
DualityReport verify_duality(const TableauIndex& k, const TableauIndex& k_dual,
                             std::span<const std::complex<double>> points, const OhnoConfig& cfg);

}  // namespace schur_ohno
