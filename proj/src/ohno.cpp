#include "schur_ohno/ohno.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schur_ohno/error.hpp"
#include "ssyt_sum.hpp"

namespace schur_ohno {

namespace {

void check_point(std::complex<double> s) {
  if (!(s.real() > -1.0)) throw InvalidArgument("evaluation needs Re(s) > -1");
}

void check_strip(std::complex<double> s) {
  if (!(s.real() > -1.0 && s.real() < 0.0)) {
    throw InvalidArgument("quadrature needs -1 < Re(s) < 0");
  }
}

void check_config(const OhnoConfig& cfg) {
  if (cfg.max_entry < 1) throw InvalidArgument("max_entry must be at least 1");
  if (cfg.err_proxy_enabled && cfg.max_entry < 2) {
    throw InvalidArgument("error estimation needs max_entry >= 2");
  }
  if (!(cfg.quad_abs_tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
}

}  // namespace

std::complex<double> beta_closed_form(long n, int r, std::complex<double> s) {
  if (n < 1 || r < 1) throw InvalidArgument("beta_closed_form needs n, r >= 1");
  if (!(s.real() > -r && s.real() < 0.0)) {
    throw InvalidArgument("beta_closed_form needs -r < Re(s) < 0");
  }
  const auto pow = std::exp(-(s + static_cast<double>(r)) * std::log(static_cast<double>(n)));
  return -std::numbers::pi / std::sin(std::numbers::pi * s) * pow * gen_binom_factor(s, r);
}

std::complex<double> filling_integral_series(const MultisetGrouping& g, std::complex<double> s) {
  check_point(s);
  const auto table = pfd_coefficients(g);
  std::complex<double> out = 0.0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    const double log_n = std::log(static_cast<double>(g[a].value));
    for (int ell = 1; ell <= g[a].multiplicity; ++ell) {
      out += std::exp(-(s + static_cast<double>(ell)) * log_n) * gen_binom_factor(s, ell) *
             table.at(a, ell).get_d();
    }
  }
  return out;
}

EvalResult ohno_schur(const TableauIndex& k, std::complex<double> s, const OhnoConfig& cfg,
                      OhnoMethod method) {
  check_config(cfg);
  check_point(s);
  if (!is_in_W(k)) {
    throw InadmissibleIndex("index is outside W (needs >= 1 everywhere, >= 2 on corners): " +
                            canonical_key(k));
  }
  if (method == OhnoMethod::quadrature) check_strip(s);
  std::vector<int> reduced(k.exponents().begin(), k.exponents().end());
  for (auto& e : reduced) --e;
  const auto tables = detail::power_tables(reduced, cfg.max_entry);
  auto weight = [&tables](std::span<const int> n) {
    double w = 1.0;
    for (std::size_t i = 0; i < n.size(); ++i) w *= tables[i][static_cast<std::size_t>(n[i])];
    return w;
  };
  TruncatedSums sums;
  if (method == OhnoMethod::series) {
    const auto cells = k.shape().size();
    sums = detail::sum_over_ssyt(k.shape(), cfg.max_entry, cfg.threads, [&] {
      return [&weight, kernel = SeriesKernel(s, cfg.max_entry, cells)](
                 std::span<const int> n) mutable { return weight(n) * kernel(n); };
    });
  } else {
    sums = detail::sum_over_ssyt(k.shape(), cfg.max_entry, cfg.threads, [&] {
      return [&weight, s, tol = cfg.quad_abs_tol](std::span<const int> n) {
        return weight(n) * filling_integral_quadrature(group_entries(n), s, tol);
      };
    });
  }
  return finalize(sums, cfg.max_entry, cfg.err_proxy_enabled);
}

EvalResult ohno_ez_direct(const EzIndex& k, std::complex<double> s, const OhnoConfig& cfg) {
  check_config(cfg);
  check_point(s);
  if (!is_admissible(k)) throw InadmissibleIndex("index is not admissible (last exponent < 2)");
  const auto tables = detail::power_tables(k.exponents(), cfg.max_entry);
  std::vector<std::complex<double>> pow_s(static_cast<std::size_t>(cfg.max_entry) + 1);
  for (int n = 1; n <= cfg.max_entry; ++n) {
    pow_s[static_cast<std::size_t>(n)] = std::exp(-s * std::log(static_cast<double>(n)));
  }
  const auto sums = detail::sum_over_ssyt(
      SkewShape::column(static_cast<int>(k.depth())), cfg.max_entry, cfg.threads, [&] {
        return [&](std::span<const int> n) {
          double base = 1.0;
          for (std::size_t j = 0; j < n.size(); ++j) base *= tables[j][static_cast<std::size_t>(n[j])];
          std::complex<double> inner = 0.0;
          for (std::size_t i = 0; i < n.size(); ++i) {
            double prod = 1.0;
            for (std::size_t j = 0; j < n.size(); ++j) {
              if (j != i) prod *= static_cast<double>(n[j]) / static_cast<double>(n[j] - n[i]);
            }
            inner += prod * pow_s[static_cast<std::size_t>(n[i])];
          }
          return base * inner;
        };
      });
  return finalize(sums, cfg.max_entry, cfg.err_proxy_enabled);
}

bool DualityReport::all_pass() const {
  return std::all_of(points.begin(), points.end(), [](const DualityPoint& p) { return p.pass; });
}

DualityReport verify_duality(const TableauIndex& k, const TableauIndex& k_dual,
                             std::span<const std::complex<double>> points, const OhnoConfig& cfg) {
  if (!is_in_ID(k)) throw InadmissibleIndex("index is not in I^D: " + canonical_key(k));
  if (!is_in_ID(k_dual)) throw InadmissibleIndex("dual is not in I^D: " + canonical_key(k_dual));
  DualityReport report;
  for (const auto s : points) {
    DualityPoint p;
    p.s = s;
    p.lhs = ohno_schur(k, s, cfg);
    p.rhs = ohno_schur(k_dual, s, cfg);
    p.abs_diff = std::abs(p.lhs.value - p.rhs.value);
    p.threshold = p.lhs.err_est + p.rhs.err_est + kDualityFloor;
    p.pass = p.abs_diff <= p.threshold;
    report.points.push_back(p);
  }
  return report;
}

}  // namespace schur_ohno
