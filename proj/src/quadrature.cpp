#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

#include "schur_ohno/error.hpp"
#include "schur_ohno/ohno.hpp"

namespace schur_ohno {

namespace {

using Integrator = boost::math::quadrature::tanh_sinh<double>;

// 2^20 nodes.
constexpr std::size_t kMaxRefinements = 20;

Integrator& integrator() {
  thread_local Integrator instance(kMaxRefinements);
  return instance;
}

// Integral over (0, 1) to absolute tolerance `tol` when the integrand's L1
// norm exceeds one; the reported error goes to `err`.
template <class F>
double integrate_unit(F f, double tol, double& err) {
  double l1 = 0.0;
  std::size_t levels = 0;
  double q = integrator().integrate(f, 0.0, 1.0, tol, &err, &l1, &levels);
  if (err > tol && l1 > 1.0) q = integrator().integrate(f, 0.0, 1.0, tol / l1, &err, &l1, &levels);
  return q;
}

}  // namespace

std::complex<double> filling_integral_quadrature(const MultisetGrouping& g, std::complex<double> s,
                                                 double tol) {
  if (!(s.real() > -1.0 && s.real() < 0.0)) {
    throw InvalidArgument("quadrature needs -1 < Re(s) < 0");
  }
  if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
  if (g.size() == 0) throw InvalidArgument("grouping is empty");
  const double cells = g.total_multiplicity();

  // w in (0, 1]: w^(-s-1) prod (w + n)^(-r).
  auto near = [&](double w) {
    double p = 1.0;
    for (const auto& grp : g.groups()) p *= std::pow(w + static_cast<double>(grp.value), -grp.multiplicity);
    return std::exp((-s - 1.0) * std::log(w)) * p;
  };
  // w = 1/v: v^(s+d-1) prod (1 + n v)^(-r).
  auto far = [&](double v) {
    double p = 1.0;
    for (const auto& grp : g.groups()) p *= std::pow(1.0 + static_cast<double>(grp.value) * v, -grp.multiplicity);
    return std::exp((s + cells - 1.0) * std::log(v)) * p;
  };

  const auto prefactor = -std::sin(std::numbers::pi * s) / std::numbers::pi;
  const double piece_tol = tol / (4.0 * std::max(1.0, std::abs(prefactor)));
  double e[4] = {};
  const double near_re = integrate_unit([&](double w) { return near(w).real(); }, piece_tol, e[0]);
  const double far_re = integrate_unit([&](double v) { return far(v).real(); }, piece_tol, e[1]);
  double near_im = 0.0;
  double far_im = 0.0;
  if (s.imag() != 0.0) {
    near_im = integrate_unit([&](double w) { return near(w).imag(); }, piece_tol, e[2]);
    far_im = integrate_unit([&](double v) { return far(v).imag(); }, piece_tol, e[3]);
  }
  const double err = std::abs(prefactor) * (e[0] + e[1] + e[2] + e[3]);
  if (!(err <= tol)) {
    throw ConvergenceFailure("quadrature error estimate " + std::to_string(err) +
                             " exceeds tolerance " + std::to_string(tol));
  }
  return prefactor * std::complex<double>(near_re + far_re, near_im + far_im);
}

}  // namespace schur_ohno
