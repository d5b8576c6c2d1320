#include "schur_ohno/summation.hpp"

#include <algorithm>

namespace schur_ohno {

namespace {
const double kSlowestRatio = std::pow(2.0, 0.25);
}

double tail_bound(double d_far, double d_near) {
  if (d_near == 0.0) return 0.0;
  const double ratio = std::max(d_far / d_near, kSlowestRatio);
  return 2.0 * d_near / (ratio - 1.0);
}

EvalResult finalize(const TruncatedSums& sums, int max_entry, bool estimate_error) {
  EvalResult r;
  r.value = sums.full;
  r.max_entry = max_entry;
  if (!estimate_error) return r;
  r.half_diff = std::abs(sums.full - sums.half);
  r.err_est = r.half_diff;
  if (max_entry >= 4) {
    r.err_est = std::max(r.half_diff, tail_bound(std::abs(sums.half - sums.quarter), r.half_diff));
  }
  return r;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace schur_ohno
