#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace schur_ohno {

/// Neumaier-compensated accumulator. For complex values the real and
/// imaginary parts are compensated independently.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  void add(double x) { re_.add(x); }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

/// One series truncated at three nested levels: entries <= M/4, <= M/2, <= M.
struct TruncatedSums {
  std::complex<double> quarter{};
  std::complex<double> half{};
  std::complex<double> full{};

  TruncatedSums& operator+=(const TruncatedSums& o) {
    quarter += o.quarter;
    half += o.half;
    full += o.full;
    return *this;
  }
};

/// Levelwise product; truncating a product of independent series at M is
/// the product of the factors truncated at M.
inline TruncatedSums operator*(const TruncatedSums& a, const TruncatedSums& b) {
  return {a.quarter * b.quarter, a.half * b.half, a.full * b.full};
}

/// Compensated accumulation of TruncatedSums, levelwise.
class TruncatedAccumulator {
 public:
  void add(const TruncatedSums& s) {
    quarter_.add(s.quarter);
    half_.add(s.half);
    full_.add(s.full);
  }
  TruncatedSums value() const { return {quarter_.value(), half_.value(), full_.value()}; }

 private:
  CompensatedComplexSum quarter_;
  CompensatedComplexSum half_;
  CompensatedComplexSum full_;
};

/// Outcome of a truncated evaluation.
///
/// `half_diff` is |S(M) - S(M/2)|. `err_est` is the reported truncation
/// error: the larger of `half_diff` and twice the Richardson tail
/// extrapolated from the three levels (see `tail_bound`). Both are zero when
/// error estimation is disabled.
struct EvalResult {
  std::complex<double> value{};
  double err_est = 0.0;
  double half_diff = 0.0;
  int max_entry = 0;
};

/// Extrapolated tail bound from successive level differences.
///
/// With d_far = |S(M/2) - S(M/4)| and d_near = |S(M) - S(M/2)|, a tail
/// decaying like M^-p has d_far/d_near = 2^p and tail d_near/(2^p - 1). The
/// observed ratio is floored at 2^(1/4) (slowest decay assumed) and the
/// extrapolated tail doubled, since the extrapolation is only asymptotically
/// exact.
double tail_bound(double d_far, double d_near);

EvalResult finalize(const TruncatedSums& sums, int max_entry, bool estimate_error);

/// 0 means "all hardware threads".
unsigned resolve_threads(unsigned requested);

/// Calls body(chunk) for every chunk in [0, n_chunks) on up to `threads`
/// workers. The caller stores per-chunk results and combines them in chunk
/// order, which keeps reductions independent of the thread count.
template <class Body>
void run_chunks(std::size_t n_chunks, unsigned threads, Body&& body) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n_chunks <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(threads, n_chunks);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t c = next++; c < n_chunks; c = next++) body(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n_chunks;
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace schur_ohno
