#pragma once

// Chunked, compensated summation of a per-filling term over SSYT with
// bounded entries. Chunk c holds the fillings whose first cell equals c + 1;
// chunk results are combined in chunk order, so the result does not depend
// on the number of worker threads.

#include <algorithm>
#include <vector>

#include "schur_ohno/shapes.hpp"
#include "schur_ohno/summation.hpp"

namespace schur_ohno::detail {

/// `make_term()` is called once per chunk and must return a callable
/// mapping the entries of a filling (row-major) to its term.
template <class MakeTerm>
TruncatedSums sum_over_ssyt(const SkewShape& shape, int max_entry, unsigned threads,
                            MakeTerm&& make_term) {
  const int quarter = max_entry / 4;
  const int half = max_entry / 2;
  std::vector<TruncatedSums> chunks(static_cast<std::size_t>(max_entry));
  run_chunks(chunks.size(), threads, [&](std::size_t c) {
    const int first = static_cast<int>(c) + 1;
    auto term = make_term();
    CompensatedComplexSum low;
    CompensatedComplexSum mid;
    CompensatedComplexSum high;
    SsytEnumerator it(shape, max_entry, first, first);
    while (it.next()) {
      const auto n = it.entries();
      const int top = *std::max_element(n.begin(), n.end());
      const auto t = term(n);
      if (top <= quarter) {
        low.add(t);
      } else if (top <= half) {
        mid.add(t);
      } else {
        high.add(t);
      }
    }
    const auto a = low.value();
    const auto b = mid.value();
    chunks[c] = {a, a + b, (a + b) + high.value()};
  });
  TruncatedAccumulator total;
  for (const auto& c : chunks) total.add(c);
  return total.value();
}

/// Table t[i][n] = n^(-e_i) for n in [1, max_entry].
inline std::vector<std::vector<double>> power_tables(std::span<const int> exponents,
                                                     int max_entry) {
  std::vector<std::vector<double>> t(exponents.size(),
                                     std::vector<double>(static_cast<std::size_t>(max_entry) + 1));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    for (int n = 1; n <= max_entry; ++n) {
      t[i][static_cast<std::size_t>(n)] = std::pow(static_cast<double>(n), -exponents[i]);
    }
  }
  return t;
}

}  // namespace schur_ohno::detail
