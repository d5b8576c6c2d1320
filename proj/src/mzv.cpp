#include "schur_ohno/mzv.hpp"

#include <algorithm>
#include <cmath>

#include "schur_ohno/error.hpp"
#include "schur_ohno/pfd.hpp"
#include "ssyt_sum.hpp"

namespace schur_ohno {

namespace {

void check_config(const TruncationConfig& cfg) {
  if (cfg.max_entry < 1) throw InvalidArgument("max_entry must be at least 1");
  if (cfg.err_proxy_enabled && cfg.max_entry < 2) {
    throw InvalidArgument("error estimation needs max_entry >= 2");
  }
}

void require_admissible(const EzIndex& k) {
  if (!is_admissible(k)) throw InadmissibleIndex("index is not admissible (last exponent < 2)");
}

void require_in_W(const TableauIndex& k) {
  if (!is_in_W(k)) {
    throw InadmissibleIndex("index is outside W (needs >= 1 everywhere, >= 2 on corners): " +
                            canonical_key(k));
  }
}

TruncatedSums levels_of(const std::vector<double>& partial, int max_entry) {
  return {partial[static_cast<std::size_t>(max_entry / 4)],
          partial[static_cast<std::size_t>(max_entry / 2)],
          partial[static_cast<std::size_t>(max_entry)]};
}

TruncatedSums zeta_schur_levels(const TableauIndex& k, const TruncationConfig& cfg) {
  const auto tables = detail::power_tables(k.exponents(), cfg.max_entry);
  return detail::sum_over_ssyt(k.shape(), cfg.max_entry, cfg.threads, [&tables] {
    return [&tables](std::span<const int> n) {
      double t = 1.0;
      for (std::size_t i = 0; i < n.size(); ++i) t *= tables[i][static_cast<std::size_t>(n[i])];
      return t;
    };
  });
}

TruncatedSums osum_ez_levels(const EzIndex& k, int ell, int max_entry) {
  TruncatedAccumulator acc;
  WeakCompositions eps(k.depth(), ell);
  while (eps.next()) {
    std::vector<int> e(k.exponents().begin(), k.exponents().end());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += eps.current()[i];
    acc.add(levels_of(ez_partial_sums(EzIndex(std::move(e)), max_entry), max_entry));
  }
  return acc.value();
}

}  // namespace

std::vector<double> ez_partial_sums(const EzIndex& k, int max_entry) {
  if (max_entry < 0) throw InvalidArgument("max_entry must be nonnegative");
  const auto size = static_cast<std::size_t>(max_entry) + 1;
  std::vector<double> prev(size, 1.0);
  std::vector<double> cur(size, 0.0);
  for (const int e : k.exponents()) {
    CompensatedSum acc;
    cur[0] = 0.0;
    for (std::size_t n = 1; n < size; ++n) {
      acc.add(prev[n - 1] * std::pow(static_cast<double>(n), -e));
      cur[n] = acc.value();
    }
    std::swap(prev, cur);
  }
  return prev;
}

EvalResult zeta_ez(const EzIndex& k, const TruncationConfig& cfg) {
  check_config(cfg);
  require_admissible(k);
  return finalize(levels_of(ez_partial_sums(k, cfg.max_entry), cfg.max_entry), cfg.max_entry,
                  cfg.err_proxy_enabled);
}

EvalResult zeta_schur(const TableauIndex& k, const TruncationConfig& cfg) {
  check_config(cfg);
  require_in_W(k);
  return finalize(zeta_schur_levels(k, cfg), cfg.max_entry, cfg.err_proxy_enabled);
}

std::vector<double> schur_partial_sums(const TableauIndex& k, int max_entry, unsigned threads) {
  if (max_entry < 1) throw InvalidArgument("max_entry must be at least 1");
  require_in_W(k);
  const auto size = static_cast<std::size_t>(max_entry) + 1;
  const auto tables = detail::power_tables(k.exponents(), max_entry);
  // layers[c][m]: fillings of chunk c whose largest entry is m.
  std::vector<std::vector<double>> layers(static_cast<std::size_t>(max_entry));
  run_chunks(layers.size(), threads, [&](std::size_t c) {
    std::vector<CompensatedSum> acc(size);
    const int first = static_cast<int>(c) + 1;
    SsytEnumerator it(k.shape(), max_entry, first, first);
    while (it.next()) {
      const auto n = it.entries();
      double t = 1.0;
      for (std::size_t i = 0; i < n.size(); ++i) t *= tables[i][static_cast<std::size_t>(n[i])];
      acc[static_cast<std::size_t>(*std::max_element(n.begin(), n.end()))].add(t);
    }
    layers[c].resize(size);
    for (std::size_t m = 0; m < size; ++m) layers[c][m] = acc[m].value();
  });
  std::vector<CompensatedSum> by_top(size);
  for (const auto& chunk : layers) {
    for (std::size_t m = 0; m < size; ++m) by_top[m].add(chunk[m]);
  }
  std::vector<double> out(size, 0.0);
  CompensatedSum running;
  for (std::size_t m = 1; m < size; ++m) {
    running.add(by_top[m].value());
    out[m] = running.value();
  }
  return out;
}

EvalResult osum_ez(const EzIndex& k, int ell, const TruncationConfig& cfg) {
  check_config(cfg);
  require_admissible(k);
  if (ell < 0) throw InvalidArgument("ell must be nonnegative");
  return finalize(osum_ez_levels(k, ell, cfg.max_entry), cfg.max_entry, cfg.err_proxy_enabled);
}

EvalResult osum_schur(const TableauIndex& k, int ell, const TruncationConfig& cfg, OsumMode mode) {
  check_config(cfg);
  require_in_W(k);
  if (ell < 0) throw InvalidArgument("ell must be nonnegative");
  if (mode == OsumMode::independent) {
    TruncatedAccumulator acc;
    WeakCompositions eps(k.shape().size(), ell);
    while (eps.next()) acc.add(zeta_schur_levels(bumped(k, eps.current()), cfg));
    return finalize(acc.value(), cfg.max_entry, cfg.err_proxy_enabled);
  }
  // N^-k h_ell(1/n) = N^-(k-1) * sum_a sum_l binom(ell+l-1, l-1) n_a^-(ell+l) D[a][l].
  std::vector<int> reduced(k.exponents().begin(), k.exponents().end());
  for (auto& e : reduced) --e;
  const auto tables = detail::power_tables(reduced, cfg.max_entry);
  const auto cells = k.shape().size();
  const auto sums = detail::sum_over_ssyt(k.shape(), cfg.max_entry, cfg.threads, [&] {
    return [&tables, kernel = SeriesKernel(static_cast<double>(ell), cfg.max_entry, cells)](
               std::span<const int> n) mutable {
      double w = 1.0;
      for (std::size_t i = 0; i < n.size(); ++i) w *= tables[i][static_cast<std::size_t>(n[i])];
      return w * kernel(n).real();
    };
  });
  return finalize(sums, cfg.max_entry, cfg.err_proxy_enabled);
}

EvalResult osum_columns(std::span<const EzIndex> cols, int ell, const TruncationConfig& cfg) {
  check_config(cfg);
  if (cols.empty()) throw InvalidArgument("osum_columns needs at least one column");
  if (ell < 0) throw InvalidArgument("ell must be nonnegative");
  for (const auto& c : cols) require_admissible(c);
  // levels[i][l] = osum_ez(cols[i], l) at three truncations.
  std::vector<std::vector<TruncatedSums>> levels(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (int l = 0; l <= ell; ++l) levels[i].push_back(osum_ez_levels(cols[i], l, cfg.max_entry));
  }
  TruncatedAccumulator acc;
  WeakCompositions split(cols.size(), ell);
  while (split.next()) {
    TruncatedSums prod{1.0, 1.0, 1.0};
    for (std::size_t i = 0; i < cols.size(); ++i) {
      prod = prod * levels[i][static_cast<std::size_t>(split.current()[i])];
    }
    acc.add(prod);
  }
  return finalize(acc.value(), cfg.max_entry, cfg.err_proxy_enabled);
}

std::vector<Stratum> stratify_21(const TableauIndex& k) {
  if (!(k.shape() == SkewShape(Partition({2, 1})))) {
    throw InvalidArgument("stratify_21 needs the straight shape (2,1)");
  }
  const int k11 = k.at({1, 1});
  const int k12 = k.at({1, 2});
  const int k21 = k.at({2, 1});
  return {
      {"n11=n12<n21", EzIndex({k11 + k12, k21})},
      {"n11<n12=n21", EzIndex({k11, k12 + k21})},
      {"n11<n12<n21", EzIndex({k11, k12, k21})},
      {"n11<n21<n12", EzIndex({k11, k21, k12})},
  };
}

}  // namespace schur_ohno
