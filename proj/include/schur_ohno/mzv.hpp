#pragma once

#include <span>
#include <string>
#include <vector>

#include "schur_ohno/indices.hpp"
#include "schur_ohno/summation.hpp"

namespace schur_ohno {

/// Every series is truncated to entries <= max_entry.
struct TruncationConfig {
  int max_entry = 2000;
  bool err_proxy_enabled = true;
  unsigned threads = 0;  // 0: all hardware threads
};

/// sum_{n_1 < ... < n_r <= M} prod n_i^(-k_i).
EvalResult zeta_ez(const EzIndex& k, const TruncationConfig& cfg);

/// Truncated partial sums S(0), S(1), ..., S(M) of zeta_ez, by nested
/// cumulative sums in O(r M).
std::vector<double> ez_partial_sums(const EzIndex& k, int max_entry);

/// sum over SSYT with entries <= M of prod n_ij^(-k_ij). Requires k in W.
EvalResult zeta_schur(const TableauIndex& k, const TruncationConfig& cfg);

/// S(0), ..., S(M) for zeta_schur, from a single enumeration bucketed by
/// the largest entry of each filling.
std::vector<double> schur_partial_sums(const TableauIndex& k, int max_entry, unsigned threads = 0);

EvalResult osum_ez(const EzIndex& k, int ell, const TruncationConfig& cfg);

enum class OsumMode {
  independent,  ///< one zeta_schur per bump tableau
  fused,        ///< one enumeration, per-filling generating identity
};

EvalResult osum_schur(const TableauIndex& k, int ell, const TruncationConfig& cfg,
                      OsumMode mode = OsumMode::independent);

/// sum over l_1 + ... + l_r = ell of prod_i osum_ez(cols[i], l_i).
EvalResult osum_columns(std::span<const EzIndex> cols, int ell, const TruncationConfig& cfg);

/// One ordering of the running indices of a (2,1) filling and the EZ index
/// whose sum it produces.
struct Stratum {
  std::string order;
  EzIndex index;
};

/// The four orderings n11=n12<n21, n11<n12=n21, n11<n12<n21, n11<n21<n12.
/// Pure rewriting; the index need not be in W.
std::vector<Stratum> stratify_21(const TableauIndex& k);

}  // namespace schur_ohno
