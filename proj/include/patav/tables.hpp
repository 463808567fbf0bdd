#pragma once

#include "patav/enumerate.hpp"
#include "patav/series.hpp"

namespace patav {

/// Enumerated generating functions split by the SL/LS type of each member.
struct SplitTable {
  MultiSeries all;
  MultiSeries sl;  // rightmost maximum at or after the rightmost minimum
  MultiSeries ls;
};

/// 021-avoiding words with entries <= max_lar, as series in (x, u) with
/// coefficient [x^n u^lar t^asc]. Exact for n <= n_max and lar <= max_lar.
SplitTable trivariate_N_table(int n_max, int max_lar, int jobs = 1);

/// I_{n,p}(021) as series in (x, s, u): [x^n s^p u^lar t^asc]. The u order
/// is n_max + p_max - 1, which covers every lar, so u is flagged complete.
SplitTable quadvariate_G_table(int n_max, int p_max, int jobs = 1);

/// I_{n,p}(021) as a series in (x, s) with tig in the t slot.
MultiSeries tig_H_table(int n_max, int p_max, int jobs = 1);

/// Asc distribution of I_n(0021) as a series in x, for n <= n_max.
MultiSeries inv0021_asc_series(int n_max, int jobs = 1);

/// ides generating functions of S_n(3124, 42153, 24153), refined by alt
/// and by the first letter of the L/R word (n >= 2), plus the ides
/// generating function C of S_n(312).
struct PermClassTables {
  MultiSeries p;                     // all n >= 1
  std::vector<MultiSeries> left;     // left[k]: alt = k, word starts with L
  std::vector<MultiSeries> right;    // right[k]: alt = k, word starts with R
  MultiSeries c312;
};
PermClassTables perm_class_tables(int n_max, int jobs = 1);

/// Patterns used throughout: I = {3124, 42153, 24153}.
std::vector<Pattern> pattern_set_I();
std::vector<Pattern> pattern_set_II();  // {2134, 42153, 24153}
std::vector<Pattern> pattern_set_III();   // {2143, 42135, 24135}

}  // namespace patav
