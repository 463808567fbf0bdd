#include "patav/tables.hpp"

#include "patav/solvers.hpp"

#include <algorithm>

namespace patav {

namespace {

struct Tally {
  std::vector<int> exps;
  int t = 0;
  bool sl = true;
};

// Adds one member's term to `all` and to the matching SL/LS series.
void add_term(SplitTable& tab, const Tally& tl) {
  const DistPoly term = DistPoly::monomial(static_cast<std::size_t>(tl.t));
  tab.all.add_to(tl.exps, term);
  (tl.sl ? tab.sl : tab.ls).add_to(tl.exps, term);
}

FamilySpec spec_of(Family f, int n, std::vector<Pattern> avoid) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.avoid = std::move(avoid);
  return s;
}

}  // namespace

std::vector<Pattern> pattern_set_I() { return Pattern::parse_list("3124,42153,24153"); }
std::vector<Pattern> pattern_set_II() { return Pattern::parse_list("2134,42153,24153"); }
std::vector<Pattern> pattern_set_III() { return Pattern::parse_list("2143,42135,24135"); }

SplitTable trivariate_N_table(int n_max, int max_lar, int jobs) {
  if (n_max < 1 || max_lar < 0) throw DomainError("trivariate table needs n_max >= 1 and max_lar >= 0");
  const MultiSeries shape = xu_series(n_max, max_lar);
  SplitTable tab{shape, shape, shape};
  for (int n = 1; n <= n_max; ++n) {
    FamilySpec spec = spec_of(Family::WordMax, n, Pattern::parse_list("021"));
    spec.max_entry = max_lar;
    for (const auto& w : generate(spec, jobs)) {
      const Extremes ex = lar_sma(w);
      add_term(tab, {{n, ex.lar}, asc_des(w).asc, ex.is_sl()});
    }
  }
  return tab;
}

SplitTable quadvariate_G_table(int n_max, int p_max, int jobs) {
  if (n_max < 1 || p_max < 1) throw DomainError("quadvariate table needs n_max, p_max >= 1");
  const MultiSeries shape({Var::X, Var::S, Var::U}, {n_max, p_max, n_max + p_max - 1});
  SplitTable tab{shape, shape, shape};
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= p_max; ++p) {
      FamilySpec spec = spec_of(Family::InvP, n, Pattern::parse_list("021"));
      spec.p = p;
      for (const auto& w : generate(spec, jobs)) {
        const Extremes ex = lar_sma(w);
        add_term(tab, {{n, p, ex.lar}, asc_des(w).asc, ex.is_sl()});
      }
    }
  }
  for (auto* s : {&tab.all, &tab.sl, &tab.ls}) s->set_complete(Var::U);
  return tab;
}

MultiSeries tig_H_table(int n_max, int p_max, int jobs) {
  if (n_max < 1 || p_max < 1) throw DomainError("tig table needs n_max, p_max >= 1");
  MultiSeries h({Var::X, Var::S}, {n_max, p_max});
  for (int n = 1; n <= n_max; ++n) {
    for (int p = 1; p <= p_max; ++p) {
      FamilySpec spec = spec_of(Family::InvP, n, Pattern::parse_list("021"));
      spec.p = p;
      const DistPoly d = distribution(spec, Stat::Tig, jobs);
      h.set(std::vector<int>{n, p}, d);
    }
  }
  return h;
}

MultiSeries inv0021_asc_series(int n_max, int jobs) {
  MultiSeries out = x_series(n_max);
  for (int n = 1; n <= n_max; ++n)
    out.set(std::vector<int>{n}, distribution(spec_of(Family::Inv, n, Pattern::parse_list("0021")), Stat::Asc, jobs));
  return out;
}

PermClassTables perm_class_tables(int n_max, int jobs) {
  const MultiSeries shape = x_series(n_max);
  const auto buckets = static_cast<std::size_t>(std::max(6, n_max + 1));
  PermClassTables tab{shape, std::vector<MultiSeries>(buckets, shape), std::vector<MultiSeries>(buckets, shape), shape};
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& w : generate(spec_of(Family::Perm, n, pattern_set_I()), jobs)) {
      const Permutation pi(w);
      const DistPoly term = DistPoly::monomial(static_cast<std::size_t>(ides(pi)));
      const std::vector<int> e{n};
      tab.p.add_to(e, term);
      if (n < 2) continue;
      const int k = alt(pi);
      auto& bucket = lr_word(pi).letters().front() == Side::L ? tab.left : tab.right;
      bucket[static_cast<std::size_t>(k)].add_to(e, term);
    }
    tab.c312.set(std::vector<int>{n}, distribution(spec_of(Family::Perm, n, Pattern::parse_list("312")), Stat::Ides, jobs));
  }
  return tab;
}

}  // namespace patav
