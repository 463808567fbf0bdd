#include "patav/verify.hpp"

#include "patav/bijections.hpp"
#include "patav/enumerate.hpp"
#include "patav/solvers.hpp"
#include "patav/tables.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace patav {

namespace {

using json = nlohmann::ordered_json;

// Collects comparisons for one check; the first failure becomes the witness.
class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  bool holds(const std::string& identity, const std::string& index, bool ok, const std::string& lhs = "false",
             const std::string& rhs = "true") {
    if (ok) return true;
    ++failures_;
    if (!r_.witness) r_.witness = Witness{identity, index, lhs, rhs};
    r_.status = CheckStatus::Fail;
    return false;
  }

  bool value(const std::string& identity, const std::string& index, const BigInt& lhs, const BigInt& rhs) {
    return holds(identity, index, lhs == rhs, lhs.str(), rhs.str());
  }

  bool poly(const std::string& identity, const std::string& index, const DistPoly& lhs, const DistPoly& rhs) {
    return holds(identity, index, lhs == rhs, lhs.to_string(), rhs.to_string());
  }

  bool series(const std::string& identity, const MultiSeries& lhs, const MultiSeries& rhs) {
    const auto d = first_difference(lhs, rhs);
    if (!d) return true;
    return holds(identity, describe_exponents(lhs.vars(), d->exponents), false, d->lhs.to_string(), d->rhs.to_string());
  }

  void note(std::string s) { r_.notes.push_back(std::move(s)); }
  int failures() const { return failures_; }

 private:
  CheckResult& r_;
  int failures_ = 0;
};

FamilySpec spec_of(Family f, int n, std::vector<Pattern> avoid) {
  FamilySpec s;
  s.family = f;
  s.n = n;
  s.avoid = std::move(avoid);
  return s;
}

FamilySpec perm(int n, const std::string& avoid) { return spec_of(Family::Perm, n, Pattern::parse_list(avoid)); }
FamilySpec perm(int n, std::vector<Pattern> avoid) { return spec_of(Family::Perm, n, std::move(avoid)); }
FamilySpec inv(int n, const std::string& avoid) {
  return spec_of(Family::Inv, n, avoid.empty() ? std::vector<Pattern>{} : Pattern::parse_list(avoid));
}

std::string at_n(int n) { return "n=" + std::to_string(n); }

DistPoly tp(std::initializer_list<long long> c) { return DistPoly(c); }

bool starts_left(const Permutation& p) { return p.size() >= 2 && p.position_of(2) < p.position_of(1); }

std::vector<Permutation> as_perms(const std::vector<std::vector<int>>& ws) {
  std::vector<Permutation> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.emplace_back(w);
  return out;
}

// sizes 0..n_max of S_n(I); index 0 is empty
std::vector<std::vector<Permutation>> class_lists(int n_max, int jobs) {
  std::vector<std::vector<Permutation>> out(static_cast<std::size_t>(n_max + 1));
  for (int n = 1; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = as_perms(generate(perm(n, pattern_set_I()), jobs));
  return out;
}

CheckResult make_result(std::string id, std::string title, bool conjecture = false) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.conjecture = conjecture;
  return r;
}

int clamp_to(int value, int cap, int floor) { return std::max(floor, std::min(value, cap)); }

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

VerifyBounds VerifyBounds::capped(int m) const {
  VerifyBounds b = *this;
  b.a_n = clamp_to(a_n, m, 1);
  b.main_n = clamp_to(main_n, m, 1);
  b.lemma_order = clamp_to(lemma_order, m, 2);
  b.perm_structure_n = clamp_to(perm_structure_n, m, 2);
  b.theta_n = clamp_to(theta_n, m, 1);
  b.phi_total = clamp_to(phi_total, m, 3);
  b.psi_total = clamp_to(psi_total, m, 4);
  b.strip_total = clamp_to(strip_total, m, 2);
  b.r_coeffs = clamp_to(r_coeffs, m, 1);
  b.kernel_order = clamp_to(kernel_order, m, 1);
  b.n_enum_x = clamp_to(n_enum_x, m, 1);
  b.n_enum_u = clamp_to(n_enum_u, m, 1);
  b.n_solve_x = clamp_to(n_solve_x, m, 1);
  b.n_solve_u = clamp_to(n_solve_u, m, 1);
  b.n_solve_t = clamp_to(n_solve_t, m, 1);
  b.eq_c_x = clamp_to(eq_c_x, m, 1);
  b.eq_c_s = clamp_to(eq_c_s, m, 1);
  b.eq_c_q = clamp_to(eq_c_q, m, 1);
  b.h_identity_order = clamp_to(h_identity_order, m, 2);
  b.n_system_x = clamp_to(n_system_x, m, 1);
  b.n_system_u = clamp_to(n_system_u, m, 1);
  b.g_x = clamp_to(g_x, m, 1);
  b.g_p = clamp_to(g_p, m, 1);
  b.g_u = clamp_to(g_u, m, 1);
  b.i_series_order = clamp_to(i_series_order, m, 1);
  b.conjecture_count_n = clamp_to(conjecture_count_n, m, 1);
  b.conjecture_joint_n = clamp_to(conjecture_joint_n, m, 1);
  b.facts_n = clamp_to(facts_n, m, 1);
  b.engineering_n = clamp_to(engineering_n, m, 1);
  return b;
}

CheckResult check_a_n(const VerifyBounds& b) {
  CheckResult r = make_result("a_n", "a(n): Lagrange sum = series coefficient = |I_n(0021)|");
  r.params = {{"n_max", b.a_n}};
  Recorder rec(r);
  const MultiSeries a = solve_A(b.a_n);
  // printed values for the first six terms
  const std::vector<long long> printed{1, 2, 6, 23, 101, 480};
  std::ostringstream seq;
  for (int n = 1; n <= b.a_n; ++n) {
    const BigInt lag = a_n_lagrange(n);
    const BigInt ser = a.coeff({n}).total();
    const BigInt enu = count(inv(n, "0021"), b.jobs);
    rec.value("Lagrange sum = |I_n(0021)|", at_n(n), lag, enu);
    rec.value("[x^n] A(x,1) = |I_n(0021)|", at_n(n), ser, enu);
    if (n <= static_cast<int>(printed.size())) rec.value("a(n) = printed value", at_n(n), lag, printed[static_cast<std::size_t>(n - 1)]);
    seq << (n > 1 ? ", " : "") << enu;
  }
  rec.note("a(1.." + std::to_string(b.a_n) + ") = " + seq.str());
  return r;
}

CheckResult check_main_theorem(const VerifyBounds& b) {
  CheckResult r = make_result("main", "ides over S_n(3124,42153,24153) = asc over I_n(0021) = [x^n] A(x,t)");
  r.params = {{"n_max", b.main_n}};
  Recorder rec(r);
  const MultiSeries a = solve_A(b.main_n);
  const std::vector<DistPoly> printed{tp({1}), tp({1, 1}), tp({1, 4, 1}), tp({1, 10, 11, 1})};
  for (int n = 1; n <= b.main_n; ++n) {
    const DistPoly p = distribution(perm(n, pattern_set_I()), Stat::Ides, b.jobs);
    const DistPoly e = distribution(inv(n, "0021"), Stat::Asc, b.jobs);
    const DistPoly s = a.coeff({n});
    rec.poly("ides over S_n(I) = [x^n]A", at_n(n), p, s);
    rec.poly("asc over I_n(0021) = [x^n]A", at_n(n), e, s);
    if (n <= static_cast<int>(printed.size())) rec.poly("[x^n]A = printed polynomial", at_n(n), s, printed[static_cast<std::size_t>(n - 1)]);
    rec.note(at_n(n) + ": " + s.to_string());
  }
  return r;
}

CheckResult check_lemma_identities(const VerifyBounds& b) {
  const int o = b.lemma_order;
  CheckResult r = make_result("lemmas", "alt/L-R refined decomposition of P(x,t)");
  r.params = {{"x_order", o}, {"zero_class_order", o + 1}};
  Recorder rec(r);
  const PermClassTables tab = perm_class_tables(o + 1, b.jobs);
  const std::vector<int> ord{o};
  auto cut = [&](const MultiSeries& s) { return s.truncated(ord); };
  const MultiSeries& P = tab.p;
  const MultiSeries& C = tab.c312;
  const MultiSeries x = MultiSeries::variable(P, Var::X);
  const DistPoly t = tp({0, 1});

  rec.series("P1R = x P", cut(tab.right[1]), cut(x * P));
  for (int k = 1; k <= 3; ++k)
    rec.series("P" + std::to_string(k + 1) + "R = P" + std::to_string(k) + "L * P", cut(tab.right[static_cast<std::size_t>(k + 1)]),
               cut(tab.left[static_cast<std::size_t>(k)] * P));
  rec.series("P1L = x t P", cut(tab.left[1]), cut((x * P).scaled(t)));
  rec.series("P2L = x t C P", cut(tab.left[2]), cut((x * C * P).scaled(t)));
  rec.series("P3L = t (P - x - x t P - x C) P", cut(tab.left[3]),
             cut(((P - x - (x * P).scaled(t) - x * C) * P).scaled(t)));
  const MultiSeries zero = MultiSeries(P.vars(), P.orders());
  rec.series("P4L = 0", tab.left[4], zero);
  for (std::size_t k = 5; k < tab.left.size(); ++k) {
    rec.series("P" + std::to_string(k) + "L = 0", tab.left[k], zero);
    rec.series("P" + std::to_string(k) + "R = 0", tab.right[k], zero);
  }
  MultiSeries sum = x;
  for (std::size_t k = 1; k < tab.left.size(); ++k) sum += tab.left[k] + tab.right[k];
  rec.series("P = x + sum of refined classes", P, sum);
  rec.series("P = (1 + P)(x + t P^2 - x t^2 P^2)", cut(a_residual(P)), cut(zero));
  rec.note("P up to x^" + std::to_string(o + 1) + ", C = 312-avoiders by ides");
  return r;
}

CheckResult check_bijections(const VerifyBounds& b) {
  CheckResult r = make_result("bijections", "theta, phi, hat maps, psi and strip_iar: two-sided bijectivity and statistics");
  r.params = {{"theta_n", b.theta_n}, {"phi_total", b.phi_total}, {"psi_total", b.psi_total}, {"strip_total", b.strip_total}};
  Recorder rec(r);
  const Validate nv = Validate::No;

  // theta: S_n -> I_n
  for (int n = 1; n <= b.theta_n; ++n) {
    std::set<std::vector<int>> image;
    for (const auto& w : generate(perm(n, std::vector<Pattern>{}), b.jobs)) {
      const Permutation p(w);
      const ShapedSequence e = theta(p);
      const std::string idx = "pi=" + p.to_string();
      rec.holds("theta(pi) is an inversion sequence", idx, e.is_standard());
      rec.holds("theta_inverse(theta(pi)) = pi", idx, theta_inverse(e) == p, theta_inverse(e).to_string(), p.to_string());
      rec.value("des(pi) = asc(theta(pi))", idx, asc_des(p.word()).des, asc_des(e.entries()).asc);
      int sum = 0;
      for (int v : e.entries()) sum += v;
      rec.value("sum of theta(pi) = inv(pi)", idx, sum, inversions(p));
      image.insert(std::vector<int>(e.entries().begin(), e.entries().end()));
    }
    rec.value("theta injective", at_n(n), static_cast<long long>(image.size()), factorial(n));
    for (const auto& e : generate(inv(n, ""), b.jobs)) {
      const ShapedSequence s = ShapedSequence::inversion(e);
      rec.holds("theta(theta_inverse(e)) = e", at_n(n), theta(theta_inverse(s)) == s);
    }
  }

  const int perm_n = std::max({b.phi_total, b.psi_total, b.theta_n + 1});
  const auto SI = class_lists(perm_n, b.jobs);
  std::vector<std::set<Permutation>> in_class(SI.size());
  for (std::size_t n = 0; n < SI.size(); ++n) in_class[n] = std::set<Permutation>(SI[n].begin(), SI[n].end());
  auto member = [&](const Permutation& p) {
    return static_cast<std::size_t>(p.size()) < in_class.size() && in_class[static_cast<std::size_t>(p.size())].count(p) > 0;
  };

  // phi: S^L_{m,k}(I) x S_l(I) -> S^R_{m+l,k+1}(I)
  for (int k = 1; k <= 3; ++k) {
    std::map<int, std::set<Permutation>> image;
    for (int m = 2; m < b.phi_total; ++m) {
      for (const auto& sigma : SI[static_cast<std::size_t>(m)]) {
        if (!starts_left(sigma) || alt(sigma) != k) continue;
        for (int l = 1; m + l <= b.phi_total; ++l) {
          for (const auto& mu : SI[static_cast<std::size_t>(l)]) {
            const Permutation pi = phi(sigma, mu, nv);
            const std::string idx = "sigma=" + sigma.to_string() + ", mu=" + mu.to_string();
            rec.holds("phi image lies in S^R_{n,k+1}(I)", idx, member(pi) && !starts_left(pi) && alt(pi) == k + 1, pi.to_string(),
                      "member of the R class with alt " + std::to_string(k + 1));
            rec.value("ides(phi) = ides(sigma) + ides(mu)", idx, ides(pi), ides(sigma) + ides(mu));
            const auto back = phi_inverse(pi, nv);
            rec.holds("phi_inverse(phi(sigma, mu)) = (sigma, mu)", idx, back.first == sigma && back.second == mu,
                      back.first.to_string() + "," + back.second.to_string(), idx);
            rec.holds("phi injective", idx, image[m + l].insert(pi).second);
          }
        }
      }
    }
    for (int total = 3; total <= b.phi_total; ++total) {
      for (const auto& pi : SI[static_cast<std::size_t>(total)]) {
        if (starts_left(pi) || alt(pi) != k + 1) continue;
        const std::string idx = "pi=" + pi.to_string();
        rec.holds("phi surjective onto S^R_{n," + std::to_string(k + 1) + "}(I)", idx, image[total].count(pi) > 0);
        const auto [s, m] = phi_inverse(pi, nv);
        rec.holds("phi(phi_inverse(pi)) = pi", idx, phi(s, m, nv) == pi);
      }
    }
  }

  // hat maps onto the alt-1 classes
  for (int n = 1; n < perm_n; ++n) {
    std::set<Permutation> right, left;
    for (const auto& p : SI[static_cast<std::size_t>(n)]) {
      const Permutation hr = hat_right(p), hl = hat_left(p);
      const std::string idx = "pi=" + p.to_string();
      rec.holds("hat_right lies in S^R_{n+1,1}(I)", idx, member(hr) && !starts_left(hr) && alt(hr) == 1, hr.to_string());
      rec.holds("hat_left lies in S^L_{n+1,1}(I)", idx, member(hl) && starts_left(hl) && alt(hl) == 1, hl.to_string());
      rec.value("ides(hat_right) = ides", idx, ides(hr), ides(p));
      rec.value("ides(hat_left) = ides + 1", idx, ides(hl), ides(p) + 1);
      rec.holds("unhat_right(hat_right) = pi", idx, unhat_right(hr) == p);
      rec.holds("unhat_left(hat_left) = pi", idx, unhat_left(hl) == p);
      right.insert(hr);
      left.insert(hl);
    }
    for (const auto& q : SI[static_cast<std::size_t>(n + 1)]) {
      if (alt(q) != 1) continue;
      const std::string idx = "pi=" + q.to_string();
      if (starts_left(q))
        rec.holds("hat_left surjective", idx, left.count(q) > 0);
      else
        rec.holds("hat_right surjective", idx, right.count(q) > 0);
    }
  }

  // psi: admissible sigma x S_l(I) -> S^L_{n+l,3}(I)
  {
    std::map<int, std::set<Permutation>> image;
    for (int m = 2; m < b.psi_total; ++m) {
      for (const auto& sigma : SI[static_cast<std::size_t>(m)]) {
        const int last = sigma.at(m);
        if (last == 1 || last == m) continue;
        for (int l = 1; m + l <= b.psi_total; ++l) {
          for (const auto& mu : SI[static_cast<std::size_t>(l)]) {
            const Permutation pi = psi(sigma, mu, nv);
            const std::string idx = "sigma=" + sigma.to_string() + ", mu=" + mu.to_string();
            rec.holds("psi image lies in S^L_{n,3}(I)", idx, member(pi) && starts_left(pi) && alt(pi) == 3, pi.to_string(),
                      "member of the L class with alt 3");
            rec.value("ides(psi) = ides(sigma) + ides(mu) + 1", idx, ides(pi), ides(sigma) + ides(mu) + 1);
            const auto back = psi_inverse(pi, nv);
            rec.holds("psi_inverse(psi(sigma, mu)) = (sigma, mu)", idx, back.first == sigma && back.second == mu,
                      back.first.to_string() + "," + back.second.to_string(), idx);
            rec.holds("psi injective", idx, image[m + l].insert(pi).second);
          }
        }
      }
    }
    for (int total = 3; total <= b.psi_total; ++total) {
      for (const auto& pi : SI[static_cast<std::size_t>(total)]) {
        if (!starts_left(pi) || alt(pi) != 3) continue;
        const std::string idx = "pi=" + pi.to_string();
        rec.holds("psi surjective onto S^L_{n,3}(I)", idx, image[total].count(pi) > 0);
        const auto [s, m] = psi_inverse(pi, nv);
        rec.holds("psi(psi_inverse(pi)) = pi", idx, psi(s, m, nv) == pi);
      }
    }
  }

  // strip_iar: {e in I_{n+p}(0021) : iar = p} <-> I_{n,p}(021)
  for (int total = 2; total <= b.strip_total; ++total) {
    for (int p = 1; p < total; ++p) {
      const int n = total - p;
      FamilySpec dom = inv(total, "0021");
      dom.refine.iar = p;
      FamilySpec cod = spec_of(Family::InvP, n, Pattern::parse_list("021"));
      cod.p = p;
      const auto codomain = generate(cod, b.jobs);
      std::set<std::vector<int>> cod_set(codomain.begin(), codomain.end()), image;
      const std::string where = "n=" + std::to_string(n) + ", p=" + std::to_string(p);
      for (const auto& w : generate(dom, b.jobs)) {
        const ShapedSequence e = ShapedSequence::inversion(w);
        const ShapedSequence h = strip_iar(e, p, nv);
        const std::vector<int> hv(h.entries().begin(), h.entries().end());
        rec.holds("strip_iar lands in I_{n,p}(021)", where, cod_set.count(hv) > 0);
        rec.value("asc(e) = p - 1 + asc(strip)", where, asc_des(e.entries()).asc, p - 1 + asc_des(h.entries()).asc);
        rec.holds("unstrip(strip(e)) = e", where, unstrip_iar(h, p, nv) == e);
        rec.holds("strip_iar injective", where, image.insert(hv).second);
      }
      rec.value("strip_iar surjective", where, static_cast<long long>(image.size()), static_cast<long long>(cod_set.size()));
      for (const auto& w : codomain) {
        const ShapedSequence h = ShapedSequence::shifted_inversion(w, p);
        rec.holds("strip(unstrip(e)) = e", where, strip_iar(unstrip_iar(h, p, nv), p, nv) == h);
      }
    }
  }

  // worked examples
  {
    const Permutation sigma = Permutation::parse("6271435"), mu = Permutation::parse("3142");
    const Permutation pi = phi(sigma, mu);
    rec.holds("phi worked example", "sigma=6271435, mu=3142", pi == Permutation::parse("10,6,11,1,8,7,9,4,2,5,3"), pi.to_string(),
              "10,6,11,1,8,7,9,4,2,5,3");
    const auto back = phi_inverse(pi);
    rec.holds("phi worked example inverse", pi.to_string(), back.first == sigma && back.second == mu);
    rec.note("phi(6271435, 3142) = " + pi.to_string());
  }
  {
    const Permutation sigma = Permutation::parse("4213"), mu = Permutation::parse("41523");
    const Permutation pi = psi(sigma, mu);
    rec.holds("psi worked example", "sigma=4213, mu=41523", pi == Permutation::parse("932174856"), pi.to_string(), "932174856");
    const auto back = psi_inverse(pi);
    rec.holds("psi worked example inverse", pi.to_string(), back.first == sigma && back.second == mu);
    rec.note("psi(4213, 41523) = " + pi.to_string());
  }
  {
    const Permutation pi = Permutation::parse("547912683");
    const LRWord w = lr_word(pi);
    rec.holds("L/R word worked example", "pi=547912683", w.to_string() == "RRLLRLRL", w.to_string(), "RRLLRLRL");
    rec.value("alt worked example", "pi=547912683", alt(pi), 6);
    rec.value("alt = brute-force longest alternating subword", "pi=547912683", alt(pi), longest_alternating_subword_bruteforce(w));
  }
  return r;
}

CheckResult check_series_kernel(const VerifyBounds& b) {
  CheckResult r = make_result("series_kernel", "kernel cubic root r(x,t), A(x,t) and the N quadratic");
  r.params = {{"r_coeffs", b.r_coeffs},
              {"x_order", b.kernel_order},
              {"i_series_order", b.i_series_order},
              {"n_enumerated", {b.n_enum_x, b.n_enum_u}},
              {"n_solved", {b.n_solve_x, b.n_solve_u, b.n_solve_t}}};
  Recorder rec(r);

  const MultiSeries rr = solve_r(std::max(b.kernel_order, b.r_coeffs));
  const std::vector<DistPoly> printed{tp({1}), tp({0, 1}), tp({0, 2, 1}), tp({0, 3, 8, 1}), tp({0, 4, 27, 22, 1})};
  for (int n = 1; n <= std::min<int>(b.r_coeffs, static_cast<int>(printed.size())); ++n)
    rec.poly("[x^n] r = printed expansion", at_n(n), rr.coeff({n}), printed[static_cast<std::size_t>(n - 1)]);
  const std::vector<int> ko{b.kernel_order};
  rec.series("cubic residual of r", r_residual(rr).truncated(ko), x_series(b.kernel_order));
  rec.series("r/(1-r) = A", i_from_r(rr).truncated(ko), solve_A(b.kernel_order));

  const MultiSeries ri = solve_r(b.i_series_order);
  rec.series("r/(1-r) = asc over I_n(0021)", i_from_r(ri), inv0021_asc_series(b.i_series_order, b.jobs));

  const MultiSeries n_sol = solve_N(b.n_solve_x, b.n_solve_u, b.n_solve_t);
  rec.series("quadratic residual of N", n_residual(n_sol), MultiSeries(n_sol.vars(), n_sol.orders(), n_sol.t_order()));
  rec.series("discriminant identity", n_discriminant_from_root(n_sol), n_discriminant(n_sol));
  for (int n = 0; n <= b.n_solve_x; ++n)
    rec.poly("N(x,0,t) = x/(1-x)", at_n(n), n_sol.coeff({n, 0}), n == 0 ? DistPoly{} : tp({1}));

  const SplitTable tab = trivariate_N_table(b.n_enum_x, b.n_enum_u, b.jobs);
  rec.series("solve_N = enumerated N", solve_N(b.n_enum_x, b.n_enum_u), tab.all);
  return r;
}

CheckResult check_eq_C(const VerifyBounds& b) {
  CheckResult r = make_result("eq_C", "tig functional equation for H(x,s,q), denominators cleared");
  r.params = {{"x_order", b.eq_c_x}, {"s_order", b.eq_c_s}, {"q_degree", b.eq_c_q}, {"h_identity_order", b.h_identity_order}};
  Recorder rec(r);
  const std::vector<int> ord{b.eq_c_x, b.eq_c_s};
  // q rides in the t slot
  const MultiSeries Hq = tig_H_table(b.eq_c_x, b.eq_c_s, b.jobs).truncated(ord, b.eq_c_q);
  const MultiSeries H1 = Hq.at_t_one();
  const MultiSeries x = MultiSeries::variable(Hq, Var::X);
  const MultiSeries s = MultiSeries::variable(Hq, Var::S);
  const MultiSeries one = MultiSeries::one(Hq);
  const DistPoly q = tp({0, 1}), one_q = tp({1, -1}), q2 = tp({0, 0, 1});

  // (1-s)[s(1-q+xq^2) - xq(1-s)(1-q)H1] Hq = s(1-s)[(s+xq)(1-q)+xq] H1 + xq s^2 (1-q)
  const MultiSeries kernel = s.scaled(one_q) + (s * x).scaled(q2) - (x * (one - s) * H1).scaled(q * one_q);
  const MultiSeries lhs = (one - s) * kernel * Hq;
  const MultiSeries bracket = s.scaled(one_q) + x.scaled(q * one_q) + x.scaled(q);
  const MultiSeries rhs = s * (one - s) * bracket * H1 + (x * s * s).scaled(q * one_q);
  rec.series("functional equation for H", lhs, rhs);
  rec.poly("[x s] H(x,s,1) = 1", "x^1 s^1", H1.coeff({1, 1}), tp({1}));

  // H(x,x,1) = I(x) - x/(1-x)
  const int m = b.h_identity_order;
  const MultiSeries Hm = tig_H_table(m - 1, m - 1, b.jobs).at_t_one();
  const MultiSeries I = inv0021_asc_series(m, b.jobs).at_t_one();
  for (int n = 1; n <= m; ++n) {
    DistPoly diag;
    for (int p = 1; p < n; ++p) diag += Hm.coeff({n - p, p});
    rec.poly("H(x,x,1) = I(x) - x/(1-x)", at_n(n), diag, I.coeff({n}) - tp({1}));
  }
  return r;
}

CheckResult check_N_system(const VerifyBounds& b) {
  CheckResult r = make_result("N_system", "SL/LS system for 021-avoiding words N(x,u,t)");
  r.params = {{"x_order", b.n_system_x}, {"u_order", b.n_system_u}};
  Recorder rec(r);
  const SplitTable tab = trivariate_N_table(b.n_system_x, b.n_system_u, b.jobs);
  const MultiSeries &N = tab.all, &S = tab.sl, &L = tab.ls;
  const MultiSeries x = MultiSeries::variable(N, Var::X);
  const MultiSeries u = MultiSeries::variable(N, Var::U);
  const MultiSeries one = MultiSeries::one(N);
  const DistPoly t = tp({0, 1});

  rec.series("N = S + L", N, S + L);
  // S (1-u)(1-x+xt) = x + x t N
  rec.series("SL equation", S * (one - u) * (one - x + x.scaled(t)), x + (x * N).scaled(t));
  // L (1-x) = N (S (1-x) - x)
  rec.series("LS equation", L * (one - x), N * (S * (one - x) - x));
  rec.series("quadratic residual of enumerated N", n_residual(N), MultiSeries(N.vars(), N.orders()));
  rec.series("solve_N = enumerated N", solve_N(b.n_system_x, b.n_system_u), N);
  for (int n = 1; n <= b.n_system_x; ++n) {
    rec.poly("S at u^0: one constant word", at_n(n), S.coeff({n, 0}), tp({1}));
    rec.poly("L at u^0 is empty", at_n(n), L.coeff({n, 0}), DistPoly{});
  }

  // every SL word ends with its maximum
  for (int n = 1; n <= b.n_system_x; ++n) {
    FamilySpec spec = spec_of(Family::WordMax, n, Pattern::parse_list("021"));
    spec.max_entry = b.n_system_u;
    for_each_member(spec, [&](std::span<const int> w) {
      const Extremes ex = lar_sma(w);
      if (ex.is_sl()) rec.holds("SL word ends in its maximum", at_n(n), w.back() == ex.lar);
    });
  }
  return r;
}

CheckResult check_G_system(const VerifyBounds& b) {
  CheckResult r = make_result("G_system", "G = G* + G** system, F closed form and I(x,t) from r");
  r.params = {{"x_order", b.g_x}, {"s_order", b.g_p}, {"u_order", b.g_u}, {"i_series_order", b.i_series_order}};
  Recorder rec(r);
  const SplitTable full = quadvariate_G_table(b.g_x, b.g_p, b.jobs);
  const std::vector<int> ord{b.g_x, b.g_p, b.g_u};
  const MultiSeries G = full.all.truncated(ord), Gs = full.sl.truncated(ord), Gss = full.ls.truncated(ord);
  const MultiSeries x = MultiSeries::variable(G, Var::X);
  const MultiSeries s = MultiSeries::variable(G, Var::S);
  const MultiSeries u = MultiSeries::variable(G, Var::U);
  const MultiSeries one = MultiSeries::one(G);
  const DistPoly t = tp({0, 1});

  rec.series("G = G* + G**", G, Gs + Gss);
  rec.poly("[x s^2 u] G = 1", "x^1 s^2 u^1", G.coeff({1, 2, 1}), tp({1}));

  // G(ux, us, 1): u is complete in the table, so it may be set to 1 first
  const MultiSeries g_at1 = full.all.substitute(Var::U, Monomial{});
  const MultiSeries g_shift = g_at1.substitute(Var::X, Monomial{.x = 1, .u = 1}).substitute(Var::S, Monomial{.s = 1, .u = 1});
  // G* (1-s)(1-us)(1-u)(1-x+xt) = xs(1-u) + xt(1-s)(1-us)(G - u G(ux,us,1))
  const MultiSeries d_x = one - x + x.scaled(t);
  const MultiSeries lhs_star = Gs * (one - s) * (one - u * s) * (one - u) * d_x;
  const MultiSeries rhs_star = x * s * (one - u) + (x * (one - s) * (one - u * s) * (G - u * g_shift.truncated(ord))).scaled(t);
  rec.series("G* equation", lhs_star.truncated(ord), rhs_star.truncated(ord));

  // G** (1-x)(1-s) = N(x,us) (G* (1-x)(1-s) - xs)
  const SplitTable ntab = trivariate_N_table(b.g_x, b.g_u, b.jobs);
  const MultiSeries n_us = ntab.all.embed({Var::X, Var::S, Var::U}, {b.g_x, b.g_p, b.g_u})
                               .substitute(Var::U, Monomial{.s = 1, .u = 1});
  const MultiSeries lhs_ss = Gss * (one - x) * (one - s);
  const MultiSeries rhs_ss = n_us * (Gs * (one - x) * (one - s) - x * s);
  rec.series("G** equation", lhs_ss.truncated(ord), rhs_ss.truncated(ord));

  // F(x) = G(x, xt, 1):  F (1-r)(1-xt) = t((1+x-xt) r - x)
  const MultiSeries F = g_at1.substitute(Var::S, Monomial{.x = 1, .t = 1}).project_out(Var::S).project_out(Var::U);
  const int fo = F.order(Var::X);
  const MultiSeries rr = solve_r(fo);
  const MultiSeries xo = MultiSeries::variable(rr, Var::X), oneo = MultiSeries::one(rr);
  const MultiSeries xt = xo.scaled(t);
  rec.series("F closed form", F * (oneo - rr) * (oneo - xt), ((oneo + xo - xt) * rr - xo).scaled(t));

  // I(x,t) = x/(1-xt) + G(x,xt,1)/t
  const auto F_div = F.divided_by_t();
  if (!rec.holds("G(x,xt,1) divisible by t", "x^1..x^" + std::to_string(fo), F_div.has_value(), "nonzero t^0 term", "0")) return r;
  const MultiSeries I_asm = xo * (oneo - xt).invert_unit() + *F_div;
  rec.series("I(x,t) assembled from G = enumerated", I_asm, inv0021_asc_series(fo, b.jobs));
  rec.series("I(x,t) assembled from G = r/(1-r)", I_asm, i_from_r(rr));
  rec.note("G(x,xt,1) determined through x^" + std::to_string(fo));
  return r;
}

CheckResult check_structural(const VerifyBounds& b) {
  CheckResult r = make_result("structural", "L/R word shape, alt bounds and SL maxima");
  r.params = {{"n_max", b.perm_structure_n}, {"sl_n_max", b.n_system_x}};
  Recorder rec(r);
  for (int n = 2; n <= b.perm_structure_n; ++n) {
    for (const auto& w : generate(perm(n, pattern_set_I()), b.jobs)) {
      const Permutation p(w);
      const LRWord lw = lr_word(p);
      const std::string idx = "pi=" + p.to_string();
      rec.holds("no LRLR subword over S_n(I)", idx, !lw.contains_subword("LRLR"), lw.to_string());
      const int a = alt(p);
      rec.holds("alt <= 4 over S_n(I)", idx, a <= 4, std::to_string(a), "<= 4");
      if (lw.letters().front() == Side::L) rec.holds("alt <= 3 when the word starts with L", idx, a <= 3, std::to_string(a), "<= 3");
      rec.value("alt = longest alternating subword", idx, a, longest_alternating_subword_bruteforce(lw));
    }
    for (const auto& cls : {pattern_set_II(), pattern_set_III()}) {
      for (const auto& w : generate(perm(n, cls), b.jobs)) {
        const Permutation p(w);
        rec.holds("alt <= 4 over the other two classes", "pi=" + p.to_string(), alt(p) <= 4, std::to_string(alt(p)), "<= 4");
      }
    }
  }
  for (int n = 1; n <= b.n_system_x; ++n) {
    FamilySpec spec = spec_of(Family::WordMax, n, Pattern::parse_list("021"));
    spec.max_entry = b.n_system_x;
    for_each_member(spec, [&](std::span<const int> w) {
      const Extremes ex = lar_sma(w);
      if (ex.is_sl()) rec.holds("SL word ends in its maximum", at_n(n), w.back() == ex.lar);
    });
  }
  return r;
}

std::vector<CheckResult> check_conjectures(const VerifyBounds& b) {
  std::vector<CheckResult> out;
  {
    CheckResult r = make_result("conj_counts", "two further pattern triples are counted by a(n)", true);
    r.params = {{"n_max", b.conjecture_count_n}};
    Recorder rec(r);
    for (int n = 1; n <= b.conjecture_count_n; ++n) {
      const BigInt a = a_n_lagrange(n);
      rec.value("|S_n(2134,42153,24153)| = a(n)", at_n(n), count(perm(n, pattern_set_II()), b.jobs), a);
      rec.value("|S_n(2143,42135,24135)| = a(n)", at_n(n), count(perm(n, pattern_set_III()), b.jobs), a);
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r = make_result("conj_lmi_rma_ides", "(lmi, rma, ides) agree on S_n(2134,42153,24153) and S_n(3124,42153,24153)", true);
    r.params = {{"n_max", b.conjecture_joint_n}};
    Recorder rec(r);
    const std::vector<Stat> st{Stat::Lmi, Stat::Rma, Stat::Ides};
    for (int n = 1; n <= b.conjecture_joint_n; ++n) {
      const JointDist a = joint_distribution(perm(n, pattern_set_II()), st, b.jobs);
      const JointDist c = joint_distribution(perm(n, pattern_set_I()), st, b.jobs);
      if (a.counts == c.counts) continue;
      // smallest key where they differ
      std::set<StatKey> keys;
      for (const auto& [k, v] : a.counts) keys.insert(k);
      for (const auto& [k, v] : c.counts) keys.insert(k);
      for (const auto& k : keys) {
        const auto ia = a.counts.find(k), ic = c.counts.find(k);
        const BigInt va = ia == a.counts.end() ? BigInt(0) : ia->second, vc = ic == c.counts.end() ? BigInt(0) : ic->second;
        if (va == vc) continue;
        std::string idx = at_n(n) + " (";
        for (std::size_t i = 0; i < k.size(); ++i) idx += (i ? ", " : "") + to_string(k[i]);
        rec.value("joint (lmi, rma, ides)", idx + ")", va, vc);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  {
    CheckResult r = make_result("conj_des_ides", "(des, ides) on S_n(2134,42153,24153) = (asc, iasc) on S_n(2143,42135,24135)", true);
    r.params = {{"n_max", b.conjecture_joint_n}};
    Recorder rec(r);
    for (int n = 1; n <= b.conjecture_joint_n; ++n) {
      const JointDist a = joint_distribution(perm(n, pattern_set_II()), {Stat::Des, Stat::Ides}, b.jobs);
      const JointDist c = joint_distribution(perm(n, pattern_set_III()), {Stat::Asc, Stat::Iasc}, b.jobs);
      if (a.counts == c.counts) continue;
      std::set<StatKey> keys;
      for (const auto& [k, v] : a.counts) keys.insert(k);
      for (const auto& [k, v] : c.counts) keys.insert(k);
      for (const auto& k : keys) {
        const auto ia = a.counts.find(k), ic = c.counts.find(k);
        const BigInt va = ia == a.counts.end() ? BigInt(0) : ia->second, vc = ic == c.counts.end() ? BigInt(0) : ic->second;
        if (va == vc) continue;
        rec.value("joint (des, ides) vs (asc, iasc)", at_n(n) + " (" + to_string(k[0]) + ", " + to_string(k[1]) + ")", va, vc);
        break;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult check_known_facts(const VerifyBounds& b) {
  CheckResult r = make_result("known_facts", "classical counts and Eulerian equidistributions");
  r.params = {{"n_max", b.facts_n}};
  Recorder rec(r);
  const int N = b.facts_n;

  // Fibonacci F_1 = F_2 = 1
  std::vector<BigInt> fib{0, 1, 1};
  while (static_cast<int>(fib.size()) <= 2 * N) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  // Euler zigzag numbers via the Entringer triangle
  std::vector<BigInt> euler;
  {
    std::vector<std::vector<BigInt>> e(static_cast<std::size_t>(N + 2));
    e[0] = {1};
    for (int n = 1; n <= N + 1; ++n) {
      e[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), 0);
      for (int k = 1; k <= n; ++k)
        e[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            e[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)] + e[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - k)];
    }
    for (int n = 0; n <= N + 1; ++n) euler.push_back(e[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)]);
  }

  for (int n = 1; n <= N; ++n) {
    const std::string idx = at_n(n);
    rec.value("|S_n(231)| = Catalan", idx, count(perm(n, "231"), b.jobs), binomial(2 * n, n) / (n + 1));
    rec.value("|I_n(012)| = F_{2n-1}", idx, count(inv(n, "012"), b.jobs), fib[static_cast<std::size_t>(2 * n - 1)]);
    rec.value("|I_n(000)| = E_{n+1}", idx, count(inv(n, "000"), b.jobs), euler[static_cast<std::size_t>(n + 1)]);
    const BigInt bjs = BigInt(1) << (n + 1);
    rec.value("|S_n(321,2143)| = 2^{n+1} - C(n+1,3) - 2n - 1", idx, count(perm(n, "321,2143"), b.jobs),
              bjs - binomial(n + 1, 3) - 2 * n - 1);
    // the sum taken at m = n - 1: the count for length n is the (n-1)-th large Schroeder number
    const int m = n - 1;
    BigInt schroeder = 0;
    for (int d = 0; d <= m; ++d)
      schroeder += factorial(2 * m - d) / (factorial(m - d) * factorial(m - d) * factorial(d)) / (m - d + 1);
    rec.value("|S_n(2143,3142,246135)| = large Schroeder r_{n-1}", idx, count(perm(n, "2143,3142,246135"), b.jobs), schroeder);

    const DistPoly eul = eulerian(n);
    const FamilySpec all_perm = perm(n, std::vector<Pattern>{});
    for (Stat s : {Stat::Des, Stat::Ides, Stat::Exc})
      rec.poly(std::string(to_string(s)) + " over S_n is Eulerian", idx, distribution(all_perm, s, b.jobs), eul);
    for (Stat s : {Stat::Asc, Stat::Dist}) rec.poly(std::string(to_string(s)) + " over I_n is Eulerian", idx, distribution(inv(n, ""), s, b.jobs), eul);
    rec.poly("des over S_n(2413,3142) = asc over I_n(021)", idx, distribution(perm(n, "2413,3142"), Stat::Des, b.jobs),
             distribution(inv(n, "021"), Stat::Asc, b.jobs));
  }
  return r;
}

CheckResult check_engineering(const VerifyBounds& b) {
  CheckResult r = make_result("engineering", "pruned = filtered generation; parallel = sequential");
  const int n_max = b.engineering_n;
  r.params = {{"n_max", n_max}};
  Recorder rec(r);
  std::vector<FamilySpec> specs;
  for (int n = 1; n <= n_max; ++n) {
    specs.push_back(perm(n, pattern_set_I()));
    specs.push_back(perm(n, "231"));
    specs.push_back(perm(n, "2143,42135,24135"));
    specs.push_back(inv(n, "0021"));
    specs.push_back(inv(n, "012"));
    specs.push_back(inv(n, "000"));
    for (int p = 1; p <= 3; ++p) {
      FamilySpec s = spec_of(Family::InvP, n, Pattern::parse_list("021"));
      s.p = p;
      specs.push_back(s);
    }
    FamilySpec w = spec_of(Family::WordMax, n, Pattern::parse_list("021"));
    w.max_entry = 3;
    specs.push_back(w);
    FamilySpec a = perm(n, pattern_set_I());
    a.refine.alt = 2;
    a.refine.lr_class = Side::L;
    specs.push_back(a);
    FamilySpec i = inv(n, "0021");
    i.refine.iar = 1;
    specs.push_back(i);
  }
  for (const auto& s : specs) {
    const auto pruned = generate(s, 1);
    const auto filtered = generate_filtered(s);
    rec.holds("pruned generation = filtered generation", s.canonical(), pruned == filtered, std::to_string(pruned.size()) + " members",
              std::to_string(filtered.size()) + " members");
    const auto parallel = generate(s, std::max(3, b.jobs));
    rec.holds("parallel generation = sequential", s.canonical(), parallel == pruned);
  }
  const FamilySpec big = perm(std::min(n_max + 1, 7), pattern_set_II());
  const std::vector<Stat> st{Stat::Lmi, Stat::Rma, Stat::Ides};
  rec.holds("parallel joint distribution = sequential", big.canonical(),
            joint_distribution(big, st, 1) == joint_distribution(big, st, std::max(4, b.jobs)));
  rec.note(std::to_string(specs.size()) + " family specs compared");
  return r;
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{"a_n",      "main",       "lemmas",        "bijections",      "series_kernel",
                                            "eq_C",     "N_system",   "G_system",      "structural",      "conj_counts",
                                            "conj_lmi_rma_ides", "conj_des_ides", "known_facts", "engineering"};
  return ids;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& suites() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> s{
      {"all", all_check_ids()},
      {"main", {"a_n", "main"}},
      {"lemmas", {"lemmas", "structural"}},
      {"bijections", {"bijections"}},
      {"series", {"series_kernel", "eq_C", "N_system", "G_system"}},
      {"conjectures", {"conj_counts", "conj_lmi_rma_ides", "conj_des_ides"}},
      {"facts", {"known_facts"}},
      {"engineering", {"engineering"}},
  };
  return s;
}

std::vector<CheckResult> run_check(const std::string& id, const VerifyBounds& b) {
  static const std::map<std::string, std::function<CheckResult(const VerifyBounds&)>> single{
      {"a_n", check_a_n},           {"main", check_main_theorem}, {"lemmas", check_lemma_identities},
      {"bijections", check_bijections}, {"series_kernel", check_series_kernel}, {"eq_C", check_eq_C},
      {"N_system", check_N_system}, {"G_system", check_G_system}, {"structural", check_structural},
      {"known_facts", check_known_facts}, {"engineering", check_engineering}};
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckResult> out;
  auto finish = [&](std::vector<CheckResult> rs) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : rs) r.seconds = secs / static_cast<double>(rs.size());
    return rs;
  };
  const bool is_conj = id.rfind("conj_", 0) == 0;
  if (!is_conj && !single.count(id)) throw std::invalid_argument("unknown check id: " + id);
  if (is_conj && std::find(all_check_ids().begin(), all_check_ids().end(), id) == all_check_ids().end())
    throw std::invalid_argument("unknown check id: " + id);
  try {
    if (is_conj) {
      for (auto& r : check_conjectures(b))
        if (r.id == id) out.push_back(std::move(r));
    } else {
      out.push_back(single.at(id)(b));
    }
  } catch (const std::exception& e) {
    // an exception inside a check is a failure of that check
    CheckResult r = make_result(id, "aborted", is_conj);
    r.status = CheckStatus::Fail;
    r.witness = Witness{"check raised an exception", "-", e.what(), "no exception"};
    out = {r};
  }
  return finish(std::move(out));
}

nlohmann::ordered_json to_json(const CheckResult& r, bool with_timing) {
  json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["status"] = std::string(to_string(r.status));
  j["conjecture"] = r.conjecture;
  j["params"] = r.params;
  if (r.witness)
    j["witness"] = {{"identity", r.witness->identity}, {"index", r.witness->index}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  j["notes"] = r.notes;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

bool suite_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.conjecture || r.status != CheckStatus::Fail; });
}

}  // namespace patav
