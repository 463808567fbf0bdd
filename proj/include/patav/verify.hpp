#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

enum class CheckStatus { Pass, Fail, Skip };
std::string_view to_string(CheckStatus s);

/// First discrepancy found by a check.
struct Witness {
  std::string identity;  // which identity or comparison failed
  std::string index;     // coefficient or size where it failed
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string id;
  std::string title;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  CheckStatus status = CheckStatus::Pass;
  bool conjecture = false;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  double seconds = 0.0;
};

/// Size bounds for the default suite. Every field is an inclusive maximum.
struct VerifyBounds {
  int a_n = 9;
  int main_n = 8;
  int lemma_order = 7;
  int perm_structure_n = 8;
  int theta_n = 6;
  int phi_total = 7;
  int psi_total = 8;
  int strip_total = 8;
  int r_coeffs = 5;
  int kernel_order = 10;
  int n_enum_x = 5;
  int n_enum_u = 5;
  int n_solve_x = 8;
  int n_solve_u = 6;
  int n_solve_t = 8;
  int eq_c_x = 6;
  int eq_c_s = 6;
  int eq_c_q = 8;
  int h_identity_order = 8;
  int n_system_x = 6;
  int n_system_u = 6;
  int g_x = 5;
  int g_p = 5;
  int g_u = 5;
  int i_series_order = 8;
  int conjecture_count_n = 8;
  int conjecture_joint_n = 7;
  int facts_n = 7;
  int engineering_n = 6;
  int jobs = 1;

  /// Caps every size bound at max_n (orders included), keeping each at
  /// its own minimum meaningful value.
  VerifyBounds capped(int max_n) const;
};

CheckResult check_a_n(const VerifyBounds& b);
CheckResult check_main_theorem(const VerifyBounds& b);
CheckResult check_lemma_identities(const VerifyBounds& b);
CheckResult check_bijections(const VerifyBounds& b);
CheckResult check_series_kernel(const VerifyBounds& b);
CheckResult check_eq_C(const VerifyBounds& b);
CheckResult check_N_system(const VerifyBounds& b);
CheckResult check_G_system(const VerifyBounds& b);
CheckResult check_structural(const VerifyBounds& b);
/// One result per conjecture; labelled conjecture-grade.
std::vector<CheckResult> check_conjectures(const VerifyBounds& b);
CheckResult check_known_facts(const VerifyBounds& b);
CheckResult check_engineering(const VerifyBounds& b);

/// Check ids in suite order.
const std::vector<std::string>& all_check_ids();
/// Suite names and the check ids each one runs.
const std::vector<std::pair<std::string, std::vector<std::string>>>& suites();
/// Throws std::invalid_argument for an unknown id.
std::vector<CheckResult> run_check(const std::string& id, const VerifyBounds& b);

nlohmann::ordered_json to_json(const CheckResult& r, bool with_timing = false);
/// True iff every non-skipped, non-conjecture check passed.
bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace patav
