#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitInfeasible = 3 };

/// Settings shared by every command. Precedence, lowest first: these
/// defaults, the cache-directory environment variable, a --config file,
/// explicit flags.
struct CliConfig {
  int order_x = 10;
  int order_u = 8;
  int order_s = 8;
  std::optional<int> order_t;
  int max_order = 30;  // series requests beyond this are infeasible
  int max_n_perm = 10;
  int max_n_inv = 10;
  int max_n_invp = 8;
  int max_n_word = 8;
  std::string cache_dir;  // empty: no cache
  std::string format = "table";
  int jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Applies a flat key=value document (one per line, '#' comments) or a
/// JSON object. Unknown keys and bad values throw UsageError.
void apply_config_text(CliConfig& cfg, std::string_view text);
/// Every key accepted by apply_config_text.
const std::vector<std::string>& config_keys();

/// Runs the command line (without the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace patav
