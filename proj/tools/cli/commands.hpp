#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dictlp/duality.hpp"
#include "dictlp/simplex.hpp"

namespace dictlp::cli {

/// Process exit statuses.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;  // usage or parse error
inline constexpr int kUnbounded = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kVerifyFailed = 4;
inline constexpr int kBudget = 5;
}  // namespace exit_code

enum class Command { Solve, Trace, Dual, Dict, Verify, Random };

struct CliConfig {
    Command command = Command::Solve;
    std::string input = "-";
    PivotRule rule = PivotRule::Bland;

    // trace
    std::vector<std::pair<std::size_t, std::size_t>> forced_pivots;  // (enter, leave)
    bool dual_view = false;

    // dict
    std::vector<std::size_t> basis;

    // verify
    std::size_t limit = kDefaultBasisLimit;
    unsigned threads = 1;

    // random
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::int64_t bound = 5;
};

/// Streams the commands read from and write to.
struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int cmd_solve(const CliConfig& cfg, Io io);
int cmd_trace(const CliConfig& cfg, Io io);
int cmd_dual(const CliConfig& cfg, Io io);
int cmd_dict(const CliConfig& cfg, Io io);
int cmd_verify(const CliConfig& cfg, Io io);
int cmd_random(const CliConfig& cfg, Io io);

/// Exit status for a solve outcome: 0 optimal, 2 unbounded, 3 infeasible.
int exit_status(const SolveOutcome& outcome);

/// Parses argv-style arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, Io io);

}  // namespace dictlp::cli
