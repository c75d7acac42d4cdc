#pragma once

#include "sqdet/io.hpp"
#include "sqdet/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sqdet {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitMismatch = 2 };

struct RunConfig {
    std::string command;
    std::optional<std::string> input;
    std::optional<std::string> out;
    std::uint64_t seed = 1;
    std::optional<int> dim;
    std::optional<int> n;
    int count = 10;
    unsigned jobs = 1;
    bool include_matrices = false;
    std::optional<std::uint64_t> nudge;
    bool timings = false;
};

/// Matrices larger than this are left out of reports unless forced or a
/// mismatch needs a witness.
inline constexpr std::size_t kMatrixReportLimit = 40;

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
};

/// Applies --nudge (arrangement inputs only).
Instance prepare_instance(Instance inst, const RunConfig& cfg);

CommandResult cmd_check(const Instance& inst, const RunConfig& cfg);
CommandResult cmd_matrix(const Instance& inst, const RunConfig& cfg);
CommandResult cmd_det(const Instance& inst, const RunConfig& cfg);
CommandResult cmd_rhs(const Instance& inst, const RunConfig& cfg);
/// Flagspace and structural invariants; exit 1 when any of them fails.
CommandResult cmd_invariants(const Instance& inst, const RunConfig& cfg);

/// One JSON line per instance followed by a summary line on `out`.
int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command, writes the report, maps exceptions to exit 1
/// with a JSON error object on `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace sqdet
