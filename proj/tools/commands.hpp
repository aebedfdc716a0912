// Command-line frontend. Every command produces a report
//
//   { command, input_digest, tolerance, payload, wall_time, summary }
//
// where only wall_time depends on the run; payload is a pure function of
// the input bytes and flags.
#pragma once

#include "sumlike/core.hpp"
#include "sumlike/json_io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumlike::cli {

enum ExitCode : int { kOk = 0, kVerdictFailure = 1, kInputError = 2 };

struct CommandResult {
    Json payload;
    std::string summary;
    int exit_code = kOk;
    std::optional<std::string> csv;  ///< written to --csv-out when requested
};

struct Input {
    std::string digest;  ///< "sha256:<hex>"
    Json json;
};

/// Reads and parses a file; the digest covers its exact bytes.
Input load_input(const std::string& path);
std::string sha256_hex(std::string_view bytes);

struct CheckOptions {
    std::string compare;  ///< second family / sample, optional
    std::size_t grid_points = 11;
};
CommandResult cmd_check(const Json& input, const CheckOptions& opts, const ToleranceConfig& tol);

struct MetrizeOptions {
    std::size_t coord = 0;
    std::size_t grid_points = 11;
};
CommandResult cmd_metrize(const Json& input, const MetrizeOptions& opts, const ToleranceConfig& tol);

struct ClassifyOptions {
    std::vector<double> c_grid;  ///< empty = default
    double target = 1.0;
    std::size_t budget = 0;
    std::size_t class_bound = 16;
    std::size_t grid_points = 11;
};
CommandResult cmd_classify(const Json& input, const ClassifyOptions& opts, const ToleranceConfig& tol);

CommandResult cmd_reduce_clamp(const Json& input, const ToleranceConfig& tol);
CommandResult cmd_reduce_blocks(const Json& input, const ToleranceConfig& tol);
CommandResult cmd_reduce_koch(const Json& input, const ToleranceConfig& tol);

struct Example4Options {
    std::string preset = "default";  ///< default, two-term, linear; ignored with a spec file
    int M = 8;
    std::size_t grid_points = 200;
};
/// `spec` is the parsed spec file, or nullopt for a preset.
CommandResult cmd_example4(const std::optional<Json>& spec, const Example4Options& opts,
                           const ToleranceConfig& tol);

/// Full program: parse args, run, write the report. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumlike::cli
