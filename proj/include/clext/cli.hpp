#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace clext::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::size_t kMaxLambda = 64;

enum class Command { Verify, Spectrum, PssqmSolve, PssqmCheck, Ssqm, BdScan, Classify, Dump };
enum class OutputFormat { Json, Csv, Tsv };

Command parse_command(const std::string& name);
const char* to_string(Command command) noexcept;

/// Everything one invocation needs. JSON config keys mirror the long flag
/// names with dashes replaced by underscores ("scan-from" -> "scan_from").
struct RunConfig {
    Command command = Command::Verify;
    std::optional<std::size_t> lambda;
    std::optional<std::vector<double>> alpha;
    std::optional<std::vector<std::complex<double>>> kappa;
    std::optional<std::size_t> dim;  // default 12 * lambda
    std::optional<double> tol;       // default depends on the command
    double cluster_tol = 1e-8;
    std::optional<std::size_t> p;
    std::size_t mu = 0;
    std::optional<std::vector<std::complex<double>>> eta;
    std::optional<std::vector<double>> r;
    double scan_from = -2.0;
    double scan_to = 0.0;
    std::size_t scan_points = 41;
    std::size_t samples = 0;
    std::uint64_t seed = 42;
    double box_lo = -0.9;
    double box_hi = 2.0;
    std::string variant = "unbroken";
    std::string matrix = "a";
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::Json;

    std::size_t resolved_dim() const { return dim.value_or(12 * lambda.value_or(2)); }
};

/// Parses argv (argv[0] is the program name). A `--config file.json` value is
/// read first and flags override it. Validates the result; throws clext::Error
/// with ParseError or ValidationError.
RunConfig parse_config(int argc, const char* const* argv);

/// Applies keys of a JSON config document onto cfg.
void apply_json(RunConfig& cfg, const nlohmann::json& doc);

/// Fills lambda from p and checks command-specific requirements.
void validate(RunConfig& cfg);

struct RunResult {
    int exit_code = 0;
    std::string report;   // JSON, CSV/TSV or matrix dump text
    std::string summary;  // human-readable table
};

/// Runs the command without touching the filesystem.
RunResult execute(const RunConfig& cfg);

/// execute() plus output: the report goes to cfg.out (written via a temporary
/// file and rename) and the summary to `out`, or the report to `out` when no
/// path is set. Returns 0 (all pass), 1 (a check failed), 2 (usage or
/// validation error) or 3 (I/O error).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv entry point used by the clext executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clext::cli
