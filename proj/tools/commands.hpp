#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace derivsamp::cli {

struct RunConfig {
    std::string subcommand;
    int m = 3;
    std::string a = "0";
    int rho = 2;
    std::vector<std::string> W;  ///< as given, e.g. "3*sqrt(7)"
    double p = 2.0;
    std::string signal = "f1";
    std::string signal_csv;
    std::string out;  ///< empty: stdout
    double tol = 1e-9;
    std::uint64_t seed = 1;
    int grid_n = 1024;
    int r = 2;
    std::vector<double> delta{0.2, 0.1, 0.05, 0.025};
    int deriv = 0;
    int m_max = 9;
    int rho_max = 4;
    int trials = 200;
};

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kNumerical = 3 };

/// "4", "2.5", "sqrt(7)", "3*sqrt(7)".
[[nodiscard]] double parse_w(const std::string& text);

/// "# derivsamp v1,subcommand=...,m=...,..."
[[nodiscard]] std::string header_line(const RunConfig& cfg);

int cmd_tables(const RunConfig& cfg, std::ostream& os);
int cmd_check(const RunConfig& cfg, std::ostream& os);
int cmd_kernel_dump(const RunConfig& cfg, std::ostream& os);
int cmd_approx(const RunConfig& cfg, std::ostream& os);
int cmd_tau(const RunConfig& cfg, std::ostream& os);
int cmd_scan(const RunConfig& cfg, std::ostream& os);
int cmd_bounds(const RunConfig& cfg, std::ostream& os);

/// Dispatches on cfg.subcommand, writes the CSV to cfg.out (or os) and maps
/// library errors to exit codes; diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& os, std::ostream& err);

}  // namespace derivsamp::cli
