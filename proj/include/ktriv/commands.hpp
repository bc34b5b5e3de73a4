#ifndef KTRIV_COMMANDS_HPP
#define KTRIV_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

namespace ktriv {

// Exit codes shared by every subcommand.
//   0  all checks passed
//   1  a mathematical check failed
//   2  resource or usage error
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_resource = 2;

struct RunConfig {
    long n_max = 200;
    long degree_bound = 6;
    long coeff_bound = 2;
    long slack = -1; // negative = 2 * degree_bound
    std::string format = "json"; // "json" | "csv"
    std::string cache_path;
    std::size_t size_cap = 10'000'000;
    int threads = 1;
};

// Each command writes its (deterministic, timestamp-free) report to `out`
// and returns an exit code. Diagnostics for nonzero exits go to `err`.
int cmd_family(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectral(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_surface(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace ktriv

#endif
