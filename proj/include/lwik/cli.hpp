#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lwik/quadrature.hpp"
#include "lwik/representations.hpp"
#include "lwik/types.hpp"

/// Command-line front end. `run` is the whole program minus process setup so
/// that tests can drive it with captured streams.
namespace lwik::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,   ///< a verification (identities, pade, cm) did not hold
    kDomain = 2,
    kNotConverged = 3,
    kUsage = 64,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re,im", a real literal, "e", "-e", "1/e", "-1/e" or "i". Throws SpecError.
Complex parse_complex(std::string_view text);

/// "start:stop:count[:log]" into count real points. Throws SpecError.
std::vector<double> parse_grid(std::string_view text);

/// Comma-separated reals (each accepting the constants of parse_complex). Throws SpecError.
std::vector<double> parse_reals(std::string_view text);

/// LWIK_DEFAULT_TOL if set, else 1e-10. Throws SpecError for an unusable value.
double default_tolerance();

struct ComparisonRow {
    rep::RepresentationId rep;
    Complex z;
    std::string status;  ///< ok, not-converged, out-of-domain, error
    Complex value{};
    Complex oracle{};
    double abs_err_vs_oracle = 0.0;
    double err_estimate = 0.0;
    long nodes = 0;
    std::int64_t wall_time_ns = 0;
    std::string message;
};

/// Every (rep, z) pair, evaluated in parallel, returned in rep-major input order.
std::vector<ComparisonRow> compare(const std::vector<rep::RepresentationId>& reps, const std::vector<Complex>& zs,
                                   double tol, std::optional<quad::Rule> rule, bool timing);

}  // namespace lwik::cli
