#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cesaro2/operators.hpp"
#include "cesaro2/rational.hpp"

namespace cesaro2::cli {

/// Malformed flags or values; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct SweepConfig {
    std::vector<Rational> alphas;
    long n = 20;
    Format format = Format::text;
    int parallelism = 1;
};

struct FindingRecord {
    Rational alpha;
    long section = 0;
    Rational minor;
    std::string severity;  // "info" or "conjecture-counterexample-candidate"
};

/// Expands "a:b:s" with rational components into {a, a+s, ..., <= b};
/// endpoints are included exactly when hit. Steps are exact rationals, so the
/// grid never drifts.
std::vector<Rational> parse_grid(const std::string& spec);

Rational parse_alpha(const std::string& s);

/// Default sample set: both sides of every boundary at -1, 0 and 1.
const std::vector<Rational>& default_alpha_set();

// Subcommand drivers. Return the process exit code (0 success, 1 when a
// checked contract is violated); UsageError propagates for exit code 2.
int run_verify(const SweepConfig& config, bool include_symbolic, std::ostream& out);
int run_region(const SweepConfig& config, std::ostream& out);
int run_conjecture(const SweepConfig& config, std::ostream& out, std::ostream& findings);
int run_dets(Format format, long extend, std::ostream& out);
int run_matrix(const OperatorSpec& spec, long n, Format format, std::ostream& out);

}  // namespace cesaro2::cli
