#pragma once

#include <json.hpp>

#include "jackal/jack.hpp"

namespace jackal {

struct Failure {
    nlohmann::json input;
    std::string lhs, rhs;
    // A regression falsifies a proven statement (or an internal assertion);
    // everything else is a conjecture finding.
    bool regression = true;
};

struct Report {
    std::string suite;
    nlohmann::json bound;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    long long ms = 0;
    bool ok() const { return failures.empty(); }
    bool regressions() const;
    nlohmann::json to_json() const;
    std::string text() const;
};

struct RunOptions {
    int jobs = 1;
};

// Proven-statement suites: every failure is a regression.
Report suite_translation(Engine& e, int max_size, const RunOptions& opt = {});
Report suite_rotation(Engine& e, int max_area, const RunOptions& opt = {});
Report suite_duality(Engine& e, int max_size, const RunOptions& opt = {});
Report suite_prefix(Engine& e, int max_size, const RunOptions& opt = {});
Report suite_split(Engine& e, int max_size, int xvars = 2, int yvars = 2,
                   const RunOptions& opt = {});
Report suite_consistency(Engine& e, int max_size, const RunOptions& opt = {});
std::vector<Report> verify_all(Engine& e, int max_size, const RunOptions& opt = {});

// Conjecture sweeps: misses are findings, not regressions, except where a
// proven special case is violated.
Report conjecture_main(Engine& e, int max_size, const RunOptions& opt = {});
Report conjecture_stanley(Engine& e, int max_size, const RunOptions& opt = {});
Report conjecture_linear_factors(Engine& e, int max_size, const RunOptions& opt = {});
Report conjecture_ratio(Engine& e, int max_size, const RunOptions& opt = {});

// Solved table of lowest-coefficient summands: one polynomial per
// row/column-permutation class of admissible configurations.
struct PiTable {
    Partition mu;
    std::vector<Partition> family;
    std::vector<std::pair<Configuration, AlphaPoly>> pi;  // canonical class reps
    std::vector<Configuration> undetermined;
    bool consistent = true;
    bool unique = true;
    bool nonneg = true;
    std::vector<std::string> notes;
    nlohmann::json to_json() const;
    std::string text() const;
};

std::vector<Partition> lowest_default_family(const Partition& mu, int max_size);
PiTable solve_lowest(Engine& e, const Partition& mu, const std::vector<Partition>& family);
// Checks one equation of the system against a solved table; nullopt when the
// residual is zero, otherwise a description. Undetermined classes appearing
// in lambda's closure count as nonzero residual.
std::optional<std::string> lowest_residual(Engine& e, const PiTable& table,
                                           const Partition& lambda);
// Solves over the default family and checks the held-out residual; the table
// (when wanted) is returned through *out.
Report conjecture_lowest(Engine& e, const Partition& mu, int max_size,
                         const RunOptions& opt = {}, PiTable* out = nullptr);

}  // namespace jackal
