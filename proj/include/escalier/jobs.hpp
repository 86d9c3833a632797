#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "escalier/json_io.hpp"

namespace escalier {

// One batch job: where the points come from, what to compute, what to print.
struct JobConfig {
    enum class Mode { Run, Verify, Bench, ExportState, Resume };

    Mode mode = Mode::Run;
    std::string input_path;                    // "-" = stdin
    std::string state_path;                    // resume only
    std::string format = "json";               // "json" | "csv"
    std::optional<std::string> field_override; // forces the field (required for csv)
    std::vector<std::string> outputs; // subset of escalier correspondence starset barcode
                                      // separators matrices groebner
    bool check = false;               // matrices: also emit identity residuals

    // bench parameters
    std::vector<std::size_t> bench_sizes{250, 500, 1000};
    std::size_t bench_nvars = 5;
    // coordinates drawn from [-range, range]; when unset, rationals default
    // to 3 and prime fields to a near-full range
    std::optional<long> bench_coord_range;
    std::uint64_t seed = 1;
};

// exit codes: 0 success, 1 input error, 2 internal invariant failure
int run_job(const JobConfig& config, std::ostream& out, std::ostream& err);

// Every cross-module invariant on one instance; returns per-check results.
struct VerifyReport {
    struct Entry {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_passed() const;
};

VerifyReport verify_instance(std::size_t nvars, const FieldSpec& field, const PointSet& points);

// deterministic distinct-point generator used by bench and the test suites
PointSet random_point_set(std::size_t count, std::size_t nvars, long coord_range,
                          const FieldSpec& field, std::uint64_t seed);

} // namespace escalier
