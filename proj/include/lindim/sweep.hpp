#pragma once

#include "lindim/baselocus.hpp"
#include "lindim/cohomology.hpp"
#include "lindim/dimensions.hpp"
#include "lindim/oracle.hpp"
#include "lindim/picard.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lindim {

inline constexpr const char* kToolVersion = "lindim 0.1.0";

struct AnalyzeOptions {
    bool run_oracle = false;
    OracleConfig oracle;
    ContainmentPolicy policy = ContainmentPolicy::deletion;
    int weyl_depth = 4;
};

struct AnalysisResult {
    LinearSystem system;
    Effectivity eff = Effectivity::unknown;
    DimensionReport report;
    BaseLocusReport base;
    std::optional<CohomologyTable> table;  // absent outside the formula scope
    std::string table_note;                // why the table is absent, if it is
    std::optional<OracleResult> oracle;
};

/// One-stop analysis: dimensions, base locus, cohomology table when in
/// scope, oracle measurement on request.
AnalysisResult analyze_system(const LinearSystem& sys, const AnalyzeOptions& opts);

struct SweepChecks {
    bool weak_bound = true;     // ldim <= measured dimension, always
    bool small_points = true;   // s <= n+2 non-empty: dimension matches ldim, table sane
    bool many_points = true;    // s >= n+3 under the b-condition: dimension matches ldim
    bool cross_oracle = false;  // interpolation and apolarity routes agree
};

struct SweepOptions {
    OracleConfig oracle;
    ContainmentPolicy policy = ContainmentPolicy::deletion;
    bool run_oracle = true;
    SweepChecks checks;
    int jobs = 0;  // 0: hardware concurrency
    std::optional<std::string> cache_path;
};

struct SweepViolation {
    LinearSystem system;
    std::string check;
    std::string detail;
};

struct SweepRecord {
    LinearSystem system;
    DimensionReport report;
    std::optional<OracleResult> oracle;
    bool from_cache = false;
};

struct SweepSummary {
    std::vector<SweepRecord> records;  // canonical (n, d, mults) order
    std::vector<SweepViolation> violations;
    std::map<std::string, int> classification_counts;
    std::size_t computed = 0;
    std::size_t cached = 0;
};

/// Runs the full pipeline over a list of systems, reusing cached results
/// when a cache path is given, and evaluates the selected checks.
SweepSummary sweep_systems(std::vector<LinearSystem> systems, const SweepOptions& opts);

/// The homogeneous family L_{n,d}(m^s) for d in [d_min, d_max] and s from
/// s_min up to s_max; the default upper bound comfortably passes the point
/// count at which the systems go empty.
std::vector<LinearSystem> homogeneous_family(int n, int d_min, int d_max, int mult,
                                             int s_min = 1,
                                             std::optional<int> s_max = std::nullopt);

/// JSONL cache record key: canonical system plus the oracle configuration
/// and tool version.
std::string cache_key(const LinearSystem& sys, const OracleConfig& cfg);

}  // namespace lindim
