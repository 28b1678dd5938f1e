#include "lindim/sweep.hpp"

#include "lindim/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace lindim {

AnalysisResult analyze_system(const LinearSystem& sys, const AnalyzeOptions& opts) {
    AnalysisResult result;
    result.system = sys;
    result.eff = effectivity(sys);
    result.base = enumerate_base_cycles(sys);
    if (opts.run_oracle)
        result.oracle = interpolation_dimension(sys, opts.oracle);
    result.report = dimension_report(
        sys, result.oracle ? std::optional<long long>(result.oracle->dim) : std::nullopt,
        opts.policy);
    try {
        result.table = cohomology_table(sys);
    } catch (const ScopeError& e) {
        result.table_note = e.what();
    } catch (const EmptySystemError& e) {
        result.table_note = e.what();
    }
    return result;
}

std::string cache_key(const LinearSystem& sys, const OracleConfig& cfg) {
    json j = to_json(sys);
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["prime_bits"] = cfg.prime_bits;
    j["version"] = kToolVersion;
    return j.dump();
}

namespace {

// Alternating partial sums of the correction terms, used to cross-check the
// per-level table entries against the Euler characteristic.
std::vector<BigInt> partial_chi(const LinearSystem& sys, const BaseLocusReport& base,
                                int max_level) {
    std::vector<BigInt> sums(max_level + 2, BigInt(0));  // index by rho + 1
    sums[0] = binomial(sys.n + sys.d, sys.n);            // empty index set
    for (const BaseCycle& cycle : base.cycles) {
        if (cycle.r > max_level || cycle.k <= cycle.r)
            continue;
        BigInt term = binomial(sys.n + cycle.k - cycle.r - 1, sys.n);
        if ((cycle.r + 1) % 2 == 0)
            sums[cycle.r + 1] += term;
        else
            sums[cycle.r + 1] -= term;
    }
    std::vector<BigInt> partial(max_level + 2, BigInt(0));
    BigInt acc = 0;
    for (int i = 0; i <= max_level + 1; ++i) {
        acc += sums[i];
        partial[i] = acc;
    }
    return partial;
}

void check_record(const LinearSystem& sys, const SweepRecord& record,
                  const SweepOptions& opts, std::vector<SweepViolation>& out) {
    const SweepChecks& checks = opts.checks;
    if (!record.oracle)
        return;
    const long long dim = record.oracle->dim;

    if (checks.weak_bound && record.report.ldim > dim)
        out.push_back({sys, "weak-bound",
                       "ldim " + record.report.ldim.str() + " exceeds measured dimension " +
                           std::to_string(dim)});

    if (checks.small_points && sys.s() <= sys.n + 2 &&
        effectivity(sys) == Effectivity::nonempty) {
        if (record.report.ldim != dim)
            out.push_back({sys, "small-points",
                           "expected dimension " + record.report.ldim.str() +
                               ", measured " + std::to_string(dim)});
        CohomologyTable table = cohomology_table(sys);
        BaseLocusReport base = enumerate_base_cycles(sys);
        const int max_level = std::min(sys.n, sys.s()) - 1;
        std::vector<BigInt> chi = partial_chi(sys, base, max_level);
        for (const CohomologyLevel& level : table.levels) {
            if (level.h_top < 0)
                out.push_back({sys, "small-points",
                               "negative cohomology entry at level " + std::to_string(level.r)});
            if (level.r >= table.rbar && level.h_top != 0)
                out.push_back({sys, "small-points",
                               "top cohomology should vanish at level " +
                                   std::to_string(level.r)});
            BigInt euler = (level.r % 2 == 0) ? BigInt(table.h0 - level.h_top)
                                              : BigInt(table.h0 + level.h_top);
            if (euler != chi[level.r + 1])
                out.push_back({sys, "small-points",
                               "Euler characteristic mismatch at level " +
                                   std::to_string(level.r)});
        }
    }

    if (checks.many_points && sys.s() >= sys.n + 3 && sys.d >= 2 &&
        (sys.mults.empty() || sys.mults.front() <= sys.d)) {
        N3Condition cond = n3_condition(sys);
        if (cond.satisfied && record.report.ldim != dim)
            out.push_back({sys, "many-points",
                           "expected dimension " + record.report.ldim.str() +
                               ", measured " + std::to_string(dim)});
    }

    if (checks.cross_oracle && (sys.mults.empty() || sys.mults.front() <= sys.d)) {
        OracleResult dual = apolarity_dimension(sys, opts.oracle);
        if (dual.dim != dim)
            out.push_back({sys, "cross-oracle",
                           "interpolation " + std::to_string(dim) + " vs apolarity " +
                               std::to_string(dual.dim)});
    }
}

}  // namespace

SweepSummary sweep_systems(std::vector<LinearSystem> systems, const SweepOptions& opts) {
    std::sort(systems.begin(), systems.end());
    systems.erase(std::unique(systems.begin(), systems.end()), systems.end());

    // Cached records short-circuit the whole computation for their key.
    std::unordered_map<std::string, SweepRecord> cache;
    if (opts.cache_path) {
        std::ifstream in(*opts.cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                json j = json::parse(line);
                SweepRecord record;
                record.system = system_from_json(j.at("key"));
                record.report = dimension_report_from_json(j.at("report"));
                if (!j.at("oracle").is_null())
                    record.oracle = oracle_result_from_json(j.at("oracle"));
                record.from_cache = true;
                cache.emplace(j.at("cache_key").get<std::string>(), std::move(record));
            } catch (const std::exception&) {
                // Foreign or corrupt lines are skipped; the sweep recomputes.
            }
        }
    }

    SweepSummary summary;
    summary.records.resize(systems.size());

    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                  : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, systems.size() == 0 ? 1 : systems.size());

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> computed{0};
    std::atomic<std::size_t> cached{0};

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= systems.size())
                return;
            const LinearSystem& sys = systems[i];
            const std::string key = cache_key(sys, opts.oracle);
            if (auto it = cache.find(key); it != cache.end()) {
                summary.records[i] = it->second;
                cached.fetch_add(1);
                continue;
            }
            SweepRecord record;
            record.system = sys;
            if (opts.run_oracle)
                record.oracle = interpolation_dimension(sys, opts.oracle);
            record.report = dimension_report(
                sys, record.oracle ? std::optional<long long>(record.oracle->dim) : std::nullopt,
                opts.policy);
            summary.records[i] = std::move(record);
            computed.fetch_add(1);
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool)
        t.join();

    summary.computed = computed.load();
    summary.cached = cached.load();

    for (std::size_t i = 0; i < systems.size(); ++i) {
        const SweepRecord& record = summary.records[i];
        summary.classification_counts[to_string(record.report.classification)]++;
        check_record(systems[i], record, opts, summary.violations);
    }

    if (opts.cache_path && summary.computed > 0) {
        std::ofstream out(*opts.cache_path, std::ios::app);
        const auto now = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
        for (std::size_t i = 0; i < systems.size(); ++i) {
            const SweepRecord& record = summary.records[i];
            if (record.from_cache)
                continue;
            json j;
            j["cache_key"] = cache_key(systems[i], opts.oracle);
            j["key"] = to_json(systems[i]);
            j["report"] = to_json(record.report);
            j["oracle"] = record.oracle ? to_json(*record.oracle) : json(nullptr);
            j["version"] = kToolVersion;
            j["timestamp"] = now;
            out << j.dump() << "\n";
        }
    }

    return summary;
}

std::vector<LinearSystem> homogeneous_family(int n, int d_min, int d_max, int mult, int s_min,
                                             std::optional<int> s_max) {
    if (mult < 1)
        throw std::invalid_argument("homogeneous_family: multiplicity must be positive");
    std::vector<LinearSystem> systems;
    for (int d = d_min; d <= d_max; ++d) {
        int hi;
        if (s_max) {
            hi = *s_max;
        } else {
            // Past this count the systems are empty and stay empty; the
            // n+2 floor keeps the full cone range s <= n+1 in view.
            BigInt cap = binomial(n + d, n) / binomial(n + mult - 1, n) + 2;
            if (cap > 1000000)
                cap = 1000000;
            hi = std::max(cap.convert_to<int>(), n + 2);
        }
        for (int s = s_min; s <= hi; ++s)
            systems.push_back(canonicalize(n, d, std::vector<int>(s, mult)));
    }
    return systems;
}

}  // namespace lindim
