// Command line front end: analyze single systems, sweep families against
// the finite-field oracle, and poke at the supporting machinery (Cremona
// moves, Hilbert series, cone formulas).

#include "lindim/serialize.hpp"
#include "lindim/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lindim;

// "5,5,5,4,3,2" or "3x9" or a mix like "5x3,4,3,2".
std::vector<int> parse_mults(const std::string& text) {
    std::vector<int> mults;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        auto x = token.find('x');
        if (x == std::string::npos) {
            mults.push_back(std::stoi(token));
        } else {
            int value = std::stoi(token.substr(0, x));
            int count = std::stoi(token.substr(x + 1));
            if (count < 0)
                throw CLI::ValidationError("--mults", "negative repeat count");
            mults.insert(mults.end(), count, value);
        }
    }
    return mults;
}

std::string format_system(const LinearSystem& sys) {
    std::string out = "L_{" + std::to_string(sys.n) + "," + std::to_string(sys.d) + "}(";
    for (int i = 0; i < sys.s(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(sys.mults[i]);
    }
    return out + ")";
}

const char* effectivity_label(Effectivity e) {
    switch (e) {
        case Effectivity::nonempty: return "nonempty";
        case Effectivity::empty: return "empty";
        case Effectivity::unknown: return "unknown";
    }
    return "?";
}

void print_analysis_text(const AnalysisResult& result) {
    const auto& r = result.report;
    std::cout << "system          " << format_system(result.system) << "\n";
    std::cout << "effectivity     " << effectivity_label(result.eff) << "\n";
    std::cout << "vdim            " << r.vdim.str() << "\n";
    std::cout << "edim            " << r.edim.str() << "\n";
    std::cout << "lvdim           " << r.lvdim.str() << "\n";
    std::cout << "ldim            " << r.ldim.str() << "\n";
    if (r.oracle_dim)
        std::cout << "oracle dim      " << *r.oracle_dim << "\n";
    std::cout << "classification  " << to_string(r.classification)
              << (r.predicted ? " (predicted from ldim; oracle not run)" : "") << "\n";

    std::cout << "base locus      rbar " << result.base.rbar << ", " << result.base.cycles.size()
              << " cycles\n";
    for (const BaseCycle& cycle : result.base.cycles) {
        if (cycle.r == 0)
            continue;  // points just restate the input multiplicities
        std::cout << "  r=" << cycle.r << " {";
        for (std::size_t i = 0; i < cycle.index_set.indices.size(); ++i)
            std::cout << (i ? "," : "") << cycle.index_set.indices[i];
        std::cout << "} k=" << cycle.k << (cycle.exact ? "" : " (lower bound)") << "\n";
    }

    if (result.table) {
        std::cout << "h0              " << result.table->h0.str() << "\n";
        for (const CohomologyLevel& level : result.table->levels)
            std::cout << "h^" << level.r + 1 << "(level " << level.r << ")   "
                      << level.h_top.str() << "\n";
    } else if (!result.table_note.empty()) {
        std::cout << "cohomology      not applicable (" << result.table_note << ")\n";
    }

    if (result.oracle) {
        std::cout << "oracle trials  ";
        for (const OracleTrial& t : result.oracle->per_trial)
            std::cout << " dim " << t.dim << " (p=" << t.prime << ")";
        std::cout << (result.oracle->agreed ? "  [agreed]" : "  [disagreed]") << "\n";
    }
}

json analysis_to_json(const AnalysisResult& result) {
    json j;
    j["system"] = to_json(result.system);
    j["effectivity"] = effectivity_label(result.eff);
    j["report"] = to_json(result.report);
    j["base_locus"] = to_json(result.base);
    j["cohomology"] = result.table ? to_json(*result.table) : json(nullptr);
    if (!result.table_note.empty())
        j["cohomology_note"] = result.table_note;
    if (result.oracle)
        j["oracle"] = to_json(*result.oracle);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear systems with multiple base points: dimensions, base loci,"
                 " cohomology tables and a finite-field oracle"};
    app.require_subcommand(1);

    std::string mults_text;
    int n = 0, d = 0;
    std::uint64_t seed = default_oracle_seed();
    int trials = 3, prime_bits = 62, depth = 4, jobs = 0;
    std::string policy_name = "deletion";
    std::string format = "table";

    auto add_system_flags = [&](CLI::App* cmd, bool need_system) {
        cmd->add_option("-n", n, "ambient projective dimension")->required(need_system);
        cmd->add_option("-d", d, "degree")->required(need_system);
        cmd->add_option("-m,--mults", mults_text, "multiplicities, e.g. 5,5,5,4,3,2 or 3x9");
        cmd->add_option("--format", format, "output format: table|json")
            ->check(CLI::IsMember({"table", "json"}));
    };
    auto add_oracle_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "oracle RNG seed (default from LINDIM_SEED)");
        cmd->add_option("--trials", trials, "independent oracle trials");
        cmd->add_option("--prime-bits", prime_bits, "bit length of the random primes");
    };

    auto oracle_config = [&]() {
        OracleConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.prime_bits = prime_bits;
        return cfg;
    };
    auto policy = [&]() {
        return policy_name == "exhaustive" ? ContainmentPolicy::exhaustive
                                           : ContainmentPolicy::deletion;
    };
    auto make_system = [&]() { return canonicalize(n, d, parse_mults(mults_text)); };

    // ---- analyze ----
    CLI::App* analyze = app.add_subcommand("analyze", "full report for one system");
    add_system_flags(analyze, true);
    add_oracle_flags(analyze);
    bool run_oracle = false;
    analyze->add_flag("--oracle", run_oracle, "measure the actual dimension");
    analyze->add_option("--policy", policy_name, "ldim containment search: deletion|exhaustive")
        ->check(CLI::IsMember({"deletion", "exhaustive"}));
    analyze->callback([&]() {
        AnalyzeOptions opts;
        opts.run_oracle = run_oracle;
        opts.oracle = oracle_config();
        opts.policy = policy();
        AnalysisResult result = analyze_system(make_system(), opts);
        if (format == "json")
            std::cout << analysis_to_json(result).dump(2) << "\n";
        else
            print_analysis_text(result);
    });

    // ---- sweep ----
    CLI::App* sweep = app.add_subcommand("sweep", "run a family of systems with checks");
    int d_min = 1, d_max = 0, mult = 0, s_min = 1;
    int s_max_opt = -1;
    std::string systems_file, cache_path, out_path;
    bool no_oracle = false;
    std::vector<std::string> check_names;
    sweep->add_option("-n", n, "ambient projective dimension");
    sweep->add_option("--d-min", d_min, "smallest degree");
    sweep->add_option("--d-max", d_max, "largest degree");
    sweep->add_option("--mult", mult, "homogeneous multiplicity");
    sweep->add_option("--s-min", s_min, "smallest point count");
    sweep->add_option("--s-max", s_max_opt, "largest point count (default: auto)");
    sweep->add_option("--systems", systems_file,
                      "JSONL file of explicit systems {\"n\":..,\"d\":..,\"mults\":[..]}");
    sweep->add_option("--cache", cache_path, "JSONL result cache, read and appended");
    sweep->add_option("--out", out_path, "write records as JSONL here (default stdout)");
    sweep->add_option("--jobs", jobs, "worker threads (default: hardware)");
    sweep->add_flag("--no-oracle", no_oracle, "skip the oracle, predictions only");
    sweep->add_option("--check", check_names,
                      "checks to assert: weak-bound, small-points, many-points, cross-oracle")
        ->check(CLI::IsMember({"weak-bound", "small-points", "many-points", "cross-oracle"}));
    sweep->add_option("--policy", policy_name, "ldim containment search: deletion|exhaustive")
        ->check(CLI::IsMember({"deletion", "exhaustive"}));
    add_oracle_flags(sweep);
    sweep->callback([&]() {
        std::vector<LinearSystem> systems;
        if (!systems_file.empty()) {
            std::ifstream in(systems_file);
            if (!in)
                throw CLI::ValidationError("--systems", "cannot open " + systems_file);
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty())
                    continue;
                systems.push_back(system_from_json(json::parse(line)));
            }
        } else {
            if (n < 1 || d_max < d_min || mult < 1)
                throw CLI::ValidationError(
                    "sweep", "need either --systems or -n, --d-min/--d-max and --mult");
            systems = homogeneous_family(n, d_min, d_max, mult, s_min,
                                         s_max_opt >= 0 ? std::optional<int>(s_max_opt)
                                                        : std::nullopt);
        }

        SweepOptions opts;
        opts.oracle = oracle_config();
        opts.policy = policy();
        opts.run_oracle = !no_oracle;
        opts.jobs = jobs;
        if (!cache_path.empty())
            opts.cache_path = cache_path;
        if (!check_names.empty()) {
            opts.checks = SweepChecks{false, false, false, false};
            for (const std::string& name : check_names) {
                if (name == "weak-bound") opts.checks.weak_bound = true;
                if (name == "small-points") opts.checks.small_points = true;
                if (name == "many-points") opts.checks.many_points = true;
                if (name == "cross-oracle") opts.checks.cross_oracle = true;
            }
        }

        SweepSummary summary = sweep_systems(std::move(systems), opts);

        std::ostream* out = &std::cout;
        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            out = &file;
        }
        for (const SweepRecord& record : summary.records) {
            json j;
            j["key"] = to_json(record.system);
            j["report"] = to_json(record.report);
            j["oracle"] = record.oracle ? to_json(*record.oracle) : json(nullptr);
            j["cached"] = record.from_cache;
            *out << j.dump() << "\n";
        }

        std::cerr << "systems: " << summary.records.size() << " (computed " << summary.computed
                  << ", cached " << summary.cached << ")\n";
        for (const auto& [label, count] : summary.classification_counts)
            std::cerr << "  " << label << ": " << count << "\n";
        if (!summary.violations.empty()) {
            std::cerr << "violations:\n";
            for (const SweepViolation& v : summary.violations)
                std::cerr << "  " << format_system(v.system) << " [" << v.check << "] "
                          << v.detail << "\n";
            std::exit(1);
        }
    });

    // ---- cremona ----
    CLI::App* crem = app.add_subcommand("cremona", "Cremona reduction with move trace");
    add_system_flags(crem, true);
    int weyl_depth = 0;
    std::string single_base;
    crem->add_option("--depth", weyl_depth,
                     "also scan the Weyl orbit to this depth for base divisors");
    crem->add_option("--base", single_base,
                     "apply one transformation at these n+1 points instead of reducing");
    crem->callback([&]() {
        LinearSystem sys = make_system();
        PicardClass cls = to_picard(sys);

        if (!single_base.empty()) {
            PicardClass image = cremona(cls, parse_mults(single_base));
            if (format == "json")
                std::cout << json{{"input", to_json(cls)}, {"image", to_json(image)}}.dump(2)
                          << "\n";
            else
                std::cout << "input  " << to_json(cls).dump() << "\nimage  "
                          << to_json(image).dump() << "\n";
            return;
        }

        CremonaReduction reduction = cremona_reduce(cls);
        if (format == "json") {
            json j;
            j["input"] = to_json(cls);
            j["reduced"] = to_json(reduction.reduced);
            j["moves"] = reduction.moves;
            j["verdict"] = reduction.verdict == ReductionVerdict::reduced ? "reduced"
                                                                          : "negative-degree";
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "input    " << to_json(cls).dump() << "\n";
            PicardClass step = cls;
            for (std::size_t i = 0; i < reduction.moves.size(); ++i) {
                step = cremona(step, reduction.moves[i]);
                std::cout << "move " << i + 1 << "  base {";
                for (std::size_t k = 0; k < reduction.moves[i].size(); ++k)
                    std::cout << (k ? "," : "") << reduction.moves[i][k];
                std::cout << "} -> " << to_json(step).dump() << "\n";
            }
            std::cout << "reduced  " << to_json(reduction.reduced).dump() << "\n";
            std::cout << "verdict  "
                      << (reduction.verdict == ReductionVerdict::reduced ? "reduced"
                                                                         : "negative-degree")
                      << "\n";
        }
        if (weyl_depth > 0 && sys.s() >= sys.n + 1) {
            auto entries = weyl_base_locus(cls, weyl_depth);
            std::cout << "weyl base divisors (depth " << weyl_depth << "): " << entries.size()
                      << "\n";
            for (const auto& entry : entries)
                std::cout << "  " << to_json(entry.divisor).dump() << " mult " << entry.mult
                          << "\n";
        }
    });

    // ---- oracle ----
    CLI::App* oracle = app.add_subcommand("oracle", "measure the actual dimension");
    add_system_flags(oracle, true);
    add_oracle_flags(oracle);
    std::string method = "interpolation";
    oracle->add_option("--method", method, "interpolation|apolarity|both")
        ->check(CLI::IsMember({"interpolation", "apolarity", "both"}));
    oracle->callback([&]() {
        LinearSystem sys = make_system();
        json j;
        if (method != "apolarity")
            j["interpolation"] = to_json(interpolation_dimension(sys, oracle_config()));
        if (method != "interpolation")
            j["apolarity"] = to_json(apolarity_dimension(sys, oracle_config()));
        std::cout << j.dump(2) << "\n";
    });

    // ---- froberg ----
    CLI::App* froberg = app.add_subcommand(
        "froberg", "truncated Hilbert series, or the series prediction for a system");
    std::string degrees_text;
    int order = -1;
    add_system_flags(froberg, false);
    froberg->add_option("--degrees", degrees_text, "generator degrees, e.g. 2,2");
    froberg->add_option("-D,--order", order, "expansion order");
    froberg->callback([&]() {
        if (!degrees_text.empty()) {
            if (order < 0)
                throw CLI::ValidationError("--order", "expansion order required with --degrees");
            TruncatedSeries series = truncated_series(n, parse_mults(degrees_text), order);
            if (format == "json") {
                std::cout << to_json(series).dump(2) << "\n";
            } else {
                std::cout << "raw       ";
                for (const BigInt& a : series.raw)
                    std::cout << a.str() << " ";
                std::cout << "\ntruncated ";
                for (const BigInt& b : series.truncated)
                    std::cout << b.str() << " ";
                std::cout << "\n";
            }
            return;
        }
        LinearSystem sys = make_system();
        std::vector<int> degrees;
        for (int m : sys.mults)
            degrees.push_back(sys.d + 1 - m);
        TruncatedSeries series = truncated_series(sys.n, degrees, sys.d);
        BigInt prediction = froberg_prediction(sys);
        if (format == "json") {
            json j = to_json(series);
            j["prediction"] = big_to_json(prediction);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "system     " << format_system(sys) << "\n";
            std::cout << "series     ";
            for (const BigInt& b : series.truncated)
                std::cout << b.str() << " ";
            std::cout << "\nprediction " << prediction.str() << "\n";
        }
    });

    // ---- cones ----
    CLI::App* cones = app.add_subcommand("cones",
                                         "section count and speciality of full-multiplicity "
                                         "point systems");
    int cone_s = 0;
    cones->add_option("-n", n, "ambient projective dimension")->required();
    cones->add_option("-d", d, "degree")->required();
    cones->add_option("-s", cone_s, "number of full-multiplicity points")->required();
    cones->add_option("--format", format, "output format: table|json")
        ->check(CLI::IsMember({"table", "json"}));
    cones->callback([&]() {
        BigInt h0 = cones_h0(n, d, cone_s);
        BigInt h1 = cones_h1(n, d, cone_s);
        if (format == "json") {
            std::cout << json{{"h0", big_to_json(h0)}, {"h1", big_to_json(h1)}}.dump(2) << "\n";
        } else {
            std::cout << "h0 " << h0.str() << "\n";
            std::cout << "h1 " << h1.str() << "\n";
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
