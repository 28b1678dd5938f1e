#include "lindim/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace lindim {

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json to_json(const LinearSystem& sys) {
    return json{{"n", sys.n}, {"d", sys.d}, {"mults", sys.mults}};
}

LinearSystem system_from_json(const json& j) {
    return canonicalize(j.at("n").get<int>(), j.at("d").get<int>(),
                        j.at("mults").get<std::vector<int>>());
}

json to_json(const PicardClass& cls) {
    return json{{"degree", cls.degree}, {"mults", cls.mults}};
}

PicardClass picard_from_json(const json& j, int n) {
    PicardClass cls;
    cls.n = n;
    cls.degree = j.at("degree").get<long long>();
    cls.mults = j.at("mults").get<std::vector<long long>>();
    return cls;
}

json to_json(const BaseLocusReport& report) {
    json cycles = json::array();
    for (const BaseCycle& cycle : report.cycles)
        cycles.push_back(json{{"indices", cycle.index_set.indices},
                              {"r", cycle.r},
                              {"k", cycle.k},
                              {"exact", cycle.exact}});
    return json{{"rbar", report.rbar}, {"cycles", std::move(cycles)}};
}

BaseLocusReport base_locus_from_json(const json& j) {
    BaseLocusReport report;
    report.rbar = j.at("rbar").get<int>();
    for (const json& c : j.at("cycles")) {
        BaseCycle cycle;
        cycle.index_set.indices = c.at("indices").get<std::vector<int>>();
        cycle.r = c.at("r").get<int>();
        cycle.k = c.at("k").get<long long>();
        cycle.exact = c.at("exact").get<bool>();
        report.cycles.push_back(std::move(cycle));
    }
    return report;
}

json to_json(const DimensionReport& report) {
    json j{{"vdim", big_to_json(report.vdim)},
           {"edim", big_to_json(report.edim)},
           {"lvdim", big_to_json(report.lvdim)},
           {"ldim", big_to_json(report.ldim)},
           {"classification", to_string(report.classification)}};
    j["oracle_dim"] = report.oracle_dim ? json(*report.oracle_dim) : json(nullptr);
    return j;
}

DimensionReport dimension_report_from_json(const json& j) {
    DimensionReport report;
    report.vdim = big_from_json(j.at("vdim"));
    report.edim = big_from_json(j.at("edim"));
    report.lvdim = big_from_json(j.at("lvdim"));
    report.ldim = big_from_json(j.at("ldim"));
    if (!j.at("oracle_dim").is_null())
        report.oracle_dim = j.at("oracle_dim").get<long long>();
    report.predicted = !report.oracle_dim.has_value();
    std::string label = j.at("classification").get<std::string>();
    for (Classification c :
         {Classification::non_special, Classification::linearly_non_special_but_special,
          Classification::linearly_special, Classification::empty_system}) {
        if (to_string(c) == label) {
            report.classification = c;
            return report;
        }
    }
    throw std::invalid_argument("unknown classification label: " + label);
}

json to_json(const CohomologyTable& table) {
    json levels = json::array();
    for (const CohomologyLevel& level : table.levels) {
        json h = json::object();
        h[std::to_string(level.r + 1)] = big_to_json(level.h_top);
        levels.push_back(json{{"r", level.r}, {"h", std::move(h)}});
    }
    return json{{"h0", big_to_json(table.h0)}, {"rbar", table.rbar}, {"levels", std::move(levels)}};
}

CohomologyTable cohomology_table_from_json(const json& j) {
    CohomologyTable table;
    table.h0 = big_from_json(j.at("h0"));
    table.rbar = j.at("rbar").get<int>();
    for (const json& l : j.at("levels")) {
        CohomologyLevel level;
        level.r = l.at("r").get<int>();
        level.h_top = big_from_json(l.at("h").at(std::to_string(level.r + 1)));
        table.levels.push_back(std::move(level));
    }
    return table;
}

json to_json(const OracleResult& result) {
    json trials = json::array();
    for (const OracleTrial& t : result.per_trial)
        trials.push_back(json{{"prime", t.prime}, {"dim", t.dim}, {"rank", t.rank}});
    return json{{"dim", result.dim},
                {"rank", result.rank},
                {"agreed", result.agreed},
                {"per_trial", std::move(trials)}};
}

OracleResult oracle_result_from_json(const json& j) {
    OracleResult result;
    result.dim = j.at("dim").get<long long>();
    result.rank = j.at("rank").get<long long>();
    result.agreed = j.at("agreed").get<bool>();
    for (const json& t : j.at("per_trial")) {
        OracleTrial trial;
        trial.prime = t.at("prime").get<std::uint64_t>();
        trial.dim = t.at("dim").get<long long>();
        trial.rank = t.at("rank").get<long long>();
        result.per_trial.push_back(trial);
    }
    return result;
}

json to_json(const TruncatedSeries& series) {
    json raw = json::array();
    for (const BigInt& a : series.raw)
        raw.push_back(big_to_json(a));
    json truncated = json::array();
    for (const BigInt& b : series.truncated)
        truncated.push_back(big_to_json(b));
    json j{{"raw", std::move(raw)}, {"truncated", std::move(truncated)}};
    j["truncation_index"] =
        series.truncation_index ? json(*series.truncation_index) : json(nullptr);
    return j;
}

}  // namespace lindim
