#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "recreg/math_util.hpp"
#include "recreg/scenario.hpp"

namespace recreg {

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits: enough to reproduce any double bit-for-bit, and a
/// fixed width so reruns of the same config are byte-identical.
inline std::string fp17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    return fp17(x);
}

inline void append_row_json(std::ostringstream& os, const ResidualRow& row) {
    os << "{\"n\":" << row.ctx.n << ",\"k\":" << row.ctx.k << ",\"r\":" << row.ctx.r
       << ",\"u\":" << json_number(row.ctx.u) << ",\"v\":" << json_number(row.ctx.v)
       << ",\"lhs\":" << json_number(row.lhs) << ",\"rhs\":" << json_number(row.rhs)
       << ",\"residual\":" << json_number(row.residual) << ",\"method\":\""
       << method_name(row.method) << "\",\"mc_std_error\":"
       << (row.mc_std_error ? json_number(*row.mc_std_error) : "null");
    // the residual is signed and absolute; attach the relative view where
    // the right side has scale
    if (row.error.empty() && std::abs(row.rhs) > 1e-6) {
        os << ",\"rel_residual\":" << json_number(row.residual / std::abs(row.rhs));
    }
    if (!row.error.empty()) os << ",\"error\":\"" << json_escape(row.error) << "\"";
    os << "}";
}

} // namespace detail

inline std::string reports_to_json(const std::vector<ResidualReport>& reports) {
    std::ostringstream os;
    os << "{\"schema_version\":" << kSchemaVersion << ",\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        if (i) os << ",";
        os << "{\"scenario\":\"" << detail::json_escape(rep.scenario) << "\",\"rows\":[";
        for (std::size_t j = 0; j < rep.rows.size(); ++j) {
            if (j) os << ",";
            detail::append_row_json(os, rep.rows[j]);
        }
        os << "],\"max_abs_residual\":" << detail::json_number(rep.max_abs_residual)
           << ",\"verdict\":\"" << verdict_name(rep.verdict) << "\"}";
    }
    os << "]}\n";
    return os.str();
}

inline const char* kResidualCsvHeader =
    "scenario,n,k,r,u,v,lhs,rhs,residual,method,mc_std_error,verdict\n";

inline std::string reports_to_csv(const std::vector<ResidualReport>& reports) {
    std::ostringstream os;
    os << kResidualCsvHeader;
    for (const auto& rep : reports) {
        for (const auto& row : rep.rows) {
            os << detail::csv_field(rep.scenario) << "," << row.ctx.n << "," << row.ctx.k
               << "," << row.ctx.r << "," << fp17(row.ctx.u) << "," << fp17(row.ctx.v) << ","
               << fp17(row.lhs) << "," << fp17(row.rhs) << "," << fp17(row.residual) << ","
               << (row.error.empty() ? method_name(row.method) : "error") << ","
               << (row.mc_std_error ? fp17(*row.mc_std_error) : "") << ","
               << verdict_name(rep.verdict) << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Simulation output
// ---------------------------------------------------------------------------

/// Draws grouped by replicate plus their summary statistics.
struct SimulationResult {
    std::string label;
    std::vector<std::vector<double>> replicates;
    RunningStats summary; // over every emitted value
};

inline std::string simulation_to_json(const SimulationResult& sim) {
    std::ostringstream os;
    os << "{\"schema_version\":" << kSchemaVersion << ",\"command\":\"simulate\",\"label\":\""
       << detail::json_escape(sim.label) << "\",\"replicates\":[";
    for (std::size_t i = 0; i < sim.replicates.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < sim.replicates[i].size(); ++j) {
            if (j) os << ",";
            os << detail::json_number(sim.replicates[i][j]);
        }
        os << "]";
    }
    os << "],\"summary\":{\"count\":" << sim.summary.count()
       << ",\"mean\":" << detail::json_number(sim.summary.mean())
       << ",\"stddev\":" << detail::json_number(sim.summary.stddev())
       << ",\"min\":" << detail::json_number(sim.summary.min())
       << ",\"max\":" << detail::json_number(sim.summary.max()) << "}}\n";
    return os.str();
}

inline std::string simulation_to_csv(const SimulationResult& sim) {
    std::ostringstream os;
    os << "replicate,index,value\n";
    for (std::size_t i = 0; i < sim.replicates.size(); ++i) {
        for (std::size_t j = 0; j < sim.replicates[i].size(); ++j) {
            os << i << "," << j << "," << fp17(sim.replicates[i][j]) << "\n";
        }
    }
    os << "summary,count," << sim.summary.count() << "\n";
    os << "summary,mean," << fp17(sim.summary.mean()) << "\n";
    os << "summary,stddev," << fp17(sim.summary.stddev()) << "\n";
    os << "summary,min," << fp17(sim.summary.min()) << "\n";
    os << "summary,max," << fp17(sim.summary.max()) << "\n";
    return os.str();
}

} // namespace recreg
