#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gcs/coupling.hpp"
#include "gcs/ground_state.hpp"
#include "gcs/verification.hpp"

namespace gcs {

/// %.*g formatting; 15 significant digits by default.
inline std::string format_sig(double x, int sig = 15) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, x);
    return buf;
}

/// Profile export: header `r,u,du`, 15 significant digits, deterministic.
inline void write_profile_csv(std::ostream& os, const RadialProfile& profile) {
    os << "r,u,du\n";
    for (std::size_t i = 0; i < profile.grid.size(); ++i)
        os << format_sig(profile.grid[i]) << ',' << format_sig(profile.values[i]) << ','
           << format_sig(profile.derivs[i]) << '\n';
}

/// A flat ordered record; serializes as `key: value` lines or as one CSV row.
class Record {
public:
    void add(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }
    void add(const std::string& key, double value, int sig = 15) { add(key, format_sig(value, sig)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return kv_; }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

enum class RecordFormat { structured_text, csv };

inline RecordFormat parse_record_format(const std::string& s) {
    if (s == "structured-text") return RecordFormat::structured_text;
    if (s == "csv") return RecordFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or structured-text)");
}

inline void write_structured(std::ostream& os, const Record& rec) {
    for (const auto& [k, v] : rec.fields()) os << k << ": " << v << '\n';
}

inline void write_csv_header(std::ostream& os, const Record& rec) {
    bool first = true;
    for (const auto& [k, v] : rec.fields()) {
        if (!first) os << ',';
        os << k;
        first = false;
    }
    os << '\n';
}

inline void write_csv_row(std::ostream& os, const Record& rec) {
    bool first = true;
    for (const auto& [k, v] : rec.fields()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '\n';
}

/// Homogeneous records: structured text separates them by blank lines, CSV
/// prints one header plus one row per record.
inline void write_records(std::ostream& os, const std::vector<Record>& recs, RecordFormat fmt) {
    if (recs.empty()) return;
    if (fmt == RecordFormat::csv) {
        write_csv_header(os, recs.front());
        for (const auto& r : recs) write_csv_row(os, r);
    } else {
        bool first = true;
        for (const auto& r : recs) {
            if (!first) os << '\n';
            write_structured(os, r);
            first = false;
        }
    }
}

/// {n, p, k, alpha, case_tag, theorem_item, count, omegas[], k_star?}
inline Record classification_record(const ProblemParams& params, double alpha, const FCase& fc,
                                    const ClassificationResult& res) {
    Record rec;
    rec.add("n", params.n);
    rec.add("p", params.p.str());
    rec.add("k", params.k);
    rec.add("alpha", alpha);
    rec.add("case_tag", ftag_name(fc.tag));
    rec.add("theorem_item", theorem_item_name(res.theorem_item));
    rec.add("count", res.count);
    rec.add("omega1", res.count > 0 ? format_sig(res.omegas[0]) : std::string());
    rec.add("omega2", res.count > 1 ? format_sig(res.omegas[1]) : std::string());
    rec.add("k_star", res.k_star ? format_sig(*res.k_star) : std::string());
    return rec;
}

/// {omega, l2_mass, consistency_defect, ode_residual, nonlocal_residual,
///  pohozaev_defect, nehari_defect}
inline Record certification_record(const CertificationReport& rep) {
    Record rec;
    rec.add("omega", rep.omega);
    rec.add("l2_mass", rep.l2_mass);
    rec.add("consistency_defect", rep.consistency_defect);
    rec.add("ode_residual", rep.ode_residual);
    rec.add("nonlocal_residual", rep.nonlocal_residual);
    rec.add("pohozaev_defect", rep.pohozaev_defect);
    rec.add("nehari_defect", rep.nehari_defect);
    return rec;
}

/// {u0, alpha, decay_delta, decay_C, ode_residual}
inline Record ground_state_record(const RadialProfile& profile, double alpha, double residual) {
    Record rec;
    rec.add("u0", profile.values.empty() ? 0.0 : profile.values.front());
    rec.add("alpha", alpha);
    rec.add("decay_delta", profile.decay_delta ? format_sig(*profile.decay_delta) : std::string());
    rec.add("decay_C", profile.decay_C ? format_sig(*profile.decay_C) : std::string());
    rec.add("ode_residual", residual);
    return rec;
}

} // namespace gcs
