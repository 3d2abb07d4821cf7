#include "qkap/records.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qkap {

namespace {

using ordered_json = nlohmann::ordered_json;

template <typename Map>
std::string join_params(const Map& params) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) out << ' ';
        out << key << '=' << value;
        first = false;
    }
    return out.str();
}

std::string format_elapsed(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", seconds);
    return buf;
}

ordered_json counterexample_json(const Counterexample& ce) {
    ordered_json j;
    j["params"] = ce.params;
    if (ce.index) {
        j["index"] = *ce.index;
    } else {
        j["index"] = nullptr;
    }
    j["note"] = ce.note;
    return j;
}

std::string report_csv_row(const CheckReport& r) {
    std::ostringstream out;
    out << r.check << ',' << outcome_name(r.outcome) << ',' << r.instances << ','
        << r.counterexamples.size() << '\n';
    return out.str();
}

constexpr char kReportCsvHeader[] = "check,outcome,instances,counterexamples\n";

}  // namespace

OutputRecord make_record(std::string family, std::map<std::string, int> params,
                         const IntPoly& p) {
    OutputRecord r;
    r.family = std::move(family);
    r.params = std::move(params);
    if (!p.is_zero()) {
        r.degree = static_cast<long>(p.degree());
        r.coeffs.reserve(p.coeffs().size());
        for (const Coeff& c : p.coeffs()) r.coeffs.push_back(c.get_str());
        r.symmetric = is_symmetric(p);
        r.unimodal = is_unimodal(p);
    }
    return r;
}

std::string to_json(const OutputRecord& r) {
    ordered_json j;
    j["family"] = r.family;
    j["params"] = r.params;
    j["degree"] = r.degree;
    j["coeffs"] = r.coeffs;
    j["symmetric"] = r.symmetric;
    j["unimodal"] = r.unimodal;
    return j.dump(2);
}

std::string to_csv(const OutputRecord& r) {
    std::ostringstream out;
    out << "exponent,coefficient\n";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        out << i << ',' << r.coeffs[i] << '\n';
    }
    return out.str();
}

std::string to_human(const OutputRecord& r) {
    std::ostringstream out;
    out << r.family;
    if (!r.params.empty()) out << ' ' << join_params(r.params);
    out << '\n';
    if (r.degree < 0) {
        out << "  degree: none (zero polynomial)\n  coeffs: []\n";
        return out.str();
    }
    out << "  degree: " << r.degree << '\n';
    out << "  coeffs: [";
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        if (i) out << ", ";
        out << r.coeffs[i];
    }
    out << "]\n";
    out << "  symmetric: " << (r.symmetric ? "yes" : "no")
        << "  unimodal: " << (r.unimodal ? "yes" : "no") << '\n';
    return out.str();
}

namespace {

ordered_json report_json(const CheckReport& r) {
    ordered_json j;
    j["check"] = r.check;
    j["bounds"] = r.bounds;
    j["outcome"] = outcome_name(r.outcome);
    j["counterexamples"] = ordered_json::array();
    for (const Counterexample& ce : r.counterexamples) {
        j["counterexamples"].push_back(counterexample_json(ce));
    }
    j["instances"] = r.instances;
    return j;
}

}  // namespace

std::string to_json(const CheckReport& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<CheckReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const CheckReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string to_csv(const CheckReport& r) { return kReportCsvHeader + report_csv_row(r); }

std::string to_csv(const std::vector<CheckReport>& reports) {
    std::string out = kReportCsvHeader;
    for (const CheckReport& r : reports) out += report_csv_row(r);
    return out;
}

std::string to_human(const CheckReport& r) {
    std::ostringstream out;
    out << "check " << r.check;
    if (!r.bounds.empty()) out << "  [" << join_params(r.bounds) << ']';
    out << '\n';
    out << "  outcome: " << outcome_name(r.outcome) << '\n';
    out << "  instances: " << r.instances << "  elapsed: " << format_elapsed(r.elapsed_seconds)
        << '\n';
    if (r.counterexamples.empty()) {
        out << "  counterexamples: none\n";
        return out.str();
    }
    constexpr std::size_t kShow = 8;
    out << "  counterexamples (" << r.counterexamples.size() << "):\n";
    for (std::size_t i = 0; i < r.counterexamples.size() && i < kShow; ++i) {
        const Counterexample& ce = r.counterexamples[i];
        out << "    " << join_params(ce.params);
        if (ce.index) out << "  index=" << *ce.index;
        if (!ce.note.empty()) out << "  " << ce.note;
        out << '\n';
    }
    if (r.counterexamples.size() > kShow) {
        out << "    ... and " << (r.counterexamples.size() - kShow) << " more\n";
    }
    return out.str();
}

}  // namespace qkap
