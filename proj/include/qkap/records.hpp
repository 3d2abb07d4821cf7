#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkap/checker.hpp"
#include "qkap/intpoly.hpp"

namespace qkap {

// Flat view of one polynomial for serialization. Coefficients travel as
// decimal strings: JSON consumers routinely corrupt integers past 2^53.
struct OutputRecord {
    std::string family;
    std::map<std::string, int> params;
    long degree = -1;  // -1 stands in for the zero polynomial's missing degree
    std::vector<std::string> coeffs;
    bool symmetric = false;
    bool unimodal = false;
};

[[nodiscard]] OutputRecord make_record(std::string family, std::map<std::string, int> params,
                                       const IntPoly& p);

// JSON renderings are stable: parsing the output and re-rendering is
// byte-identical (fixed key order, 2-space indent, no floats).
[[nodiscard]] std::string to_json(const OutputRecord& r);
[[nodiscard]] std::string to_csv(const OutputRecord& r);
[[nodiscard]] std::string to_human(const OutputRecord& r);

[[nodiscard]] std::string to_json(const CheckReport& r);
[[nodiscard]] std::string to_csv(const CheckReport& r);
[[nodiscard]] std::string to_human(const CheckReport& r);

// One table / one array for several reports (check all).
[[nodiscard]] std::string to_csv(const std::vector<CheckReport>& reports);
[[nodiscard]] std::string to_json(const std::vector<CheckReport>& reports);

}  // namespace qkap
