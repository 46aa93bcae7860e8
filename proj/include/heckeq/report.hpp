#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeq/types.hpp"

namespace heckeq {

// One grid point of a verification run.  params holds the point coordinates
// as already-formatted strings so emission is deterministic.
struct PointResult {
    std::map<std::string, std::string> params;
    cplx lhs{};
    cplx rhs{};
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    friend bool operator==(const PointResult&, const PointResult&) = default;
};

struct SuiteReport {
    std::string identity;
    std::string grid;
    std::vector<PointResult> points;
    std::map<std::string, std::string> settings;
    double residual = 0.0;   // max over points
    double tolerance = 0.0;  // max over point tolerances
    bool pass = false;
    double runtime_ms = 0.0;
    bool include_runtime = true;  // drop the wall-time field for byte-stable output

    friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// Fills the aggregate fields from the points.
void finalize_report(SuiteReport& r);

// Shortest-exact decimal form (17 significant digits); infinities become the
// overflow literal 1e999, which strtod-based readers map back to infinity.
std::string format_double(double v);

// Complex literal a+bi / a-bi / bi / a, matching the command-line syntax.
std::string format_complex(cplx v);

// Parses the complex literal form; locale independent. Returns false on junk.
bool parse_complex(const std::string& text, cplx& out);

std::string to_json(const SuiteReport& r);
std::string to_csv(const SuiteReport& r);

// Inverse of to_json; throws io_error on malformed input.
SuiteReport from_json(const std::string& text);

// format is "json" or "csv"; throws io_error on open/write failure.
void write_report_file(const SuiteReport& r, const std::string& format,
                       const std::string& path);

}  // namespace heckeq
