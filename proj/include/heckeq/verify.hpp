#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckeq/report.hpp"
#include "heckeq/types.hpp"

namespace heckeq {

// Command-line overrides for a verification suite. Every suite records the
// values it actually used in the report settings block, so a report can be
// replayed exactly.
struct SuiteOverrides {
    std::optional<cplx> s;
    std::optional<long> cutoff;
    std::optional<long> height;
    std::optional<long> n_max;
    std::optional<int> order;
    std::optional<double> tolerance;
    std::optional<double> c0;
};

// Suite names in their canonical order.
const std::vector<std::string>& suite_names();

// Runs one named suite with its built-in defaults, possibly overridden, and
// returns the finalized report with wall time filled in. Throws
// std::invalid_argument for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOverrides& ov = {});

}  // namespace heckeq
