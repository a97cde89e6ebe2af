#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "plo/oracle.hpp"

namespace plo {

struct VerifyOptions {
    size_t sample = 0;  // 0 sweeps every (vertex, label) pair
    uint64_t seed = 1;
    bool cross_check_modes = true;
};

struct Violation {
    VertexId u = kNoVertex;
    Label label = 0;
    Dist d = 0;
    Dist delta = 0;
    std::string reason;
};

/*
 * Comparison of an oracle against exact label distances. max_stretch is kept
 * as the exact fraction worst_d / worst_delta.
 */
struct VerifyReport {
    size_t queries = 0;
    Dist worst_d = 0;
    Dist worst_delta = 1;
    double mean_stretch = 0.0;
    double mean_portals = 0.0;
    uint32_t max_portals = 0;
    std::optional<Violation> violation;

    bool ok() const { return !violation.has_value(); }
    std::string max_stretch() const;
};

VerifyReport verify_oracle(const Oracle& oracle, const VerifyOptions& options = {});

// Exact stretch limit check: delta <= d <= (1 + eps) delta, or 3 delta in
// three-stretch mode.
bool within_stretch(const OracleConfig& cfg, Dist d, Dist delta);

// 2 * (ceil(log_{3/2} n) + 1) * ceil(4 / (eps - eps^2)); the three-stretch
// variant uses one portal per path.
uint64_t query_work_bound(size_t n, const OracleConfig& cfg);

// ceil(log_{3/2} n) + 1, computed exactly on integers.
uint32_t depth_bound(size_t n);

}  // namespace plo
