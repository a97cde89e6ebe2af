#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "plo/generators.hpp"
#include "plo/oracle.hpp"

namespace plo {

inline constexpr const char* kBenchCsvHeader =
    "n,m,labels,eps,rho,mode,queries,max_stretch,mean_stretch,mean_portals,entries,ms";

struct BenchScenario {
    std::vector<uint32_t> sizes{64, 256, 1024};  // target vertex counts
    std::vector<Rational> eps{Rational{1, 4}};
    bool three_stretch = false;
    uint32_t labels = 5;
    RangeMode mode = RangeMode::BinarySearch;
    size_t queries = 0;  // per repetition; 0 = every (vertex, label) pair
    uint32_t reps = 1;
    uint64_t seed = 1;
    WeightRange weights{1, 100};
    double density = 1.0;
};

struct BenchRecord {
    size_t n = 0;
    size_t m = 0;
    uint32_t labels = 0;
    std::string eps;
    uint32_t rho = 0;
    std::string mode;
    size_t queries = 0;
    Dist worst_d = 1;
    Dist worst_delta = 1;
    double mean_stretch = 0.0;
    double mean_portals = 0.0;
    size_t entries = 0;  // vertex portal entries
    double ms = 0.0;     // build plus query wall time

    // not part of the CSV
    size_t label_entries = 0;
    uint32_t depth = 0;
    uint32_t max_portals = 0;
    uint64_t work_bound = 0;
    size_t stretch_violations = 0;
    size_t work_violations = 0;

    std::string max_stretch() const;
};

// One record per (size, eps) pair, aggregated over repetitions.
std::vector<BenchRecord> run_bench(const BenchScenario& scenario);

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace plo
