#include "plo/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "plo/error.hpp"

namespace plo {

std::string VerifyReport::max_stretch() const {
    Dist g = std::gcd(worst_d, worst_delta);
    if (g == 0) g = 1;
    return std::to_string(worst_d / g) + "/" + std::to_string(worst_delta / g);
}

bool within_stretch(const OracleConfig& cfg, Dist d, Dist delta) {
    if (d < delta) return false;
    return cfg.effective_eps().stretch_leq(d, delta);
}

uint32_t depth_bound(size_t n) {
    // smallest k with (3/2)^k >= n, i.e. 3^k >= n * 2^k
    uint32_t k = 0;
    Wide pow3 = 1, pow2 = 1;
    while (pow3 < Wide(n) * pow2) {
        pow3 *= 3;
        pow2 *= 2;
        ++k;
    }
    return k + 1;
}

uint64_t query_work_bound(size_t n, const OracleConfig& cfg) {
    uint64_t per_path = cfg.three_stretch ? 1 : portal_bound_ceil(cfg.eps);
    return 2 * uint64_t(depth_bound(n)) * per_path;
}

VerifyReport verify_oracle(const Oracle& oracle, const VerifyOptions& options) {
    const PlanarGraph& g = oracle.graph();
    std::vector<std::pair<VertexId, Label>> pairs;
    for (VertexId u = 0; u < g.n(); ++u) {
        for (Label l = 0; l < g.num_labels; ++l) {
            if (oracle.label_count(l) > 0) pairs.emplace_back(u, l);
        }
    }
    if (options.sample && options.sample < pairs.size()) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(options.sample);
        std::sort(pairs.begin(), pairs.end());
    }

    VerifyReport report;
    double stretch_sum = 0.0;
    double portal_sum = 0.0;
    VertexId current = kNoVertex;
    DistanceMap dist;
    std::vector<LabelDistance> exact;
    for (auto [u, label] : pairs) {
        if (u != current) {
            current = u;
            dist = distances_from(g, u);
            exact = exact_label_distances(g, dist);
        }
        const Dist delta = exact[label].distance;
        QueryResult r = oracle.query(u, label);
        ++report.queries;
        portal_sum += r.stats.portals_examined;
        report.max_portals = std::max(report.max_portals, r.stats.portals_examined);

        auto fail = [&](const std::string& why) {
            report.violation = Violation{u, label, r.d, delta, why};
        };
        if (!within_stretch(oracle.config(), r.d, delta)) {
            fail("stretch out of bounds");
        } else if (r.witness >= g.n() || g.labels[r.witness] != label) {
            fail("witness does not carry the label");
        } else if (dist[r.witness] > r.d) {
            fail("witness farther than the reported distance");
        } else if (options.cross_check_modes) {
            RangeMode other = oracle.config().range_mode == RangeMode::BinarySearch
                                  ? RangeMode::Bitvector
                                  : RangeMode::BinarySearch;
            QueryResult alt = oracle.query(u, label, other);
            if (alt.d != r.d || alt.witness != r.witness) fail("range modes disagree");
        }
        if (report.violation) return report;

        if (delta == 0) {
            stretch_sum += 1.0;
        } else {
            stretch_sum += double(r.d) / double(delta);
            if (compare_fractions(r.d, delta, report.worst_d, report.worst_delta) > 0) {
                report.worst_d = r.d;
                report.worst_delta = delta;
            }
        }
    }
    if (report.queries) {
        report.mean_stretch = stretch_sum / double(report.queries);
        report.mean_portals = portal_sum / double(report.queries);
    }
    if (report.worst_d == 0) report.worst_d = report.worst_delta = 1;
    return report;
}

}  // namespace plo
