#include "plo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>

#include "plo/verify.hpp"

namespace plo {

std::string BenchRecord::max_stretch() const {
    Dist g = std::gcd(worst_d, worst_delta);
    return std::to_string(worst_d / g) + "/" + std::to_string(worst_delta / g);
}

namespace {

using Clock = std::chrono::steady_clock;

double millis(Clock::duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchScenario& scenario) {
    std::vector<BenchRecord> records;
    std::vector<Rational> eps_list = scenario.eps;
    if (scenario.three_stretch) eps_list = {Rational{2, 1}};

    for (uint32_t size : scenario.sizes) {
        for (const Rational& eps : eps_list) {
            OracleConfig cfg;
            cfg.three_stretch = scenario.three_stretch;
            if (!scenario.three_stretch) cfg.eps = eps;
            cfg.range_mode = scenario.mode;

            BenchRecord rec;
            rec.labels = scenario.labels;
            rec.eps = scenario.three_stretch ? "3-stretch" : eps.str();
            rec.mode = scenario.mode == RangeMode::Bitvector ? "bitvector" : "binary";
            double stretch_sum = 0.0, portal_sum = 0.0;
            size_t entries_sum = 0, label_entries_sum = 0;

            for (uint32_t rep = 0; rep < std::max(scenario.reps, 1u); ++rep) {
                const uint64_t seed = scenario.seed + rep;
                PlanarGraph g = gen_planar(size, scenario.density, scenario.weights,
                                           scenario.labels, seed);
                auto t0 = Clock::now();
                Oracle oracle = Oracle::build(g, cfg);
                rec.ms += millis(Clock::now() - t0);

                rec.n = g.n();
                rec.m = g.m();
                rec.rho = oracle.center().radius;
                rec.depth = std::max(rec.depth, oracle.rgd().depth());
                rec.work_bound = query_work_bound(g.n(), cfg);
                SpaceReport space = oracle.stats();
                entries_sum += space.vertex_portals;
                label_entries_sum += space.label_entries;

                std::vector<std::pair<VertexId, Label>> pairs;
                for (VertexId u = 0; u < g.n(); ++u) {
                    for (Label l = 0; l < g.num_labels; ++l) {
                        if (oracle.label_count(l)) pairs.emplace_back(u, l);
                    }
                }
                if (scenario.queries && scenario.queries < pairs.size()) {
                    std::mt19937_64 rng(seed);
                    std::shuffle(pairs.begin(), pairs.end(), rng);
                    pairs.resize(scenario.queries);
                    std::sort(pairs.begin(), pairs.end());
                }

                std::vector<QueryResult> answers;
                answers.reserve(pairs.size());
                t0 = Clock::now();
                for (auto [u, l] : pairs) answers.push_back(oracle.query(u, l));
                rec.ms += millis(Clock::now() - t0);

                VertexId current = kNoVertex;
                std::vector<LabelDistance> exact;
                for (size_t i = 0; i < pairs.size(); ++i) {
                    auto [u, l] = pairs[i];
                    const QueryResult& r = answers[i];
                    if (u != current) {
                        current = u;
                        exact = exact_label_distances(g, distances_from(g, u));
                    }
                    Dist delta = exact[l].distance;
                    ++rec.queries;
                    portal_sum += r.stats.portals_examined;
                    rec.max_portals = std::max(rec.max_portals, r.stats.portals_examined);
                    if (r.stats.portals_examined > rec.work_bound) ++rec.work_violations;
                    if (!within_stretch(cfg, r.d, delta)) ++rec.stretch_violations;
                    if (delta == 0) {
                        stretch_sum += 1.0;
                        continue;
                    }
                    stretch_sum += double(r.d) / double(delta);
                    if (compare_fractions(r.d, delta, rec.worst_d, rec.worst_delta) > 0) {
                        rec.worst_d = r.d;
                        rec.worst_delta = delta;
                    }
                }
            }
            const uint32_t reps = std::max(scenario.reps, 1u);
            rec.entries = entries_sum / reps;
            rec.label_entries = label_entries_sum / reps;
            rec.ms /= reps;
            if (rec.queries) {
                rec.mean_stretch = stretch_sum / double(rec.queries);
                rec.mean_portals = portal_sum / double(rec.queries);
            }
            records.push_back(rec);
        }
    }
    return records;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << kBenchCsvHeader << '\n';
    for (const BenchRecord& r : records) {
        out << r.n << ',' << r.m << ',' << r.labels << ',' << r.eps << ',' << r.rho << ','
            << r.mode << ',' << r.queries << ',' << r.max_stretch() << ',' << std::fixed
            << std::setprecision(6) << r.mean_stretch << ',' << r.mean_portals << ','
            << r.entries << ',' << std::setprecision(3) << r.ms << '\n';
        out.unsetf(std::ios::fixed);
    }
}

}  // namespace plo
