#include <doctest.h>

#include <random>
#include <set>

#include "plo/decomposition.hpp"
#include "plo/error.hpp"
#include "plo/generators.hpp"
#include "plo/label_index.hpp"
#include "plo/rank_bitvector.hpp"
#include "plo/rmq.hpp"
#include "plo/shortest_paths.hpp"
#include "support.hpp"

using namespace plo;
using namespace plo::test;

namespace {

size_t scan_argmin(const std::vector<int64_t>& keys, size_t i, size_t j) {
    size_t best = i;
    for (size_t k = i + 1; k <= j; ++k)
        if (keys[k] < keys[best]) best = k;
    return best;
}

Portal portal_at(uint32_t position, Dist h, Dist d) { return Portal{position, VertexId(100 + position), d, h}; }

Split brute_split(const std::vector<LabelEntry>& entries, Dist h_u) {
    Split s;
    s.plus_begin = entries.size();
    for (size_t i = entries.size(); i-- > 0;)
        if (entries[i].h >= h_u) s.plus_begin = i;
    for (const LabelEntry& e : entries)
        if (e.h <= h_u) ++s.minus_end;
    return s;
}

struct Fixture {
    PlanarGraph g;
    Rgd rgd;
    VertexPortalTable tables;
    LabelIndex index;
};

Fixture make_fixture(uint32_t rows, uint32_t cols, uint32_t labels, uint64_t seed, Rational eps) {
    Fixture f;
    f.g = gen_grid(rows, cols, {1, 100}, labels, seed);
    PlanarGraph t = triangulate(f.g);
    f.rgd = build_rgd(t, sssp(f.g, find_center(f.g).root).tree, 1);
    f.tables = build_vertex_tables(f.g, f.rgd, eps);
    f.index = build_label_index(f.tables, f.g.labels, f.g.num_labels, f.rgd);
    return f;
}

}  // namespace

TEST_CASE("sparse table RMQ") {
    SUBCASE("single element") {
        SparseTableRMQ rmq({42});
        CHECK(rmq.query(0, 0) == 0);
    }
    SUBCASE("ties prefer the smaller index") {
        SparseTableRMQ rmq({5, 2, 2, 7});
        CHECK(rmq.query(0, 3) == 1);
        CHECK(rmq.query(2, 3) == 2);
        CHECK(rmq.query(3, 3) == 3);
    }
    SUBCASE("bad ranges") {
        SparseTableRMQ rmq({1, 2, 3});
        CHECK_THROWS_AS(rmq.query(2, 1), Error);
        CHECK_THROWS_AS(rmq.query(0, 3), Error);
        try {
            rmq.query(1, 0);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadRange);
        }
    }
    SUBCASE("random arrays against a linear scan") {
        std::mt19937_64 rng(9);
        for (int a = 0; a < 100; ++a) {
            size_t len = 1 + rng() % 70;
            std::vector<int64_t> keys(len);
            for (auto& k : keys) k = int64_t(rng() % 20) - 10;
            SparseTableRMQ rmq(keys);
            for (size_t i = 0; i < len; ++i)
                for (size_t j = i; j < len; ++j) REQUIRE(rmq.query(i, j) == scan_argmin(keys, i, j));
        }
    }
}

TEST_CASE("rank bitvector") {
    SUBCASE("examples") {
        RankBitvector ones(8);
        for (size_t i = 0; i < 8; ++i) ones.set(i);
        ones.finalize();
        CHECK(ones.rank(0) == 0);
        CHECK(ones.rank(5) == 5);
        CHECK(ones.rank(8) == 8);

        RankBitvector empty(0);
        empty.finalize();
        CHECK(empty.rank(0) == 0);
    }
    SUBCASE("out of range") {
        RankBitvector b(10);
        b.finalize();
        try {
            b.rank(11);
            FAIL("expected BadIndex");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadIndex);
        }
        CHECK_THROWS_AS(b.set(10), Error);
    }
    SUBCASE("random against naive counting") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 200; ++trial) {
            size_t len = rng() % 300;
            std::vector<uint8_t> bits(len);
            RankBitvector b(len);
            for (size_t i = 0; i < len; ++i) {
                bits[i] = (rng() % 3) == 0;
                if (bits[i]) b.set(i);
            }
            b.finalize();
            size_t count = 0;
            for (size_t i = 0; i <= len; ++i) {
                REQUIRE(b.rank(i) == count);
                if (i < len) {
                    CHECK(b.test(i) == bool(bits[i]));
                    count += bits[i];
                }
            }
        }
    }
}

TEST_CASE("locate_split example with a repeated h") {
    LabelPathIndex lpi(4);
    std::vector<Dist> h{2, 5, 5, 9};
    for (uint32_t i = 0; i < 4; ++i) lpi.add(portal_at(i, h[i], 10), 1);
    lpi.rebuild();
    for (RangeMode mode : {RangeMode::BinarySearch, RangeMode::Bitvector}) {
        for (uint32_t pos : {1u, 2u}) {
            Split s = lpi.locate_split(5, pos, mode);
            CHECK(s.plus_begin == 1);
            CHECK(s.minus_end == 3);
        }
        Split low = lpi.locate_split(2, 0, mode);
        CHECK(low.plus_begin == 0);
        CHECK(low.minus_end == 1);
    }
}

TEST_CASE("split modes agree on random paths") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        uint32_t len = 1 + uint32_t(rng() % 40);
        std::vector<Dist> path_h(len);
        Dist acc = 0;
        for (auto& x : path_h) {
            x = acc;
            acc += (rng() % 3 == 0) ? 0 : 1 + rng() % 5;  // zero-length steps happen
        }
        LabelPathIndex lpi(len);
        for (uint32_t i = 0; i < len; ++i)
            if (rng() % 2) lpi.add(portal_at(i, path_h[i], rng() % 50), VertexId(rng() % 9));
        lpi.rebuild();
        uint32_t pos_u = uint32_t(rng() % len);
        Split a = lpi.locate_split(path_h[pos_u], pos_u, RangeMode::BinarySearch);
        Split b = lpi.locate_split(path_h[pos_u], pos_u, RangeMode::Bitvector);
        Split expected = brute_split(lpi.entries(), path_h[pos_u]);
        REQUIRE(a == expected);
        REQUIRE(b == expected);
    }
}

TEST_CASE("label path index keeps the smaller contribution") {
    LabelPathIndex lpi(3);
    lpi.add(portal_at(1, 7, 5), 20);
    lpi.add(portal_at(1, 7, 3), 21);
    lpi.rebuild();
    REQUIRE(lpi.entries().size() == 1);
    CHECK(lpi.entries()[0].d_min == 3);
    CHECK(lpi.entries()[0].witness == 21);
    CHECK(lpi.entries()[0].contributors.size() == 2);

    CHECK(lpi.remove(portal_at(1, 7, 3), 21));
    CHECK_FALSE(lpi.remove(portal_at(1, 7, 3), 21));
    lpi.rebuild();
    CHECK(lpi.entries()[0].d_min == 5);
    CHECK(lpi.entries()[0].witness == 20);

    CHECK(lpi.remove(portal_at(1, 7, 5), 20));
    lpi.rebuild();
    CHECK(lpi.empty());

    CHECK_THROWS_AS(lpi.add(portal_at(3, 9, 1), 1), Error);
}

TEST_CASE("equal d contributions resolve to the smaller vertex") {
    LabelPathIndex lpi(2);
    lpi.add(portal_at(0, 0, 4), 9);
    lpi.add(portal_at(0, 0, 4), 3);
    lpi.rebuild();
    CHECK(lpi.entries()[0].witness == 3);
}

TEST_CASE("single labeled vertex: entries are its portals verbatim") {
    PlanarGraph g = gen_grid(5, 5, {1, 50}, 2, 3);
    std::fill(g.labels.begin(), g.labels.end(), 0);
    g.labels[7] = 1;
    PlanarGraph t = triangulate(g);
    Rgd rgd = build_rgd(t, sssp(g, find_center(g).root).tree, 1);
    VertexPortalTable tables = build_vertex_tables(g, rgd, Rational{1, 4});
    LabelIndex index = build_label_index(tables, g.labels, 2, rgd);
    size_t count = 0;
    for (const PiecePortals& pp : tables.per_vertex[7]) {
        const PieceLabelEntry* ple = index.find(1, pp.piece);
        REQUIRE(ple != nullptr);
        for (int side = 0; side < 2; ++side) {
            const auto& entries = ple->paths[side].entries();
            REQUIRE(entries.size() == pp.paths[side].size());
            for (size_t i = 0; i < entries.size(); ++i) {
                CHECK(entries[i].position == pp.paths[side][i].position);
                CHECK(entries[i].z == pp.paths[side][i].z);
                CHECK(entries[i].h == pp.paths[side][i].h);
                CHECK(entries[i].d_min == pp.paths[side][i].d);
                CHECK(entries[i].witness == 7);
            }
            count += entries.size();
        }
    }
    CHECK(index.per_label[1].size() == tables.per_vertex[7].size());
    CHECK(count > 0);
}

TEST_CASE("label index structure on a grid") {
    Fixture f = make_fixture(7, 7, 3, 12, Rational{1, 2});

    // membership: a piece appears for a label iff a vertex of that label has portals there
    std::vector<std::set<PieceId>> expected(f.g.num_labels);
    for (VertexId v = 0; v < f.g.n(); ++v)
        for (const PiecePortals& pp : f.tables.per_vertex[v]) expected[f.g.labels[v]].insert(pp.piece);
    for (Label l = 0; l < f.g.num_labels; ++l) {
        std::set<PieceId> got;
        for (const auto& [piece, ple] : f.index.per_label[l]) got.insert(piece);
        CHECK(got == expected[l]);
    }

    size_t contributors = 0;
    for (Label l = 0; l < f.g.num_labels; ++l) {
        for (const auto& [piece, ple] : f.index.per_label[l]) {
            const Separator& sep = *f.rgd.pieces[piece].separator;
            for (int side = 0; side < 2; ++side) {
                const LabelPathIndex& lpi = ple.paths[side];
                const auto& es = lpi.entries();
                CHECK(lpi.path_length() == sep.paths[side].size());
                for (size_t i = 0; i < es.size(); ++i) {
                    if (i) CHECK(es[i - 1].position < es[i].position);
                    CHECK(es[i].h == sep.paths[side].h[es[i].position]);
                    CHECK(es[i].z == sep.paths[side].nodes[es[i].position]);
                    CHECK(std::is_sorted(es[i].contributors.begin(), es[i].contributors.end()));
                    CHECK(es[i].d_min == es[i].contributors.front().d);
                    CHECK(es[i].witness == es[i].contributors.front().v);
                    CHECK(f.g.labels[es[i].witness] == l);
                    CHECK(lpi.omega().test(es[i].position));
                    CHECK(lpi.omega().rank(es[i].position) == i);
                    CHECK(lpi.rmq_plus().key(i) == int64_t(es[i].d_min + es[i].h));
                    CHECK(lpi.rmq_minus().key(i) == int64_t(es[i].d_min) - int64_t(es[i].h));
                    contributors += es[i].contributors.size();
                }
                CHECK(lpi.omega().rank(lpi.path_length()) == es.size());
            }
        }
    }
    // every vertex portal is one contributor, and dedup only shrinks entries
    CHECK(contributors == f.tables.total_portals());
    CHECK(f.index.contributors() == f.tables.total_portals());
    CHECK(f.index.entries() <= f.tables.total_portals());
}

TEST_CASE("empty label has no pieces") {
    PlanarGraph g = gen_grid(3, 3, {1, 5}, 1, 1);
    g.num_labels = 3;
    PlanarGraph t = triangulate(g);
    Rgd rgd = build_rgd(t, sssp(g, find_center(g).root).tree, 1);
    LabelIndex index = build_label_index(build_vertex_tables(g, rgd, Rational{1, 2}), g.labels, 3, rgd);
    CHECK(index.per_label.size() == 3);
    CHECK(index.per_label[1].empty());
    CHECK(index.find(1, rgd.root) == nullptr);
    CHECK(index.find(7, rgd.root) == nullptr);
}
