// Binary oracle file, version 1. See docs/oracle_format.md for the layout.

#include <boost/crc.hpp>

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "plo/error.hpp"
#include "plo/oracle.hpp"

namespace plo {

namespace {

constexpr char kMagic[8] = {'P', 'L', 'O', 'R', 'A', 'C', 'L', 'E'};
constexpr uint16_t kMajor = 1;
constexpr uint16_t kMinor = 0;

enum Tag : uint32_t {
    kConfig = 1,
    kGraph = 2,
    kTree = 3,
    kDecomposition = 4,
    kPortals = 5,
    kLabelIndex = 6,
};

class Writer {
public:
    void u8(uint8_t v) { buf_.push_back(char(v)); }
    void u16(uint16_t v) { le(v, 2); }
    void u32(uint32_t v) { le(v, 4); }
    void u64(uint64_t v) { le(v, 8); }
    void i64(int64_t v) { le(uint64_t(v), 8); }
    void bytes(const char* p, size_t n) { buf_.append(p, n); }
    void ids(const std::vector<uint32_t>& v) {
        u32(uint32_t(v.size()));
        for (uint32_t x : v) u32(x);
    }
    std::string& str() { return buf_; }

private:
    void le(uint64_t v, int n) {
        for (int i = 0; i < n; ++i) buf_.push_back(char((v >> (8 * i)) & 0xff));
    }
    std::string buf_;
};

class Reader {
public:
    Reader(const char* p, size_t n) : p_(p), end_(p + n) {}

    uint8_t u8() { return uint8_t(le(1)); }
    uint16_t u16() { return uint16_t(le(2)); }
    uint32_t u32() { return uint32_t(le(4)); }
    uint64_t u64() { return le(8); }
    int64_t i64() { return int64_t(le(8)); }
    // Element count, sanity-checked against the bytes left.
    uint32_t count(size_t min_element_bytes) {
        uint32_t n = u32();
        if (min_element_bytes && size_t(end_ - p_) / min_element_bytes < n) fail("count overruns section");
        return n;
    }
    std::vector<uint32_t> ids() {
        std::vector<uint32_t> v(count(4));
        for (auto& x : v) x = u32();
        return v;
    }
    bool done() const { return p_ == end_; }
    size_t left() const { return size_t(end_ - p_); }
    const char* cursor() const { return p_; }
    void skip(size_t n) {
        if (left() < n) fail("truncated");
        p_ += n;
    }

    [[noreturn]] static void fail(const std::string& why) {
        throw Error(ErrorCode::FormatError, "oracle file: " + why);
    }

private:
    uint64_t le(int n) {
        if (end_ - p_ < n) fail("truncated");
        uint64_t v = 0;
        for (int i = 0; i < n; ++i) v |= uint64_t(uint8_t(p_[i])) << (8 * i);
        p_ += n;
        return v;
    }
    const char* p_;
    const char* end_;
};

void put_graph(Writer& w, const PlanarGraph& g) {
    w.u32(uint32_t(g.n()));
    w.u32(uint32_t(g.m()));
    w.u32(g.num_labels);
    for (Label l : g.labels) w.u32(l);
    for (const Edge& e : g.edges) {
        w.u32(e.u);
        w.u32(e.v);
        w.u64(e.length);
        w.u8(e.artificial ? 1 : 0);
    }
    for (const auto& rot : g.rotation) w.ids(rot);
}

PlanarGraph get_graph(Reader& r) {
    uint32_t n = r.count(4);
    uint32_t m = r.count(0);
    uint32_t labels = r.u32();
    PlanarGraph g(n, labels);
    for (auto& l : g.labels) l = r.u32();
    if (r.left() / 17 < m) Reader::fail("edge count overruns section");
    g.edges.resize(m);
    for (auto& e : g.edges) {
        e.u = r.u32();
        e.v = r.u32();
        e.length = r.u64();
        e.artificial = r.u8() != 0;
    }
    for (auto& rot : g.rotation) rot = r.ids();
    return g;
}

void put_path(Writer& w, const SeparatorPath& p) {
    w.u32(uint32_t(p.size()));
    for (size_t i = 0; i < p.size(); ++i) {
        w.u32(p.nodes[i]);
        w.u64(p.h[i]);
    }
}

SeparatorPath get_path(Reader& r) {
    SeparatorPath p;
    uint32_t n = r.count(12);
    for (uint32_t i = 0; i < n; ++i) {
        p.nodes.push_back(r.u32());
        p.h.push_back(r.u64());
    }
    return p;
}

void put_portals(Writer& w, const std::vector<Portal>& list) {
    w.u32(uint32_t(list.size()));
    for (const Portal& p : list) {
        w.u32(p.position);
        w.u32(p.z);
        w.u64(p.d);
        w.u64(p.h);
    }
}

std::vector<Portal> get_portals(Reader& r) {
    std::vector<Portal> list(r.count(24));
    for (Portal& p : list) {
        p.position = r.u32();
        p.z = r.u32();
        p.d = r.u64();
        p.h = r.u64();
    }
    return list;
}

void section(Writer& out, Tag tag, Writer& body) {
    out.u32(tag);
    out.u64(body.str().size());
    out.bytes(body.str().data(), body.str().size());
}

uint32_t crc32(const char* p, size_t n) {
    boost::crc_32_type crc;
    crc.process_bytes(p, n);
    return crc.checksum();
}

}  // namespace

std::string Oracle::to_bytes() const {
    Writer out;
    out.bytes(kMagic, sizeof kMagic);
    out.u16(kMajor);
    out.u16(kMinor);
    out.u32(6);

    {
        Writer w;
        w.i64(cfg_.eps.num);
        w.i64(cfg_.eps.den);
        w.u8(cfg_.three_stretch ? 1 : 0);
        w.u8(uint8_t(cfg_.range_mode));
        w.u32(cfg_.leaf_max);
        w.u8(cfg_.root_override ? 1 : 0);
        w.u32(cfg_.root_override.value_or(kNoVertex));
        w.u32(center_.root);
        w.u32(center_.radius);
        w.u64(center_.weighted_eccentricity);
        section(out, kConfig, w);
    }
    {
        Writer w;
        put_graph(w, graph_);
        put_graph(w, triangulated_);
        section(out, kGraph, w);
    }
    {
        Writer w;
        w.u32(spt_.root);
        w.u32(spt_.levels);
        w.u32(uint32_t(spt_.size()));
        for (size_t v = 0; v < spt_.size(); ++v) {
            w.u32(spt_.parent[v]);
            w.u32(spt_.parent_edge[v]);
            w.u64(spt_.h[v]);
            w.u32(spt_.level[v]);
        }
        section(out, kTree, w);
    }
    {
        Writer w;
        w.u32(rgd_.leaf_max);
        w.u32(rgd_.root);
        w.u32(uint32_t(rgd_.pieces.size()));
        for (const Piece& p : rgd_.pieces) {
            w.u32(p.id);
            w.u32(p.parent);
            w.u32(p.depth);
            w.ids(p.members);
            w.u8(p.separator ? 1 : 0);
            if (p.separator) {
                const Separator& s = *p.separator;
                w.u32(s.nontree_edge);
                w.u32(s.apex);
                put_path(w, s.paths[0]);
                put_path(w, s.paths[1]);
                w.ids(s.cycle_vertices);
            }
            w.ids(p.children);
            w.u32(uint32_t(p.leaf_table.size()));
            for (const LeafEntry& e : p.leaf_table) {
                w.u32(e.u);
                w.u32(e.label);
                w.u64(e.distance);
                w.u32(e.witness);
            }
        }
        w.ids(rgd_.deepest_piece);
        section(out, kDecomposition, w);
    }
    {
        Writer w;
        w.u32(uint32_t(portals_.per_vertex.size()));
        for (const auto& pieces : portals_.per_vertex) {
            w.u32(uint32_t(pieces.size()));
            for (const PiecePortals& pp : pieces) {
                w.u32(pp.piece);
                put_portals(w, pp.paths[0]);
                put_portals(w, pp.paths[1]);
            }
        }
        section(out, kPortals, w);
    }
    {
        Writer w;
        w.u32(uint32_t(index_.per_label.size()));
        for (const auto& table : index_.per_label) {
            std::vector<PieceId> pieces;
            for (const auto& [piece, ple] : table) pieces.push_back(piece);
            std::sort(pieces.begin(), pieces.end());
            w.u32(uint32_t(pieces.size()));
            for (PieceId piece : pieces) {
                w.u32(piece);
                for (const LabelPathIndex& lpi : table.at(piece).paths) {
                    w.u32(lpi.path_length());
                    w.u32(uint32_t(lpi.entries().size()));
                    for (const LabelEntry& e : lpi.entries()) {
                        w.u32(e.position);
                        w.u32(e.z);
                        w.u64(e.h);
                        w.u32(uint32_t(e.contributors.size()));
                        for (const Contributor& c : e.contributors) {
                            w.u64(c.d);
                            w.u32(c.v);
                        }
                    }
                }
            }
        }
        section(out, kLabelIndex, w);
    }
    out.u32(crc32(out.str().data(), out.str().size()));
    return std::move(out.str());
}

Oracle Oracle::from_bytes(const std::string& bytes) try {
    if (bytes.size() < sizeof kMagic + 8 + 4) Reader::fail("too short");
    if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) Reader::fail("bad magic");
    const size_t body = bytes.size() - 4;
    Reader trailer(bytes.data() + body, 4);
    if (trailer.u32() != crc32(bytes.data(), body)) Reader::fail("checksum mismatch");

    Reader r(bytes.data() + sizeof kMagic, body - sizeof kMagic);
    if (r.u16() != kMajor) Reader::fail("unsupported major version");
    r.u16();
    if (r.u32() != 6) Reader::fail("unexpected section count");

    auto open = [&](Tag tag) {
        if (r.u32() != tag) Reader::fail("section " + std::to_string(tag) + " out of order");
        uint64_t len = r.u64();
        if (len > r.left()) Reader::fail("section length overruns file");
        Reader s(r.cursor(), size_t(len));
        r.skip(size_t(len));
        return s;
    };
    auto close = [](const Reader& s) {
        if (!s.done()) Reader::fail("trailing bytes in section");
    };

    Oracle o;
    {
        Reader s = open(kConfig);
        o.cfg_.eps.num = s.i64();
        o.cfg_.eps.den = s.i64();
        o.cfg_.three_stretch = s.u8() != 0;
        uint8_t mode = s.u8();
        if (mode > 1) Reader::fail("bad range mode");
        o.cfg_.range_mode = RangeMode(mode);
        o.cfg_.leaf_max = s.u32();
        bool has_root = s.u8() != 0;
        uint32_t root = s.u32();
        if (has_root) o.cfg_.root_override = root;
        o.center_.root = s.u32();
        o.center_.radius = s.u32();
        o.center_.weighted_eccentricity = s.u64();
        close(s);
        try {
            o.cfg_.validate();
        } catch (const Error& e) {
            Reader::fail(std::string("bad config: ") + e.what());
        }
    }
    {
        Reader s = open(kGraph);
        o.graph_ = get_graph(s);
        o.triangulated_ = get_graph(s);
        close(s);
        validate(o.graph_);
        if (o.triangulated_.n() != o.graph_.n() || o.triangulated_.labels != o.graph_.labels) {
            Reader::fail("triangulated graph does not match the input graph");
        }
    }
    const size_t n = o.graph_.n();
    auto vertex = [n](uint32_t v) {
        if (v >= n) Reader::fail("vertex id out of range");
        return v;
    };
    {
        Reader s = open(kTree);
        o.spt_.root = vertex(s.u32());
        o.spt_.levels = s.u32();
        if (s.count(20) != n) Reader::fail("tree size differs from graph");
        o.spt_.parent.resize(n);
        o.spt_.parent_edge.resize(n);
        o.spt_.h.resize(n);
        o.spt_.level.resize(n);
        for (size_t v = 0; v < n; ++v) {
            o.spt_.parent[v] = s.u32();
            o.spt_.parent_edge[v] = s.u32();
            o.spt_.h[v] = s.u64();
            o.spt_.level[v] = s.u32();
        }
        close(s);
    }
    {
        Reader s = open(kDecomposition);
        o.rgd_.leaf_max = s.u32();
        o.rgd_.root = s.u32();
        uint32_t count = s.count(16);
        o.rgd_.pieces.resize(count);
        for (Piece& p : o.rgd_.pieces) {
            p.id = s.u32();
            p.parent = s.u32();
            p.depth = s.u32();
            p.members = s.ids();
            if (s.u8()) {
                Separator sep;
                sep.nontree_edge = s.u32();
                sep.apex = vertex(s.u32());
                sep.paths[0] = get_path(s);
                sep.paths[1] = get_path(s);
                sep.cycle_vertices = s.ids();
                p.separator = std::move(sep);
            }
            p.children = s.ids();
            p.leaf_table.resize(s.count(20));
            for (LeafEntry& e : p.leaf_table) {
                e.u = s.u32();
                e.label = s.u32();
                e.distance = s.u64();
                e.witness = s.u32();
            }
            for (PieceId c : p.children) {
                if (c >= count) Reader::fail("child piece out of range");
            }
        }
        o.rgd_.deepest_piece = s.ids();
        if (o.rgd_.deepest_piece.size() != n) Reader::fail("deepest-piece table size differs");
        for (PieceId p : o.rgd_.deepest_piece) {
            if (p >= count) Reader::fail("deepest piece out of range");
        }
        close(s);
    }
    {
        Reader s = open(kPortals);
        if (s.count(4) != n) Reader::fail("portal table size differs from graph");
        o.portals_.per_vertex.resize(n);
        for (auto& pieces : o.portals_.per_vertex) {
            pieces.resize(s.count(12));
            for (PiecePortals& pp : pieces) {
                pp.piece = s.u32();
                if (pp.piece >= o.rgd_.pieces.size() || o.rgd_.pieces[pp.piece].is_leaf()) {
                    Reader::fail("portal list names a piece without separator");
                }
                pp.paths[0] = get_portals(s);
                pp.paths[1] = get_portals(s);
            }
        }
        close(s);
    }
    {
        Reader s = open(kLabelIndex);
        o.index_.per_label.resize(s.count(4));
        if (o.index_.per_label.size() != o.graph_.num_labels) Reader::fail("label table count differs");
        for (auto& table : o.index_.per_label) {
            uint32_t pieces = s.count(4);
            for (uint32_t i = 0; i < pieces; ++i) {
                PieceId piece = s.u32();
                if (piece >= o.rgd_.pieces.size() || o.rgd_.pieces[piece].is_leaf()) {
                    Reader::fail("label index names a piece without separator");
                }
                PieceLabelEntry& ple = table[piece];
                for (LabelPathIndex& lpi : ple.paths) {
                    lpi = LabelPathIndex(s.u32());
                    uint32_t entries = s.count(20);
                    for (uint32_t k = 0; k < entries; ++k) {
                        Portal p;
                        p.position = s.u32();
                        p.z = s.u32();
                        p.h = s.u64();
                        uint32_t cs = s.count(12);
                        if (cs == 0) Reader::fail("label entry without contributors");
                        for (uint32_t c = 0; c < cs; ++c) {
                            p.d = s.u64();
                            lpi.add(p, vertex(s.u32()));
                        }
                    }
                    lpi.rebuild();
                }
            }
        }
        close(s);
    }
    if (!r.done()) Reader::fail("trailing bytes after sections");
    o.count_labels();
    return o;
} catch (const Error& e) {
    if (e.code() == ErrorCode::FormatError) throw;
    throw Error(ErrorCode::FormatError, std::string("inconsistent oracle file: ") + e.what());
}

void Oracle::save(std::ostream& out) const {
    std::string bytes = to_bytes();
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out) throw Error(ErrorCode::IoError, "oracle write failed");
}

void Oracle::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    save(out);
}

Oracle Oracle::load(std::istream& in) {
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return from_bytes(bytes);
}

Oracle Oracle::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return load(in);
}

}  // namespace plo
