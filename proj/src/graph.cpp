#include "plo/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "plo/error.hpp"

namespace plo {

namespace {

uint64_t pair_key(VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return (uint64_t(a) << 32) | b;
}

// rot_pos[d] = index of edge(d) in rotation[tail(d)]
std::vector<uint32_t> rotation_positions(const PlanarGraph& g) {
    std::vector<uint32_t> pos(2 * g.m(), 0);
    for (VertexId v = 0; v < g.n(); ++v) {
        const auto& rot = g.rotation[v];
        for (uint32_t i = 0; i < rot.size(); ++i) {
            pos[dart_from(g, rot[i], v)] = i;
        }
    }
    return pos;
}

void check_rotation(const PlanarGraph& g) {
    std::vector<uint8_t> seen(2 * g.m(), 0);
    for (VertexId v = 0; v < g.n(); ++v) {
        for (EdgeId e : g.rotation[v]) {
            if (e >= g.m()) {
                throw Error(ErrorCode::EmbeddingInconsistent,
                            "rotation of vertex " + std::to_string(v) + " names unknown edge " +
                                std::to_string(e));
            }
            const Edge& edge = g.edges[e];
            if (edge.u != v && edge.v != v) {
                throw Error(ErrorCode::EmbeddingInconsistent,
                            "rotation of vertex " + std::to_string(v) + " names non-incident edge " +
                                std::to_string(e));
            }
            uint32_t d = dart_from(g, e, v);
            if (seen[d]++) {
                throw Error(ErrorCode::EmbeddingInconsistent,
                            "edge " + std::to_string(e) + " repeated in rotation of vertex " +
                                std::to_string(v));
            }
        }
    }
    for (uint32_t d = 0; d < seen.size(); ++d) {
        if (!seen[d]) {
            throw Error(ErrorCode::EmbeddingInconsistent,
                        "edge " + std::to_string(d >> 1) + " missing from rotation of vertex " +
                            std::to_string(dart_tail(g, d)));
        }
    }
}

void check_connected(const PlanarGraph& g) {
    if (g.n() == 0) {
        throw Error(ErrorCode::Disconnected, "graph has no vertices");
    }
    std::vector<uint8_t> seen(g.n(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        for (EdgeId e : g.rotation[x]) {
            if (g.edges[e].artificial) continue;
            VertexId y = g.edges[e].other(x);
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != g.n()) {
        throw Error(ErrorCode::Disconnected, "only " + std::to_string(reached) + " of " +
                                                 std::to_string(g.n()) +
                                                 " vertices reachable over real edges");
    }
}

}  // namespace

size_t PlanarGraph::artificial_count() const {
    return size_t(std::count_if(edges.begin(), edges.end(),
                                [](const Edge& e) { return e.artificial; }));
}

FaceStructure compute_faces(const PlanarGraph& g) {
    FaceStructure fs;
    const uint32_t darts = uint32_t(2 * g.m());
    fs.dart_face.assign(darts, UINT32_MAX);
    auto pos = rotation_positions(g);
    for (uint32_t start = 0; start < darts; ++start) {
        if (fs.dart_face[start] != UINT32_MAX) continue;
        uint32_t face = uint32_t(fs.faces.size());
        fs.faces.emplace_back();
        uint32_t d = start;
        while (fs.dart_face[d] == UINT32_MAX) {
            fs.dart_face[d] = face;
            fs.faces.back().push_back(d);
            VertexId y = dart_head(g, d);
            const auto& rot = g.rotation[y];
            uint32_t i = pos[d ^ 1u];
            EdgeId next = rot[(i + 1) % rot.size()];
            d = dart_from(g, next, y);
        }
        if (d != start) {
            throw Error(ErrorCode::EmbeddingInconsistent, "face walk does not close");
        }
    }
    return fs;
}

size_t validate_faces(const PlanarGraph& g) {
    // A lone vertex bounds a single face with no darts.
    size_t f = g.m() == 0 ? 1 : compute_faces(g).count();
    long long euler = (long long)g.n() - (long long)g.m() + (long long)f;
    if (euler != 2) {
        throw Error(ErrorCode::EulerViolation,
                    "n - m + f = " + std::to_string(euler) + " (n=" + std::to_string(g.n()) +
                        ", m=" + std::to_string(g.m()) + ", f=" + std::to_string(f) + ")");
    }
    return f;
}

void validate(const PlanarGraph& g) {
    if (g.rotation.size() != g.n()) {
        throw Error(ErrorCode::EmbeddingInconsistent, "rotation table size differs from n");
    }
    for (VertexId v = 0; v < g.n(); ++v) {
        if (g.labels[v] >= g.num_labels) {
            throw Error(ErrorCode::MalformedLine, "label of vertex " + std::to_string(v) +
                                                      " out of range");
        }
    }
    std::unordered_set<uint64_t> real_pairs;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& edge = g.edges[e];
        if (edge.u >= g.n() || edge.v >= g.n()) {
            throw Error(ErrorCode::MalformedLine, "edge " + std::to_string(e) +
                                                      " has an out-of-range endpoint");
        }
        if (edge.u == edge.v) {
            throw Error(ErrorCode::MalformedLine, "edge " + std::to_string(e) + " is a self-loop");
        }
        if (edge.artificial) {
            if (edge.length != kInfinity) {
                throw Error(ErrorCode::MalformedLine,
                            "artificial edge " + std::to_string(e) + " has finite length");
            }
        } else {
            if (edge.length > kMaxEdgeLength) {
                throw Error(ErrorCode::MalformedLine,
                            "edge " + std::to_string(e) + " length exceeds 2^31");
            }
            if (!real_pairs.insert(pair_key(edge.u, edge.v)).second) {
                throw Error(ErrorCode::DuplicateEdge,
                            "edge " + std::to_string(e) + " duplicates " + std::to_string(edge.u) +
                                "-" + std::to_string(edge.v));
            }
        }
    }
    check_rotation(g);
    check_connected(g);
    if (g.n() >= 3 && g.m() > 3 * g.n() - 6) {
        throw Error(ErrorCode::EulerViolation, "more than 3n - 6 edges");
    }
    validate_faces(g);
}

PlanarGraph triangulate(const PlanarGraph& g, size_t* added) {
    PlanarGraph out = g;
    size_t count = 0;
    if (g.n() < 3) {
        if (added) *added = 0;
        return out;
    }
    std::unordered_set<uint64_t> adjacent;
    for (const Edge& e : g.edges) adjacent.insert(pair_key(e.u, e.v));

    auto insert_after = [&](VertexId x, EdgeId after, EdgeId fresh) {
        auto& rot = out.rotation[x];
        auto it = std::find(rot.begin(), rot.end(), after);
        rot.insert(it + 1, fresh);
    };

    FaceStructure fs = compute_faces(g);
    for (const auto& face : fs.faces) {
        // walk[i] is the tail of edges_[i]; edges_[i] runs walk[i] -> walk[i+1]
        std::vector<VertexId> walk;
        std::vector<EdgeId> edge_ids;
        for (uint32_t d : face) {
            walk.push_back(dart_tail(g, d));
            edge_ids.push_back(d >> 1);
        }
        while (walk.size() > 3) {
            const size_t k = walk.size();
            size_t ear = k;
            for (int pass = 0; pass < 2 && ear == k; ++pass) {
                for (size_t i = 0; i < k; ++i) {
                    VertexId a = walk[i];
                    VertexId b = walk[(i + 2) % k];
                    if (a == b) continue;
                    if (pass == 0 && adjacent.count(pair_key(a, b))) continue;
                    ear = i;
                    break;
                }
            }
            if (ear == k) {
                throw Error(ErrorCode::EmbeddingInconsistent, "face admits no chord");
            }
            std::rotate(walk.begin(), walk.begin() + long(ear), walk.end());
            std::rotate(edge_ids.begin(), edge_ids.begin() + long(ear), edge_ids.end());
            VertexId a = walk[0];
            VertexId b = walk[2];
            EdgeId chord = out.add_edge(a, b, kInfinity, true);
            adjacent.insert(pair_key(a, b));
            insert_after(a, edge_ids[k - 1], chord);
            insert_after(b, edge_ids[1], chord);
            walk.erase(walk.begin() + 1);
            edge_ids.erase(edge_ids.begin(), edge_ids.begin() + 2);
            edge_ids.insert(edge_ids.begin(), chord);
            ++count;
        }
    }
    if (added) *added = count;
    return out;
}

namespace {

struct LineReader {
    std::istream& in;
    size_t line_no = 0;

    // Next non-empty line with comments stripped, split into tokens.
    bool next(std::vector<std::string_view>& tokens, std::string& storage) {
        while (std::getline(in, storage)) {
            ++line_no;
            auto hash = storage.find('#');
            if (hash != std::string::npos) storage.resize(hash);
            tokens.clear();
            size_t i = 0;
            while (i < storage.size()) {
                while (i < storage.size() && std::isspace((unsigned char)storage[i])) ++i;
                size_t j = i;
                while (j < storage.size() && !std::isspace((unsigned char)storage[j])) ++j;
                if (j > i) tokens.emplace_back(storage.data() + i, j - i);
                i = j;
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
    }

    uint64_t number(std::string_view tok) const {
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            fail("expected a non-negative integer, got '" + std::string(tok) + "'");
        }
        return value;
    }
};

}  // namespace

PlanarGraph parse_graph(std::istream& in) {
    LineReader reader{in};
    std::vector<std::string_view> tok;
    std::string line;

    if (!reader.next(tok, line) || tok.size() != 2 || tok[0] != "PLGRAPH" || tok[1] != "1") {
        reader.fail("expected header 'PLGRAPH 1'");
    }
    if (!reader.next(tok, line) || tok.size() != 3) reader.fail("expected '<n> <m> <L>'");
    const uint64_t n = reader.number(tok[0]);
    const uint64_t m = reader.number(tok[1]);
    const uint64_t num_labels = reader.number(tok[2]);
    if (n == 0 || n > UINT32_MAX / 4 || m > UINT32_MAX / 4 || num_labels > UINT32_MAX / 2) {
        reader.fail("counts out of range");
    }

    PlanarGraph g(n, uint32_t(num_labels));
    g.edges.resize(m);
    std::vector<uint8_t> vertex_seen(n, 0), edge_seen(m, 0), rotation_seen(n, 0);

    for (uint64_t i = 0; i < n; ++i) {
        if (!reader.next(tok, line) || tok.size() != 3 || tok[0] != "V") {
            reader.fail("expected 'V <vertex-id> <label-id>'");
        }
        uint64_t v = reader.number(tok[1]);
        uint64_t label = reader.number(tok[2]);
        if (v >= n || vertex_seen[v]++) reader.fail("bad or repeated vertex id");
        if (label >= num_labels) reader.fail("label id out of range");
        g.labels[v] = Label(label);
    }
    for (uint64_t i = 0; i < m; ++i) {
        if (!reader.next(tok, line) || tok.size() != 5 || tok[0] != "E") {
            reader.fail("expected 'E <edge-id> <u> <v> <length|INF>'");
        }
        uint64_t e = reader.number(tok[1]);
        if (e >= m || edge_seen[e]++) reader.fail("bad or repeated edge id");
        uint64_t u = reader.number(tok[2]);
        uint64_t v = reader.number(tok[3]);
        if (u >= n || v >= n) reader.fail("edge endpoint out of range");
        Edge& edge = g.edges[e];
        edge.u = VertexId(u);
        edge.v = VertexId(v);
        if (tok[4] == "INF") {
            edge.length = kInfinity;
            edge.artificial = true;
        } else {
            edge.length = reader.number(tok[4]);
            if (edge.length > kMaxEdgeLength) reader.fail("edge length exceeds 2^31");
        }
    }
    for (uint64_t i = 0; i < n; ++i) {
        if (!reader.next(tok, line) || tok.size() < 2 || tok[0] != "R") {
            reader.fail("expected 'R <vertex-id> <edge-id>*'");
        }
        uint64_t v = reader.number(tok[1]);
        if (v >= n || rotation_seen[v]++) reader.fail("bad or repeated rotation vertex");
        for (size_t t = 2; t < tok.size(); ++t) {
            uint64_t e = reader.number(tok[t]);
            if (e >= m) reader.fail("rotation names unknown edge");
            g.rotation[v].push_back(EdgeId(e));
        }
    }
    if (reader.next(tok, line)) reader.fail("trailing content");

    validate(g);
    return g;
}

PlanarGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

PlanarGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    return parse_graph(in);
}

void serialize_graph(const PlanarGraph& g, std::ostream& out) {
    out << "PLGRAPH 1\n" << g.n() << ' ' << g.m() << ' ' << g.num_labels << '\n';
    for (VertexId v = 0; v < g.n(); ++v) out << "V " << v << ' ' << g.labels[v] << '\n';
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& edge = g.edges[e];
        out << "E " << e << ' ' << edge.u << ' ' << edge.v << ' ';
        if (edge.artificial) {
            out << "INF";
        } else {
            out << edge.length;
        }
        out << '\n';
    }
    for (VertexId v = 0; v < g.n(); ++v) {
        out << "R " << v;
        for (EdgeId e : g.rotation[v]) out << ' ' << e;
        out << '\n';
    }
}

std::string serialize_graph(const PlanarGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

void save_graph(const PlanarGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    serialize_graph(g, out);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path);
}

}  // namespace plo
