#include "plo/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "plo/error.hpp"

namespace plo {

std::optional<uint32_t> SeparatorPath::position(VertexId v) const {
    for (uint32_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == v) return i;
    }
    return std::nullopt;
}

bool Separator::on_cycle(VertexId v) const {
    return std::binary_search(cycle_vertices.begin(), cycle_vertices.end(), v);
}

const LeafEntry* Piece::leaf_lookup(VertexId u, Label label) const {
    auto it = std::lower_bound(leaf_table.begin(), leaf_table.end(), std::pair{u, label},
                               [](const LeafEntry& e, const std::pair<VertexId, Label>& key) {
                                   return std::pair{e.u, e.label} < key;
                               });
    if (it == leaf_table.end() || it->u != u || it->label != label) return nullptr;
    return &*it;
}

uint32_t Rgd::depth() const {
    uint32_t d = 0;
    for (const Piece& p : pieces) d = std::max(d, p.depth);
    return d;
}

std::vector<PieceId> Rgd::ancestors(PieceId piece) const {
    std::vector<PieceId> chain;
    for (PieceId p = piece; p != kNoPiece; p = pieces[p].parent) chain.push_back(p);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

PieceId Rgd::lca(PieceId p, PieceId q) const {
    while (pieces[p].depth > pieces[q].depth) p = pieces[p].parent;
    while (pieces[q].depth > pieces[p].depth) q = pieces[q].parent;
    while (p != q) {
        p = pieces[p].parent;
        q = pieces[q].parent;
    }
    return p;
}

namespace {

SeparatorPath tree_path(const Spt& spt, VertexId apex, VertexId end) {
    SeparatorPath path;
    for (VertexId x = end; x != apex; x = spt.parent[x]) path.nodes.push_back(x);
    path.nodes.push_back(apex);
    std::reverse(path.nodes.begin(), path.nodes.end());
    for (VertexId x : path.nodes) path.h.push_back(spt.h[x]);
    return path;
}

Separator root_separator(const Spt& spt) {
    Separator sep;
    sep.apex = spt.root;
    SeparatorPath path;
    path.nodes = {spt.root};
    path.h = {0};
    sep.paths = {path, path};
    sep.cycle_vertices = {spt.root};
    return sep;
}

}  // namespace

Separator fundamental_cycle(const PlanarGraph& g, const Spt& spt, EdgeId e) {
    if (e >= g.m()) throw Error(ErrorCode::BadIndex, "edge id out of range");
    const Edge& edge = g.edges[e];
    if (spt.parent_edge[edge.u] == e || spt.parent_edge[edge.v] == e) {
        throw Error(ErrorCode::EdgeInTree, "edge " + std::to_string(e) + " is a tree edge");
    }
    Separator sep;
    sep.nontree_edge = e;
    sep.apex = spt.lca(edge.u, edge.v);
    sep.paths[0] = tree_path(spt, sep.apex, edge.u);
    sep.paths[1] = tree_path(spt, sep.apex, edge.v);
    for (const auto& path : sep.paths) {
        sep.cycle_vertices.insert(sep.cycle_vertices.end(), path.nodes.begin(), path.nodes.end());
    }
    std::sort(sep.cycle_vertices.begin(), sep.cycle_vertices.end());
    sep.cycle_vertices.erase(std::unique(sep.cycle_vertices.begin(), sep.cycle_vertices.end()),
                             sep.cycle_vertices.end());
    return sep;
}

std::vector<Side> classify_sides(const PlanarGraph& g, const FaceStructure& faces, const Spt& spt,
                                 const Separator& sep) {
    std::vector<Side> side(g.n(), Side::Exterior);
    for (VertexId v : sep.cycle_vertices) side[v] = Side::OnCycle;
    if (sep.nontree_edge == kNoEdge) return side;

    std::vector<uint8_t> cycle_edge(g.m(), 0);
    cycle_edge[sep.nontree_edge] = 1;
    for (const auto& path : sep.paths) {
        for (size_t i = 1; i < path.nodes.size(); ++i) cycle_edge[spt.parent_edge[path.nodes[i]]] = 1;
    }

    constexpr int8_t kUnset = -1;
    std::vector<int8_t> color(faces.count(), kUnset);
    std::deque<uint32_t> queue;
    auto seed = [&](uint32_t face, Side s) {
        if (color[face] != kUnset && color[face] != int8_t(s)) {
            throw Error(ErrorCode::InconsistentEmbedding, "separator edge borders a single face");
        }
        color[face] = int8_t(s);
        queue.push_back(face);
    };
    seed(faces.dart_face[2 * sep.nontree_edge], Side::Interior);
    seed(faces.dart_face[2 * sep.nontree_edge + 1], Side::Exterior);
    while (!queue.empty()) {
        uint32_t f = queue.front();
        queue.pop_front();
        for (uint32_t d : faces.faces[f]) {
            if (cycle_edge[d >> 1]) continue;
            uint32_t across = faces.dart_face[d ^ 1u];
            if (color[across] == kUnset) {
                color[across] = color[f];
                queue.push_back(across);
            } else if (color[across] != color[f]) {
                throw Error(ErrorCode::InconsistentEmbedding,
                            "faces on both sides of the cycle are connected");
            }
        }
    }

    for (VertexId x = 0; x < g.n(); ++x) {
        if (side[x] == Side::OnCycle) continue;
        int8_t seen = kUnset;
        for (EdgeId e : g.rotation[x]) {
            int8_t c = color[faces.dart_face[dart_from(g, e, x)]];
            if (c == kUnset || (seen != kUnset && seen != c)) {
                throw Error(ErrorCode::InconsistentEmbedding,
                            "vertex " + std::to_string(x) + " touches both sides of the cycle");
            }
            seen = c;
        }
        if (seen != kUnset) side[x] = Side(seen);
    }
    return side;
}

std::vector<Side> classify_sides(const PlanarGraph& g, const Spt& spt, const Separator& sep) {
    return classify_sides(g, compute_faces(g), spt, sep);
}

SeparatorFinder::SeparatorFinder(const PlanarGraph& g, const Spt& spt)
    : g_(g), spt_(spt), faces_(compute_faces(g)) {
    std::vector<uint8_t> tree(g.m(), 0);
    for (VertexId v = 0; v < g.n(); ++v) {
        if (spt.parent_edge[v] != kNoEdge) tree[spt.parent_edge[v]] = 1;
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!tree[e]) nontree_.push_back(e);
    }

    by_level_.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v) by_level_[v] = v;
    std::stable_sort(by_level_.begin(), by_level_.end(),
                     [&](VertexId a, VertexId b) { return spt.level[a] < spt.level[b]; });

    if (nontree_.empty()) return;

    const uint32_t f = uint32_t(faces_.count());
    if (nontree_.size() + 1 != f) {
        throw Error(ErrorCode::InconsistentEmbedding,
                    "non-tree edges do not form a spanning tree of the dual");
    }
    std::vector<std::vector<std::pair<uint32_t, EdgeId>>> dual(f);
    for (EdgeId e : nontree_) {
        uint32_t a = faces_.dart_face[2 * e];
        uint32_t b = faces_.dart_face[2 * e + 1];
        dual[a].emplace_back(b, e);
        dual[b].emplace_back(a, e);
    }

    // iterative DFS from face 0: parent, depth, Euler interval
    dual_parent_.assign(f, UINT32_MAX);
    dual_depth_.assign(f, 0);
    tin_.assign(f, 0);
    tout_.assign(f, 0);
    std::vector<EdgeId> parent_edge(f, kNoEdge);
    std::vector<uint8_t> seen(f, 0);
    std::vector<std::pair<uint32_t, size_t>> stack{{0, 0}};
    seen[0] = 1;
    uint32_t clock = 0;
    tin_[0] = clock++;
    while (!stack.empty()) {
        auto& [face, next] = stack.back();
        if (next < dual[face].size()) {
            auto [to, e] = dual[face][next++];
            if (seen[to]) {
                if (e != parent_edge[face]) {
                    throw Error(ErrorCode::InconsistentEmbedding, "dual of non-tree edges has a cycle");
                }
                continue;
            }
            seen[to] = 1;
            dual_parent_[to] = face;
            dual_depth_[to] = dual_depth_[face] + 1;
            parent_edge[to] = e;
            tin_[to] = clock++;
            stack.emplace_back(to, 0);
        } else {
            tout_[face] = clock;
            stack.pop_back();
        }
    }
    if (clock != f) {
        throw Error(ErrorCode::InconsistentEmbedding, "dual of non-tree edges is disconnected");
    }

    child_face_.resize(nontree_.size());
    apex_.resize(nontree_.size());
    for (size_t i = 0; i < nontree_.size(); ++i) {
        EdgeId e = nontree_[i];
        uint32_t a = faces_.dart_face[2 * e];
        uint32_t b = faces_.dart_face[2 * e + 1];
        child_face_[i] = parent_edge[a] == e ? a : b;
        apex_[i] = spt.lca(g.edges[e].u, g.edges[e].v);
    }

    vertex_anchor_.assign(g.n(), 0);
    for (VertexId x = 0; x < g.n(); ++x) {
        uint32_t anchor = UINT32_MAX;
        for (EdgeId e : g.rotation[x]) {
            uint32_t face = faces_.dart_face[dart_from(g, e, x)];
            anchor = anchor == UINT32_MAX ? face : dual_lca(anchor, face);
        }
        vertex_anchor_[x] = anchor;
    }
}

uint32_t SeparatorFinder::dual_lca(uint32_t a, uint32_t b) const {
    while (dual_depth_[a] > dual_depth_[b]) a = dual_parent_[a];
    while (dual_depth_[b] > dual_depth_[a]) b = dual_parent_[b];
    while (a != b) {
        a = dual_parent_[a];
        b = dual_parent_[b];
    }
    return a;
}

std::vector<SideWeights> SeparatorFinder::side_weights(std::span<const uint8_t> weights) const {
    std::vector<SideWeights> out(nontree_.size());
    if (nontree_.empty()) return out;

    uint64_t total = 0;
    std::vector<uint64_t> prefix(faces_.count() + 1, 0);
    for (VertexId x = 0; x < g_.n(); ++x) {
        if (!weights[x]) continue;
        total += weights[x];
        prefix[tin_[vertex_anchor_[x]] + 1] += weights[x];
    }
    for (size_t i = 1; i < prefix.size(); ++i) prefix[i] += prefix[i - 1];

    std::vector<uint64_t> root_path(g_.n(), 0);
    for (VertexId x : by_level_) {
        root_path[x] = weights[x] + (x == spt_.root ? 0 : root_path[spt_.parent[x]]);
    }

    for (size_t i = 0; i < nontree_.size(); ++i) {
        const Edge& e = g_.edges[nontree_[i]];
        uint32_t c = child_face_[i];
        VertexId apex = apex_[i];
        SideWeights& w = out[i];
        w.side_a = prefix[tout_[c]] - prefix[tin_[c]];
        w.cycle = root_path[e.u] + root_path[e.v] - 2 * root_path[apex] + weights[apex];
        w.side_b = total - w.side_a - w.cycle;
    }
    return out;
}

Separator SeparatorFinder::choose(std::span<const uint8_t> weights) const {
    if (nontree_.empty()) return root_separator(spt_);
    uint64_t total = 0;
    for (uint8_t w : weights) total += w;

    auto sides = side_weights(weights);
    size_t best = 0;
    for (size_t i = 1; i < sides.size(); ++i) {
        if (sides[i].max_side() < sides[best].max_side()) best = i;
    }
    if (3 * sides[best].max_side() > 2 * total) {
        throw Error(ErrorCode::NoBalancedEdge, "no fundamental cycle splits the weight 2/3 : 1/3");
    }
    return fundamental_cycle(g_, spt_, nontree_[best]);
}

Separator choose_separator(const PlanarGraph& g, const Spt& spt, std::span<const uint8_t> weights) {
    return SeparatorFinder(g, spt).choose(weights);
}

void rebuild_leaf_table(Piece& piece, const PlanarGraph& g) {
    piece.leaf_table.clear();
    const auto& members = piece.members;
    if (members.size() <= 1) return;
    auto local = [&](VertexId v) -> size_t {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        return (it != members.end() && *it == v) ? size_t(it - members.begin()) : SIZE_MAX;
    };

    const size_t k = members.size();
    std::vector<Dist> dist(k);
    using Item = std::pair<Dist, size_t>;
    for (size_t s = 0; s < k; ++s) {
        std::fill(dist.begin(), dist.end(), kInfinity);
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        dist[s] = 0;
        queue.emplace(0, s);
        while (!queue.empty()) {
            auto [d, i] = queue.top();
            queue.pop();
            if (d != dist[i]) continue;
            VertexId x = members[i];
            for (EdgeId e : g.rotation[x]) {
                const Edge& edge = g.edges[e];
                if (edge.artificial) continue;
                size_t j = local(edge.other(x));
                if (j == SIZE_MAX) continue;
                if (d + edge.length < dist[j]) {
                    dist[j] = d + edge.length;
                    queue.emplace(dist[j], j);
                }
            }
        }
        std::vector<LeafEntry> best;
        for (size_t i = 0; i < k; ++i) {
            if (dist[i] == kInfinity) continue;
            Label label = g.labels[members[i]];
            auto it = std::find_if(best.begin(), best.end(),
                                   [&](const LeafEntry& e) { return e.label == label; });
            if (it == best.end()) {
                best.push_back(LeafEntry{members[s], label, dist[i], members[i]});
            } else if (dist[i] < it->distance) {
                it->distance = dist[i];
                it->witness = members[i];
            }
        }
        std::sort(best.begin(), best.end(),
                  [](const LeafEntry& a, const LeafEntry& b) { return a.label < b.label; });
        piece.leaf_table.insert(piece.leaf_table.end(), best.begin(), best.end());
    }
}

Rgd build_rgd(const PlanarGraph& g, const Spt& spt, uint32_t leaf_max) {
    if (leaf_max < 1) throw Error(ErrorCode::BadConfig, "leaf_max must be at least 1");
    Rgd rgd;
    rgd.leaf_max = leaf_max;
    rgd.deepest_piece.assign(g.n(), kNoPiece);

    Piece root;
    root.members.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v) root.members[v] = v;
    rgd.pieces.push_back(std::move(root));

    SeparatorFinder finder(g, spt);
    std::vector<uint8_t> weights(g.n(), 0);

    // Pieces are appended in breadth-first order, so ids follow depth.
    for (PieceId id = 0; id < rgd.pieces.size(); ++id) {
        Piece& piece = rgd.pieces[id];
        piece.id = id;
        if (piece.members.size() <= leaf_max) {
            for (VertexId v : piece.members) rgd.deepest_piece[v] = id;
            rebuild_leaf_table(piece, g);
            continue;
        }
        for (VertexId v : piece.members) weights[v] = 1;
        Separator sep = finder.choose(weights);
        for (VertexId v : piece.members) weights[v] = 0;

        auto side = classify_sides(g, finder.faces(), spt, sep);
        Piece exterior, interior;
        for (VertexId v : piece.members) {
            switch (side[v]) {
                case Side::OnCycle: rgd.deepest_piece[v] = id; break;
                case Side::Exterior: exterior.members.push_back(v); break;
                case Side::Interior: interior.members.push_back(v); break;
            }
        }
        const uint32_t depth = piece.depth;
        piece.separator = std::move(sep);
        for (Piece* child : {&exterior, &interior}) {
            if (child->members.empty()) continue;
            child->parent = id;
            child->depth = depth + 1;
            PieceId child_id = PieceId(rgd.pieces.size());
            rgd.pieces[id].children.push_back(child_id);
            rgd.pieces.push_back(std::move(*child));  // invalidates `piece`
        }
    }
    return rgd;
}

}  // namespace plo
