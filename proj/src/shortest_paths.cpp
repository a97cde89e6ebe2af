#include "plo/shortest_paths.hpp"

#include <queue>

#include "plo/error.hpp"

namespace plo {

bool Spt::is_tree_edge(EdgeId e) const {
    for (VertexId v = 0; v < parent_edge.size(); ++v) {
        if (parent_edge[v] == e) return true;
    }
    return false;
}

bool Spt::is_ancestor(VertexId a, VertexId b) const {
    while (level[b] > level[a]) b = parent[b];
    return a == b;
}

VertexId Spt::lca(VertexId a, VertexId b) const {
    while (level[a] > level[b]) a = parent[a];
    while (level[b] > level[a]) b = parent[b];
    while (a != b) {
        a = parent[a];
        b = parent[b];
    }
    return a;
}

SsspResult sssp(const PlanarGraph& g, VertexId source) {
    const size_t n = g.n();
    if (source >= n) throw Error(ErrorCode::BadVertex, "source out of range");
    SsspResult out;
    auto& dist = out.dist.dist;
    auto& t = out.tree;
    out.dist.source = source;
    t.root = source;
    dist.assign(n, kInfinity);
    t.parent.assign(n, kNoVertex);
    t.parent_edge.assign(n, kNoEdge);
    t.level.assign(n, 0);
    std::vector<uint8_t> settled(n, 0);

    using Item = std::pair<Dist, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[source] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
        auto [d, x] = queue.top();
        queue.pop();
        if (settled[x]) continue;
        settled[x] = 1;
        if (x != source) {
            t.level[x] = t.level[t.parent[x]] + 1;
            t.levels = std::max(t.levels, t.level[x]);
        }
        for (EdgeId e : g.rotation[x]) {
            const Edge& edge = g.edges[e];
            if (edge.artificial) continue;
            VertexId y = edge.other(x);
            if (settled[y]) continue;
            Dist nd = d + edge.length;
            if (nd < dist[y]) {
                dist[y] = nd;
                t.parent[y] = x;
                t.parent_edge[y] = e;
                queue.emplace(nd, y);
            } else if (nd == dist[y] &&
                       (x < t.parent[y] || (x == t.parent[y] && e < t.parent_edge[y]))) {
                t.parent[y] = x;
                t.parent_edge[y] = e;
            }
        }
    }
    t.h = dist;
    return out;
}

DistanceMap distances_from(const PlanarGraph& g, VertexId source) {
    const size_t n = g.n();
    if (source >= n) throw Error(ErrorCode::BadVertex, "source out of range");
    DistanceMap out;
    out.source = source;
    out.dist.assign(n, kInfinity);
    using Item = std::pair<Dist, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    out.dist[source] = 0;
    queue.emplace(0, source);
    while (!queue.empty()) {
        auto [d, x] = queue.top();
        queue.pop();
        if (d != out.dist[x]) continue;
        for (EdgeId e : g.rotation[x]) {
            const Edge& edge = g.edges[e];
            if (edge.artificial) continue;
            VertexId y = edge.other(x);
            Dist nd = d + edge.length;
            if (nd < out.dist[y]) {
                out.dist[y] = nd;
                queue.emplace(nd, y);
            }
        }
    }
    return out;
}

Center find_center(const PlanarGraph& g) {
    Center best;
    for (VertexId v = 0; v < g.n(); ++v) {
        SsspResult r = sssp(g, v);
        if (best.root == kNoVertex || r.tree.levels < best.radius) {
            best.root = v;
            best.radius = r.tree.levels;
            best.weighted_eccentricity = 0;
            for (Dist d : r.dist.dist) best.weighted_eccentricity = std::max(best.weighted_eccentricity, d);
        }
    }
    return best;
}

std::vector<LabelDistance> exact_label_distances(const PlanarGraph& g, const DistanceMap& from) {
    std::vector<LabelDistance> out(g.num_labels);
    for (VertexId v = 0; v < g.n(); ++v) {
        LabelDistance& slot = out[g.labels[v]];
        if (from[v] < slot.distance) {
            slot.distance = from[v];
            slot.witness = v;
        }
    }
    return out;
}

LabelDistance exact_label_distance(const PlanarGraph& g, VertexId u, Label label) {
    if (u >= g.n()) throw Error(ErrorCode::BadVertex, "vertex out of range");
    if (label >= g.num_labels) {
        throw Error(ErrorCode::LabelAbsent, "label " + std::to_string(label) + " out of range");
    }
    LabelDistance r = exact_label_distances(g, distances_from(g, u))[label];
    if (r.witness == kNoVertex) {
        throw Error(ErrorCode::LabelAbsent, "no vertex carries label " + std::to_string(label));
    }
    return r;
}

}  // namespace plo
