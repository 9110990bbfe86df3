#include "indcomp/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace indcomp {

namespace {

std::string pair_text(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(const std::vector<int>& vertices,
                            const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    for (int v : vertices) {
        if (v < 0) throw std::invalid_argument("negative vertex label " + std::to_string(v));
        if (g.adjacency_.count(v))
            throw std::invalid_argument("duplicate vertex " + std::to_string(v));
        g.adjacency_[v] = {};
    }
    for (const auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (!g.adjacency_.count(u) || !g.adjacency_.count(v))
            throw std::invalid_argument("edge " + pair_text(u, v) + " over undeclared vertex");
        if (g.adjacency_[u].count(v))
            throw std::invalid_argument("duplicate edge " + pair_text(u, v));
        g.adjacency_[u].insert(v);
        g.adjacency_[v].insert(u);
        ++g.edge_count_;
    }
    g.vertices_.reserve(g.adjacency_.size());
    for (const auto& [v, nbrs] : g.adjacency_) g.vertices_.push_back(v);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adjacency_)
        for (int w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool Graph::has_edge(int u, int v) const {
    auto it = adjacency_.find(u);
    return it != adjacency_.end() && it->second.count(v) != 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    return it->second;
}

int Graph::max_degree() const {
    int m = 0;
    for (const auto& [v, nbrs] : adjacency_) m = std::max(m, static_cast<int>(nbrs.size()));
    return m;
}

void Graph::add_vertex(int v) {
    if (v < 0) throw std::invalid_argument("negative vertex label " + std::to_string(v));
    if (adjacency_.count(v)) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    adjacency_[v] = {};
    vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (!adjacency_.count(u) || !adjacency_.count(v))
        throw std::invalid_argument("edge " + pair_text(u, v) + " over undeclared vertex");
    if (adjacency_[u].count(v)) throw std::invalid_argument("duplicate edge " + pair_text(u, v));
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++edge_count_;
}

void Graph::remove_vertex(int v) {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end())
        throw std::invalid_argument("unknown vertex " + std::to_string(v));
    edge_count_ -= it->second.size();
    for (int w : it->second) adjacency_[w].erase(v);
    adjacency_.erase(it);
    vertices_.erase(std::find(vertices_.begin(), vertices_.end(), v));
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("missing edge " + pair_text(u, v));
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
    --edge_count_;
}

bool Graph::operator==(const Graph& other) const {
    return adjacency_ == other.adjacency_;
}

Graph complement(const Graph& g) {
    const auto& vs = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) edges.emplace_back(vs[i], vs[j]);
    return Graph::from_edge_list(vs, edges);
}

LineGraphResult line_graph(const Graph& g) {
    const auto es = g.edges();  // already lex sorted
    std::vector<int> labels(es.size());
    std::iota(labels.begin(), labels.end(), 0);
    std::vector<std::pair<int, int>> meet;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                meet.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    LineGraphResult out{Graph::from_edge_list(labels, meet), {}};
    for (std::size_t i = 0; i < es.size(); ++i) out.edge_of[static_cast<int>(i)] = es[i];
    return out;
}

Graph induced_subgraph(const Graph& g, const std::set<int>& keep) {
    std::vector<int> vs;
    for (int v : keep) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("unknown vertex " + std::to_string(v));
        vs.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : vs)
        for (int w : g.neighbors(v))
            if (v < w && keep.count(w)) edges.emplace_back(v, w);
    return Graph::from_edge_list(vs, edges);
}

std::optional<std::array<int, 4>> find_claw(const Graph& g) {
    for (int c : g.vertices()) {
        std::vector<int> nbrs(g.neighbors(c).begin(), g.neighbors(c).end());
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.has_edge(nbrs[i], nbrs[j])) continue;
                for (std::size_t k = j + 1; k < nbrs.size(); ++k) {
                    if (g.has_edge(nbrs[i], nbrs[k]) || g.has_edge(nbrs[j], nbrs[k])) continue;
                    return std::array<int, 4>{c, nbrs[i], nbrs[j], nbrs[k]};
                }
            }
    }
    return std::nullopt;
}

bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

bool is_triangle_free(const Graph& g) {
    for (int v : g.vertices()) {
        const auto& nbrs = g.neighbors(v);
        for (int a : nbrs)
            for (int b : nbrs)
                if (a < b && g.has_edge(a, b)) return false;
    }
    return true;
}

std::optional<int> vertex_in_no_triangle(const Graph& g) {
    for (int v : g.vertices()) {
        const auto& nbrs = g.neighbors(v);
        bool clean = true;
        for (auto it = nbrs.begin(); clean && it != nbrs.end(); ++it)
            for (auto jt = std::next(it); jt != nbrs.end(); ++jt)
                if (g.has_edge(*it, *jt)) {
                    clean = false;
                    break;
                }
        if (clean) return v;
    }
    return std::nullopt;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    const auto& vs = g.vertices();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
    std::vector<std::vector<int>> dist(vs.size(), std::vector<int>(vs.size(), kUnreachable));
    for (std::size_t s = 0; s < vs.size(); ++s) {
        auto& row = dist[s];
        row[s] = 0;
        std::deque<int> queue{vs[s]};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            int d = row[index[v]];
            for (int w : g.neighbors(v))
                if (row[index[w]] == kUnreachable) {
                    row[index[w]] = d + 1;
                    queue.push_back(w);
                }
        }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("unknown vertex in distance query");
    std::map<int, int> dist{{u, 0}};
    std::deque<int> queue{u};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == v) return dist[x];
        for (int w : g.neighbors(x))
            if (!dist.count(w)) {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
    }
    return kUnreachable;
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("diameter of empty graph");
    if (!is_connected(g)) throw std::invalid_argument("diameter of disconnected graph");
    int best = 0;
    for (const auto& row : distance_matrix(g))
        for (int d : row) best = std::max(best, d);
    return best;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    std::set<int> seen{g.vertices().front()};
    std::deque<int> queue{g.vertices().front()};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v))
            if (seen.insert(w).second) queue.push_back(w);
    }
    return seen.size() == g.vertex_count();
}

bool is_bipartite(const Graph& g) {
    std::map<int, int> side;
    for (int root : g.vertices()) {
        if (side.count(root)) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                auto it = side.find(w);
                if (it == side.end()) {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if (it->second == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Maximal cliques over bitmask adjacency (Bron-Kerbosch with pivoting).
void maximal_cliques(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                     const std::vector<std::uint64_t>& adj,
                     std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t rest = px; rest;) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        int gain = std::popcount(p & adj[u]);
        if (gain > best) {
            best = gain;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        std::uint64_t bit = 1ULL << v;
        cand &= cand - 1;
        maximal_cliques(r | bit, p & adj[v], x & adj[v], adj, out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<std::uint64_t> complement_masks(const Graph& g) {
    const auto& vs = g.vertices();
    std::map<int, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> adj(vs.size(), 0);
    const std::uint64_t all =
        vs.size() == 64 ? ~0ULL : ((1ULL << vs.size()) - 1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::uint64_t row = all & ~(1ULL << i);
        for (int w : g.neighbors(vs[i])) row &= ~(1ULL << index[w]);
        adj[i] = row;
    }
    return adj;
}

}  // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
    const auto& vs = g.vertices();
    if (vs.empty()) return {};
    if (vs.size() > 64)
        throw std::invalid_argument("instance too large: more than 64 vertices");
    auto adj = complement_masks(g);
    const std::uint64_t all =
        vs.size() == 64 ? ~0ULL : ((1ULL << vs.size()) - 1);
    std::vector<std::uint64_t> masks;
    maximal_cliques(0, all, 0, adj, masks);
    std::vector<std::vector<int>> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
        std::vector<int> s;
        while (m) {
            s.push_back(vs[std::countr_zero(m)]);
            m &= m - 1;
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct ColoringSearch {
    const std::vector<std::vector<int>>& adj;  // index-based adjacency lists
    int k = 0;
    std::vector<int> color;

    bool assign(std::size_t i, int used) {
        if (i == color.size()) return true;
        for (int c = 0; c < std::min(used + 1, k); ++c) {
            bool ok = true;
            for (int w : adj[i])
                if (static_cast<std::size_t>(w) < i && color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[i] = c;
            if (assign(i + 1, std::max(used, c + 1))) return true;
        }
        color[i] = -1;
        return false;
    }
};

// Vertices sorted by degree (desc) then label; returns index-based adjacency
// plus the label order used.
std::pair<std::vector<std::vector<int>>, std::vector<int>> ordered_adjacency(const Graph& g) {
    std::vector<int> order = g.vertices();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::map<int, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : g.neighbors(order[i])) adj[i].push_back(index[w]);
    return {adj, order};
}

int greedy_clique_size(const Graph& g, const std::vector<int>& order) {
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int w : clique)
            if (!g.has_edge(v, w)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

std::vector<int> solve_coloring(const Graph& g, std::size_t cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("instance too large: " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices exceeds chromatic cap " + std::to_string(cap));
    auto [adj, order] = ordered_adjacency(g);
    if (order.empty()) return {};
    // Greedy upper bound along the same order.
    std::vector<int> greedy(order.size(), -1);
    int ub = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint64_t used = 0;
        for (int w : adj[i])
            if (greedy[w] >= 0) used |= 1ULL << greedy[w];
        int c = std::countr_one(used);
        greedy[i] = c;
        ub = std::max(ub, c + 1);
    }
    int lb = std::max(1, greedy_clique_size(g, order));
    for (int k = lb; k <= ub; ++k) {
        ColoringSearch search{adj, k, std::vector<int>(order.size(), -1)};
        if (search.assign(0, 0)) return search.color;
    }
    return greedy;  // unreachable: ub always admits a coloring
}

}  // namespace

int chromatic_number(const Graph& g, std::size_t cap) {
    auto color = solve_coloring(g, cap);
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    return k;
}

std::vector<std::vector<int>> chromatic_coloring(const Graph& g, std::size_t cap) {
    auto color = solve_coloring(g, cap);
    auto [adj, order] = ordered_adjacency(g);
    std::map<int, std::vector<int>> classes;
    for (std::size_t i = 0; i < order.size(); ++i) classes[color[i]].push_back(order[i]);
    std::vector<std::vector<int>> out;
    for (auto& [c, members] : classes) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subgraph(const Graph& sub, const Graph& g) {
    for (int v : sub.vertices())
        if (!g.has_vertex(v)) return false;
    for (const auto& [u, v] : sub.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

namespace {

bool extend_isomorphism(const std::vector<int>& avs, std::size_t i,
                        const Graph& a, const Graph& b,
                        std::map<int, int>& image, std::set<int>& used) {
    if (i == avs.size()) return true;
    int v = avs[i];
    for (int w : b.vertices()) {
        if (used.count(w) || b.degree(w) != a.degree(v)) continue;
        bool ok = true;
        for (const auto& [x, y] : image)
            if (a.has_edge(v, x) != b.has_edge(w, y)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[v] = w;
        used.insert(w);
        if (extend_isomorphism(avs, i + 1, a, b, image, used)) return true;
        image.erase(v);
        used.erase(w);
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v : a.vertices()) da.push_back(a.degree(v));
    for (int v : b.vertices()) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> avs = a.vertices();
    std::stable_sort(avs.begin(), avs.end(), [&](int x, int y) {
        return a.degree(x) > a.degree(y);
    });
    std::map<int, int> image;
    std::set<int> used;
    return extend_isomorphism(avs, 0, a, b, image, used);
}

namespace {

bool extend_induced(const std::vector<int>& pvs, std::size_t i,
                    const Graph& g, const Graph& pattern,
                    std::map<int, int>& image, std::set<int>& used) {
    if (i == pvs.size()) return true;
    int v = pvs[i];
    for (int w : g.vertices()) {
        if (used.count(w) || g.degree(w) < pattern.degree(v)) continue;
        bool ok = true;
        for (const auto& [x, y] : image)
            if (pattern.has_edge(v, x) != g.has_edge(w, y)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        image[v] = w;
        used.insert(w);
        if (extend_induced(pvs, i + 1, g, pattern, image, used)) return true;
        image.erase(v);
        used.erase(w);
    }
    return false;
}

}  // namespace

bool has_induced_subgraph(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > g.vertex_count()) return false;
    std::vector<int> pvs = pattern.vertices();
    std::stable_sort(pvs.begin(), pvs.end(), [&](int x, int y) {
        return pattern.degree(x) > pattern.degree(y);
    });
    std::map<int, int> image;
    std::set<int> used;
    return extend_induced(pvs, 0, g, pattern, image, used);
}

}  // namespace indcomp
