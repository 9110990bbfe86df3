#include "indcomp/families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace indcomp {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        es.push_back({i, (i + 1) % n});
    }
    return Graph::from_edge_list(vs, es);
}

Graph path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        if (i + 1 < n) es.push_back({i, i + 1});
    }
    return Graph::from_edge_list(vs, es);
}

Graph complete(int n) {
    require(n >= 1, "complete needs n >= 1");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        vs.push_back(i);
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    }
    return Graph::from_edge_list(vs, es);
}

Graph complete_bipartite(int n, int m) {
    require(n >= 1 && m >= 1, "complete bipartite needs n, m >= 1");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n + m; ++i) vs.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) es.push_back({i, n + j});
    return Graph::from_edge_list(vs, es);
}

namespace {

// All n-subsets of {1..top} sorted colex: compare the reversed sequences.
std::vector<std::vector<int>> colex_subsets(int n, int top) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= top; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    for (int v : a)
        if (std::binary_search(b.begin(), b.end(), v)) return false;
    return true;
}

Graph disjointness_graph(const std::vector<std::vector<int>>& sets) {
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        vs.push_back(static_cast<int>(i));
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (disjoint(sets[i], sets[j])) es.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return Graph::from_edge_list(vs, es);
}

}  // namespace

std::vector<std::vector<int>> kneser_subsets(int n, int k) {
    require(n >= 1 && k >= 0, "kneser needs n >= 1 and k >= 0");
    return colex_subsets(n, 2 * n + k);
}

std::vector<std::vector<int>> stable_kneser_subsets(int n, int k) {
    auto all = kneser_subsets(n, k);
    const int top = 2 * n + k;
    std::vector<std::vector<int>> out;
    for (auto& s : all) {
        bool stable = !(s.size() > 1 && s.front() == 1 && s.back() == top);
        for (std::size_t i = 0; stable && i + 1 < s.size(); ++i)
            if (s[i + 1] - s[i] < 2) stable = false;
        if (stable) out.push_back(std::move(s));
    }
    return out;
}

Graph kneser(int n, int k) { return disjointness_graph(kneser_subsets(n, k)); }

Graph stable_kneser(int n, int k) { return disjointness_graph(stable_kneser_subsets(n, k)); }

namespace {

Graph lattice_graph(const std::vector<std::pair<int, int>>& points) {
    std::map<std::pair<int, int>, int> label;
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) label.emplace(p, static_cast<int>(label.size()));
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (const auto& [p, l] : label) {
        vs.push_back(l);
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
            auto it = label.find({p.first + dx, p.second + dy});
            if (it != label.end()) es.push_back({l, it->second});
        }
    }
    return Graph::from_edge_list(vs, es);
}

std::vector<std::pair<int, int>> grid_points_G(int n, int m) {
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; 2 * x <= n + m; ++x)
        for (int y = std::max(-x, x - m); y <= std::min(x, n - x); ++y) pts.push_back({x, y});
    return pts;
}

std::vector<std::pair<int, int>> grid_points_H(int n, int m) {
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; 2 * x <= n + m; ++x)
        for (int y = std::max(-x - 1, x - m); y <= std::min(x, n - 1 - x); ++y)
            pts.push_back({x, y});
    return pts;
}

template <typename Keep>
std::vector<std::pair<int, int>> filter_points(std::vector<std::pair<int, int>> pts, Keep keep) {
    std::erase_if(pts, [&](const auto& p) { return !keep(p.first, p.second); });
    return pts;
}

}  // namespace

Graph grid_G(int n, int m) {
    require(n >= 0 && m >= 0, "grid needs n, m >= 0");
    return lattice_graph(grid_points_G(n, m));
}

Graph grid_H(int n, int m) {
    require(n >= 0 && m >= 0, "grid needs n, m >= 0");
    return lattice_graph(grid_points_H(n, m));
}

Graph tilde_G(int n, int m, int k) {
    require(n >= 0 && m >= 0 && k >= 0, "grid needs n, m, k >= 0");
    return lattice_graph(filter_points(
        grid_points_G(n, m), [&](int x, int y) { return y >= -x + k || y <= x - 3; }));
}

Graph tilde_H(int n, int m, int k) {
    require(n >= 0 && m >= 0 && k >= 0, "grid needs n, m, k >= 0");
    return lattice_graph(filter_points(
        grid_points_H(n, m), [&](int x, int y) { return y >= -x + k - 1 || y <= x - 3; }));
}

SimplicialComplex matching_complete(int n) {
    require(n >= 2, "matching complex needs n >= 2");
    return matching_complex(complete(n)).complex;
}

SimplicialComplex chessboard(int n, int m) {
    require(n >= 1 && m >= 1, "chessboard needs n, m >= 1");
    return matching_complex(complete_bipartite(n, m)).complex;
}

std::vector<std::pair<int, int>> stirling_pairs(int n) {
    require(n >= 2, "stirling needs n >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    return pairs;
}

SimplicialComplex stirling(int n) {
    auto pairs = stirling_pairs(n);
    std::vector<int> vs;
    std::vector<std::pair<int, int>> conflicts;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
        vs.push_back(static_cast<int>(a));
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (pairs[a].first == pairs[b].first || pairs[a].second == pairs[b].second)
                conflicts.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return independence_complex(Graph::from_edge_list(vs, conflicts));
}

Graph family_A(int k) {
    require(k >= 1, "family needs k >= 1");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) {
        int b = 4 * i;
        for (int j = 0; j < 4; ++j) {
            vs.push_back(b + j);
            es.push_back({b + j, b + (j + 1) % 4});
        }
    }
    return Graph::from_edge_list(vs, es);
}

Graph family_B(int k) {
    require(k >= 1, "family needs k >= 1");
    std::vector<int> vs = {0, 1, 2};
    std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}};
    for (int i = 0; i < k - 1; ++i) {
        int b = 3 + 4 * i;
        for (int j = 0; j < 4; ++j) {
            vs.push_back(b + j);
            es.push_back({b + j, b + (j + 1) % 4});
        }
    }
    return Graph::from_edge_list(vs, es);
}

Graph pentagon_prism(int n) {
    require(n >= 3 && n % 2 == 1, "prism needs odd n >= 3");
    std::vector<int> vs;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) {
        int a = 3 * i, b = 3 * i + 1, c = 3 * i + 2;
        vs.insert(vs.end(), {a, b, c});
        es.push_back({a, b});
        es.push_back({b, c});
        es.push_back({a, 3 * ((i + 1) % n)});
        es.push_back({c, 3 * ((i + 1) % n) + 2});
    }
    return Graph::from_edge_list(vs, es);
}

Graph graph_W() {
    return Graph::from_edge_list({0, 1, 2, 3, 4, 5, 6},
                                 {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

namespace {

void require_arity(const FamilySpec& spec, std::size_t arity) {
    if (spec.params.size() != arity)
        throw std::invalid_argument("family " + spec.name + " takes " +
                                    std::to_string(arity) + " parameter(s)");
}

}  // namespace

std::variant<Graph, SimplicialComplex> build_family(const FamilySpec& spec) {
    const auto& p = spec.params;
    if (spec.name == "cycle") { require_arity(spec, 1); return cycle(p[0]); }
    if (spec.name == "path") { require_arity(spec, 1); return path(p[0]); }
    if (spec.name == "complete") { require_arity(spec, 1); return complete(p[0]); }
    if (spec.name == "kbipartite") { require_arity(spec, 2); return complete_bipartite(p[0], p[1]); }
    if (spec.name == "kneser") { require_arity(spec, 2); return kneser(p[0], p[1]); }
    if (spec.name == "stable-kneser") { require_arity(spec, 2); return stable_kneser(p[0], p[1]); }
    if (spec.name == "gridG") { require_arity(spec, 2); return grid_G(p[0], p[1]); }
    if (spec.name == "gridH") { require_arity(spec, 2); return grid_H(p[0], p[1]); }
    if (spec.name == "tildeG") { require_arity(spec, 3); return tilde_G(p[0], p[1], p[2]); }
    if (spec.name == "tildeH") { require_arity(spec, 3); return tilde_H(p[0], p[1], p[2]); }
    if (spec.name == "matching") { require_arity(spec, 1); return matching_complete(p[0]); }
    if (spec.name == "chessboard") { require_arity(spec, 2); return chessboard(p[0], p[1]); }
    if (spec.name == "stirling") { require_arity(spec, 1); return stirling(p[0]); }
    if (spec.name == "familyA") { require_arity(spec, 1); return family_A(p[0]); }
    if (spec.name == "familyB") { require_arity(spec, 1); return family_B(p[0]); }
    if (spec.name == "pentagon-prism") { require_arity(spec, 1); return pentagon_prism(p[0]); }
    if (spec.name == "graphW") { require_arity(spec, 0); return graph_W(); }
    throw std::invalid_argument("unknown family " + spec.name);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = {
        "cycle", "path", "complete", "kbipartite", "kneser", "stable-kneser",
        "gridG", "gridH", "tildeG", "tildeH", "matching", "chessboard",
        "stirling", "familyA", "familyB", "pentagon-prism", "graphW"};
    return names;
}

}  // namespace indcomp
