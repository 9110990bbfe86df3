#include "indcomp/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace indcomp {

namespace {

std::string simplex_text(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    return out + "}";
}

}  // namespace

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("empty simplex");
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0)
            throw std::invalid_argument("negative vertex label " + std::to_string(vertices_[i]));
        if (i && vertices_[i] == vertices_[i - 1])
            throw std::invalid_argument("repeated vertex " + std::to_string(vertices_[i]) +
                                        " in simplex");
    }
}

bool Simplex::contains(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
    return std::includes(vertices_.begin(), vertices_.end(),
                         other.vertices_.begin(), other.vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
    auto i = vertices_.begin();
    auto j = other.vertices_.begin();
    while (i != vertices_.end() && j != other.vertices_.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets,
                                                 std::optional<std::vector<int>> ground) {
    std::vector<Simplex> candidates;
    candidates.reserve(facets.size());
    for (const auto& f : facets) candidates.emplace_back(f);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    SimplicialComplex k;
    for (const auto& c : candidates) {
        bool maximal = true;
        for (const auto& other : candidates)
            if (c.size() < other.size() && other.contains(c)) {
                maximal = false;
                break;
            }
        if (maximal) k.facets_.push_back(c);
    }

    std::set<int> support;
    for (const auto& f : k.facets_)
        support.insert(f.vertices().begin(), f.vertices().end());
    if (ground) {
        std::set<int> declared(ground->begin(), ground->end());
        if (declared.size() != ground->size())
            throw std::invalid_argument("duplicate ground vertex");
        for (int v : declared)
            if (v < 0) throw std::invalid_argument("negative vertex label " + std::to_string(v));
        for (int v : support)
            if (!declared.count(v))
                throw std::invalid_argument("facet vertex " + std::to_string(v) +
                                            " missing from ground set");
        k.ground_.assign(declared.begin(), declared.end());
    } else {
        k.ground_.assign(support.begin(), support.end());
    }
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    for (const auto& f : facets_)
        if (f.contains(s)) return true;
    return false;
}

std::vector<std::vector<Simplex>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<std::vector<int>>> buckets(dim() + 1);
    for (const auto& f : facets_) {
        const auto& vs = f.vertices();
        if (vs.size() > 63) throw std::invalid_argument("facet too large to enumerate faces");
        const std::uint64_t n = 1ULL << vs.size();
        for (std::uint64_t mask = 1; mask < n; ++mask) {
            std::vector<int> face;
            face.reserve(static_cast<std::size_t>(std::popcount(mask)));
            for (std::uint64_t m = mask; m;) {
                face.push_back(vs[std::countr_zero(m)]);
                m &= m - 1;
            }
            buckets[face.size() - 1].push_back(std::move(face));
        }
    }
    std::vector<std::vector<Simplex>> out(buckets.size());
    for (std::size_t d = 0; d < buckets.size(); ++d) {
        auto& b = buckets[d];
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        out[d].reserve(b.size());
        for (auto& vs : b) out[d].emplace_back(std::move(vs));
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
    std::vector<Simplex> out;
    for (const auto& bucket : faces_by_dim())
        out.insert(out.end(), bucket.begin(), bucket.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& bucket : faces_by_dim()) n += bucket.size();
    return n;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& bucket : faces_by_dim()) out.push_back(bucket.size());
    return out;
}

std::vector<int> SimplicialComplex::participating_vertices() const {
    std::set<int> support;
    for (const auto& f : facets_)
        support.insert(f.vertices().begin(), f.vertices().end());
    return {support.begin(), support.end()};
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return ground_ == other.ground_ && facets_ == other.facets_;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(maximal_independent_sets(g), g.vertices());
}

SimplicialComplex clique_complex(const Graph& g) {
    return independence_complex(complement(g));
}

Graph one_skeleton(const SimplicialComplex& k) {
    auto buckets = k.faces_by_dim();
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    if (!buckets.empty())
        for (const auto& v : buckets[0]) vertices.push_back(v.vertices()[0]);
    if (buckets.size() > 1)
        for (const auto& e : buckets[1]) edges.emplace_back(e.vertices()[0], e.vertices()[1]);
    return Graph::from_edge_list(vertices, edges);
}

bool is_clique(const SimplicialComplex& k) {
    Graph skeleton = one_skeleton(k);
    for (const auto& clique : maximal_independent_sets(complement(skeleton)))
        if (!k.contains(Simplex(clique))) return false;
    return true;
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& sigma) {
    if (!k.contains(sigma))
        throw std::invalid_argument("star of a non-face " + simplex_text(sigma.vertices()));
    std::vector<std::vector<int>> facets;
    for (const auto& f : k.facets())
        if (f.contains(sigma)) facets.push_back(f.vertices());
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex star_cluster(const SimplicialComplex& k, const Simplex& sigma) {
    if (!k.contains(sigma))
        throw std::invalid_argument("star cluster of a non-face " + simplex_text(sigma.vertices()));
    std::vector<std::vector<int>> facets;
    for (const auto& f : k.facets())
        if (f.intersects(sigma)) facets.push_back(f.vertices());
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> facets;
    for (const auto& f : a.facets()) facets.push_back(f.vertices());
    for (const auto& f : b.facets()) facets.push_back(f.vertices());
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<std::vector<int>> facets;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            std::vector<int> meet;
            std::set_intersection(f.vertices().begin(), f.vertices().end(),
                                  g.vertices().begin(), g.vertices().end(),
                                  std::back_inserter(meet));
            if (!meet.empty()) facets.push_back(std::move(meet));
        }
    return SimplicialComplex::from_facets(facets);
}

JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<int> left(a.ground().begin(), a.ground().end());
    std::map<int, int> relabel;
    int fresh = 0;
    if (!a.ground().empty()) fresh = a.ground().back() + 1;
    if (!b.ground().empty()) fresh = std::max(fresh, b.ground().back() + 1);
    bool clash = false;
    for (int v : b.ground())
        if (left.count(v)) {
            clash = true;
            break;
        }
    if (clash)
        for (int v : b.ground()) relabel[v] = fresh++;

    auto mapped = [&](const Simplex& s) {
        std::vector<int> vs = s.vertices();
        if (clash)
            for (int& v : vs) v = relabel.at(v);
        return vs;
    };

    std::vector<std::vector<int>> left_facets, right_facets;
    for (const auto& f : a.facets()) left_facets.push_back(f.vertices());
    for (const auto& f : b.facets()) right_facets.push_back(mapped(f));
    if (left_facets.empty()) left_facets.push_back({});
    if (right_facets.empty()) right_facets.push_back({});

    std::vector<std::vector<int>> facets;
    for (const auto& f : left_facets)
        for (const auto& g : right_facets) {
            std::vector<int> u = f;
            u.insert(u.end(), g.begin(), g.end());
            if (!u.empty()) facets.push_back(std::move(u));
        }

    std::set<int> ground(a.ground().begin(), a.ground().end());
    for (int v : b.ground()) ground.insert(clash ? relabel.at(v) : v);
    return {SimplicialComplex::from_facets(facets,
                                           std::vector<int>(ground.begin(), ground.end())),
            relabel};
}

SimplicialComplex cone(const SimplicialComplex& k) {
    int apex = k.ground().empty() ? 0 : k.ground().back() + 1;
    SimplicialComplex point = SimplicialComplex::from_facets({{apex}});
    return join(k, point).complex;
}

SimplicialComplex simplicial_suspension(const SimplicialComplex& k) {
    int fresh = k.ground().empty() ? 0 : k.ground().back() + 1;
    SimplicialComplex poles = SimplicialComplex::from_facets({{fresh}, {fresh + 1}});
    return join(k, poles).complex;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    const auto& ground = k.ground();
    if (ground.empty()) throw std::invalid_argument("Alexander dual needs a non-empty ground set");
    if (ground.size() > 24)
        throw std::invalid_argument("instance too large: ground set exceeds 24 vertices");
    const std::size_t n = ground.size();
    if (!k.facets().empty() && k.facets().front().size() == n)
        throw std::invalid_argument("Alexander dual of the full simplex is undefined");

    // Face masks of K over the ground indexing.
    std::map<int, int> index;
    for (std::size_t i = 0; i < n; ++i) index[ground[i]] = static_cast<int>(i);
    std::set<std::uint64_t> faces{0};
    for (const auto& bucket : k.faces_by_dim())
        for (const auto& f : bucket) {
            std::uint64_t m = 0;
            for (int v : f.vertices()) m |= 1ULL << index[v];
            faces.insert(m);
        }

    // Dual facets are complements of minimal non-faces.
    const std::uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    std::vector<std::vector<int>> facets;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        if (faces.count(mask)) continue;
        bool minimal = true;
        for (std::uint64_t m = mask; m && minimal; m &= m - 1)
            if (!faces.count(mask & ~(m & -m))) minimal = false;
        if (!minimal) continue;
        std::uint64_t comp = full & ~mask;
        if (comp == 0) continue;  // complement empty: contributes no facet
        std::vector<int> facet;
        for (std::uint64_t m = comp; m; m &= m - 1)
            facet.push_back(ground[std::countr_zero(m)]);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets, ground);
}

namespace {

void flag_chains(const Simplex& facet, std::vector<int>& prefix, std::vector<int>& chain,
                 const std::map<Simplex, int>& label_of,
                 std::vector<std::vector<int>>& out) {
    if (prefix.size() == facet.size()) {
        out.push_back(chain);
        return;
    }
    for (int v : facet.vertices()) {
        if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
        prefix.push_back(v);
        std::vector<int> sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(label_of.at(Simplex(sorted)));
        flag_chains(facet, prefix, chain, label_of, out);
        chain.pop_back();
        prefix.pop_back();
    }
}

}  // namespace

BarycentricResult barycentric_subdivision(const SimplicialComplex& k) {
    BarycentricResult out{SimplicialComplex{}, k.all_faces()};
    std::map<Simplex, int> label_of;
    for (std::size_t i = 0; i < out.face_of.size(); ++i)
        label_of.emplace(out.face_of[i], static_cast<int>(i));
    std::vector<std::vector<int>> facets;
    for (const auto& f : k.facets()) {
        std::vector<int> prefix, chain;
        flag_chains(f, prefix, chain, label_of, facets);
    }
    std::vector<int> ground(out.face_of.size());
    for (std::size_t i = 0; i < ground.size(); ++i) ground[i] = static_cast<int>(i);
    out.complex = SimplicialComplex::from_facets(facets, ground);
    return out;
}

IncomparabilityResult incomparability_graph(const SimplicialComplex& k) {
    IncomparabilityResult out{Graph{}, k.all_faces()};
    std::vector<int> labels(out.face_of.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < out.face_of.size(); ++i)
        for (std::size_t j = i + 1; j < out.face_of.size(); ++j) {
            const auto& a = out.face_of[i];
            const auto& b = out.face_of[j];
            if (!a.contains(b) && !b.contains(a))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    out.graph = Graph::from_edge_list(labels, edges);
    return out;
}

VertexSplit star_split(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty())
        throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
    for (int a : nbrs)
        for (int b : nbrs)
            if (a < b && g.has_edge(a, b))
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " lies in a triangle");
    SimplicialComplex k = independence_complex(g);
    Simplex nbr_simplex(std::vector<int>(nbrs.begin(), nbrs.end()));
    VertexSplit out;
    out.cluster = star_cluster(k, nbr_simplex);
    out.intersection = complex_intersection(star(k, Simplex({v})), out.cluster);
    return out;
}

Poset::Poset(std::vector<int> elements, const std::vector<std::pair<int, int>>& covers)
    : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw std::invalid_argument("duplicate poset element");
    std::set<int> known(elements_.begin(), elements_.end());
    for (const auto& [a, b] : covers) {
        if (!known.count(a) || !known.count(b))
            throw std::invalid_argument("cover relation over unknown element");
        if (a == b) throw std::invalid_argument("reflexive cover relation");
        less_.emplace(a, b);
    }
    // Transitive closure.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, int>> add;
        for (const auto& [a, b] : less_)
            for (const auto& [c, d] : less_)
                if (b == c && !less_.count({a, d})) add.emplace_back(a, d);
        for (const auto& p : add) grew |= less_.insert(p).second;
    }
    for (int e : elements_)
        if (less_.count({e, e}))
            throw std::invalid_argument("cover relations contain a cycle through " +
                                        std::to_string(e));
}

bool Poset::less(int a, int b) const { return less_.count({a, b}) != 0; }

bool Poset::comparable(int a, int b) const { return less(a, b) || less(b, a); }

SimplicialComplex order_complex(const Poset& p) {
    std::vector<std::pair<int, int>> incomparable;
    const auto& es = p.elements();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (!p.comparable(es[i], es[j])) incomparable.emplace_back(es[i], es[j]);
    Graph incomp = Graph::from_edge_list(es, incomparable);
    return independence_complex(incomp);
}

std::optional<std::vector<int>> chain_hitting_all_maximal_chains(const Poset& p) {
    SimplicialComplex oc = order_complex(p);
    if (oc.empty()) return std::nullopt;
    for (const auto& bucket : oc.faces_by_dim())
        for (const auto& chain : bucket) {
            bool hits_all = true;
            for (const auto& f : oc.facets())
                if (!f.intersects(chain)) {
                    hits_all = false;
                    break;
                }
            if (hits_all) return chain.vertices();
        }
    return std::nullopt;
}

MatchingComplexResult matching_complex(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("matching complex needs at least one edge");
    auto lg = line_graph(g);
    return {independence_complex(lg.graph), lg.edge_of};
}

}  // namespace indcomp
