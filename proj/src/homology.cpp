#include "indcomp/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

namespace indcomp {

namespace {

const BigInt kZero = 0;

}  // namespace

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, BigInt value) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (value == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(value);
}

const BigInt& IntegerMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix out(rows_, other.cols_);
    std::map<std::pair<std::size_t, std::size_t>, BigInt> acc;
    for (const auto& [rc, v] : entries_) {
        const auto& [r, k] = rc;
        for (std::size_t c = 0; c < other.cols_; ++c) {
            const BigInt& w = other.get(k, c);
            if (w != 0) acc[{r, c}] += v * w;
        }
    }
    for (auto& [rc, v] : acc)
        if (v != 0) out.set(rc.first, rc.second, std::move(v));
    return out;
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

namespace {

// ----- sparse unit-pivot elimination (production path, phase one) -----

inline bool mul_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_mul_overflow(a, b, &out);
}
inline bool sub_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
    return __builtin_sub_overflow(a, b, &out);
}
inline bool mul_overflows(const BigInt& a, const BigInt& b, BigInt& out) {
    out = a * b;
    return false;
}
inline bool sub_overflows(const BigInt& a, const BigInt& b, BigInt& out) {
    out = a - b;
    return false;
}
inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
struct SparseState {
    std::vector<std::map<int, T>> row;
    std::vector<std::set<int>> col_rows;
    std::set<std::pair<int, int>> units;  // (row, col) with entry +-1

    void put(int r, int c, const T& v) {
        auto& cell = row[r];
        auto it = cell.find(c);
        if (v == 0) {
            if (it != cell.end()) {
                cell.erase(it);
                col_rows[c].erase(r);
                units.erase({r, c});
            }
            return;
        }
        if (it == cell.end()) {
            cell.emplace(c, v);
            col_rows[c].insert(r);
        } else {
            it->second = v;
        }
        if (is_unit(v))
            units.insert({r, c});
        else
            units.erase({r, c});
    }
};

struct EliminationOutcome {
    std::size_t unit_count = 0;
    std::vector<std::vector<BigInt>> residual;
    bool overflow = false;
};

template <class T>
EliminationOutcome eliminate_units(SparseState<T>& s) {
    EliminationOutcome out;
    while (!s.units.empty()) {
        // Markowitz-style pick among a bounded sample of unit entries.
        auto it = s.units.begin();
        std::pair<int, int> best = *it;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (int probe = 0; probe < 64 && it != s.units.end(); ++probe, ++it) {
            auto [r, c] = *it;
            std::size_t cost = (s.row[r].size() - 1) * (s.col_rows[c].size() - 1);
            if (cost < best_cost) {
                best_cost = cost;
                best = *it;
                if (cost == 0) break;
            }
        }
        auto [r, c] = best;
        const T sign = s.row[r].at(c);  // +-1
        const std::map<int, T> pivot_row = s.row[r];
        const std::vector<int> affected(s.col_rows[c].begin(), s.col_rows[c].end());
        for (int r2 : affected) {
            if (r2 == r) continue;
            T mult;
            if (mul_overflows(s.row[r2].at(c), sign, mult)) {
                out.overflow = true;
                return out;
            }
            for (const auto& [c2, v] : pivot_row) {
                T prod, next;
                auto cur = s.row[r2].find(c2);
                const T old = cur == s.row[r2].end() ? T(0) : cur->second;
                if (mul_overflows(mult, v, prod) || sub_overflows(old, prod, next)) {
                    out.overflow = true;
                    return out;
                }
                s.put(r2, c2, next);
            }
        }
        // Column c is now zero elsewhere, so dropping row r clears it for free.
        for (const auto& [c2, v] : pivot_row) s.put(r, c2, T(0));
        ++out.unit_count;
    }
    // Pack what survives into a dense residual.
    std::vector<int> live_rows;
    for (std::size_t r2 = 0; r2 < s.row.size(); ++r2)
        if (!s.row[r2].empty()) live_rows.push_back(static_cast<int>(r2));
    std::set<int> live_cols_set;
    for (int r2 : live_rows)
        for (const auto& [c2, v] : s.row[r2]) live_cols_set.insert(c2);
    std::vector<int> live_cols(live_cols_set.begin(), live_cols_set.end());
    std::map<int, std::size_t> col_index;
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_index[live_cols[i]] = i;
    out.residual.assign(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c2, v] : s.row[live_rows[i]])
            out.residual[i][col_index[c2]] = BigInt(v);
    return out;
}

// ----- dense Bezout-combination reducer (production path, phase two) -----

void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - q * xx;
        old_x = xx;
        xx = t;
        t = old_y - q * yy;
        old_y = yy;
        yy = t;
    }
    g = old_r;
    x = old_x;
    y = old_y;
    if (g < 0) {
        g = -g;
        x = -x;
        y = -y;
    }
}

using Dense = std::vector<std::vector<BigInt>>;

struct Tracker {
    Dense* u = nullptr;  // rows x rows, premultiplied
    Dense* v = nullptr;  // cols x cols, postmultiplied
};

void swap_rows(Dense& a, Tracker t, std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (t.u) std::swap((*t.u)[i], (*t.u)[j]);
}
void swap_cols(Dense& a, Tracker t, std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    if (t.v)
        for (auto& row : *t.v) std::swap(row[i], row[j]);
}
// row_i -= q * row_j
void row_axpy(Dense& a, Tracker t, std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < a[i].size(); ++c) a[i][c] -= q * a[j][c];
    if (t.u)
        for (std::size_t c = 0; c < (*t.u)[i].size(); ++c) (*t.u)[i][c] -= q * (*t.u)[j][c];
}
// col_i -= q * col_j
void col_axpy(Dense& a, Tracker t, std::size_t i, std::size_t j, const BigInt& q) {
    for (auto& row : a) row[i] -= q * row[j];
    if (t.v)
        for (auto& row : *t.v) row[i] -= q * row[j];
}
// (row_i, row_j) <- (x*row_i + y*row_j, p*row_i + q*row_j), det +-1
void row_combine(Dense& a, Tracker t, std::size_t i, std::size_t j, const BigInt& x,
                 const BigInt& y, const BigInt& p, const BigInt& q) {
    for (std::size_t c = 0; c < a[i].size(); ++c) {
        BigInt top = x * a[i][c] + y * a[j][c];
        BigInt bot = p * a[i][c] + q * a[j][c];
        a[i][c] = top;
        a[j][c] = bot;
    }
    if (t.u)
        for (std::size_t c = 0; c < (*t.u)[i].size(); ++c) {
            BigInt top = x * (*t.u)[i][c] + y * (*t.u)[j][c];
            BigInt bot = p * (*t.u)[i][c] + q * (*t.u)[j][c];
            (*t.u)[i][c] = top;
            (*t.u)[j][c] = bot;
        }
}
void col_combine(Dense& a, Tracker t, std::size_t i, std::size_t j, const BigInt& x,
                 const BigInt& y, const BigInt& p, const BigInt& q) {
    for (auto& row : a) {
        BigInt left = x * row[i] + y * row[j];
        BigInt right = p * row[i] + q * row[j];
        row[i] = left;
        row[j] = right;
    }
    if (t.v)
        for (auto& row : *t.v) {
            BigInt left = x * row[i] + y * row[j];
            BigInt right = p * row[i] + q * row[j];
            row[i] = left;
            row[j] = right;
        }
}

std::vector<BigInt> bezout_snf(Dense a, Tracker t) {
    if (a.empty() || a[0].empty()) return {};
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<BigInt> diagonal;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pr = k, pc = k;
        BigInt best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                BigInt mag = abs(a[i][j]);
                if (best == 0 || mag < best) {
                    best = mag;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break;
        swap_rows(a, t, k, pr);
        swap_cols(a, t, k, pc);
        for (bool settled = false; !settled;) {
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0) continue;
                if (a[i][k] % a[k][k] == 0) {
                    row_axpy(a, t, i, k, a[i][k] / a[k][k]);
                } else {
                    BigInt g, x, y;
                    extended_gcd(a[k][k], a[i][k], g, x, y);
                    row_combine(a, t, k, i, x, y, -(a[i][k] / g), a[k][k] / g);
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0) continue;
                if (a[k][j] % a[k][k] == 0) {
                    col_axpy(a, t, j, k, a[k][j] / a[k][k]);
                } else {
                    BigInt g, x, y;
                    extended_gcd(a[k][k], a[k][j], g, x, y);
                    col_combine(a, t, k, j, x, y, -(a[k][j] / g), a[k][k] / g);
                }
            }
            bool col_clear = true, row_clear = true;
            for (std::size_t i = k + 1; i < rows; ++i)
                if (a[i][k] != 0) col_clear = false;
            for (std::size_t j = k + 1; j < cols; ++j)
                if (a[k][j] != 0) row_clear = false;
            if (!col_clear || !row_clear) continue;
            // Enforce the divisibility chain before moving on.
            bool fixed = false;
            for (std::size_t i = k + 1; i < rows && !fixed; ++i)
                for (std::size_t j = k + 1; j < cols && !fixed; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        row_axpy(a, t, k, i, BigInt(-1));
                        fixed = true;
                    }
            settled = !fixed;
        }
        if (a[k][k] < 0) {
            for (std::size_t j = 0; j < cols; ++j) a[k][j] = -a[k][j];
            if (t.u)
                for (auto& v : (*t.u)[k]) v = -v;
        }
        diagonal.push_back(a[k][k]);
    }
    return diagonal;
}

Dense to_dense(const IntegerMatrix& m) {
    Dense a(m.rows(), std::vector<BigInt>(m.cols(), 0));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    return a;
}

IntegerMatrix from_dense(const Dense& a, std::size_t rows, std::size_t cols) {
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0) m.set(i, j, a[i][j]);
    return m;
}

template <class T>
bool load_sparse(const IntegerMatrix& m, SparseState<T>& s);

template <>
bool load_sparse<std::int64_t>(const IntegerMatrix& m, SparseState<std::int64_t>& s) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    s.row.assign(m.rows(), {});
    s.col_rows.assign(m.cols(), {});
    for (const auto& [rc, v] : m.entries()) {
        if (v < lo || v > hi) return false;
        s.put(static_cast<int>(rc.first), static_cast<int>(rc.second),
              static_cast<std::int64_t>(v));
    }
    return true;
}

template <>
bool load_sparse<BigInt>(const IntegerMatrix& m, SparseState<BigInt>& s) {
    s.row.assign(m.rows(), {});
    s.col_rows.assign(m.cols(), {});
    for (const auto& [rc, v] : m.entries())
        s.put(static_cast<int>(rc.first), static_cast<int>(rc.second), v);
    return true;
}

SmithResult assemble(std::size_t unit_count, std::vector<BigInt> residual_diagonal) {
    SmithResult out;
    out.diagonal.assign(unit_count, 1);
    out.diagonal.insert(out.diagonal.end(), residual_diagonal.begin(), residual_diagonal.end());
    out.rank = out.diagonal.size();
    return out;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m, bool witnesses) {
    if (witnesses) {
        Dense a = to_dense(m);
        Dense u(m.rows(), std::vector<BigInt>(m.rows(), 0));
        Dense v(m.cols(), std::vector<BigInt>(m.cols(), 0));
        for (std::size_t i = 0; i < m.rows(); ++i) u[i][i] = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) v[j][j] = 1;
        SmithResult out;
        out.diagonal = bezout_snf(std::move(a), Tracker{&u, &v});
        out.rank = out.diagonal.size();
        out.row_ops = from_dense(u, m.rows(), m.rows());
        out.col_ops = from_dense(v, m.cols(), m.cols());
        IntegerMatrix d(m.rows(), m.cols());
        for (std::size_t i = 0; i < out.diagonal.size(); ++i) d.set(i, i, out.diagonal[i]);
        if (!(out.row_ops->multiply(m).multiply(*out.col_ops) == d))
            throw std::logic_error("Smith witnesses failed to reproduce the diagonal");
        return out;
    }
    {
        SparseState<std::int64_t> s;
        if (load_sparse(m, s)) {
            EliminationOutcome outcome = eliminate_units(s);
            if (!outcome.overflow)
                return assemble(outcome.unit_count,
                                bezout_snf(std::move(outcome.residual), Tracker{}));
        }
    }
    SparseState<BigInt> s;
    load_sparse(m, s);
    EliminationOutcome outcome = eliminate_units(s);
    return assemble(outcome.unit_count, bezout_snf(std::move(outcome.residual), Tracker{}));
}

SmithResult smith_normal_form_reference(const IntegerMatrix& m) {
    Dense a = to_dense(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult out;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find the smallest nonzero entry in the trailing block.
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                if (!found || abs(a[i][j]) < abs(a[pr][pc])) {
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);

        bool again = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            BigInt q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) again = true;  // remainder smaller than pivot
        }
        if (again) continue;
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            BigInt q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) again = true;
        }
        if (again) continue;
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
                    divides_all = false;
                }
        if (!divides_all) continue;
        if (a[t][t] < 0)
            for (std::size_t j = t; j < cols; ++j) a[t][j] = -a[t][j];
        out.diagonal.push_back(a[t][t]);
        ++t;
    }
    out.rank = out.diagonal.size();
    return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int degree) {
    auto buckets = k.faces_by_dim();
    const int dim = static_cast<int>(buckets.size()) - 1;
    if (degree < -1 || degree > dim + 1)
        throw std::invalid_argument("boundary degree out of range");
    if (degree == -1) return IntegerMatrix(0, 1);
    const std::size_t cols = degree <= dim ? buckets[degree].size() : 0;
    if (degree == 0) {
        IntegerMatrix m(1, cols);
        for (std::size_t j = 0; j < cols; ++j) m.set(0, j, 1);
        return m;
    }
    const auto& faces = buckets[degree];
    const auto& below = buckets[degree - 1];
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < below.size(); ++i) row_of.emplace(below[i], i);
    IntegerMatrix m(below.size(), cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& vs = faces[j].vertices();
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
            std::vector<int> sub;
            sub.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != drop) sub.push_back(vs[i]);
            m.set(row_of.at(Simplex(sub)), j, (drop % 2 == 0) ? 1 : -1);
        }
    }
    return m;
}

HomologyProfile::HomologyProfile(std::map<int, HomologyGroup> groups) {
    for (auto& [d, g] : groups)
        if (!g.trivial()) groups_.emplace(d, std::move(g));
}

HomologyGroup HomologyProfile::group(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? HomologyGroup{} : it->second;
}

std::optional<int> HomologyProfile::single_sphere_dim() const {
    auto w = wedge_of_spheres();
    if (w && w->second == 1) return w->first;
    return std::nullopt;
}

std::optional<std::pair<int, long>> HomologyProfile::wedge_of_spheres() const {
    if (groups_.size() != 1) return std::nullopt;
    const auto& [degree, g] = *groups_.begin();
    if (!g.torsion.empty() || g.betti < 1) return std::nullopt;
    return std::make_pair(degree, g.betti);
}

HomologyProfile HomologyProfile::shifted(int offset) const {
    std::map<int, HomologyGroup> moved;
    for (const auto& [d, g] : groups_) moved.emplace(d + offset, g);
    return HomologyProfile(std::move(moved));
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
    auto buckets = k.faces_by_dim();
    const int dim = static_cast<int>(buckets.size()) - 1;

    std::map<Simplex, std::size_t> row_of;
    std::vector<SmithResult> snf(dim + 3);
    for (int d = 0; d <= dim + 1; ++d) {
        const std::size_t cols = d <= dim ? buckets[d].size() : 0;
        IntegerMatrix m(d == 0 ? 1 : buckets[d - 1].size(), cols);
        if (d == 0) {
            for (std::size_t j = 0; j < cols; ++j) m.set(0, j, 1);
        } else {
            row_of.clear();
            for (std::size_t i = 0; i < buckets[d - 1].size(); ++i)
                row_of.emplace(buckets[d - 1][i], i);
            for (std::size_t j = 0; j < cols; ++j) {
                const auto& vs = buckets[d][j].vertices();
                for (std::size_t drop = 0; drop < vs.size(); ++drop) {
                    std::vector<int> sub;
                    sub.reserve(vs.size() - 1);
                    for (std::size_t i = 0; i < vs.size(); ++i)
                        if (i != drop) sub.push_back(vs[i]);
                    m.set(row_of.at(Simplex(sub)), j, (drop % 2 == 0) ? 1 : -1);
                }
            }
        }
        snf[d] = smith_normal_form(m);
    }

    std::map<int, HomologyGroup> groups;
    for (int d = -1; d <= dim; ++d) {
        const long faces = d == -1 ? 1 : static_cast<long>(buckets[d].size());
        const long rank_here = d == -1 ? 0 : static_cast<long>(snf[d].rank);
        const long rank_above = static_cast<long>(snf[d + 1].rank);
        HomologyGroup g;
        g.betti = faces - rank_here - rank_above;
        for (const auto& factor : snf[d + 1].diagonal)
            if (factor > 1) g.torsion.push_back(factor);
        groups.emplace(d, std::move(g));
    }
    return HomologyProfile(std::move(groups));
}

Connectivity homological_connectivity(const HomologyProfile& profile) {
    if (profile.nonzero_groups().empty()) return {true, 0};
    return {false, profile.nonzero_groups().begin()->first - 1};
}

Connectivity homological_connectivity(const SimplicialComplex& k) {
    return homological_connectivity(reduced_homology(k));
}

}  // namespace indcomp
