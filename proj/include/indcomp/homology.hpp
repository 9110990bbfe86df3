#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indcomp/complex.hpp"

namespace indcomp {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix with unbounded entries; only nonzeros are stored.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, BigInt value);
    const BigInt& get(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, BigInt>& entries() const {
        return entries_;
    }

    IntegerMatrix multiply(const IntegerMatrix& other) const;
    bool operator==(const IntegerMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> entries_;
};

// Invariant factors d1 | d2 | ... | dr (all positive), r = rank.  When
// witnesses are requested, row_ops * M * col_ops equals the diagonal matrix
// of the factors and both transforms are unimodular; this identity is checked
// internally before returning.
struct SmithResult {
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
    std::optional<IntegerMatrix> row_ops;
    std::optional<IntegerMatrix> col_ops;
};

// Production reducer: sparse elimination over unit pivots (Markowitz-guided,
// 64-bit fast path with overflow escalation to big integers) followed by a
// Bezout-combination dense pass on the residual.
SmithResult smith_normal_form(const IntegerMatrix& m, bool witnesses = false);

// Straightforward textbook reducer kept as an independent oracle: dense big
// integers, minimum-absolute-value pivot, repeated division with remainder.
SmithResult smith_normal_form_reference(const IntegerMatrix& m);

// Boundary map from k-faces to (k-1)-faces of the augmented chain complex;
// k = 0 is the augmentation row onto the empty face.  Valid for -1 <= k <=
// dim(K) + 1 so callers can take the zero map one degree past the top.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int degree);

struct HomologyGroup {
    long betti = 0;
    std::vector<BigInt> torsion;
    bool trivial() const { return betti == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& other) const = default;
};

// Reduced integral homology per degree >= -1; only nonzero groups are kept.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(std::map<int, HomologyGroup> groups);

    const std::map<int, HomologyGroup>& nonzero_groups() const { return groups_; }
    HomologyGroup group(int degree) const;

    bool is_point() const { return groups_.empty(); }
    // Degree of the single sphere this profile matches, if any (betti 1 in one
    // degree, no torsion anywhere).
    std::optional<int> single_sphere_dim() const;
    // (degree, count) when the profile is a torsion-free wedge of equal
    // dimensional spheres; a point yields nullopt.
    std::optional<std::pair<int, long>> wedge_of_spheres() const;

    HomologyProfile shifted(int offset) const;

    bool operator==(const HomologyProfile& other) const { return groups_ == other.groups_; }

private:
    std::map<int, HomologyGroup> groups_;
};

HomologyProfile reduced_homology(const SimplicialComplex& k);

// Largest c with every reduced group trivial in degrees <= c; `all` set when
// the whole profile vanishes.  The empty complex yields level -2.
struct Connectivity {
    bool all = false;
    int level = 0;
    bool at_least(int bound) const { return all || level >= bound; }
    std::string text() const { return all ? "all" : std::to_string(level); }
};

Connectivity homological_connectivity(const HomologyProfile& profile);
Connectivity homological_connectivity(const SimplicialComplex& k);

}  // namespace indcomp
