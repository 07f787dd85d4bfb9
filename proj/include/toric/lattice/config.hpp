#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "toric/common.hpp"
#include "toric/graph.hpp"

namespace toric::lattice {

// An exact integer vector configuration A = {a_1, ..., a_m}: the columns of a
// rows x cols matrix. Zero columns are rejected; dimensions must be positive.
class VectorConfig {
public:
    VectorConfig(std::size_t rows, std::size_t cols, Vec row_major,
                 std::vector<std::string> column_names = {});

    // Vertex-edge incidence matrix: rows = vertices, columns = edges in index
    // order, entry 1 when the vertex is an endpoint. Column names are taken
    // from the graph's edge endpoints ("v2-v5").
    static VectorConfig from_graph(const Graph& g);

    // Text form: first line "rows cols", then row-major integers separated by
    // whitespace. '#' starts a comment until end of line.
    static VectorConfig parse_matrix(std::istream& in);
    static VectorConfig parse_matrix(const std::string& text);
    std::string to_text() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    i64 at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Vec column(std::size_t c) const;
    const std::vector<std::string>& column_names() const { return names_; }

    // A.x for an arbitrary integer point x (checked arithmetic).
    Vec apply(const Vec& x) const;
    // The A-degree of the monomial x^{u+}, i.e. A.(positive part of u).
    Vec a_degree(const Vec& u) const;

private:
    std::size_t rows_, cols_;
    Vec entries_;  // row-major
    std::vector<std::string> names_;
};

// --- lattice vector helpers ----------------------------------------------
// Lattice vectors are plain dense Vec values over the configuration columns.

Vec positive_part(const Vec& v);
Vec negative_part(const Vec& v);
bool is_zero_vector(const Vec& v);

// Flips the sign so the first nonzero entry is positive.
Vec sign_canonical(Vec v);

// Sum of |v_i| (widened, exact).
u64 one_norm_of(const Vec& v);

// Degree of the binomial x^{v+} - x^{v-}: the larger side total.
u64 vector_degree(const Vec& v);

// Deterministic ordering used for basis output: 1-norm first, then
// lexicographic on entries.
bool norm_lex_less(const Vec& a, const Vec& b);

// x^{u+} | x^{v+} and x^{u-} | x^{v-} componentwise (conformal division).
bool divides(const Vec& u, const Vec& v);

Vec checked_add_vec(const Vec& a, const Vec& b);
Vec checked_sub_vec(const Vec& a, const Vec& b);

}  // namespace toric::lattice
