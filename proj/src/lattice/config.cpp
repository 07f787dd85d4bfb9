#include "toric/lattice/config.hpp"

#include <sstream>
#include <stdexcept>

#include "toric/kernels/vecops.hpp"

namespace toric::lattice {

VectorConfig::VectorConfig(std::size_t rows, std::size_t cols, Vec row_major,
                           std::vector<std::string> column_names)
    : rows_(rows), cols_(cols), entries_(std::move(row_major)), names_(std::move(column_names)) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match dimensions");
    if (!names_.empty() && names_.size() != cols_)
        throw std::invalid_argument("column name count does not match column count");
    for (std::size_t c = 0; c < cols_; ++c) {
        bool nonzero = false;
        for (std::size_t r = 0; r < rows_ && !nonzero; ++r) nonzero = at(r, c) != 0;
        if (!nonzero)
            throw std::invalid_argument("column " + std::to_string(c + 1) +
                                        " of the configuration is zero");
    }
}

VectorConfig VectorConfig::from_graph(const Graph& g) {
    if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
    std::size_t rows = std::size_t(g.vertex_count());
    std::size_t cols = std::size_t(g.edge_count());
    Vec entries(rows * cols, 0);
    std::vector<std::string> names;
    names.reserve(cols);
    for (std::size_t e = 0; e < cols; ++e) {
        const auto& ed = g.edge(int(e));
        entries[std::size_t(ed.u) * cols + e] = 1;
        entries[std::size_t(ed.v) * cols + e] = 1;
        names.push_back(g.vertex_name(ed.u) + "-" + g.vertex_name(ed.v));
    }
    return VectorConfig(rows, cols, std::move(entries), std::move(names));
}

VectorConfig VectorConfig::parse_matrix(std::istream& in) {
    // Strip comments, then read "rows cols" and row-major entries.
    std::string text, line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line;
        text += '\n';
    }
    std::istringstream ss(text);
    long long rows = 0, cols = 0;
    if (!(ss >> rows >> cols) || rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix header must be two positive integers: rows cols");
    Vec entries;
    entries.reserve(std::size_t(rows) * std::size_t(cols));
    long long value = 0;
    while (ss >> value) entries.push_back(i64(value));
    if (entries.size() != std::size_t(rows) * std::size_t(cols))
        throw std::invalid_argument("matrix text has " + std::to_string(entries.size()) +
                                    " entries, expected " + std::to_string(rows * cols));
    return VectorConfig(std::size_t(rows), std::size_t(cols), std::move(entries));
}

VectorConfig VectorConfig::parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

std::string VectorConfig::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) out << ' ';
            out << at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

Vec VectorConfig::column(std::size_t c) const {
    Vec col(rows_);
    for (std::size_t r = 0; r < rows_; ++r) col[r] = at(r, c);
    return col;
}

Vec VectorConfig::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    Vec b(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        i64 acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (x[c] != 0) acc = checked_add(acc, checked_mul(at(r, c), x[c]));
        b[r] = acc;
    }
    return b;
}

Vec VectorConfig::a_degree(const Vec& u) const { return apply(positive_part(u)); }

Vec positive_part(const Vec& v) {
    Vec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] > 0 ? v[i] : 0;
    return p;
}

Vec negative_part(const Vec& v) {
    Vec p(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] < 0 ? -v[i] : 0;
    return p;
}

bool is_zero_vector(const Vec& v) {
    for (i64 x : v)
        if (x != 0) return false;
    return true;
}

Vec sign_canonical(Vec v) {
    for (i64 x : v) {
        if (x > 0) return v;
        if (x < 0) {
            for (i64& y : v) y = checked_sub(0, y);
            return v;
        }
    }
    return v;
}

u64 one_norm_of(const Vec& v) {
    u64 out = 0;
    if (!kernels::active_ops().one_norm(v.data(), v.size(), &out))
        throw OverflowError("1-norm exceeds the 64-bit range");
    return out;
}

u64 vector_degree(const Vec& v) {
    u64 plus = 0, minus = 0;
    for (i64 x : v) {
        bool bad = false;
        if (x > 0) bad = __builtin_add_overflow(plus, u64(x), &plus);
        if (x < 0) bad = __builtin_add_overflow(minus, u64(0) - u64(x), &minus);
        if (bad) throw OverflowError("binomial degree exceeds the 64-bit range");
    }
    return plus > minus ? plus : minus;
}

bool norm_lex_less(const Vec& a, const Vec& b) {
    u64 na = one_norm_of(a), nb = one_norm_of(b);
    if (na != nb) return na < nb;
    return a < b;
}

bool divides(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    return kernels::active_ops().conformal_divides(u.data(), v.data(), u.size());
}

Vec checked_add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec out(a.size());
    if (!kernels::active_ops().add_checked(a.data(), b.data(), out.data(), a.size()))
        throw OverflowError("vector addition overflowed the 64-bit range");
    return out;
}

Vec checked_sub_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    Vec out(a.size());
    if (!kernels::active_ops().sub_checked(a.data(), b.data(), out.data(), a.size()))
        throw OverflowError("vector subtraction overflowed the 64-bit range");
    return out;
}

}  // namespace toric::lattice
