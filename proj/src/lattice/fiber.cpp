#include "toric/lattice/fiber.hpp"

#include <stdexcept>

#include "toric/lattice/lp.hpp"

namespace toric::lattice {

namespace {

struct Search {
    const VectorConfig& A;
    std::size_t m;
    Vec weight_of_col;   // y.a_j, all >= 1
    std::vector<int> last_touch;  // per row: last column with a nonzero entry
    std::vector<int> last_neg;    // per row: last column with a negative entry
    Vec x, residual;
    i64 budget = 0;  // y.residual, invariant
    std::vector<Vec>* out = nullptr;

    void descend(std::size_t j) {
        if (budget < 0) return;
        for (std::size_t r = 0; r < A.rows(); ++r) {
            // Once no later column can raise (or touch) row r, its residual
            // must already be consistent.
            if (residual[r] < 0 && int(j) > last_neg[r]) return;
            if (residual[r] != 0 && int(j) > last_touch[r]) return;
        }
        if (j == m) {
            for (std::size_t r = 0; r < A.rows(); ++r)
                if (residual[r] != 0) return;
            out->push_back(x);
            return;
        }
        i64 max_t = budget / weight_of_col[j];
        for (i64 t = 0; t <= max_t; ++t) {
            x[j] = t;
            descend(j + 1);
            // advance residual for the next multiplicity
            if (t < max_t) {
                for (std::size_t r = 0; r < A.rows(); ++r)
                    residual[r] = checked_sub(residual[r], A.at(r, j));
                budget -= weight_of_col[j];
            }
        }
        for (std::size_t r = 0; r < A.rows(); ++r)
            residual[r] = checked_add(residual[r], checked_mul(A.at(r, j), max_t));
        budget += weight_of_col[j] * max_t;
        x[j] = 0;
    }
};

}  // namespace

Fiber fiber(const VectorConfig& A, Vec b, const Vec& certificate) {
    if (b.size() != A.rows()) throw std::invalid_argument("dimension mismatch");
    if (certificate.size() != A.rows()) throw std::invalid_argument("dimension mismatch");

    Search s{A, A.cols(), Vec(A.cols(), 0), std::vector<int>(A.rows(), -1),
             std::vector<int>(A.rows(), -1), Vec(A.cols(), 0), b, 0, nullptr};
    for (std::size_t c = 0; c < A.cols(); ++c) {
        i64 w = 0;
        for (std::size_t r = 0; r < A.rows(); ++r)
            w = checked_add(w, checked_mul(certificate[r], A.at(r, c)));
        if (w < 1) throw std::invalid_argument("certificate is not strictly positive on the columns");
        s.weight_of_col[c] = w;
    }
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) {
            if (A.at(r, c) != 0) s.last_touch[r] = int(c);
            if (A.at(r, c) < 0) s.last_neg[r] = int(c);
        }
    }
    i64 budget = 0;
    for (std::size_t r = 0; r < A.rows(); ++r)
        budget = checked_add(budget, checked_mul(certificate[r], b[r]));

    Fiber f;
    f.degree = std::move(b);
    s.residual = f.degree;
    s.budget = budget;
    s.out = &f.points;
    if (budget >= 0) s.descend(0);
    return f;
}

Fiber fiber(const VectorConfig& A, Vec b) {
    auto cert = pointedness_certificate(A);
    if (!cert) throw std::domain_error("infinite fiber possible");
    return fiber(A, std::move(b), *cert);
}

}  // namespace toric::lattice
