#include "toric/lattice/ugb.hpp"

#include <optional>
#include <stdexcept>

#include "toric/lattice/fiber.hpp"
#include "toric/lattice/graver.hpp"
#include "toric/lattice/lp.hpp"
#include "toric/parallel.hpp"

namespace toric::lattice {

namespace {

// x strictly inside the segment [p, q]? All deviations must be proportional
// with one rational parameter in (0, 1).
bool strictly_between(const Vec& x, const Vec& p, const Vec& q) {
    std::optional<Rat> lambda;
    for (std::size_t i = 0; i < x.size(); ++i) {
        i64 d = checked_sub(p[i], q[i]);
        i64 e = checked_sub(x[i], q[i]);
        if (d == 0) {
            if (e != 0) return false;
            continue;
        }
        Rat l = Rat(e) / Rat(d);
        if (!lambda)
            lambda = l;
        else if (*lambda != l)
            return false;
    }
    return lambda && *lambda > 0 && *lambda < 1;
}

}  // namespace

bool in_ugb(const VectorConfig& A, const Vec& u) {
    if (u.size() != A.cols()) throw std::invalid_argument("dimension mismatch");
    if (is_zero_vector(u)) throw std::invalid_argument("vector is zero");
    if (!is_zero_vector(A.apply(u)))
        throw std::invalid_argument("vector is not in the kernel lattice");
    auto cert = pointedness_certificate(A);
    if (!cert) throw std::domain_error("configuration is not pointed");

    Vec plus = positive_part(u), minus = negative_part(u);
    Fiber f = fiber(A, A.apply(plus), *cert);

    std::vector<const Vec*> others;
    others.reserve(f.points.size());
    for (const Vec& x : f.points) {
        if (x == plus || x == minus) continue;
        if (strictly_between(x, plus, minus))
            throw std::invalid_argument(
                "vector is not primitive: a fiber point lies between its monomials");
        others.push_back(&x);
    }
    if (others.empty()) return true;  // two-point fiber: the segment is the hull

    LinearSystem sys;
    sys.vars = A.cols();
    std::vector<Rat> tie(A.cols());
    for (std::size_t i = 0; i < A.cols(); ++i) tie[i] = u[i];
    sys.add_eq(std::move(tie), Rat(0));  // w.(u+) = w.(u-)
    for (const Vec* x : others) {
        std::vector<Rat> row(A.cols());
        for (std::size_t i = 0; i < A.cols(); ++i) row[i] = checked_sub(plus[i], (*x)[i]);
        sys.add_ge(std::move(row), Rat(1));  // w.(u+) >= w.x + 1
    }
    return solve_feasible(sys).has_value();
}

std::vector<Vec> ugb_elements(const VectorConfig& A) {
    auto gr = graver(A);
    auto keep = parallel_map_concat<Vec>(gr.elements.size(), [&](std::size_t i) -> std::vector<Vec> {
        if (in_ugb(A, gr.elements[i])) return {gr.elements[i]};
        return {};
    });
    return keep;  // graver order is already (1-norm, lex)
}

}  // namespace toric::lattice
