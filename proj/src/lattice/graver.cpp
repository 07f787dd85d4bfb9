#include "toric/lattice/graver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toric/kernels/vecops.hpp"
#include "toric/lattice/kernel.hpp"
#include "toric/lattice/lp.hpp"

namespace toric::lattice {

namespace {

struct NormLex {
    bool operator()(const Vec& a, const Vec& b) const { return norm_lex_less(a, b); }
};

// Fully reduce s against g: subtract any conformal divisor until none applies.
// Returns the zero vector when s reduces away.
Vec normal_form(Vec s, const std::vector<Vec>& g) {
    const auto& ops = kernels::active_ops();
    bool again = true;
    while (again) {
        again = false;
        for (const Vec& h : g) {
            if (ops.conformal_divides(h.data(), s.data(), s.size())) {
                if (!ops.sub_checked(s.data(), h.data(), s.data(), s.size()))
                    throw OverflowError("vector subtraction overflowed the 64-bit range");
                if (is_zero_vector(s)) return s;
                again = true;
            }
        }
    }
    return s;
}

}  // namespace

GraverResult graver(const VectorConfig& A, std::optional<u64> degree_cap) {
    auto basis = kernel_lattice(A);
    GraverResult result;
    if (basis.empty()) return result;
    if (!degree_cap && basis.size() > 1 && !is_pointed(A))
        throw std::domain_error("completion may not terminate meaningfully; cap required");

    std::vector<Vec> g;
    for (const Vec& b : basis) {
        g.push_back(b);
        Vec neg(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
        g.push_back(std::move(neg));
    }

    std::set<Vec, NormLex> pending;
    auto push_sums = [&](const Vec& f) {
        for (const Vec& h : g) {
            if (&h == &f) continue;
            if (!kernels::active_ops().opposite_signs(f.data(), h.data(), f.size()))
                continue;  // same-orthant sums reduce to their own summands
            Vec s = checked_add_vec(f, h);
            if (!is_zero_vector(s)) pending.insert(std::move(s));
        }
    };
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (!kernels::active_ops().opposite_signs(g[i].data(), g[j].data(), g[i].size()))
                continue;
            Vec s = checked_add_vec(g[i], g[j]);
            if (!is_zero_vector(s)) pending.insert(std::move(s));
        }
    }

    while (!pending.empty()) {
        Vec s = *pending.begin();
        pending.erase(pending.begin());
        Vec r = normal_form(std::move(s), g);
        if (is_zero_vector(r)) continue;
        if (degree_cap && vector_degree(r) > *degree_cap) {
            result.truncated = true;
            continue;
        }
        g.push_back(r);
        push_sums(g.back());
    }

    // Keep the conformally minimal elements; fold signs together. An over-cap
    // kernel basis vector can reach this point, so the cap is re-applied.
    std::set<Vec> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < g.size() && minimal; ++j)
            if (j != i && g[j] != g[i] && divides(g[j], g[i])) minimal = false;
        if (!minimal) continue;
        if (degree_cap && vector_degree(g[i]) > *degree_cap) {
            result.truncated = true;
            continue;
        }
        out.insert(sign_canonical(g[i]));
    }
    result.elements.assign(out.begin(), out.end());
    std::sort(result.elements.begin(), result.elements.end(), norm_lex_less);
    return result;
}

}  // namespace toric::lattice
