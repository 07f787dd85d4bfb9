#include "toric/lattice/lp.hpp"

#include <limits>
#include <stdexcept>

namespace toric::lattice {

void LinearSystem::add_ge(std::vector<Rat> row, Rat bound) {
    if (row.size() != vars) throw std::invalid_argument("dimension mismatch");
    lhs.push_back(std::move(row));
    rhs.push_back(std::move(bound));
    equality.push_back(false);
}

void LinearSystem::add_eq(std::vector<Rat> row, Rat bound) {
    add_ge(std::move(row), std::move(bound));
    equality.back() = true;
}

std::optional<std::vector<Rat>> solve_feasible(const LinearSystem& sys) {
    const std::size_t k = sys.lhs.size();
    if (k == 0) return std::vector<Rat>(sys.vars, Rat(0));

    // Standard form: z = zp - zn with zp, zn >= 0; each inequality gets a
    // surplus variable; each row gets an artificial. Phase I minimizes the
    // artificial sum; the system is feasible iff the optimum is zero.
    std::size_t n_slack = 0;
    for (bool eq : sys.equality)
        if (!eq) ++n_slack;
    const std::size_t n_struct = 2 * sys.vars + n_slack;
    const std::size_t n_total = n_struct + k;

    // tableau: k rows of [coefficients | rhs], basis = artificials.
    std::vector<std::vector<Rat>> t(k, std::vector<Rat>(n_total + 1, Rat(0)));
    std::size_t slack_at = 2 * sys.vars;
    for (std::size_t i = 0; i < k; ++i) {
        bool flip = sys.rhs[i] < 0;
        Rat sign = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < sys.vars; ++j) {
            t[i][j] = sign * sys.lhs[i][j];
            t[i][sys.vars + j] = -t[i][j];
        }
        if (!sys.equality[i]) {
            t[i][slack_at] = -sign;
            ++slack_at;
        }
        t[i][n_struct + i] = 1;
        t[i][n_total] = flip ? -sys.rhs[i] : sys.rhs[i];
    }

    std::vector<std::size_t> basis(k);
    for (std::size_t i = 0; i < k; ++i) basis[i] = n_struct + i;

    // Reduced cost row for minimizing the artificial sum equals the negated
    // column sums over the constraint rows (artificial columns read zero).
    std::vector<Rat> cost(n_total + 1, Rat(0));
    for (std::size_t j = 0; j <= n_total; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < k; ++i) s += t[i][j];
        cost[j] = -s;
    }
    for (std::size_t i = 0; i < k; ++i) cost[n_struct + i] = 0;

    while (true) {
        // Bland: entering = lowest-index column with negative reduced cost.
        std::size_t enter = n_total;
        for (std::size_t j = 0; j < n_total; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n_total) break;

        // Ratio test; ties go to the smallest basis variable (Bland).
        std::size_t leave = k;
        Rat best;
        for (std::size_t i = 0; i < k; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n_total] / t[i][enter];
            if (leave == k || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == k)
            throw std::logic_error("unbounded phase-I objective");  // cannot happen: bounded below by 0

        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= n_total; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n_total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j <= n_total; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    // Optimal artificial sum = -cost[rhs].
    if (cost[n_total] != 0) return std::nullopt;

    std::vector<Rat> z(sys.vars, Rat(0));
    for (std::size_t i = 0; i < k; ++i) {
        if (basis[i] < sys.vars)
            z[basis[i]] += t[i][n_total];
        else if (basis[i] < 2 * sys.vars)
            z[basis[i] - sys.vars] -= t[i][n_total];
    }
    return z;
}

std::optional<Vec> pointedness_certificate(const VectorConfig& A) {
    LinearSystem sys;
    sys.vars = A.rows();
    for (std::size_t c = 0; c < A.cols(); ++c) {
        std::vector<Rat> row(A.rows());
        for (std::size_t r = 0; r < A.rows(); ++r) row[r] = A.at(r, c);
        sys.add_ge(std::move(row), Rat(1));
    }
    auto y = solve_feasible(sys);
    if (!y) return std::nullopt;

    using boost::multiprecision::cpp_int;
    cpp_int lcm_den = 1;
    for (const Rat& q : *y) lcm_den = lcm(lcm_den, denominator(q));
    Vec out(y->size());
    for (std::size_t i = 0; i < y->size(); ++i) {
        cpp_int scaled = numerator((*y)[i]) * (lcm_den / denominator((*y)[i]));
        if (scaled > std::numeric_limits<i64>::max() || scaled < std::numeric_limits<i64>::min())
            throw OverflowError("pointedness certificate exceeds the 64-bit range");
        out[i] = scaled.convert_to<i64>();
    }
    return out;
}

bool is_pointed(const VectorConfig& A) { return pointedness_certificate(A).has_value(); }

}  // namespace toric::lattice
