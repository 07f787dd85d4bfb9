#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

using Rat = boost::multiprecision::cpp_rational;

// A system of linear constraints over free rational variables. Row i encodes
//   sum_j lhs[i][j] * z_j  (>= | ==)  rhs[i].
struct LinearSystem {
    std::size_t vars = 0;
    std::vector<std::vector<Rat>> lhs;
    std::vector<Rat> rhs;
    std::vector<bool> equality;  // default: all inequalities (>=)

    void add_ge(std::vector<Rat> row, Rat bound);
    void add_eq(std::vector<Rat> row, Rat bound);
};

// Exact phase-I simplex (Bland's rule, rational pivots): a satisfying point,
// or nullopt when the system is infeasible. No floating point anywhere.
std::optional<std::vector<Rat>> solve_feasible(const LinearSystem& sys);

// True when some functional y has y.a_j >= 1 for every column a_j, i.e. the
// semigroup generated by the columns is pointed.
bool is_pointed(const VectorConfig& A);

// Integer-scaled strictly positive functional, when one exists.
std::optional<Vec> pointedness_certificate(const VectorConfig& A);

}  // namespace toric::lattice
