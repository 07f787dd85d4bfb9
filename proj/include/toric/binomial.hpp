#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "toric/common.hpp"
#include "toric/walk.hpp"

namespace toric {

// Pure difference of two monomials in the edge variables, stored as sparse
// exponent lists sorted by edge index. Canonical orientation: the plus side
// is the lexicographically greater dense exponent vector, so b and -b
// compare equal after canonicalization.
struct Binomial {
    std::vector<std::pair<int, int>> plus, minus;  // (edge index, exponent > 0)

    int degree() const;          // max of the two total degrees
    bool is_reduced() const;     // supports disjoint
    Binomial reduced() const;    // cancel shared factors
    Binomial canonical() const;  // orient and return

    Vec to_vector(int edge_count) const;
    static Binomial from_vector(const Vec& v);

    // "e1*e3 - e2*e4" with 1-based variable names and "^k" exponents.
    std::string text() const;
    // {"plus":[[idx,exp],...],"minus":[...]} with 0-based edge indices.
    std::string json() const;
    static Binomial from_json(const std::string& s);

    friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

// Walk sides: even positions (0-based) multiply into plus, odd into minus.
// A walk that traverses some edge on both sides yields an unreduced binomial
// (reported as-is; is_reduced() exposes it).
Binomial binomial_of_walk(const EvenClosedWalk& w);

// Canonical basis output order: by degree, then by exponent lists.
bool degree_lex_less(const Binomial& a, const Binomial& b);

}  // namespace toric
