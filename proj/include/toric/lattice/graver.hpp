#pragma once

#include <optional>
#include <vector>

#include "toric/lattice/config.hpp"

namespace toric::lattice {

struct GraverResult {
    // Sign-canonical primitive kernel vectors in (1-norm, lex) order.
    std::vector<Vec> elements;
    // True only when the cap actually pruned a candidate; elements with
    // degree <= cap are then still possibly incomplete.
    bool truncated = false;
};

// Completion over the kernel lattice: S-vector sums reduced to conformal
// normal form against the current set, processed in (1-norm, lex) order, with
// a final conformal-minimality audit. Uncapped runs require a pointed
// configuration or a rank-1 kernel; otherwise completion may churn on
// unboundedly growing vectors.
GraverResult graver(const VectorConfig& A, std::optional<u64> degree_cap = std::nullopt);

}  // namespace toric::lattice
