#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/report.hpp"

namespace toric {

using BigInt = boost::multiprecision::cpp_int;

// Binomials x^{a_i} y^{a_i} - 1 over the two-variable configuration
// A = (1, -1). Its semigroup is all of Z, not pointed, so minimal generating
// sets are neither unique nor degree-bounded and the fiber walks that drive
// the pointed-case engines never terminate. Exponents are arbitrary
// precision because the construction below multiplies them up.
struct LaurentBinomialSet {
    std::vector<BigInt> exponents;  // each positive, pairwise distinct
};

// Arithmetic certificate that a LaurentBinomialSet generates the ideal of
// A = (1, -1) and is a minimal generating set. Generation holds exactly when
// the gcd of all exponents is 1; dropping element i leaves a set whose ideal
// is generated by x^d y^d - 1 for d = gcd of the others, so minimality holds
// exactly when every leave-one-out gcd exceeds 1 (vacuous for a singleton,
// whose leave_one_out list stays empty).
struct MarkovCertificate {
    bool valid = false;
    BigInt overall_gcd;
    std::vector<BigInt> leave_one_out;
};

// For pairwise coprime factors q_1..q_s (s >= 2, each > 1) and Q = q_1...q_s,
// the exponents a_i = Q/q_i form a minimal Markov basis of size s with max
// binomial degree 2*max(a_i). The size grows without bound in s even though
// the circuits, the universal basis and the Graver basis of the same
// configuration stay a single element of degree 2. A non-coprime pair is
// rejected by an error naming the pair.
LaurentBinomialSet markov_from_coprimes(const std::vector<BigInt>& q);

// Validates the invariants (nonempty, positive, pairwise distinct) and
// returns the gcd certificate described above.
MarkovCertificate verify_markov(const LaurentBinomialSet& set);

// The circuits, the universal basis and the Graver basis of A = (1, -1),
// each the single element x1*x2 - 1 of degree 2: circuits and the Graver
// basis come from the lattice engine (the Graver run degree-capped, since
// unbounded completion has no pointedness guarantee to lean on), and the
// universal basis is pinned between them. Throws if the lattice engine ever
// disagrees with that picture or calls the configuration pointed.
std::vector<BasisReport> bases_of_line_config();

}  // namespace toric
