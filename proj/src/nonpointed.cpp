#include "toric/nonpointed.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "toric/lattice/circuits.hpp"
#include "toric/lattice/graver.hpp"
#include "toric/lattice/lp.hpp"

namespace toric {
namespace {

BigInt gcd_of(const std::vector<BigInt>& values) {
    BigInt d = 0;
    for (const BigInt& v : values) d = boost::multiprecision::gcd(d, v);
    return d;
}

std::string str(const BigInt& v) { return v.str(); }

}  // namespace

LaurentBinomialSet markov_from_coprimes(const std::vector<BigInt>& q) {
    if (q.size() < 2) throw std::invalid_argument("need at least two coprime factors");
    for (const BigInt& qi : q)
        if (qi <= 1)
            throw std::invalid_argument("factor " + str(qi) + " is not greater than 1");
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) {
            const BigInt d = boost::multiprecision::gcd(q[i], q[j]);
            if (d != 1)
                throw std::invalid_argument("factors " + str(q[i]) + " and " + str(q[j]) +
                                            " are not coprime (gcd " + str(d) + ")");
        }
    BigInt product = 1;
    for (const BigInt& qi : q) product *= qi;
    LaurentBinomialSet set;
    set.exponents.reserve(q.size());
    for (const BigInt& qi : q) set.exponents.push_back(product / qi);
    return set;
}

MarkovCertificate verify_markov(const LaurentBinomialSet& set) {
    const auto& a = set.exponents;
    if (a.empty()) throw std::invalid_argument("the binomial set is empty");
    for (const BigInt& ai : a)
        if (ai <= 0) throw std::invalid_argument("exponent " + str(ai) + " is not positive");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j])
                throw std::invalid_argument("exponent " + str(a[i]) + " appears twice");

    MarkovCertificate cert;
    cert.overall_gcd = gcd_of(a);
    if (a.size() > 1) {
        cert.leave_one_out.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::vector<BigInt> others;
            others.reserve(a.size() - 1);
            for (std::size_t j = 0; j < a.size(); ++j)
                if (j != i) others.push_back(a[j]);
            cert.leave_one_out.push_back(gcd_of(others));
        }
    }
    cert.valid = cert.overall_gcd == 1 &&
                 std::all_of(cert.leave_one_out.begin(), cert.leave_one_out.end(),
                             [](const BigInt& d) { return d > 1; });
    return cert;
}

std::vector<BasisReport> bases_of_line_config() {
    const lattice::VectorConfig A(1, 2, Vec{1, -1});
    if (lattice::is_pointed(A))
        throw std::logic_error("the line configuration came out pointed");

    const std::vector<Vec> expected{Vec{1, 1}};
    if (lattice::circuits(A) != expected)
        throw std::logic_error("lattice engine disagrees on the circuits of the line");
    const auto graver = lattice::graver(A, u64{2});
    if (graver.truncated || graver.elements != expected)
        throw std::logic_error("lattice engine disagrees on the Graver basis of the line");

    const Binomial element = Binomial::from_vector(Vec{1, 1}).canonical();
    std::vector<BasisReport> reports;
    // Circuits and Graver match, so the universal basis wedged between them
    // is the same single element.
    for (const BasisKind kind : {BasisKind::Circuits, BasisKind::Ugb, BasisKind::Graver}) {
        BasisReport r;
        r.kind = kind;
        r.engine = Engine::Oracle;
        r.elements = {element};
        r.size = 1;
        r.max_degree = u64(element.degree());
        reports.push_back(std::move(r));
    }
    return reports;
}

}  // namespace toric
