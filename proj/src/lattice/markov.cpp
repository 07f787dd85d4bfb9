#include "toric/lattice/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "toric/lattice/fiber.hpp"
#include "toric/lattice/graver.hpp"
#include "toric/lattice/lp.hpp"

namespace toric::lattice {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[std::size_t(a)] != a) {
            parent[std::size_t(a)] = parent[std::size_t(parent[std::size_t(a)])];
            a = parent[std::size_t(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

i64 weigh(const Vec& y, const Vec& b) {
    i64 acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) acc = checked_add(acc, checked_mul(y[i], b[i]));
    return acc;
}

}  // namespace

MarkovResult markov_by_fibers(const VectorConfig& A) {
    auto cert = pointedness_certificate(A);
    if (!cert)
        throw std::domain_error(
            "configuration is not pointed; use the nonpointed construction instead");

    auto gr = graver(A);

    // Candidate degrees in increasing (certificate weight, lex) order; the
    // weight strictly increases along the divisibility order on degrees, so
    // earlier fibers never depend on later ones.
    std::set<std::pair<i64, Vec>> degrees;
    for (const Vec& u : gr.elements) {
        Vec b = A.a_degree(u);
        degrees.emplace(weigh(*cert, b), std::move(b));
    }

    struct Accepted {
        Vec vec, plus;
        i64 weight;
    };
    std::vector<Accepted> accepted;
    MarkovResult result;

    for (const auto& [weight, b] : degrees) {
        Fiber f = fiber(A, b, *cert);
        const auto& pts = f.points;
        std::map<Vec, int> index;
        for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], int(i));

        Dsu dsu(pts.size());
        for (const auto& g : accepted) {
            if (g.weight >= weight) continue;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (!divides(g.plus, pts[i])) continue;  // move needs pts[i] >= g+
                auto it = index.find(checked_sub_vec(pts[i], g.vec));
                if (it != index.end()) dsu.unite(int(i), it->second);
            }
        }

        // One representative per component: its lex-smallest point (points are
        // lex-sorted, so the first index seen per root is it). A star over the
        // representatives, rooted at the overall smallest, closes the fiber.
        std::map<int, int> rep;
        for (std::size_t i = 0; i < pts.size(); ++i) rep.emplace(dsu.find(int(i)), int(i));
        if (rep.size() <= 1) continue;
        std::vector<int> reps;
        reps.reserve(rep.size());
        for (const auto& [root, idx] : rep) {
            (void)root;
            reps.push_back(idx);
        }
        std::sort(reps.begin(), reps.end());

        bool lone_pair = pts.size() == 2;
        for (std::size_t i = 1; i < reps.size(); ++i) {
            Vec v = sign_canonical(
                checked_sub_vec(pts[std::size_t(reps[i])], pts[std::size_t(reps[0])]));
            accepted.push_back({v, positive_part(v), weight});
            result.elements.push_back(std::move(v));
            result.indispensable.push_back(lone_pair);
        }
    }

    // Canonical output order, keeping flags aligned.
    std::vector<std::size_t> order(result.elements.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return norm_lex_less(result.elements[a], result.elements[b]);
    });
    MarkovResult sorted;
    for (std::size_t i : order) {
        sorted.elements.push_back(std::move(result.elements[i]));
        sorted.indispensable.push_back(result.indispensable[i]);
    }
    return sorted;
}

}  // namespace toric::lattice
