#include "toric/binomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace toric {
namespace {

int total(const std::vector<std::pair<int, int>>& side) {
    int t = 0;
    for (const auto& [e, k] : side) t += k;
    return t;
}

// dense-lex comparison of sparse exponent lists (entries sorted by index):
// at the first index where they differ the larger exponent wins
bool dense_lex_less(const std::vector<std::pair<int, int>>& a,
                    const std::vector<std::pair<int, int>>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        const int ia = i < a.size() ? a[i].first : INT32_MAX;
        const int ib = j < b.size() ? b[j].first : INT32_MAX;
        if (ia < ib) return false;  // a has exponent >0 where b has 0
        if (ib < ia) return true;
        if (a[i].second != b[j].second) return a[i].second < b[j].second;
        ++i, ++j;
    }
    return false;
}

std::string side_text(const std::vector<std::pair<int, int>>& side) {
    if (side.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, k] : side) {
        if (!first) out << '*';
        first = false;
        out << 'e' << (e + 1);
        if (k != 1) out << '^' << k;
    }
    return out.str();
}

}  // namespace

int Binomial::degree() const { return std::max(total(plus), total(minus)); }

bool Binomial::is_reduced() const {
    std::size_t i = 0, j = 0;
    while (i < plus.size() && j < minus.size()) {
        if (plus[i].first == minus[j].first) return false;
        if (plus[i].first < minus[j].first) ++i;
        else ++j;
    }
    return true;
}

Binomial Binomial::reduced() const {
    Binomial out;
    std::size_t i = 0, j = 0;
    while (i < plus.size() || j < minus.size()) {
        const int ia = i < plus.size() ? plus[i].first : INT32_MAX;
        const int ib = j < minus.size() ? minus[j].first : INT32_MAX;
        if (ia < ib) out.plus.push_back(plus[i++]);
        else if (ib < ia) out.minus.push_back(minus[j++]);
        else {
            const int k = plus[i].second - minus[j].second;
            if (k > 0) out.plus.push_back({ia, k});
            if (k < 0) out.minus.push_back({ia, -k});
            ++i, ++j;
        }
    }
    return out;
}

Binomial Binomial::canonical() const {
    Binomial out = *this;
    if (dense_lex_less(out.plus, out.minus)) std::swap(out.plus, out.minus);
    return out;
}

Vec Binomial::to_vector(int edge_count) const {
    Vec v(std::size_t(edge_count), 0);
    for (const auto& [e, k] : plus) v.at(std::size_t(e)) += k;
    for (const auto& [e, k] : minus) v.at(std::size_t(e)) -= k;
    return v;
}

Binomial Binomial::from_vector(const Vec& v) {
    Binomial b;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0) b.plus.push_back({int(i), int(v[i])});
        if (v[i] < 0) b.minus.push_back({int(i), int(-v[i])});
    }
    return b;
}

std::string Binomial::text() const { return side_text(plus) + " - " + side_text(minus); }

std::string Binomial::json() const {
    nlohmann::json j;
    j["plus"] = nlohmann::json::array();
    j["minus"] = nlohmann::json::array();
    for (const auto& [e, k] : plus) j["plus"].push_back({e, k});
    for (const auto& [e, k] : minus) j["minus"].push_back({e, k});
    return j.dump();
}

Binomial Binomial::from_json(const std::string& s) {
    const auto j = nlohmann::json::parse(s);
    Binomial b;
    for (const auto& it : j.at("plus")) b.plus.push_back({it.at(0).get<int>(), it.at(1).get<int>()});
    for (const auto& it : j.at("minus"))
        b.minus.push_back({it.at(0).get<int>(), it.at(1).get<int>()});
    auto check = [](const std::vector<std::pair<int, int>>& side) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            if (side[i].second <= 0) throw std::invalid_argument("exponents must be positive");
            if (i > 0 && side[i].first <= side[i - 1].first)
                throw std::invalid_argument("indices must be strictly increasing");
        }
    };
    check(b.plus);
    check(b.minus);
    return b;
}

Binomial binomial_of_walk(const EvenClosedWalk& w) {
    std::map<int, int> p, m;
    const auto& seq = w.edge_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i % 2 == 0) ++p[seq[i]];
        else ++m[seq[i]];
    }
    Binomial b;
    for (const auto& [e, k] : p) b.plus.push_back({e, k});
    for (const auto& [e, k] : m) b.minus.push_back({e, k});
    return b.canonical();
}

bool degree_lex_less(const Binomial& a, const Binomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.plus != b.plus) return a.plus < b.plus;
    return a.minus < b.minus;
}

}  // namespace toric
