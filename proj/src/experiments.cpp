#include "toric/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "toric/classify.hpp"
#include "toric/enumerate.hpp"
#include "toric/families.hpp"
#include "toric/nonpointed.hpp"
#include "toric/parallel.hpp"
#include "toric/walk.hpp"

namespace toric {
namespace {

using nlohmann::ordered_json;

double budget_seconds() {
    const char* env = std::getenv("TORIC_BUDGET_SECS");
    if (env == nullptr || *env == '\0') return 300.0;
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || value < 0)
        throw std::invalid_argument("TORIC_BUDGET_SECS is not a nonnegative number");
    return value;
}

std::string render(bool v) { return v ? "true" : "false"; }
std::string render(int v) { return std::to_string(v); }
std::string render(i64 v) { return std::to_string(v); }
std::string render(u64 v) { return std::to_string(v); }
std::string render(const BigInt& v) { return v.str(); }

// Collects assertions for one experiment and applies the budget gate. The
// nominal costs passed to admits() are fixed declarations (generous upper
// bounds on desk-scale runtime), so whether an instance runs depends only on
// the configured budget, never on the machine.
class Recorder {
public:
    Recorder(ExperimentVerdict& verdict, double budget) : verdict_(verdict), budget_(budget) {}

    bool admits(double nominal_secs) const { return nominal_secs <= budget_; }

    template <class T, class U>
    void equals(const std::string& label, const std::string& provenance, const T& expected,
                const U& computed) {
        const std::string e = render(expected);
        const std::string c = render(computed);
        verdict_.assertions.push_back({label, provenance, e, c, e == c ? "pass" : "fail"});
    }

    void holds(const std::string& label, const std::string& provenance, bool computed) {
        equals(label, provenance, true, computed);
    }

    template <class T>
    void skip(const std::string& label, const std::string& provenance, const T& expected) {
        verdict_.assertions.push_back({label, provenance, render(expected), "-",
                                       "skipped (budget)"});
    }

private:
    ExperimentVerdict& verdict_;
    double budget_;
};

std::vector<int> every_edge(const Graph& g) {
    std::vector<int> out(std::size_t(g.edge_count()));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

const BasisReport& report_of(const ComputeResult& result, BasisKind kind, Engine engine) {
    for (const BasisReport& r : result.reports)
        if (r.kind == kind && r.engine == engine) return r;
    throw std::logic_error("report missing from compute_bases output");
}

std::vector<int> degree_multiset(const std::vector<Binomial>& elements) {
    std::vector<int> out;
    out.reserve(elements.size());
    for (const Binomial& b : elements) out.push_back(b.degree());
    std::sort(out.begin(), out.end());
    return out;
}

void run_ladder_sizes(Recorder& rec) {
    const struct {
        int n;
        double nominal;
    } instances[] = {{1, 5}, {2, 5}, {3, 30}, {4, 30}};
    for (const auto& [n, nominal] : instances) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        const auto [markov_size, shared_size] = expected_ladder_sizes(n);
        const auto [markov_degree, graver_degree] = expected_ladder_max_degrees(n);
        if (!rec.admits(nominal)) {
            rec.skip(tag + "markov size", "expected_ladder_sizes(n)", markov_size);
            rec.skip(tag + "circuit, universal and graver sizes", "expected_ladder_sizes(n)",
                     shared_size);
            continue;
        }
        const Graph g = ladder_graph(n);
        ComputeOptions options;
        if (g.edge_count() > 14) options.degree_cap = u64(graver_degree);
        const ComputeResult result = compute_bases(g, options);
        const BasisReport& circuits = report_of(result, BasisKind::Circuits, Engine::Graph);
        const BasisReport& markov = report_of(result, BasisKind::Markov, Engine::Graph);
        const BasisReport& ugb = report_of(result, BasisKind::Ugb, Engine::Graph);
        const BasisReport& graver = report_of(result, BasisKind::Graver, Engine::Graph);
        rec.equals(tag + "markov size", "expected_ladder_sizes(n)", markov_size, i64(markov.size));
        rec.equals(tag + "circuit size", "expected_ladder_sizes(n)", shared_size,
                   i64(circuits.size));
        rec.equals(tag + "universal size", "expected_ladder_sizes(n)", shared_size, i64(ugb.size));
        rec.equals(tag + "graver size", "expected_ladder_sizes(n)", shared_size, i64(graver.size));
        rec.equals(tag + "markov max degree", "expected_ladder_max_degrees(n)", markov_degree,
                   i64(markov.max_degree));
        rec.equals(tag + "graver max degree", "expected_ladder_max_degrees(n)", graver_degree,
                   i64(graver.max_degree));
        rec.holds(tag + "graver complete under the cap",
                  "the cap equals the top Graver degree, so nothing above it exists to lose",
                  !graver.truncated);
        if (n <= 2) {
            ComputeOptions oracle_options;
            oracle_options.engine = Engine::Oracle;  // uncapped: the lattice runs are small here
            const ComputeResult oracle = compute_bases(g, oracle_options);
            const bool same =
                circuits.elements == report_of(oracle, BasisKind::Circuits, Engine::Oracle).elements &&
                ugb.elements == report_of(oracle, BasisKind::Ugb, Engine::Oracle).elements &&
                graver.elements == report_of(oracle, BasisKind::Graver, Engine::Oracle).elements;
            const BasisReport& oracle_markov = report_of(oracle, BasisKind::Markov, Engine::Oracle);
            const bool same_markov = markov.size == oracle_markov.size &&
                                     degree_multiset(markov.elements) ==
                                         degree_multiset(oracle_markov.elements);
            rec.holds(tag + "lattice engine confirms element for element",
                      "canonical element lists from both engines (markov by size and degrees)",
                      same && same_markov);
        }
    }
}

void run_nonpointed_size(Recorder& rec) {
    const std::vector<BigInt> primes{2, 3, 5, 7, 11, 13};
    for (int s = 2; s <= 6; ++s) {
        const std::string tag = "s=" + std::to_string(s) + " ";
        if (!rec.admits(1)) {
            rec.skip(tag + "markov basis size", "markov_from_coprimes on the first s primes", s);
            continue;
        }
        const std::vector<BigInt> q(primes.begin(), primes.begin() + s);
        const LaurentBinomialSet set = markov_from_coprimes(q);
        const MarkovCertificate cert = verify_markov(set);
        rec.equals(tag + "markov basis size", "markov_from_coprimes keeps one exponent per factor",
                   s, u64(set.exponents.size()));
        rec.holds(tag + "generates and is minimal", "verify_markov gcd certificate", cert.valid);
    }
}

void run_triangle_tree_markov_gap(Recorder& rec) {
    if (!rec.admits(5)) {
        rec.skip("markov strictly inside the universal basis",
                 "proper containment of canonical element lists", true);
        return;
    }
    ComputeOptions options;
    options.engine = Engine::Both;
    const ComputeResult result = compute_bases(triangle_tree(3, 1), options);
    const BasisReport& circuits = report_of(result, BasisKind::Circuits, Engine::Graph);
    const BasisReport& markov = report_of(result, BasisKind::Markov, Engine::Graph);
    const BasisReport& ugb = report_of(result, BasisKind::Ugb, Engine::Graph);
    rec.holds("markov inside the universal basis", "every markov walk is mixed",
              std::includes(ugb.elements.begin(), ugb.elements.end(), markov.elements.begin(),
                            markov.elements.end(), degree_lex_less));
    rec.holds("markov strictly smaller", "the universal basis keeps elements markov drops",
              markov.size < ugb.size);
    rec.holds("circuits equal the universal basis", "canonical element lists",
              circuits.elements == ugb.elements);
    rec.holds("both engines agree", "dual-engine run on the same graph",
              result.agreement.value_or(false));
}

void run_triangle_tree_euler_degree(Recorder& rec) {
    const struct {
        int r;
        double nominal;
        double graver_nominal;
    } instances[] = {{1, 5, 5}, {2, 30, 30}};
    for (const auto& [r, nominal, graver_nominal] : instances) {
        const std::string tag = "r=" + std::to_string(r) + " ";
        const i64 euler_degree = expected_euler_degree(3, r, 1);
        const i64 circuit_degree = expected_max_circuit_degree(3, r, 1);
        if (!rec.admits(nominal)) {
            rec.skip(tag + "euler walk degree", "expected_euler_degree(3,r,1)", euler_degree);
            rec.skip(tag + "max circuit degree", "expected_max_circuit_degree(3,r,1)",
                     circuit_degree);
            continue;
        }
        const Graph g = triangle_tree(3, r);
        const EvenClosedWalk walk = euler_trail(g);
        const Binomial binomial = binomial_of_walk(walk);
        rec.equals(tag + "euler walk degree", "expected_euler_degree(3,r,1)", euler_degree,
                   i64(binomial.degree()));
        rec.holds(tag + "euler walk is primitive",
                  "the whole graph passes the primitive-subgraph test",
                  is_primitive_subgraph(g, every_edge(g)));
        const WalkBasis circuits = enumerate_circuit_walks(g);
        rec.equals(tag + "max circuit degree", "expected_max_circuit_degree(3,r,1)",
                   circuit_degree,
                   i64(circuits.elements.empty() ? 0 : circuits.elements.back().degree()));
        if (rec.admits(graver_nominal)) {
            const WalkBasis graver = enumerate_graver_walks(g, u64(euler_degree));
            rec.holds(tag + "euler binomial found by primitive enumeration",
                      "walk enumeration up to the Euler degree",
                      std::binary_search(graver.elements.begin(), graver.elements.end(), binomial,
                                         degree_lex_less));
            rec.equals(tag + "top primitive degree at the cap", "expected_euler_degree(3,r,1)",
                       euler_degree,
                       i64(graver.elements.empty() ? 0 : graver.elements.back().degree()));
        } else {
            rec.skip(tag + "euler binomial found by primitive enumeration",
                     "walk enumeration up to the Euler degree", true);
        }
    }
}

void run_subdivision_robust(Recorder& rec) {
    if (!rec.admits(30)) {
        rec.skip("one generator in every basis", "oracle bases of the three-fold subdivision",
                 true);
        return;
    }
    const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    ComputeOptions base_options;
    base_options.kinds = {BasisKind::Graver};
    base_options.engine = Engine::Oracle;
    const ComputeResult base = compute_bases(bowtie, base_options);
    const u64 base_degree = base.reports.front().max_degree;

    const int k = 3;
    ComputeOptions options;
    options.engine = Engine::Oracle;
    const ComputeResult result = compute_bases(subdivide(bowtie, k), options);
    const BasisReport& circuits = report_of(result, BasisKind::Circuits, Engine::Oracle);
    const BasisReport& markov = report_of(result, BasisKind::Markov, Engine::Oracle);
    const BasisReport& ugb = report_of(result, BasisKind::Ugb, Engine::Oracle);
    const BasisReport& graver = report_of(result, BasisKind::Graver, Engine::Oracle);
    rec.equals("generator count", "one element in every basis", u64(1), graver.size);
    rec.holds("markov, universal and graver coincide", "canonical element lists",
              markov.elements == ugb.elements && ugb.elements == graver.elements);
    rec.holds("the generator is a circuit", "canonical element lists",
              circuits.elements == graver.elements);
    rec.equals("generator degree", "k times the unsubdivided Graver degree",
               u64(k) * base_degree, graver.max_degree);
}

void run_subdivision_degrees(Recorder& rec) {
    const i64 euler_degree = expected_euler_degree(3, 1, 3);
    const i64 circuit_degree = expected_max_circuit_degree(3, 1, 3);
    if (!rec.admits(30)) {
        rec.skip("euler walk degree after subdivision", "expected_euler_degree(3,1,3)",
                 euler_degree);
        rec.skip("max circuit degree", "expected_max_circuit_degree(3,1,3)", circuit_degree);
        return;
    }
    const Graph g = subdivide(triangle_tree(3, 1), 3);
    const EvenClosedWalk walk = euler_trail(g);
    const Binomial binomial = binomial_of_walk(walk);
    rec.equals("euler walk degree after subdivision", "expected_euler_degree(3,1,3)", euler_degree,
               i64(binomial.degree()));
    rec.holds("primitive", "the whole graph passes the primitive-subgraph test",
              is_primitive_subgraph(g, every_edge(g)));
    rec.holds("minimal", "no chord lets a shorter walk replace it", is_minimal_walk(g, walk));
    rec.holds("indispensable", "present in every markov basis", is_indispensable_walk(g, walk));
    rec.holds("mixed", "adjacent traversals of opposite sign in every cycle block",
              is_mixed(walk));
    const WalkBasis circuits = enumerate_circuit_walks(g);
    rec.equals("max circuit degree", "expected_max_circuit_degree(3,1,3)", circuit_degree,
               i64(circuits.elements.empty() ? 0 : circuits.elements.back().degree()));
}

void run_complete_graph_degrees(Recorder& rec) {
    for (const int n : {4, 5}) {
        const std::string tag = "n=" + std::to_string(n) + " ";
        const auto [graver_degree, markov_degree] = expected_kn_degrees(n);
        if (!rec.admits(n == 5 ? 30 : 5)) {
            rec.skip(tag + "graver max degree", "expected_kn_degrees(n)", graver_degree);
            rec.skip(tag + "markov max degree", "expected_kn_degrees(n)", markov_degree);
            continue;
        }
        ComputeOptions options;
        options.engine = Engine::Both;
        const ComputeResult result = compute_bases(complete_graph(n), options);
        const BasisReport& circuits = report_of(result, BasisKind::Circuits, Engine::Oracle);
        const BasisReport& markov = report_of(result, BasisKind::Markov, Engine::Oracle);
        const BasisReport& graver = report_of(result, BasisKind::Graver, Engine::Oracle);
        rec.equals(tag + "graver max degree", "expected_kn_degrees(n)", graver_degree,
                   i64(graver.max_degree));
        rec.equals(tag + "markov max degree", "expected_kn_degrees(n)", markov_degree,
                   i64(markov.max_degree));
        rec.holds(tag + "a circuit attains the top degree",
                  "max circuit degree meets the Graver degree",
                  circuits.max_degree == graver.max_degree);
        rec.holds(tag + "both engines agree", "dual-engine run on the same graph",
                  result.agreement.value_or(false));
    }
    const auto [k6_degree, k6_markov] = expected_kn_degrees(6);
    (void)k6_markov;
    if (!rec.admits(30)) {
        rec.skip("n=6 graver max degree at a cap one above it", "expected_kn_degrees(n)",
                 k6_degree);
        return;
    }
    ComputeOptions options;
    options.kinds = {BasisKind::Graver};
    options.degree_cap = u64(k6_degree) + 1;
    const ComputeResult result = compute_bases(complete_graph(6), options);
    rec.equals("n=6 graver max degree at a cap one above it", "expected_kn_degrees(n)", k6_degree,
               i64(result.reports.front().max_degree));
}

void run_nonpointed_degree(Recorder& rec) {
    const std::vector<BigInt> primes{2, 3, 5, 7, 11, 13};
    BigInt previous = 0;
    for (int s = 2; s <= 6; ++s) {
        const std::string tag = "s=" + std::to_string(s) + " ";
        std::vector<BigInt> q(primes.begin(), primes.begin() + s);
        BigInt product = 1;
        for (const BigInt& qi : q) product *= qi;
        if (!rec.admits(1)) {
            rec.skip(tag + "max markov degree", "2*Q/min(q_i) with Q the product of the factors",
                     product);
            continue;
        }
        const LaurentBinomialSet set = markov_from_coprimes(q);
        const BigInt top = 2 * *std::max_element(set.exponents.begin(), set.exponents.end());
        rec.equals(tag + "max markov degree", "2*Q/min(q_i) with Q the product of the factors",
                   product, top);
        if (s > 2) rec.holds(tag + "degree grew", "monotone in s", top > previous);
        previous = top;
    }
    if (!rec.admits(1)) {
        rec.skip("circuits, universal and graver stay one degree-2 element",
                 "bases_of_line_config with its lattice cross-check", true);
        return;
    }
    const std::vector<BasisReport> line = bases_of_line_config();
    const bool fixed_side =
        line.size() == 3 && std::all_of(line.begin(), line.end(), [](const BasisReport& r) {
            return r.size == 1 && r.max_degree == 2 && !r.truncated;
        });
    rec.holds("circuits, universal and graver stay one degree-2 element",
              "bases_of_line_config with its lattice cross-check", fixed_side);
}

struct Experiment {
    const char* id;
    const char* title;
    void (*run)(Recorder&);
};

constexpr Experiment kExperiments[] = {
    {"ladder-sizes",
     "prism ladders: markov counts grow linearly while circuit, universal and Graver counts grow "
     "exponentially",
     run_ladder_sizes},
    {"nonpointed-size", "the non-pointed line configuration has minimal markov bases of every size",
     run_nonpointed_size},
    {"triangle-tree-markov-gap",
     "the triangle star has a markov basis strictly inside its universal basis",
     run_triangle_tree_markov_gap},
    {"triangle-tree-euler-degree",
     "the Euler walk of a tree of triangles is primitive of degree 9*2^(r-1)-3, far above every "
     "circuit",
     run_triangle_tree_euler_degree},
    {"subdivision-robust",
     "the three-fold subdivision of two triangles sharing a vertex keeps one generator in every "
     "basis",
     run_subdivision_robust},
    {"subdivision-degrees",
     "subdivision scales the Euler-walk degree and keeps it minimal, indispensable and mixed",
     run_subdivision_degrees},
    {"complete-graph-degrees", "complete graphs: Graver degree n-2 against markov degree 2",
     run_complete_graph_degrees},
    {"nonpointed-degree",
     "markov degrees on the line configuration grow without bound while Graver degrees stay at 2",
     run_nonpointed_degree},
};

ExperimentVerdict run_experiment(const Experiment& experiment) {
    ExperimentVerdict verdict;
    verdict.id = experiment.id;
    verdict.title = experiment.title;
    Recorder rec(verdict, budget_seconds());
    experiment.run(rec);
    return verdict;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string emit_json(const std::vector<ExperimentVerdict>& verdicts) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["experiments"] = ordered_json::array();
    bool all = true;
    for (const ExperimentVerdict& v : verdicts) {
        ordered_json jv;
        jv["id"] = v.id;
        jv["title"] = v.title;
        jv["passed"] = v.passed();
        all = all && v.passed();
        jv["assertions"] = ordered_json::array();
        for (const Assertion& a : v.assertions) {
            ordered_json ja;
            ja["label"] = a.label;
            ja["provenance"] = a.provenance;
            ja["expected"] = a.expected;
            ja["computed"] = a.computed;
            ja["status"] = a.status;
            jv["assertions"].push_back(std::move(ja));
        }
        doc["experiments"].push_back(std::move(jv));
    }
    doc["passed"] = all;
    return doc.dump(2) + "\n";
}

std::string emit_csv(const std::vector<ExperimentVerdict>& verdicts) {
    std::ostringstream out;
    out << "experiment,assertion,provenance,expected,computed,status\n";
    for (const ExperimentVerdict& v : verdicts)
        for (const Assertion& a : v.assertions)
            out << csv_field(v.id) << ',' << csv_field(a.label) << ',' << csv_field(a.provenance)
                << ',' << csv_field(a.expected) << ',' << csv_field(a.computed) << ','
                << csv_field(a.status) << '\n';
    return out.str();
}

std::string emit_text(const std::vector<ExperimentVerdict>& verdicts) {
    std::ostringstream out;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const ExperimentVerdict& v : verdicts) {
        out << v.id << ": " << v.title << '\n';
        for (const Assertion& a : v.assertions) {
            const char* tag = a.status == "pass"   ? "[PASS]"
                              : a.status == "fail" ? "[FAIL]"
                                                   : "[SKIP]";
            out << "  " << tag << ' ' << a.label << ": expected " << a.expected << ", got "
                << a.computed << " (" << a.provenance << ")\n";
            if (a.status == "fail") ++failed;
            if (a.status == "skipped (budget)") ++skipped;
        }
    }
    const std::size_t passed_count =
        std::size_t(std::count_if(verdicts.begin(), verdicts.end(),
                                  [](const ExperimentVerdict& v) { return v.passed(); }));
    out << "summary: " << passed_count << '/' << verdicts.size() << " experiments passed";
    if (failed > 0) out << ", " << failed << " assertions failed";
    if (skipped > 0) out << ", " << skipped << " assertions skipped (budget)";
    out << '\n';
    return out.str();
}

}  // namespace

bool ExperimentVerdict::passed() const {
    return std::none_of(assertions.begin(), assertions.end(),
                        [](const Assertion& a) { return a.status == "fail"; });
}

const std::vector<std::string>& experiment_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const Experiment& e : kExperiments) out.emplace_back(e.id);
        return out;
    }();
    return ids;
}

ExperimentVerdict reproduce(const std::string& id) {
    for (const Experiment& e : kExperiments)
        if (id == e.id) return run_experiment(e);
    std::string known;
    for (const Experiment& e : kExperiments) {
        if (!known.empty()) known += ", ";
        known += e.id;
    }
    throw std::invalid_argument("unknown experiment \"" + id + "\"; known ids: " + known);
}

std::vector<ExperimentVerdict> reproduce_all() {
    return parallel_map_concat<ExperimentVerdict>(std::size(kExperiments), [](std::size_t i) {
        return std::vector<ExperimentVerdict>{run_experiment(kExperiments[i])};
    });
}

std::string emit(const std::vector<ExperimentVerdict>& verdicts, Format format) {
    switch (format) {
        case Format::Json: return emit_json(verdicts);
        case Format::Csv: return emit_csv(verdicts);
        case Format::Text: return emit_text(verdicts);
    }
    throw std::logic_error("unhandled format");
}

}  // namespace toric
