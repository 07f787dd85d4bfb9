#include "toric/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "toric/enumerate.hpp"
#include "toric/lattice/circuits.hpp"
#include "toric/lattice/graver.hpp"
#include "toric/lattice/lp.hpp"
#include "toric/lattice/markov.hpp"
#include "toric/lattice/ugb.hpp"

namespace toric {
namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

constexpr BasisKind kAllKinds[] = {BasisKind::Circuits, BasisKind::Markov, BasisKind::Ugb,
                                   BasisKind::Graver};

WalkBasis run_graph_engine(const Graph& g, BasisKind kind, std::optional<u64> cap) {
    switch (kind) {
        case BasisKind::Circuits: return enumerate_circuit_walks(g);
        case BasisKind::Markov: return enumerate_markov_walks(g);
        case BasisKind::Ugb: return enumerate_ugb_walks(g, cap);
        case BasisKind::Graver: return enumerate_graver_walks(g, cap);
    }
    throw std::logic_error("unhandled basis kind");
}

WalkBasis run_oracle_engine(const lattice::VectorConfig& A, BasisKind kind,
                            std::optional<u64> cap) {
    std::vector<Vec> vectors;
    bool truncated = false;
    switch (kind) {
        case BasisKind::Circuits:
            vectors = lattice::circuits(A);
            break;
        case BasisKind::Markov:
            vectors = lattice::markov_by_fibers(A).elements;
            break;
        case BasisKind::Ugb:
            if (cap) {
                auto graver = lattice::graver(A, cap);
                for (const Vec& v : graver.elements)
                    if (lattice::in_ugb(A, v)) vectors.push_back(v);
                truncated = graver.truncated;
            } else {
                vectors = lattice::ugb_elements(A);
            }
            break;
        case BasisKind::Graver: {
            auto graver = lattice::graver(A, cap);
            vectors = std::move(graver.elements);
            truncated = graver.truncated;
            break;
        }
    }
    WalkBasis out;
    out.truncated = truncated;
    out.elements.reserve(vectors.size());
    for (const Vec& v : vectors) out.elements.push_back(Binomial::from_vector(v).canonical());
    std::sort(out.elements.begin(), out.elements.end(), degree_lex_less);
    return out;
}

BasisReport finish_report(BasisKind kind, Engine engine, WalkBasis basis,
                          std::optional<double> seconds) {
    BasisReport r;
    r.kind = kind;
    r.engine = engine;
    r.elements = std::move(basis.elements);
    r.truncated = basis.truncated;
    r.size = r.elements.size();
    for (const Binomial& b : r.elements) r.max_degree = std::max(r.max_degree, u64(b.degree()));
    r.seconds = seconds;
    return r;
}

std::vector<u64> degree_multiset(const BasisReport& r) {
    std::vector<u64> out;
    out.reserve(r.elements.size());
    for (const Binomial& b : r.elements) out.push_back(u64(b.degree()));
    std::sort(out.begin(), out.end());
    return out;
}

// Reports arrive in graph/oracle pairs per kind. A truncated leg drops its
// kind from the conjunction: a cut-off list proves nothing either way.
bool agreement_of(const std::vector<BasisReport>& reports) {
    for (std::size_t i = 0; i + 1 < reports.size(); i += 2) {
        const BasisReport& a = reports[i];
        const BasisReport& b = reports[i + 1];
        if (a.truncated || b.truncated) continue;
        if (a.kind == BasisKind::Markov) {
            // Markov bases are unique only in size and degree multiset.
            if (a.size != b.size || degree_multiset(a) != degree_multiset(b)) return false;
        } else if (a.elements != b.elements) {
            return false;
        }
    }
    return true;
}

template <typename Run>
BasisReport timed_report(BasisKind kind, Engine engine, bool timings, Run&& run) {
    const auto start = std::chrono::steady_clock::now();
    WalkBasis basis = run();
    std::optional<double> seconds;
    if (timings)
        seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return finish_report(kind, engine, std::move(basis), seconds);
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::string fixed3(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

std::string emit_json(const ComputeResult& result) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    ordered_json input;
    input["kind"] = result.input_kind;
    if (result.input_kind == "graph") {
        input["vertices"] = result.input_rows;
        input["edges"] = result.input_cols;
    } else {
        input["rows"] = result.input_rows;
        input["cols"] = result.input_cols;
    }
    doc["input"] = std::move(input);
    doc["reports"] = ordered_json::array();
    for (const BasisReport& r : result.reports) {
        ordered_json jr;
        jr["basis"] = to_string(r.kind);
        jr["engine"] = to_string(r.engine);
        jr["size"] = r.size;
        jr["max_degree"] = r.max_degree;
        jr["truncated"] = r.truncated;
        if (r.seconds) jr["seconds"] = std::round(*r.seconds * 1000.0) / 1000.0;
        ordered_json elements = ordered_json::array();
        for (const Binomial& b : r.elements) elements.push_back(b.text());
        jr["elements"] = std::move(elements);
        doc["reports"].push_back(std::move(jr));
    }
    if (result.agreement) doc["agreement"] = *result.agreement;
    return doc.dump(2) + "\n";
}

std::string emit_csv(const ComputeResult& result) {
    const bool timing = std::any_of(result.reports.begin(), result.reports.end(),
                                    [](const BasisReport& r) { return r.seconds.has_value(); });
    std::ostringstream out;
    out << "basis,engine,size,max_degree,truncated";
    if (timing) out << ",seconds";
    out << '\n';
    for (const BasisReport& r : result.reports) {
        out << to_string(r.kind) << ',' << to_string(r.engine) << ',' << r.size << ','
            << r.max_degree << ',' << (r.truncated ? "true" : "false");
        if (timing) out << ',' << fixed3(r.seconds.value_or(0.0));
        out << '\n';
    }
    return out.str();
}

std::string emit_text(const ComputeResult& result) {
    std::ostringstream out;
    out << "input: " << result.input_kind << " with " << result.input_rows;
    if (result.input_kind == "graph")
        out << " vertices and " << result.input_cols << " edges\n";
    else
        out << " rows and " << result.input_cols << " columns\n";

    const bool timing = std::any_of(result.reports.begin(), result.reports.end(),
                                    [](const BasisReport& r) { return r.seconds.has_value(); });
    std::vector<std::vector<std::string>> table;
    table.push_back({"basis", "engine", "size", "max_degree", "truncated"});
    if (timing) table.front().push_back("seconds");
    for (const BasisReport& r : result.reports) {
        std::vector<std::string> row = {to_string(r.kind), to_string(r.engine),
                                        std::to_string(r.size), std::to_string(r.max_degree),
                                        r.truncated ? "yes" : "no"};
        if (timing) row.push_back(fixed3(r.seconds.value_or(0.0)));
        table.push_back(std::move(row));
    }
    std::vector<std::size_t> width(table.front().size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    out << '\n';
    for (const auto& row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size()) out << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    if (result.agreement) out << "\nagreement: " << (*result.agreement ? "yes" : "no") << '\n';
    for (const BasisReport& r : result.reports) {
        out << '\n' << to_string(r.kind) << " (" << to_string(r.engine) << " engine, " << r.size
            << (r.size == 1 ? " element" : " elements");
        if (r.truncated) out << ", truncated";
        out << ")\n";
        for (const Binomial& b : r.elements) out << "  " << b.text() << '\n';
    }
    return out.str();
}

}  // namespace

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Circuits: return "circuits";
        case BasisKind::Markov: return "markov";
        case BasisKind::Ugb: return "ugb";
        case BasisKind::Graver: return "graver";
    }
    throw std::logic_error("unhandled basis kind");
}

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::Graph: return "graph";
        case Engine::Oracle: return "oracle";
        case Engine::Both: return "both";
    }
    throw std::logic_error("unhandled engine");
}

std::string to_string(Format format) {
    switch (format) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    throw std::logic_error("unhandled format");
}

BasisKind parse_basis_kind(const std::string& name) {
    for (BasisKind kind : kAllKinds)
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("unknown basis kind \"" + name +
                                "\"; expected circuits, markov, ugb, or graver");
}

Engine parse_engine(const std::string& name) {
    for (Engine engine : {Engine::Graph, Engine::Oracle, Engine::Both})
        if (to_string(engine) == name) return engine;
    throw std::invalid_argument("unknown engine \"" + name +
                                "\"; expected graph, oracle, or both");
}

Format parse_format(const std::string& name) {
    for (Format format : {Format::Json, Format::Csv, Format::Text})
        if (to_string(format) == name) return format;
    throw std::invalid_argument("unknown format \"" + name + "\"; expected json, csv, or text");
}

std::vector<BasisKind> parse_kinds(const std::string& csv) {
    if (trimmed(csv) == "all") return {std::begin(kAllKinds), std::end(kAllKinds)};
    std::vector<BasisKind> kinds;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const BasisKind kind = parse_basis_kind(trimmed(item));
        if (std::find(kinds.begin(), kinds.end(), kind) != kinds.end())
            throw std::invalid_argument("duplicate basis kind \"" + trimmed(item) + "\"");
        kinds.push_back(kind);
    }
    if (kinds.empty()) throw std::invalid_argument("no basis kinds requested");
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

ComputeResult compute_bases(const Graph& g, const ComputeOptions& options) {
    if (options.kinds.empty()) throw std::invalid_argument("no basis kinds requested");
    ComputeResult out;
    out.input_kind = "graph";
    out.input_rows = u64(g.vertex_count());
    out.input_cols = u64(g.edge_count());
    const bool graph_leg = options.engine != Engine::Oracle;
    const bool oracle_leg = options.engine != Engine::Graph;
    std::optional<lattice::VectorConfig> A;
    if (oracle_leg) A = lattice::VectorConfig::from_graph(g);
    for (const BasisKind kind : options.kinds) {
        if (graph_leg)
            out.reports.push_back(timed_report(kind, Engine::Graph, options.timings, [&] {
                return run_graph_engine(g, kind, options.degree_cap);
            }));
        if (oracle_leg)
            out.reports.push_back(timed_report(kind, Engine::Oracle, options.timings, [&] {
                return run_oracle_engine(*A, kind, options.degree_cap);
            }));
    }
    if (options.engine == Engine::Both) out.agreement = agreement_of(out.reports);
    return out;
}

ComputeResult compute_bases(const lattice::VectorConfig& A, const ComputeOptions& options) {
    if (options.kinds.empty()) throw std::invalid_argument("no basis kinds requested");
    if (options.engine != Engine::Oracle)
        throw std::invalid_argument(
            "matrix inputs support only the oracle engine; the walk engine needs a graph");
    const bool wants_markov =
        std::find(options.kinds.begin(), options.kinds.end(), BasisKind::Markov) !=
        options.kinds.end();
    if (wants_markov && !lattice::is_pointed(A))
        throw std::domain_error(
            "configuration is not pointed; use the nonpointed construction instead");
    ComputeResult out;
    out.input_kind = "matrix";
    out.input_rows = u64(A.rows());
    out.input_cols = u64(A.cols());
    for (const BasisKind kind : options.kinds)
        out.reports.push_back(timed_report(kind, Engine::Oracle, options.timings, [&] {
            return run_oracle_engine(A, kind, options.degree_cap);
        }));
    return out;
}

std::string emit(const ComputeResult& result, Format format) {
    switch (format) {
        case Format::Json: return emit_json(result);
        case Format::Csv: return emit_csv(result);
        case Format::Text: return emit_text(result);
    }
    throw std::logic_error("unhandled format");
}

}  // namespace toric
