#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/binomial.hpp"
#include "toric/common.hpp"
#include "toric/graph.hpp"
#include "toric/lattice/config.hpp"

namespace toric {

enum class BasisKind { Circuits, Markov, Ugb, Graver };

// Which implementation computes a basis: walk enumeration on the graph, the
// lattice-algebra engine on the column configuration, or both side by side.
enum class Engine { Graph, Oracle, Both };

enum class Format { Json, Csv, Text };

std::string to_string(BasisKind kind);
std::string to_string(Engine engine);
std::string to_string(Format format);
BasisKind parse_basis_kind(const std::string& name);
Engine parse_engine(const std::string& name);
Format parse_format(const std::string& name);

// Comma-separated kind names, or "all". Order is normalized to
// circuits, markov, ugb, graver; duplicates and unknown names are rejected.
std::vector<BasisKind> parse_kinds(const std::string& csv);

// One computed basis with its summary statistics. `seconds` is filled only
// when timing was requested, so untimed documents depend on nothing but the
// input and the options.
struct BasisReport {
    BasisKind kind = BasisKind::Circuits;
    Engine engine = Engine::Graph;   // Graph or Oracle, never Both
    std::vector<Binomial> elements;  // in degree_lex_less order
    u64 size = 0;                    // |elements|
    u64 max_degree = 0;              // 0 for an empty basis
    bool truncated = false;          // a degree cap cut off the search
    std::optional<double> seconds;
};

struct ComputeOptions {
    std::vector<BasisKind> kinds = {BasisKind::Circuits, BasisKind::Markov,
                                    BasisKind::Ugb, BasisKind::Graver};
    Engine engine = Engine::Graph;
    std::optional<u64> degree_cap;
    bool timings = false;
};

struct ComputeResult {
    // "graph" or "matrix", with (vertices, edges) or (rows, cols).
    std::string input_kind;
    u64 input_rows = 0;
    u64 input_cols = 0;
    // One report per requested kind and engine, kinds in requested order,
    // the graph engine before the oracle on dual runs.
    std::vector<BasisReport> reports;
    // Present on dual-engine runs: true when every kind both engines
    // completed without truncation matched — element for element for
    // circuits, the universal basis and the Graver basis; by size and degree
    // multiset for Markov, which is unique only in those statistics.
    std::optional<bool> agreement;
};

// Computes the requested bases of the graph's incidence configuration.
ComputeResult compute_bases(const Graph& g, const ComputeOptions& options);

// Matrix inputs run the lattice-algebra engine only; asking for the graph
// engine is an error. A non-pointed matrix rejects the Markov kind with a
// message pointing at the nonpointed module.
ComputeResult compute_bases(const lattice::VectorConfig& A, const ComputeOptions& options);

// Renders a result with a stable field order. JSON carries a schema_version
// field and the element lists; CSV is one row per basis without elements;
// text is an aligned summary table followed by the elements. Timing fields
// appear only when the reports carry them.
std::string emit(const ComputeResult& result, Format format);

}  // namespace toric
