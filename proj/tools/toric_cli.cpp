// Command-line surface: build family graphs, compute the four toric bases
// with either engine, replay the named experiments, and run the non-pointed
// construction. Exit codes: 0 success (all checks pass), 1 a computed check
// failed (experiment assertion or engine disagreement), 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/experiments.hpp"
#include "toric/families.hpp"
#include "toric/graph.hpp"
#include "toric/nonpointed.hpp"
#include "toric/parallel.hpp"
#include "toric/report.hpp"

namespace {

using toric::BigInt;
using toric::Format;

constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;

// Where a graph or matrix comes from: a file ("-" reads stdin), or a family
// name with its parameters, optionally subdivided.
struct InputFlags {
    std::string input_file;
    std::string matrix_file;
    std::string family;
    int n = 0;
    int r = 1;
    int k = 1;
};

struct OutputFlags {
    std::string format = "text";
    std::string out_file;
};

void add_family_flags(CLI::App& cmd, InputFlags& flags) {
    cmd.add_option("--family", flags.family,
                   "family name: ladder, triangle-tree, or complete");
    cmd.add_option("-n", flags.n, "family size parameter");
    cmd.add_option("-r", flags.r, "rounds of cycle attachment (triangle-tree)");
    cmd.add_option("-k,--subdivide", flags.k,
                   "replace every edge by a path of this many edges (1 leaves the graph alone)");
}

void add_input_flags(CLI::App& cmd, InputFlags& flags, bool with_matrix) {
    cmd.add_option("--input", flags.input_file,
                   "graph file: '# comments', then 'vertices edges', then one 'u v' line per "
                   "edge ('-' reads stdin)");
    if (with_matrix)
        cmd.add_option("--matrix", flags.matrix_file,
                       "matrix file: 'rows cols', then row-major integers ('-' reads stdin)");
    add_family_flags(cmd, flags);
}

void add_output_flags(CLI::App& cmd, OutputFlags& flags) {
    cmd.add_option("--format", flags.format, "output format: json, csv, or text")
        ->default_str("text");
    cmd.add_option("--out", flags.out_file, "write the document here instead of stdout");
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

toric::Graph family_graph(const InputFlags& flags) {
    if (flags.family.empty())
        throw std::invalid_argument("no family given; pass --family NAME");
    toric::Graph g = [&] {
        if (flags.family == "ladder") return toric::ladder_graph(flags.n);
        if (flags.family == "triangle-tree") return toric::triangle_tree(flags.n, flags.r);
        if (flags.family == "complete") return toric::complete_graph(flags.n);
        throw std::invalid_argument("unknown family \"" + flags.family +
                                    "\"; expected ladder, triangle-tree, or complete");
    }();
    if (flags.k < 1) throw std::invalid_argument("--subdivide must be at least 1");
    if (flags.k > 1) g = toric::subdivide(g, flags.k);
    return g;
}

toric::Graph load_graph(const InputFlags& flags) {
    if (!flags.input_file.empty() && !flags.family.empty())
        throw std::invalid_argument("pass either --input or --family, not both");
    if (!flags.input_file.empty()) return toric::Graph::parse_edge_list(slurp(flags.input_file));
    if (!flags.family.empty()) return family_graph(flags);
    throw std::invalid_argument("no graph given; pass --input FILE or --family NAME");
}

void write_document(const OutputFlags& flags, const std::string& document) {
    if (flags.out_file.empty()) {
        std::cout << document;
        return;
    }
    std::ofstream out(flags.out_file);
    if (!out) throw std::invalid_argument("cannot write " + flags.out_file);
    out << document;
}

// ---- bases / compare ----------------------------------------------------

struct BasesFlags {
    InputFlags input;
    OutputFlags output;
    std::string kinds = "all";
    std::string engine = "graph";
    std::optional<toric::u64> degree_cap;
    bool timings = false;
};

toric::ComputeResult run_bases(const BasesFlags& flags) {
    toric::ComputeOptions options;
    options.kinds = toric::parse_kinds(flags.kinds);
    options.engine = toric::parse_engine(flags.engine);
    options.degree_cap = flags.degree_cap;
    options.timings = flags.timings;
    const bool has_matrix = !flags.input.matrix_file.empty();
    if (has_matrix &&
        (!flags.input.input_file.empty() || !flags.input.family.empty()))
        throw std::invalid_argument("--matrix cannot be combined with --input or --family");
    if (has_matrix) {
        const auto A = toric::lattice::VectorConfig::parse_matrix(slurp(flags.input.matrix_file));
        if (options.engine != toric::Engine::Oracle)
            throw std::invalid_argument(
                "matrix inputs support only the oracle engine; pass --engine oracle");
        return toric::compute_bases(A, options);
    }
    return toric::compute_bases(load_graph(flags.input), options);
}

int run_compare(const BasesFlags& flags) {
    BasesFlags forced = flags;
    forced.engine = "both";
    const toric::ComputeResult result = run_bases(forced);
    write_document(flags.output, toric::emit(result, toric::parse_format(flags.output.format)));
    return result.agreement.value_or(false) ? 0 : kExitFailedCheck;
}

// ---- nonpointed ----------------------------------------------------------

std::vector<BigInt> parse_factor_list(const std::string& csv) {
    std::vector<BigInt> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.emplace_back(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("\"" + item + "\" is not an integer");
        }
    }
    if (out.empty()) throw std::invalid_argument("no factors given");
    return out;
}

nlohmann::ordered_json certificate_json(const toric::MarkovCertificate& cert) {
    nlohmann::ordered_json out;
    out["valid"] = cert.valid;
    out["overall_gcd"] = cert.overall_gcd.str();
    auto gcds = nlohmann::ordered_json::array();
    for (const BigInt& d : cert.leave_one_out) gcds.push_back(d.str());
    out["leave_one_out_gcds"] = std::move(gcds);
    return out;
}

int run_nonpointed(const std::string& factors_csv, const OutputFlags& output) {
    const std::vector<BigInt> factors = parse_factor_list(factors_csv);
    const toric::LaurentBinomialSet basis = toric::markov_from_coprimes(factors);
    const toric::MarkovCertificate cert = toric::verify_markov(basis);
    const std::vector<toric::BasisReport> line = toric::bases_of_line_config();

    const Format format = toric::parse_format(output.format);
    std::string document;
    if (format == Format::Json) {
        nlohmann::ordered_json doc;
        doc["schema_version"] = 1;
        doc["configuration"] = "x + y = 0 line (columns 1 and -1)";
        auto markov = nlohmann::ordered_json::array();
        for (const BigInt& a : basis.exponents) {
            nlohmann::ordered_json element;
            element["exponent"] = a.str();
            element["binomial"] = "x^" + a.str() + "*y^" + a.str() + " - 1";
            element["degree"] = BigInt(2 * a).str();
            markov.push_back(std::move(element));
        }
        doc["markov_basis"] = std::move(markov);
        doc["certificate"] = certificate_json(cert);
        nlohmann::ordered_json fixed = nlohmann::ordered_json::array();
        for (const toric::BasisReport& r : line) {
            nlohmann::ordered_json jr;
            jr["basis"] = to_string(r.kind);
            jr["size"] = r.size;
            jr["max_degree"] = r.max_degree;
            jr["elements"] = {r.elements[0].text()};
            fixed.push_back(std::move(jr));
        }
        doc["fixed_bases"] = std::move(fixed);
        document = doc.dump(2) + "\n";
    } else if (format == Format::Csv) {
        std::ostringstream out;
        out << "basis,element,degree\n";
        for (const BigInt& a : basis.exponents)
            out << "markov,x^" << a.str() << "*y^" << a.str() << " - 1," << BigInt(2 * a).str() << '\n';
        for (const toric::BasisReport& r : line)
            out << to_string(r.kind) << ',' << r.elements[0].text() << ',' << r.max_degree
                << '\n';
        document = out.str();
    } else {
        std::ostringstream out;
        out << "markov basis of the line configuration (" << basis.exponents.size()
            << " elements)\n";
        for (const BigInt& a : basis.exponents)
            out << "  x^" << a.str() << "*y^" << a.str() << " - 1  (degree " << BigInt(2 * a).str()
                << ")\n";
        out << "certificate: " << (cert.valid ? "minimal Markov basis" : "NOT a minimal basis")
            << ", overall gcd " << cert.overall_gcd.str();
        if (!cert.leave_one_out.empty()) {
            out << ", leave-one-out gcds";
            for (const BigInt& d : cert.leave_one_out) out << ' ' << d.str();
        }
        out << "\nfixed side for every coprime choice:\n";
        for (const toric::BasisReport& r : line)
            out << "  " << to_string(r.kind) << ": " << r.elements[0].text() << "  (size "
                << r.size << ", degree " << r.max_degree << ")\n";
        document = out.str();
    }
    write_document(output, document);
    return cert.valid ? 0 : kExitFailedCheck;
}

// ---- reproduce -----------------------------------------------------------

int run_reproduce(const std::vector<std::string>& ids, const OutputFlags& output) {
    std::vector<toric::ExperimentVerdict> verdicts;
    if (ids.empty()) {
        verdicts = toric::reproduce_all();
    } else {
        for (const std::string& id : ids) verdicts.push_back(toric::reproduce(id));
    }
    write_document(output, toric::emit(verdicts, toric::parse_format(output.format)));
    const bool all = std::all_of(verdicts.begin(), verdicts.end(),
                                 [](const toric::ExperimentVerdict& v) { return v.passed(); });
    return all ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact circuit, Markov, universal Groebner and Graver bases of toric ideals "
                 "of graphs, computed by walk enumeration and cross-checked by a lattice engine"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads (0 keeps the default; never changes output bytes)");

    InputFlags generate_input;
    OutputFlags generate_output;
    CLI::App* generate = app.add_subcommand("generate", "write a family graph as an edge list");
    add_family_flags(*generate, generate_input);
    generate->add_option("--out", generate_output.out_file,
                         "write the edge list here instead of stdout");

    BasesFlags bases_flags;
    CLI::App* bases = app.add_subcommand(
        "bases", "compute the requested bases of a graph or matrix and emit a report");
    add_input_flags(*bases, bases_flags.input, true);
    add_output_flags(*bases, bases_flags.output);
    bases->add_option("--kinds", bases_flags.kinds,
                      "comma-separated: circuits, markov, ugb, graver, or all");
    bases->add_option("--engine", bases_flags.engine, "graph, oracle, or both");
    bases->add_option("--degree-cap", bases_flags.degree_cap,
                      "stop enumerating above this degree (reports say when this truncates)");
    bases->add_flag("--timings", bases_flags.timings,
                    "include wall-clock seconds per basis in the report");

    BasesFlags compare_flags;
    CLI::App* compare = app.add_subcommand(
        "compare", "run both engines on a graph and exit 1 unless they agree");
    add_input_flags(*compare, compare_flags.input, false);
    add_output_flags(*compare, compare_flags.output);
    compare->add_option("--kinds", compare_flags.kinds,
                        "comma-separated: circuits, markov, ugb, graver, or all");
    compare->add_option("--degree-cap", compare_flags.degree_cap,
                        "stop enumerating above this degree");
    compare->add_flag("--timings", compare_flags.timings,
                      "include wall-clock seconds per basis in the report");

    std::vector<std::string> reproduce_ids;
    OutputFlags reproduce_output;
    CLI::App* reproduce = app.add_subcommand(
        "reproduce", "replay named experiments against their closed forms (default: all)");
    reproduce->add_option("ids", reproduce_ids, "experiment ids (see the library listing)");
    add_output_flags(*reproduce, reproduce_output);

    std::string factors;
    OutputFlags nonpointed_output;
    CLI::App* nonpointed = app.add_subcommand(
        "nonpointed",
        "Markov basis from pairwise coprime factors on the non-pointed line configuration");
    nonpointed->add_option("--primes", factors,
                           "comma-separated pairwise coprime integers greater than 1")
        ->required();
    add_output_flags(*nonpointed, nonpointed_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (threads > 0) toric::set_thread_count(threads);
        if (generate->parsed()) {
            const toric::Graph g = family_graph(generate_input);
            write_document({.format = "text", .out_file = generate_output.out_file},
                           g.to_edge_list());
            return 0;
        }
        if (bases->parsed()) {
            const toric::ComputeResult result = run_bases(bases_flags);
            write_document(bases_flags.output,
                           toric::emit(result, toric::parse_format(bases_flags.output.format)));
            return 0;
        }
        if (compare->parsed()) return run_compare(compare_flags);
        if (reproduce->parsed()) return run_reproduce(reproduce_ids, reproduce_output);
        if (nonpointed->parsed()) return run_nonpointed(factors, nonpointed_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}
