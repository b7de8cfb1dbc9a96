#include "app.hpp"

#include "cache.hpp"
#include "report.hpp"

#include "tricm/cmcheck.hpp"
#include "tricm/complex.hpp"
#include "tricm/graph.hpp"
#include "tricm/homology.hpp"
#include "tricm/ideals.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace tricm::cli {
namespace {

// Beyond this, T_n face enumeration (and the maximal independent sets behind
// the unmixed flag) is skipped in favor of the closed form.
constexpr int kEnumerationLimit = 14;
constexpr int kTriangularLimit = 40;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - since).count();
    return std::round(ms * 1000.0) / 1000.0;
}

struct InputArgs {
    std::optional<int> triangular;
    std::string graph_file;
    std::string complex_file;
};

struct Input {
    Json descriptor;
    std::optional<int> n;
    std::optional<Graph> graph;
    std::optional<SimplicialComplex> complex;
    std::vector<std::string> labels;
    /// Digest of the normalized input; part of every cache key.
    std::string digest;
    std::string display;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string normalized_edges(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Input load_input(const InputArgs& args, bool allow_complex) {
    const int given = (args.triangular ? 1 : 0) + (args.graph_file.empty() ? 0 : 1) + (args.complex_file.empty() ? 0 : 1);
    if (given != 1)
        throw UsageError(allow_complex ? "give exactly one of --triangular, --graph, --complex"
                                       : "give exactly one of --triangular, --graph");
    Input in;
    if (args.triangular) {
        const int n = *args.triangular;
        if (n < 2 || n > kTriangularLimit)
            throw InputError("--triangular expects 2 <= N <= " + std::to_string(kTriangularLimit));
        in.n = n;
        in.graph = triangular(n);
        in.descriptor = Json{{"kind", "triangular"}, {"n", dec(n)}};
        in.display = "T_" + std::to_string(n);
    } else if (!args.graph_file.empty()) {
        const std::string text = read_file(args.graph_file);
        std::istringstream stream(text);
        in.graph = read_edge_list(stream);
        in.descriptor = Json{{"kind", "graph"}, {"path", args.graph_file}, {"sha256", sha256_hex(text)}};
        in.display = args.graph_file;
    } else {
        const std::string text = read_file(args.complex_file);
        std::istringstream stream(text);
        in.complex = read_complex(stream);
        in.descriptor = Json{{"kind", "complex"}, {"path", args.complex_file}, {"sha256", sha256_hex(text)}};
        in.display = args.complex_file;
    }
    if (in.graph) {
        for (Vertex v = 0; v < in.graph->vertex_count(); ++v) in.labels.push_back(in.graph->label(v));
        in.digest = sha256_hex("graph\n" + normalized_edges(*in.graph));
    } else {
        std::ostringstream out;
        write_complex(out, *in.complex);
        in.digest = sha256_hex("complex\n" + out.str());
    }
    return in;
}

std::vector<FieldSpec> parse_fields(const std::vector<std::string>& chars) {
    std::vector<FieldSpec> out;
    for (const auto& c : chars) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(c, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != c.size() || c.empty() || c[0] == '-' || value > 0xffffffffULL)
            throw InputError("invalid characteristic '" + c + "'");
        try {
            out.push_back(FieldSpec::with_characteristic(static_cast<std::uint32_t>(value)));
        } catch (const std::invalid_argument&) {
            throw InputError("invalid characteristic '" + c + "' (need 0 or a prime below 2^31)");
        }
    }
    if (out.empty()) out.push_back(FieldSpec::rationals());
    return out;
}

std::string field_key(const FieldSpec& f) { return "char=" + std::to_string(f.characteristic()); }

Json base_report(const Input& in) {
    Json r;
    r["input"] = in.descriptor;
    r["graph"] = nullptr;
    if (in.graph) {
        Json labels = Json::array();
        for (const auto& l : in.labels) labels.push_back(l);
        r["graph"] = Json{{"vertices", dec(in.graph->vertex_count())},
                          {"edges", dec(in.graph->edges().size())},
                          {"labels", std::move(labels)}};
    }
    r["independence_number"] = nullptr;
    r["unmixed"] = nullptr;
    r["f_vector"] = nullptr;
    r["h_vector"] = nullptr;
    r["verdicts"] = nullptr;
    r["hsop"] = nullptr;
    r["betti"] = nullptr;
    r["timings"] = Json::object();
    return r;
}

// Fills f/h vectors, independence number and the unmixed flag. For T_n the
// closed form is used unless enumeration is requested; past the enumeration
// limit the unmixed flag is left null.
void fill_vectors(Json& r, const Input& in, bool enumerate, bool closed_form, std::ostream& out) {
    const auto start = Clock::now();
    std::optional<FVector> enumerated;
    std::optional<FVector> closed;
    if (in.n && closed_form) closed = triangular_f_closed(*in.n);
    if (!in.n || enumerate) {
        if (in.n && *in.n > kEnumerationLimit)
            throw CapError("face enumeration of T_" + std::to_string(*in.n) + " exceeds the built-in limit (n <= " +
                           std::to_string(kEnumerationLimit) + "); use --closed-form");
        enumerated = f_vector(in.complex ? *in.complex : independence_complex(*in.graph));
    }
    if (enumerated && closed && enumerated->entries != closed->entries)
        throw std::logic_error("closed-form f-vector disagrees with enumeration");
    const FVector f = enumerated ? *enumerated : *closed;
    r["timings"]["vectors_ms"] = elapsed_ms(start);
    const HVector h = h_vector(f);
    r["f_vector"] = integer_list(f.entries);
    r["h_vector"] = integer_list(h.entries);
    r["f_vector_source"] = enumerated && closed ? "enumeration+closed-form" : enumerated ? "enumeration" : "closed-form";
    if (in.graph) {
        const auto unmixed_start = Clock::now();
        r["independence_number"] = dec(f.entries.size() - 1);
        if (!in.n || *in.n <= kEnumerationLimit) r["unmixed"] = is_unmixed(*in.graph);
        r["timings"]["unmixed_ms"] = elapsed_ms(unmixed_start);
    }

    out << in.display;
    if (in.graph) out << ": " << in.graph->vertex_count() << " vertices, " << in.graph->edges().size() << " edges";
    out << '\n';
    if (in.graph) {
        out << "independence number " << r["independence_number"].get<std::string>() << ", unmixed ";
        out << (r["unmixed"].is_null() ? "not computed" : r["unmixed"].get<bool>() ? "yes" : "no") << '\n';
    }
    out << "f = " << tuple_text(f.entries) << '\n';
    out << "h = " << tuple_text(h.entries) << '\n';
}

std::string verdict_line(const Json& v) {
    std::ostringstream out;
    out << v["field"].get<std::string>() << ": " << v["status"].get<std::string>() << " ("
        << v["method"].get<std::string>() << (v["heuristic"].get<bool>() ? ", heuristic" : "") << ")";
    for (const auto& w : v["witnesses"]) {
        out << "; " << w["complex"].get<std::string>() << ": ";
        if (w["type"] == "homology")
            out << "dim H~_" << w["degree"].get<std::string>() << " = " << w["dimension"].get<std::string>();
        else
            out << "h_" << w["index"].get<std::string>() << " = " << w["value"].get<std::string>();
    }
    return out.str();
}

std::string betti_line(const Json& b) {
    return b["field"].get<std::string>() + ": H~_{-1..} = " + tuple_text(b["dims"]) +
           (b["heuristic"].get<bool>() ? " (heuristic)" : "");
}

std::string regularity_line(const Json& v) {
    std::ostringstream out;
    out << v["field"].get<std::string>() << ": " << v["status"].get<std::string>();
    if (!v["failing_degree"].is_null()) out << " at degree " << v["failing_degree"].get<std::string>();
    if (!v["certified_by_prime"].is_null()) out << " (certified mod " << v["certified_by_prime"].get<std::string>() << ")";
    out << "\n  degree expected actual";
    for (const auto& row : v["per_degree"])
        out << "\n  " << row["degree"].get<std::string>() << ' ' << row["expected"].get<std::string>() << ' '
            << row["actual"].get<std::string>();
    return out.str();
}

template <class Compute>
Json cached(const Cache& cache, const std::string& key, Compute&& compute) {
    if (auto hit = cache.load(key)) return *hit;
    Json value = compute();
    cache.store(key, value);
    return value;
}

void write_json(const Json& report, const std::string& path, std::ostream& out) {
    if (path.empty()) return;
    const std::string text = report.dump(2) + "\n";
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write " + path);
}

struct Common {
    InputArgs input;
    std::vector<std::string> chars;
    std::string json_path;
    std::string cache_dir;
    /// Destination for `--json -`; terminal text is suppressed in that case.
    std::ostream* json_out = nullptr;
};

void add_input_options(CLI::App* cmd, Common& c, bool allow_complex) {
    cmd->add_option("--triangular", c.input.triangular, "Use the triangular graph T_N");
    cmd->add_option("--graph", c.input.graph_file, "Edge-list file");
    if (allow_complex) cmd->add_option("--complex", c.input.complex_file, "Simplicial complex file");
    cmd->add_option("--json", c.json_path, "Write the JSON report here ('-' for stdout)");
    cmd->add_option("--cache-dir", c.cache_dir, "Result cache directory")->envname("TRICM_CACHE_DIR");
}

int cmd_classify(const Common& c, bool full, bool multimodular, std::size_t max_faces, std::ostream& out) {
    const auto total = Clock::now();
    const Input in = load_input(c.input, false);
    const auto fields = parse_fields(c.chars);
    const Cache cache(c.cache_dir);
    Json r = base_report(in);
    fill_vectors(r, in, !in.n, true, out);

    ReisnerOptions options;
    options.max_faces = max_faces;
    options.homology.rational_mode = multimodular ? RationalRankMode::multimodular : RationalRankMode::exact;
    const std::string params = std::string(";full=") + (full ? "1" : "0") + ";max_faces=" + std::to_string(max_faces) +
                               ";rational=" + (multimodular ? "multimodular" : "exact");
    std::optional<SimplicialComplex> delta;
    Json verdicts = Json::array();
    bool capped = false;
    for (const auto& field : fields) {
        const auto start = Clock::now();
        const std::string key = "classify;" + in.digest + ";" + field_key(field) + params;
        Json v = cached(cache, key, [&] {
            if (in.n) return to_json(classify_triangular(*in.n, field, full, options));
            if (!delta) delta = independence_complex(*in.graph);
            return to_json(classify_complex(*delta, field, full, options));
        });
        r["timings"]["classify_ms"][field.name()] = elapsed_ms(start);
        capped = capped || v["status"] == "UNKNOWN";
        out << verdict_line(v) << '\n';
        verdicts.push_back(std::move(v));
    }
    r["verdicts"] = std::move(verdicts);
    r["timings"]["total_ms"] = elapsed_ms(total);
    write_json(r, c.json_path, *c.json_out);
    return capped ? exit_cap : exit_ok;
}

int cmd_vectors(const Common& c, bool closed_form, std::ostream& out) {
    const auto total = Clock::now();
    if (closed_form && c.input.triangular == std::nullopt)
        throw UsageError("--closed-form applies to --triangular only");
    const Input in = load_input(c.input, false);
    Json r = base_report(in);
    const bool enumerate = !in.n || *in.n <= kEnumerationLimit || !closed_form;
    fill_vectors(r, in, enumerate, closed_form, out);
    if (closed_form)
        out << (r["f_vector_source"] == "enumeration+closed-form" ? "closed form agrees with enumeration\n"
                                                                  : "closed form only (enumeration skipped)\n");
    r["timings"]["total_ms"] = elapsed_ms(total);
    write_json(r, c.json_path, *c.json_out);
    return exit_ok;
}

struct HsopArgs {
    std::string kind = "elementary";
    bool verify = false;
    std::optional<unsigned> degree_cap;
    bool exact_rational = false;
    std::size_t max_columns = 0;
};

int cmd_hsop(const Common& c, const HsopArgs& a, std::ostream& out) {
    const auto total = Clock::now();
    const Input in = load_input(c.input, false);
    const auto fields = parse_fields(c.chars);
    const Cache cache(c.cache_dir);
    const HsopKind kind = a.kind == "powersum" ? HsopKind::power_sums : HsopKind::independent_set_sums;
    Json r = base_report(in);
    fill_vectors(r, in, !in.n, true, out);
    const auto seq = hsop(*in.graph, kind);
    Json h = to_json(seq, in.labels);
    for (std::size_t k = 0; k < seq.forms.size(); ++k)
        out << "form " << (k + 1) << " (degree " << seq.forms[k].degree << ", " << seq.forms[k].terms.size()
            << " terms): " << h["forms"][k]["text"].get<std::string>() << '\n';
    h["verify"] = nullptr;
    bool capped = false;
    if (a.verify) {
        RegularityOptions options;
        options.degree_cap = a.degree_cap;
        options.exact_rational = a.exact_rational;
        options.max_columns = a.max_columns;
        Json verdicts = Json::array();
        for (const auto& field : fields) {
            const auto start = Clock::now();
            const std::string key = "verify;" + in.digest + ";kind=" + std::string(to_string(kind)) + ";" +
                                    field_key(field) + ";cap=" + (a.degree_cap ? std::to_string(*a.degree_cap) : "default") +
                                    ";exact=" + (a.exact_rational ? "1" : "0") + ";max_columns=" + std::to_string(a.max_columns);
            Json v = cached(cache, key, [&] {
                try {
                    return to_json(verify_regular(*in.graph, seq, field, options));
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            });
            r["timings"]["verify_ms"][field.name()] = elapsed_ms(start);
            capped = capped || v["status"] == "CAP_REACHED";
            out << regularity_line(v) << '\n';
            verdicts.push_back(std::move(v));
        }
        h["verify"] = std::move(verdicts);
    }
    r["hsop"] = std::move(h);
    r["timings"]["total_ms"] = elapsed_ms(total);
    write_json(r, c.json_path, *c.json_out);
    return capped ? exit_cap : exit_ok;
}

int cmd_homology(const Common& c, bool multimodular, std::ostream& out) {
    const auto total = Clock::now();
    const Input in = load_input(c.input, true);
    const auto fields = parse_fields(c.chars);
    const Cache cache(c.cache_dir);
    Json r = base_report(in);
    fill_vectors(r, in, true, false, out);
    const SimplicialComplex delta = in.complex ? *in.complex : independence_complex(*in.graph);
    HomologyOptions options;
    options.rational_mode = multimodular ? RationalRankMode::multimodular : RationalRankMode::exact;
    Json tables = Json::array();
    for (const auto& field : fields) {
        const auto start = Clock::now();
        const std::string key = "betti;" + in.digest + ";" + field_key(field) + ";rational=" +
                                (multimodular ? "multimodular" : "exact");
        Json t = cached(cache, key, [&] { return to_json(reduced_betti_table(delta, field, options)); });
        r["timings"]["homology_ms"][field.name()] = elapsed_ms(start);
        out << betti_line(t) << '\n';
        tables.push_back(std::move(t));
    }
    r["betti"] = std::move(tables);
    r["timings"]["total_ms"] = elapsed_ms(total);
    write_json(r, c.json_path, *c.json_out);
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cohen-Macaulay tests for independence complexes of graphs"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Common common;
    bool full = false;
    bool multimodular = false;
    std::size_t max_faces = 0;
    bool closed_form = false;
    HsopArgs hsop_args;

    auto* classify = app.add_subcommand("classify", "Decide Cohen-Macaulayness over each field");
    add_input_options(classify, common, false);
    classify->add_option("--char", common.chars, "Characteristic: 0 or a prime (repeatable)");
    classify->add_flag("--full", full, "Run the full Reisner check even when a shortcut applies");
    classify->add_flag("--multimodular", multimodular, "Rational ranks from several primes (heuristic)");
    classify->add_option("--max-faces", max_faces, "Give up (UNKNOWN) on complexes with more faces");

    auto* vectors = app.add_subcommand("vectors", "f- and h-vectors of the independence complex");
    add_input_options(vectors, common, false);
    vectors->add_flag("--closed-form", closed_form, "Also evaluate the closed form for T_N and compare");

    auto* hsop_cmd = app.add_subcommand("hsop", "Homogeneous system of parameters, optionally verified");
    add_input_options(hsop_cmd, common, false);
    hsop_cmd->add_option("--kind", hsop_args.kind, "elementary or powersum")
        ->check(CLI::IsMember({"elementary", "powersum"}));
    hsop_cmd->add_flag("--verify", hsop_args.verify, "Check regularity via Hilbert functions");
    hsop_cmd->add_option("--char", common.chars, "Characteristic: 0 or a prime (repeatable)");
    hsop_cmd->add_option("--degree-cap", hsop_args.degree_cap, "Highest degree examined");
    hsop_cmd->add_flag("--exact-rational", hsop_args.exact_rational, "Over Q, eliminate over the integers");
    hsop_cmd->add_option("--max-columns", hsop_args.max_columns, "Give up on larger matrices");

    auto* homology = app.add_subcommand("homology", "Reduced Betti numbers of the independence complex");
    add_input_options(homology, common, true);
    homology->add_option("--char", common.chars, "Characteristic: 0 or a prime (repeatable)");
    homology->add_flag("--multimodular", multimodular, "Rational ranks from several primes (heuristic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream sink;
    std::ostream& text = common.json_path == "-" ? sink : out;
    common.json_out = &out;
    try {
        if (classify->parsed()) return cmd_classify(common, full, multimodular, max_faces, text);
        if (vectors->parsed()) return cmd_vectors(common, closed_form, text);
        if (hsop_cmd->parsed()) return cmd_hsop(common, hsop_args, text);
        return cmd_homology(common, multimodular, text);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const CapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_cap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_input;
    }
}

}  // namespace tricm::cli
