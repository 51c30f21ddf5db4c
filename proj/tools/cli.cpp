#include "cli.hpp"

#include "suite.hpp"

#include "poramsey/cone_graphs.hpp"
#include "poramsey/error.hpp"
#include "poramsey/io.hpp"
#include "poramsey/planarity.hpp"
#include "poramsey/ramsey.hpp"
#include "poramsey/ring_graphs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>

namespace poramsey::cli {

namespace {

struct Globals {
    unsigned workers = default_workers();
    std::size_t max_poset_order = 7;
    std::size_t max_graph_order = 6;
    std::size_t search_limit = 64;

    [[nodiscard]] EnumerationOptions enumeration() const
    {
        EnumerationOptions o;
        o.workers = workers;
        o.max_poset_order = max_poset_order;
        o.max_graph_order = max_graph_order;
        return o;
    }
    [[nodiscard]] SearchLimits limits() const { return SearchLimits{search_limit}; }
};

struct GenArgs {
    std::string family;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::vector<std::int64_t> moduli;
    std::optional<std::size_t> width;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
    std::optional<std::string> format;
    std::vector<std::string> analyze;
};

struct AnalyzeArgs {
    std::string input = "-";
    std::vector<std::string> invariants;
};

struct RamseyArgs {
    std::string mode;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::int64_t> k;
    std::optional<std::size_t> order;
    std::string input = "-";
    std::vector<Vertex> subset;
};

struct CheckArgs {
    std::string selector;
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    std::optional<std::int64_t> k;
};

std::size_t require(const std::optional<std::size_t> & v, const char * flag)
{
    if (! v)
        throw Error(Errc::InvalidArgument, std::string("missing required flag ") + flag);
    return *v;
}

std::int64_t require(const std::optional<std::int64_t> & v, const char * flag)
{
    if (! v)
        throw Error(Errc::InvalidArgument, std::string("missing required flag ") + flag);
    return *v;
}

nlohmann::json distance_json(const Distance & d)
{
    return d.is_finite() ? nlohmann::json(d.value()) : nlohmann::json("inf");
}

nlohmann::json labelled(const Graph & g, std::span<const Vertex> vs)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto v : vs)
        out.push_back(g.label(v));
    return out;
}

nlohmann::json analyze_one(const Graph & g, const std::string & name, const Globals & globals)
{
    if (name == "size")
        return g.size();
    if (name == "edges")
        return g.edge_count();
    if (name == "clique-number")
        return clique_number(g, globals.limits());
    if (name == "independence-number")
        return independence_number(g, globals.limits());
    if (name == "max-clique")
        return labelled(g, maximum_clique(g, globals.limits()));
    if (name == "connected")
        return is_connected(g);
    if (name == "components") {
        auto comps = connected_components(g);
        nlohmann::json out = nlohmann::json::array();
        for (const auto & c : comps)
            out.push_back(labelled(g, c));
        return out;
    }
    if (name == "cliques") {
        auto comps = connected_components(g);
        bool disjoint = true;
        nlohmann::json parts = nlohmann::json::array();
        for (const auto & c : comps) {
            disjoint = disjoint && is_clique(g, c);
            parts.push_back(labelled(g, c));
        }
        nlohmann::json sizes = nlohmann::json::array();
        for (const auto & c : comps)
            sizes.push_back(c.size());
        return {{"disjoint_cliques", disjoint}, {"count", comps.size()}, {"sizes", sizes}, {"cliques", parts}};
    }
    if (name == "diameter")
        return distance_json(diameter(g));
    if (name == "girth")
        return distance_json(girth(g));
    if (name == "domination")
        return domination_number(g, globals.limits());
    if (name == "degrees") {
        nlohmann::json out = nlohmann::json::array();
        for (Vertex v = 0; v < g.size(); ++v)
            out.push_back(degree(g, v));
        return out;
    }
    if (name == "multipartite") {
        auto parts = complete_multipartite_parts(g);
        if (const auto * p = std::get_if<std::vector<std::vector<Vertex>>>(&parts)) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto & part : *p)
                out.push_back(labelled(g, part));
            return {{"complete", true}, {"parts", out}};
        }
        return {{"complete", false}};
    }
    if (name == "planar") {
        auto p = is_planar(g);
        nlohmann::json out{{"planar", p.planar}};
        if (p.certificate) {
            out["kind"] = p.certificate->kind == KuratowskiKind::K5 ? "K5" : "K33";
            out["branch_vertices"] = labelled(g, p.certificate->branch_vertices);
            out["certificate_valid"] = validate_certificate(g, *p.certificate);
        }
        else
            out["embedding_valid"] = validate_embedding(g, p.embedding);
        return out;
    }
    throw Error(Errc::InvalidArgument, "unknown invariant '" + name + "'");
}

nlohmann::json analyze_graph(const Graph & g, const std::vector<std::string> & names, const Globals & globals)
{
    for (const auto & name : names)
        if (std::find(invariant_names().begin(), invariant_names().end(), name) == invariant_names().end())
            throw Error(Errc::InvalidArgument, "unknown invariant '" + name + "'");
    nlohmann::json out = nlohmann::json::object();
    for (const auto & name : names)
        out[name] = analyze_one(g, name, globals);
    return out;
}

Graph generate(const GenArgs & a)
{
    const auto & f = a.family;
    if (f == "pdg") {
        if (! a.moduli.empty() && a.n)
            throw Error(Errc::InvalidArgument, "--n and --moduli are exclusive");
        if (! a.moduli.empty())
            return pdg_graph(PdgSpec(a.moduli));
        auto n = require(a.n, "--n");
        if (n > max_pdg_moduli)
            throw Error(Errc::SizeLimitExceeded, "--n " + std::to_string(n) + " exceeds " + std::to_string(max_pdg_moduli));
        return pdg_graph(PdgSpec(first_primes(n)));
    }
    if (f == "div-zn")
        return divisibility_graph_zn(require(a.n, "--n")).graph;
    if (f == "ideal-zn")
        return inclusion_ideal_graph_zn(require(a.n, "--n")).graph;
    if (f == "idm")
        return idempotent_graph(require(a.width, "--width")).graph;
    if (f == "cone")
        return cone_graph(ConeSpec(require(a.k, "--k")), Window(require(a.lo, "--lo"), require(a.hi, "--hi")));

    RamseyQuery q(require(a.n, "--n"), require(a.m, "--m"));
    if (f == "extremal-po")
        return extremal_po_graph(q).graph;
    if (f == "extremal-pdg") {
        auto ex = pdg_extremal(q);
        auto vs = ex.vertices();
        return induced_subgraph(pdg_graph(ex.spec), vs);
    }
    if (f == "extremal-idm") {
        auto ex = idempotent_extremal(q);
        auto vs = ex.vertices();
        return induced_subgraph(idempotent_graph(ex.width).graph, vs);
    }
    throw Error(Errc::InvalidArgument, "unknown family '" + f + "'");
}

std::string read_all(const std::string & path, std::istream & in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream file(path);
    if (! file)
        throw Error(Errc::ParseError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), {}};
}

nlohmann::json parse_json(const std::string & text)
{
    try {
        return nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception & e) {
        throw Error(Errc::ParseError, e.what());
    }
}

/// Graph documents carry "edges"; poset documents carry "leq" and are read
/// as their comparability graph.
Graph graph_from_document(const nlohmann::json & doc)
{
    if (doc.is_object() && doc.contains("leq"))
        return comparability_graph(poset_from_json(doc));
    return graph_from_json(doc);
}

int do_gen(const GenArgs & a, const Globals & globals, std::ostream & out)
{
    auto g = generate(a);
    if (! a.analyze.empty()) {
        if (a.format == "dot")
            throw Error(Errc::InvalidArgument, "--analyze writes JSON and cannot be combined with --export dot");
        nlohmann::json doc{{"family", a.family}, {"analysis", analyze_graph(g, a.analyze, globals)}};
        if (a.format == "json")
            doc["graph"] = graph_to_json(g);
        out << doc.dump() << '\n';
        return exit_ok;
    }
    if (a.format == "dot")
        out << to_dot(g, a.family);
    else
        out << graph_to_json(g).dump() << '\n';
    return exit_ok;
}

int do_analyze(const AnalyzeArgs & a, const Globals & globals, std::istream & in, std::ostream & out)
{
    auto g = graph_from_document(parse_json(read_all(a.input, in)));
    std::vector<std::string> names = a.invariants;
    if (names.empty())
        names = {"size", "edges", "connected", "clique-number", "independence-number", "diameter", "girth"};
    out << analyze_graph(g, names, globals).dump() << '\n';
    return exit_ok;
}

int do_ramsey(const RamseyArgs & a, const Globals & globals, std::istream & in, std::ostream & out, std::ostream & err)
{
    RamseyQuery q(require(a.n, "--n"), require(a.m, "--m"));
    if (a.mode == "witness") {
        auto p = poset_from_json(parse_json(read_all(a.input, in)));
        auto subset = a.subset.empty() ? all_vertices(p.size()) : a.subset;
        auto w = extract_witness(p, subset, q);
        bool valid = witness_is_valid(p, w, q);
        out << nlohmann::json{{"query", to_json(q)}, {"witness", to_json(w)}, {"valid", valid}}.dump() << '\n';
        if (! valid)
            err << "extracted witness failed validation\n";
        return valid ? exit_ok : exit_verification_failure;
    }
    if (a.mode == "verify-po") {
        auto r = verify_po_class(q, globals.enumeration());
        out << to_json(r).dump() << '\n';
        return r.all_pass ? exit_ok : exit_verification_failure;
    }
    if (a.mode == "verify-cone") {
        auto r = verify_cone(ConeSpec(require(a.k, "--k")), q);
        out << to_json(r).dump() << '\n';
        return r.all_pass ? exit_ok : exit_verification_failure;
    }
    // search-general: a counterexample below the classical number is expected.
    auto order = a.order ? *a.order : globals.max_graph_order;
    auto r = general_ramsey_search(q, order, globals.enumeration());
    auto doc = to_json(r);
    auto known = classical_ramsey(q);
    bool consistent = true;
    if (known) {
        doc["classical"] = *known;
        consistent = r.all_pass == (order >= *known);
    }
    else
        doc["classical"] = nullptr;
    out << doc.dump() << '\n';
    if (! consistent)
        err << "search result disagrees with the known classical value\n";
    return consistent ? exit_ok : exit_verification_failure;
}

int do_check(const CheckArgs & a, const Globals & globals, std::ostream & out)
{
    SuiteOptions options;
    options.n = a.n;
    options.m = a.m;
    options.k = a.k;
    options.enumeration = globals.enumeration();
    bool pass = run_suite(a.selector, options, [&](const ClaimResult & r) { out << to_json(r).dump() << '\n' << std::flush; });
    return pass ? exit_ok : exit_verification_failure;
}

} // namespace

const std::vector<std::string> & invariant_names()
{
    static const std::vector<std::string> names{"size", "edges", "clique-number", "independence-number", "max-clique",
        "connected", "components", "cliques", "diameter", "girth", "domination", "degrees", "multipartite", "planar"};
    return names;
}

int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Ramsey toolkit for comparability graphs", "poramsey"};
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--workers", globals.workers, "Worker threads (default: RAMSEY_WORKERS or hardware)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-poset-order", globals.max_poset_order, "Largest poset order to enumerate")->capture_default_str();
    app.add_option("--max-graph-order", globals.max_graph_order, "Largest graph order to enumerate")->capture_default_str();
    app.add_option("--search-limit", globals.search_limit, "Vertex cap for exact clique and domination search")
        ->capture_default_str();

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a graph family");
    gen_cmd->add_option("family", gen.family, "Family name")
        ->required()
        ->check(CLI::IsMember({"pdg", "div-zn", "ideal-zn", "idm", "cone", "extremal-po", "extremal-pdg", "extremal-idm"}));
    gen_cmd->add_option("--n", gen.n, "Size parameter");
    gen_cmd->add_option("--m", gen.m, "Independence target for extremal families");
    gen_cmd->add_option("--moduli", gen.moduli, "Pairwise coprime moduli for pdg")->delimiter(',');
    gen_cmd->add_option("--width", gen.width, "Number of Z_2 factors for idm");
    gen_cmd->add_option("--k", gen.k, "Cone modulus");
    gen_cmd->add_option("--lo", gen.lo, "Window start");
    gen_cmd->add_option("--hi", gen.hi, "Window end");
    gen_cmd->add_option("--export", gen.format, "Output format")->check(CLI::IsMember({"dot", "json"}));
    gen_cmd->add_option("--analyze", gen.analyze, "Invariants to compute")->delimiter(',')->check(CLI::IsMember(invariant_names()));

    AnalyzeArgs analyze;
    auto * analyze_cmd = app.add_subcommand("analyze", "Compute invariants of a graph or poset JSON document");
    analyze_cmd->add_option("--input", analyze.input, "File path or - for stdin")->capture_default_str();
    analyze_cmd->add_option("--invariants", analyze.invariants, "Invariants to compute")
        ->delimiter(',')
        ->check(CLI::IsMember(invariant_names()));

    RamseyArgs ramsey;
    auto * ramsey_cmd = app.add_subcommand("ramsey", "Witness extraction and exhaustive verification");
    ramsey_cmd->add_option("mode", ramsey.mode, "witness | verify-po | verify-cone | search-general")
        ->required()
        ->check(CLI::IsMember({"witness", "verify-po", "verify-cone", "search-general"}));
    ramsey_cmd->add_option("--n", ramsey.n, "Clique target");
    ramsey_cmd->add_option("--m", ramsey.m, "Independence target");
    ramsey_cmd->add_option("--k", ramsey.k, "Cone modulus");
    ramsey_cmd->add_option("--order", ramsey.order, "Graph order for search-general");
    ramsey_cmd->add_option("--input", ramsey.input, "Poset JSON for witness, - for stdin")->capture_default_str();
    ramsey_cmd->add_option("--subset", ramsey.subset, "Vertex subset for witness")->delimiter(',');

    CheckArgs check;
    auto * check_cmd = app.add_subcommand("check", "Run theorem checks, one JSON line per claim");
    check_cmd->add_option("selector", check.selector, "all or a theorem id")->required();
    check_cmd->add_option("--n", check.n, "Restrict to this n");
    check_cmd->add_option("--m", check.m, "Restrict to this m");
    check_cmd->add_option("--k", check.k, "Restrict to this cone modulus");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd)
            return do_gen(gen, globals, out);
        if (*analyze_cmd)
            return do_analyze(analyze, globals, in, out);
        if (*ramsey_cmd)
            return do_ramsey(ramsey, globals, in, out, err);
        return do_check(check, globals, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace poramsey::cli
