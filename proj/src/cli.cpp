#include "hamfree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamfree/canonical.hpp"
#include "hamfree/conditions.hpp"
#include "hamfree/constructions.hpp"
#include "hamfree/enumeration.hpp"
#include "hamfree/formulas.hpp"
#include "hamfree/graph6.hpp"
#include "hamfree/properties.hpp"
#include "hamfree/report_json.hpp"
#include "hamfree/verify.hpp"

namespace hamfree {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

int default_jobs() {
    if (const char* env = std::getenv("HAMFREE_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in " + text);
        parts.push_back(std::stoi(item));
    }
    if (parts.empty()) throw std::invalid_argument("no parts in " + text);
    return parts;
}

Property make_property(const std::string& name, int k) {
    auto kind = property_from_name(name);
    if (!kind) throw std::invalid_argument("unknown property " + name);
    return Property{*kind, k};
}

// Graphs from positional graph6 arguments, or stdin lines with --stdin.
std::vector<Graph> gather_inputs(const std::vector<std::string>& args, bool use_stdin,
                                 std::istream& in) {
    std::vector<Graph> graphs;
    for (const auto& a : args) graphs.push_back(from_graph6(a));
    if (use_stdin) read_graph6_stream(in, [&](const Graph& g) { graphs.push_back(g); });
    return graphs;
}

nlohmann::json witness_json(const Witness& w) {
    nlohmann::json j;
    switch (w.kind) {
        case Witness::Kind::Cycle: j["kind"] = "cycle"; break;
        case Witness::Kind::Path: j["kind"] = "path"; break;
        case Witness::Kind::PathBetween: j["kind"] = "path_between"; break;
        case Witness::Kind::None: j["kind"] = "none"; break;
    }
    if (w.kind != Witness::Kind::None) j["vertices"] = w.vertices;
    return j;
}

int run_check(const Property& prop, const std::vector<Graph>& graphs, std::ostream& out) {
    for (const auto& g : graphs) {
        nlohmann::json j;
        j["graph"] = to_graph6(g);
        j["property"] = property_name(prop);
        if (prop.kind == PropertyKind::KPathHamiltonian || prop.kind == PropertyKind::KHamiltonian)
            j["k"] = prop.k;
        switch (prop.kind) {
            case PropertyKind::Traceable: {
                auto w = find_hamiltonian_path(g);
                j["holds"] = g.vertex_count() <= 1 || w.has_value();
                j["witness"] = w ? witness_json(*w) : witness_json(Witness{});
                break;
            }
            case PropertyKind::Hamiltonian: {
                auto w = find_hamiltonian_cycle(g);
                j["holds"] = w.has_value();
                j["witness"] = w ? witness_json(*w) : witness_json(Witness{});
                break;
            }
            case PropertyKind::HamiltonianConnected: {
                auto failure = hamiltonian_connected_failure(g);
                bool holds = g.vertex_count() >= 2 && !failure;
                j["holds"] = holds;
                if (failure) j["failing_pair"] = {failure->first, failure->second};
                break;
            }
            case PropertyKind::KPathHamiltonian: {
                auto res = is_k_path_hamiltonian(g, prop.k);
                j["holds"] = res.holds;
                if (!res.holds) j["counterexample_path"] = res.counterexample_path;
                break;
            }
            case PropertyKind::KHamiltonian: {
                auto res = is_k_hamiltonian(g, prop.k);
                j["holds"] = res.holds;
                if (!res.holds) j["counterexample_deletion"] = res.counterexample_deletion;
                break;
            }
            case PropertyKind::ChordedPancyclic: {
                auto res = is_chorded_pancyclic(g);
                j["holds"] = res.holds;
                if (!res.holds) j["missing_length"] = res.missing_length;
                break;
            }
        }
        out << j.dump() << '\n';
    }
    return kExitOk;
}

struct VerifyOptions {
    std::string theorem;
    int n = 0;
    int r = 0;
    int k = 0;
    int t = 0;
    int m = 12;
    int ell = 0;
    std::string graph_id;
    bool witness_only = false;
    int jobs = 1;
    std::string json_path;
    bool csv = false;
    bool timings = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    auto deliver = [&](const std::string& json_line, const std::string& verdict) {
        out << json_line << '\n';
        if (!opt.json_path.empty()) {
            std::ofstream f(opt.json_path);
            f << json_line << '\n';
        }
        if (verdict == "mismatch") return kExitMismatch;
        if (verdict == "out_of_hypothesis") return kExitRefused;
        return kExitOk;
    };

    if (opt.theorem == "degree") {
        auto rep = verify_degree_theorem(opt.r, opt.ell, opt.n, opt.jobs);
        err << "degree theorem r=" << opt.r << " ell=" << opt.ell << " n=" << opt.n << ": "
            << rep.verdict << " (" << rep.runtime_ms << " ms)\n";
        return deliver(to_json_string(rep, opt.timings), rep.verdict);
    }
    if (opt.theorem == "kk" || opt.theorem == "frohmader") {
        std::optional<int> r;
        if (opt.theorem == "frohmader") r = opt.r;
        auto rep = verify_clique_bounds(opt.t, opt.m, r, opt.jobs);
        err << opt.theorem << " t=" << opt.t << " m<=" << opt.m << ": " << rep.verdict << " ("
            << rep.runtime_ms << " ms)\n";
        return deliver(to_json_string(rep, opt.timings), rep.verdict);
    }
    if (opt.theorem == "family") {
        auto rep = family_characterization_check(opt.n, opt.r, opt.k);
        err << "family check n=" << opt.n << " r=" << opt.r << " k=" << opt.k << ": "
            << rep.verdict << " (" << rep.runtime_ms << " ms)\n";
        return deliver(to_json_string(rep, opt.timings), rep.verdict);
    }
    if (opt.theorem == "witness") {
        std::vector<std::string> ids =
            opt.graph_id.empty() ? witness_registry_ids() : std::vector<std::string>{opt.graph_id};
        bool all_pass = true;
        for (const auto& id : ids) {
            auto rep = witness_check(id);
            out << to_json_string(rep) << '\n';
            err << "witness " << rep.graph_id << ": " << (rep.pass ? "pass" : "FAIL") << '\n';
            all_pass = all_pass && rep.pass;
        }
        return all_pass ? kExitOk : kExitMismatch;
    }

    Property prop = make_property(opt.theorem, opt.k);
    Metric metric;
    if (opt.t > 0) metric = Metric{Metric::Kind::Cliques, opt.t};
    auto rep = extremal_number(prop, opt.n, opt.r, metric, opt.witness_only, opt.jobs);
    err << "verify " << rep.theorem << " n=" << rep.n << " r=" << rep.r << ": " << rep.verdict
        << " (" << rep.runtime_ms << " ms, " << rep.computed_extremal.size()
        << " extremal graphs)\n";
    if (opt.csv) {
        out << kExtremalCsvHeader << '\n' << to_csv_line(rep) << '\n';
        if (!opt.json_path.empty()) {
            std::ofstream f(opt.json_path);
            f << to_json_string(rep, opt.timings) << '\n';
        }
        if (rep.verdict == "mismatch") return kExitMismatch;
        if (rep.verdict == "out_of_hypothesis") return kExitRefused;
        return kExitOk;
    }
    return deliver(to_json_string(rep, opt.timings), rep.verdict);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Extremal numbers and Hamiltonicity-type properties of K_{r+1}-free graphs"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "emit named graphs as graph6");
    construct->require_subcommand(1);
    int cn = 0, cr = 2, cell = -1;
    long long cm = 0;
    std::string parts_text, family_name = "g";
    auto* c_turan = construct->add_subcommand("turan", "Turan graph T_r(n)");
    c_turan->add_option("--n", cn)->required();
    c_turan->add_option("--r", cr)->required();
    auto* c_colex = construct->add_subcommand("colex", "colex graph C(m)");
    c_colex->add_option("--m", cm)->required();
    auto* c_colext = construct->add_subcommand("colex-turan", "r-partite colex Turan graph CT_r(m)");
    c_colext->add_option("--m", cm)->required();
    c_colext->add_option("--r", cr)->required();
    auto* c_gstar = construct->add_subcommand("g-star", "T_r(n-1) plus the colex attachment vertex");
    c_gstar->add_option("--n", cn)->required();
    c_gstar->add_option("--r", cr)->required();
    c_gstar->add_option("--ell", cell)->required();
    auto* c_family = construct->add_subcommand("family", "all members of G^ell / H^ell / J^k");
    c_family->add_option("--family", family_name, "g, h or j")->required();
    c_family->add_option("--n", cn)->required();
    c_family->add_option("--r", cr)->required();
    c_family->add_option("--ell", cell)->required();
    auto* c_multi = construct->add_subcommand("multipartite", "complete multipartite graph");
    c_multi->add_option("--parts", parts_text, "comma-separated part sizes")->required();

    // check
    auto* check = app.add_subcommand("check", "decide a property, emit verdict + witness JSON");
    std::string property_name_arg;
    int check_k = 0;
    bool check_stdin = false;
    std::vector<std::string> check_graphs;
    check->add_option("--property", property_name_arg, "trace|ham|hamconn|kpath|kham|chorded")
        ->required();
    check->add_option("--k", check_k, "parameter for kpath/kham");
    check->add_flag("--stdin", check_stdin, "read graph6 lines from standard input");
    check->add_option("graphs", check_graphs, "graph6 arguments");

    // count
    auto* count = app.add_subcommand("count", "count t-cliques");
    int count_t = 0;
    bool count_stdin = false;
    std::vector<std::string> count_graphs;
    count->add_option("--cliques", count_t, "clique size t")->required();
    count->add_flag("--stdin", count_stdin);
    count->add_option("graphs", count_graphs);

    // formula
    auto* formula = app.add_subcommand("formula", "exact closed-form values");
    formula->require_subcommand(1);
    int fn = 0, fr = 0, fk = 0;
    std::string f_property;
    auto* f_turan = formula->add_subcommand("turan-edges", "e(T_r(n))");
    f_turan->add_option("--n", fn)->required();
    f_turan->add_option("--r", fr)->required();
    auto* f_bound = formula->add_subcommand("bound", "registry edge bound for a property");
    f_bound->add_option("--property", f_property)->required();
    f_bound->add_option("--n", fn)->required();
    f_bound->add_option("--r", fr)->required();
    f_bound->add_option("--k", fk);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free generation, graph6 stream");
    EnumConstraints constraints;
    int en = 0, e_maxclique = 0, e_jobs = default_jobs();
    long long e_minedges = -1, e_maxedges = -1;
    bool e_bipartite = false;
    enumerate->add_option("--n", en)->required();
    enumerate->add_option("--max-clique", e_maxclique, "keep K_{r+1}-free for this r");
    enumerate->add_option("--min-edges", e_minedges);
    enumerate->add_option("--max-edges", e_maxedges);
    enumerate->add_flag("--bipartite", e_bipartite);
    enumerate->add_option("--jobs", e_jobs);

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem registry verification");
    VerifyOptions vopt;
    vopt.jobs = default_jobs();
    verify
        ->add_option("--theorem", vopt.theorem,
                     "trace|ham|hamconn|kpath|kham|chorded|degree|kk|frohmader|family|witness")
        ->required();
    verify->add_option("--n", vopt.n);
    verify->add_option("--r", vopt.r);
    verify->add_option("--k", vopt.k);
    verify->add_option("--t", vopt.t, "clique metric size (property theorems) or t (kk/frohmader)");
    verify->add_option("--m", vopt.m, "edge budget for kk/frohmader");
    verify->add_option("--ell", vopt.ell, "offset for the degree theorem");
    verify->add_option("--graph", vopt.graph_id, "witness registry id");
    verify->add_flag("--witness-only", vopt.witness_only);
    verify->add_option("--jobs", vopt.jobs);
    verify->add_option("--json", vopt.json_path, "also write the JSON report to this path");
    verify->add_flag("--csv", vopt.csv, "emit a CSV summary instead of JSON");
    verify->add_flag("--timings", vopt.timings, "include runtime_ms in the JSON");

    std::vector<const char*> argv;
    argv.push_back("hamfree");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (construct->parsed()) {
            std::vector<Graph> graphs;
            if (c_turan->parsed()) graphs.push_back(turan_graph(cn, cr));
            if (c_colex->parsed()) graphs.push_back(colex_graph(cm));
            if (c_colext->parsed()) graphs.push_back(colex_turan_graph(cm, cr));
            if (c_gstar->parsed()) graphs.push_back(g_star(cn, cr, cell));
            if (c_multi->parsed()) graphs.push_back(complete_multipartite(PartSizes(parse_parts(parts_text))));
            if (c_family->parsed()) {
                Family fam;
                if (family_name == "g") fam = Family::GEll;
                else if (family_name == "h") fam = Family::HEll;
                else if (family_name == "j") fam = Family::JK;
                else throw std::invalid_argument("--family expects g, h or j");
                graphs = family_members({fam, cn, cr, cell});
            }
            for (const auto& g : graphs) out << to_graph6(g) << '\n';
            return kExitOk;
        }
        if (check->parsed()) {
            return run_check(make_property(property_name_arg, check_k),
                             gather_inputs(check_graphs, check_stdin, in), out);
        }
        if (count->parsed()) {
            for (const auto& g : gather_inputs(count_graphs, count_stdin, in))
                out << count_cliques(g, count_t) << '\n';
            return kExitOk;
        }
        if (formula->parsed()) {
            if (f_turan->parsed()) {
                out << turan_edges(fn, fr) << '\n';
                return kExitOk;
            }
            Property p = make_property(f_property, fk);
            EdgeBound eb = edge_bound(p, fn, fr);
            if (eb.min_n_bound < 0 || !eb.in_bound_range) {
                nlohmann::json j;
                j["status"] = "hypotheses_not_met";
                if (eb.min_n_bound >= 0) j["min_n"] = eb.min_n_bound;
                out << j.dump() << '\n';
                err << "bound not proven at these parameters\n";
                return kExitRefused;
            }
            out << eb.value << '\n';
            return kExitOk;
        }
        if (enumerate->parsed()) {
            constraints.n = en;
            if (enumerate->count("--max-clique")) constraints.max_clique = e_maxclique;
            if (e_minedges >= 0) constraints.min_edges = e_minedges;
            if (e_maxedges >= 0) constraints.max_edges = e_maxedges;
            constraints.bipartite_only = e_bipartite;
            enumerate_graphs(constraints, [&](const Graph& g) { out << to_graph6(g) << '\n'; },
                             e_jobs);
            return kExitOk;
        }
        if (verify->parsed()) return run_verify(vopt, out, err);
    } catch (const budget_error& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const graph6_error& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const capacity_error& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace hamfree
