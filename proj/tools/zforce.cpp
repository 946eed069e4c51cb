#include "zf/enumerate.hpp"
#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/leaky.hpp"
#include "zf/solver.hpp"
#include "zf/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_rejected = 1;
constexpr int exit_usage = 2;

std::vector<int> parse_index_list(const std::string& text)
{
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ','))
        if (!token.empty())
            out.push_back(std::stoi(token));
    return out;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

// lines starting with a digit mean edge-list text, otherwise graph6
zf::Graph load_graph(const std::string& path, const std::string& format)
{
    std::string text = read_input(path);
    std::string fmt = format;
    if (fmt == "auto") {
        std::istringstream in(text);
        std::string line;
        fmt = "g6";
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#')
                continue;
            fmt = std::isdigit(static_cast<unsigned char>(line[pos])) ? "edges" : "g6";
            break;
        }
    }
    if (fmt == "edges")
        return zf::parse_edge_list(text);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            return zf::parse_graph6(line);
    }
    throw std::invalid_argument("no graph found in input");
}

std::vector<zf::Graph> load_corpus(const std::string& path)
{
    std::string text = read_input(path);
    std::istringstream in(text);
    std::vector<zf::Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        out.push_back(zf::parse_graph6(line));
    }
    return out;
}

json set_to_json(const zf::VertexSet& s)
{
    json a = json::array();
    for (int v : s.to_vector())
        a.push_back(v);
    return a;
}

json verdict_to_json(const zf::LeakyVerdict& v)
{
    json j;
    j["accepted"] = v.accepted;
    j["l"] = v.l;
    j["method"] = v.method_name();
    if (v.witness)
        j["witness"] = set_to_json(*v.witness);
    return j;
}

json process_to_json(const zf::ForcingProcess& p)
{
    json steps = json::array();
    for (const auto& f : p.steps)
        steps.push_back(json::array({ f.source, f.target }));
    json j;
    j["n"] = p.n;
    j["initial"] = set_to_json(p.initial);
    j["leaks"] = set_to_json(p.leaks);
    j["steps"] = steps;
    j["final"] = set_to_json(p.final_set);
    return j;
}

int cmd_closure(const std::string& input, const std::string& format, const std::string& blue,
    const std::string& leaks, bool as_json)
{
    zf::Graph g = load_graph(input, format);
    zf::VertexSet b = zf::VertexSet::of(parse_index_list(blue));
    zf::VertexSet l = zf::VertexSet::of(parse_index_list(leaks));
    zf::ForcingProcess p = zf::run_process(g, b, l);
    auto cs = zf::chains(p);
    if (as_json) {
        json j = process_to_json(p);
        json jc = json::array();
        for (const auto& c : cs)
            jc.push_back(c.vertices);
        j["chains"] = jc;
        j["complete"] = p.complete();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "closure: " << p.final_set.to_string() << (p.complete() ? " (all blue)" : "")
                  << '\n';
        std::cout << "steps:";
        for (const auto& f : p.steps)
            std::cout << ' ' << f.source << "->" << f.target;
        std::cout << '\n' << "chains:";
        for (const auto& c : cs) {
            std::cout << ' ';
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                std::cout << (i ? "->" : "") << c.vertices[i];
        }
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& blue,
    int l, const std::string& method, bool as_json)
{
    zf::Graph g = load_graph(input, format);
    zf::VertexSet b = zf::VertexSet::of(parse_index_list(blue));
    std::vector<zf::LeakyVerdict> verdicts;
    if (method == "adversary" || method == "both")
        verdicts.push_back(zf::verify_leaky_adversary(g, b, l));
    if (method == "characterization" || method == "both")
        verdicts.push_back(zf::verify_leaky_characterization(g, b, l));

    bool accepted = verdicts.front().accepted;
    for (const auto& v : verdicts)
        if (v.accepted != accepted) {
            std::cerr << "verifier disagreement; this is a bug\n";
            return 4;
        }
    if (as_json) {
        if (verdicts.size() == 1)
            std::cout << verdict_to_json(verdicts.front()).dump() << '\n';
        else {
            json j = json::array();
            for (const auto& v : verdicts)
                j.push_back(verdict_to_json(v));
            std::cout << j.dump() << '\n';
        }
    } else {
        for (const auto& v : verdicts) {
            std::cout << v.method_name() << ": " << (v.accepted ? "accepted" : "rejected");
            if (!v.accepted && v.witness)
                std::cout << " with leak witness " << v.witness->to_string();
            std::cout << '\n';
        }
    }
    return accepted ? exit_ok : exit_rejected;
}

json solve_to_json(const zf::Graph& g, int l, const zf::SolveResult& r)
{
    json j;
    j["graph"] = zf::emit_graph6(g);
    j["l"] = l;
    j["value"] = r.value;
    j["witness"] = set_to_json(r.witness);
    j["certified"] = true;
    return j;
}

void print_solve_text(const zf::Graph& g, int l, const zf::SolveResult& r)
{
    std::cout << "Z_" << l << " = " << r.value << "  witness " << r.witness.to_string() << '\n';
    for (const auto& note : r.bounds_used.notes)
        std::cerr << "note: " << note << '\n';
    std::cerr << "candidates examined: " << r.stats.candidates_examined << '\n';
    (void)g;
}

int cmd_solve(const std::string& input, const std::string& format, int l, int cap, bool all_min,
    bool as_json)
{
    zf::Graph g = load_graph(input, format);
    zf::SolveCache cache;
    zf::SolveOptions opts;
    opts.cap = cap;
    opts.cache = &cache;
    zf::SolveResult r = zf::leaky_forcing_number(g, l, opts);
    json j = solve_to_json(g, l, r);
    if (all_min) {
        auto sets = zf::all_minimum_leaky_sets(g, l, opts);
        if (as_json) {
            json arr = json::array();
            for (const auto& s : sets)
                arr.push_back(set_to_json(s));
            j["minimum_sets"] = arr;
            j["minimum_set_count"] = sets.size();
        } else {
            print_solve_text(g, l, r);
            std::cout << "minimum sets (" << sets.size() << "):\n";
            for (const auto& s : sets)
                std::cout << "  " << s.to_string() << '\n';
            return exit_ok;
        }
    }
    if (as_json)
        std::cout << j.dump() << '\n';
    else if (!all_min)
        print_solve_text(g, l, r);
    return exit_ok;
}

struct FamilyArgs {
    std::string name;
    std::vector<int> params;
    int l = 1;
    int size = 0;
    unsigned long long seed = 0;
    bool construct = false;
    bool verify = false;
    bool all_min = false;
    int cap = 0;
    bool as_json = false;
};

zf::FamilySpec spec_from_args(const FamilyArgs& a)
{
    zf::FamilySpec spec;
    auto need = [&](std::size_t count) {
        if (a.params.size() != count)
            throw CLI::ValidationError(
                "family " + a.name + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (a.name == "path") {
        spec.name = zf::Family::path;
        need(1);
    } else if (a.name == "cycle") {
        spec.name = zf::Family::cycle;
        need(1);
    } else if (a.name == "complete") {
        spec.name = zf::Family::complete;
        need(1);
    } else if (a.name == "star") {
        spec.name = zf::Family::star;
        need(1);
    } else if (a.name == "spider") {
        spec.name = zf::Family::spider;
        need(2);
    } else if (a.name == "tree") {
        spec.name = zf::Family::tree;
        need(0);
        spec.a = a.size;
        spec.seed = a.seed;
        return spec;
    } else if (a.name == "grid") {
        spec.name = zf::Family::grid;
        need(2);
    } else if (a.name == "supertriangle") {
        spec.name = zf::Family::supertriangle;
        need(1);
    } else if (a.name == "cliqueprism") {
        spec.name = zf::Family::clique_prism;
        need(1);
    } else if (a.name == "cliqueleaves") {
        spec.name = zf::Family::clique_with_leaves;
        need(1);
    } else {
        throw CLI::ValidationError("unknown family: " + a.name);
    }
    spec.a = a.params.size() > 0 ? a.params[0] : 0;
    spec.b = a.params.size() > 1 ? a.params[1] : 0;
    return spec;
}

// the paper-backed constructed set for a family, where one exists
zf::VertexSet family_construction(const zf::FamilySpec& spec, const zf::Graph& g, int l)
{
    switch (spec.name) {
    case zf::Family::path:
    case zf::Family::star:
    case zf::Family::spider:
    case zf::Family::tree:
        return zf::tree_leaky_set(g, std::max(1, l));
    case zf::Family::grid:
        if (l != 1)
            throw std::invalid_argument("grid construction covers l=1 only");
        return zf::grid_one_leaky_set(std::min(spec.a, spec.b), std::max(spec.a, spec.b));
    case zf::Family::supertriangle:
        return zf::supertriangle_leaky_set(spec.a, l);
    case zf::Family::clique_with_leaves: {
        zf::VertexSet b;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) <= l)
                b.set(v);
        return b;
    }
    case zf::Family::cycle:
        if (l > 1)
            throw std::invalid_argument("cycle construction covers l <= 1 only");
        return zf::VertexSet::of({ 0, 1 });
    case zf::Family::complete: {
        if (l > spec.a - 2)
            return zf::VertexSet::full(spec.a);
        return zf::VertexSet::full(spec.a - 1);
    }
    default:
        throw std::invalid_argument("no construction for this family");
    }
}

int cmd_family(const FamilyArgs& a)
{
    zf::FamilySpec spec = spec_from_args(a);
    zf::Graph g = zf::generate(spec);
    zf::Prediction pred = zf::predicted_value(spec, a.l);

    json j;
    j["family"] = a.name;
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    if (g.order() <= 62)
        j["graph6"] = zf::emit_graph6(g);
    if (spec.name == zf::Family::tree)
        j["seed"] = spec.seed;
    j["l"] = a.l;
    if (pred.known()) {
        json p;
        if (pred.exact)
            p["exact"] = *pred.exact;
        else {
            if (pred.lower)
                p["lower"] = *pred.lower;
            if (pred.upper)
                p["upper"] = *pred.upper;
        }
        p["source"] = pred.source;
        j["predicted"] = p;
    } else {
        j["predicted"] = "unknown";
    }

    int code = exit_ok;
    zf::VertexSet built;
    bool have_built = false;
    if (a.construct || a.verify) {
        built = family_construction(spec, g, a.l);
        have_built = true;
        j["constructed"] = set_to_json(built);
        j["constructed_size"] = built.count();
    }
    if (a.verify && have_built) {
        auto va = zf::verify_leaky_adversary(g, built, a.l);
        j["verdict"] = verdict_to_json(va);
        if (!va.accepted)
            code = exit_rejected;
    }
    if (a.all_min) {
        zf::SolveOptions opts;
        opts.cap = a.cap;
        auto sets = zf::all_minimum_leaky_sets(g, a.l, opts);
        json arr = json::array();
        for (const auto& s : sets)
            arr.push_back(set_to_json(s));
        j["minimum_sets"] = arr;
        j["minimum_set_count"] = sets.size();
    }

    if (a.as_json) {
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "family " << a.name << ": " << g.order() << " vertices, " << g.edge_count()
                  << " edges";
        if (g.order() <= 62)
            std::cout << ", graph6 " << zf::emit_graph6(g);
        std::cout << '\n';
        if (spec.name == zf::Family::tree)
            std::cout << "seed: " << spec.seed << '\n';
        if (pred.known()) {
            std::cout << "predicted Z_" << a.l << ": ";
            if (pred.exact)
                std::cout << *pred.exact;
            else
                std::cout << "[" << (pred.lower ? std::to_string(*pred.lower) : "?") << ", "
                          << (pred.upper ? std::to_string(*pred.upper) : "?") << "]";
            std::cout << "  (" << pred.source << ")\n";
        } else {
            std::cout << "predicted Z_" << a.l << ": unknown\n";
        }
        if (have_built)
            std::cout << "constructed set (" << built.count() << "): " << built.to_string()
                      << '\n';
        if (j.contains("verdict"))
            std::cout << "adversary verdict: "
                      << (j["verdict"]["accepted"].get<bool>() ? "accepted" : "rejected") << '\n';
        if (j.contains("minimum_set_count"))
            std::cout << "minimum sets: " << j["minimum_set_count"].get<std::size_t>() << '\n';
    }
    return code;
}

int cmd_sweep(const std::string& corpus_path, int enumerate_n, const std::string& checks, int l,
    int jobs, int cap, bool as_json, bool as_csv)
{
    std::vector<zf::Graph> corpus;
    std::string corpus_id;
    if (!corpus_path.empty()) {
        corpus = load_corpus(corpus_path);
        corpus_id = corpus_path;
    } else {
        if (enumerate_n < 1 || enumerate_n > 7)
            throw CLI::ValidationError("--enumerate takes 1..7");
        for (int n = 1; n <= enumerate_n; ++n)
            for (const auto& g : zf::enumerate_graphs(n, true))
                corpus.push_back(g);
        corpus_id = "enumerate:" + std::to_string(enumerate_n);
    }

    zf::SweepOptions opts;
    if (!checks.empty()) {
        std::istringstream in(checks);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty())
                opts.checks.push_back(tok);
    }
    opts.l = l;
    opts.jobs = jobs;
    opts.cap = cap;
    zf::SweepReport rep = zf::run_sweep(corpus, corpus_id, opts);

    if (as_json) {
        json j;
        j["corpus"] = rep.corpus_id;
        j["l"] = rep.l;
        j["checks"] = rep.checks;
        j["graphs"] = rep.records.size();
        j["failed"] = rep.failed_graphs;
        json records = json::array();
        for (const auto& r : rep.records) {
            json jr;
            jr["graph6"] = r.graph6;
            jr["z"] = r.z;
            jr["ok"] = r.ok();
            jr["failures"] = r.failures;
            records.push_back(jr);
        }
        j["records"] = records;
        std::cout << j.dump() << '\n';
    } else if (as_csv) {
        std::cout << "graph6";
        for (int i = 0; i <= rep.l; ++i)
            std::cout << ",z" << i;
        std::cout << ",ok,failures\n";
        for (const auto& r : rep.records) {
            std::cout << r.graph6;
            for (std::size_t i = 0; i < static_cast<std::size_t>(rep.l) + 1; ++i)
                std::cout << ',' << (i < r.z.size() ? std::to_string(r.z[i]) : "");
            std::cout << ',' << (r.ok() ? "1" : "0") << ',';
            for (std::size_t i = 0; i < r.failures.size(); ++i)
                std::cout << (i ? "; " : "") << r.failures[i];
            std::cout << '\n';
        }
    } else {
        std::cout << "corpus " << rep.corpus_id << ": " << rep.records.size() << " graphs, "
                  << rep.failed_graphs << " with failures\n";
        for (const auto& r : rep.records)
            for (const auto& f : r.failures)
                std::cout << r.graph6 << "  " << f << '\n';
    }
    return rep.failed_graphs == 0 ? exit_ok : exit_rejected;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "exact zero forcing and leaky forcing computations" };
    app.require_subcommand(1);

    std::string input = "-", format = "auto", blue, leaks, method = "both", checks, corpus_path;
    int l = 0, cap = 0, enumerate_n = 0, jobs = 1;
    bool as_json = false, as_csv = false, all_min = false;

    auto* closure_cmd = app.add_subcommand("closure", "run the forcing process");
    closure_cmd->add_option("input", input, "graph file or - for stdin");
    closure_cmd->add_option("--blue", blue, "comma-separated blue vertices")->required();
    closure_cmd->add_option("--leaks", leaks, "comma-separated leak vertices");
    closure_cmd->add_option("--format", format)->check(CLI::IsMember({ "auto", "g6", "edges" }));
    closure_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "verify an l-leaky forcing set");
    verify_cmd->add_option("input", input);
    verify_cmd->add_option("--blue", blue)->required();
    verify_cmd->add_option("--l", l)->required();
    verify_cmd->add_option("--method", method)
        ->check(CLI::IsMember({ "adversary", "characterization", "both" }));
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({ "auto", "g6", "edges" }));
    verify_cmd->add_flag("--json", as_json);

    auto* solve_cmd = app.add_subcommand("solve", "compute Z_l exactly");
    solve_cmd->add_option("input", input);
    solve_cmd->add_option("--l", l)->required();
    solve_cmd->add_option("--cap", cap, "override the exhaustive-search cap");
    solve_cmd->add_flag("--all-min", all_min, "also enumerate all minimum sets");
    solve_cmd->add_option("--format", format)->check(CLI::IsMember({ "auto", "g6", "edges" }));
    solve_cmd->add_flag("--json", as_json);

    FamilyArgs fam;
    auto* family_cmd = app.add_subcommand("family", "generate a named family");
    family_cmd->add_option("name", fam.name)->required();
    family_cmd->add_option("params", fam.params, "integer parameters");
    family_cmd->add_option("--l", fam.l);
    family_cmd->add_option("--size", fam.size, "tree size");
    family_cmd->add_option("--seed", fam.seed, "tree seed");
    family_cmd->add_flag("--construct", fam.construct, "emit the known forcing set");
    family_cmd->add_flag("--verify", fam.verify, "verify the constructed set");
    family_cmd->add_flag("--all-min", fam.all_min, "enumerate all minimum sets");
    family_cmd->add_option("--cap", fam.cap);
    family_cmd->add_flag("--json", fam.as_json);

    auto* sweep_cmd = app.add_subcommand("sweep", "run theorem checks over a corpus");
    sweep_cmd->add_option("--corpus", corpus_path, "graph6 file, one graph per line");
    sweep_cmd->add_option("--enumerate", enumerate_n, "all connected graphs up to this order");
    sweep_cmd->add_option("--checks", checks, "comma-separated check names");
    sweep_cmd->add_option("--l", l);
    sweep_cmd->add_option("--jobs", jobs);
    sweep_cmd->add_option("--cap", cap);
    sweep_cmd->add_flag("--json", as_json);
    sweep_cmd->add_flag("--csv", as_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (closure_cmd->parsed())
            return cmd_closure(input, format, blue, leaks, as_json);
        if (verify_cmd->parsed())
            return cmd_verify(input, format, blue, l, method, as_json);
        if (solve_cmd->parsed())
            return cmd_solve(input, format, l, cap, all_min, as_json);
        if (family_cmd->parsed()) {
            fam.l = family_cmd->count("--l") ? fam.l : 1;
            return cmd_family(fam);
        }
        if (sweep_cmd->parsed()) {
            if (corpus_path.empty() == (enumerate_n == 0))
                throw CLI::ValidationError("sweep needs exactly one of --corpus / --enumerate");
            if (!sweep_cmd->count("--l"))
                l = 1;
            return cmd_sweep(corpus_path, enumerate_n, checks, l, jobs, cap, as_json, as_csv);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
