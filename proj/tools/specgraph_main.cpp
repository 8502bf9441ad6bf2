// specgraph: build the graph operations, compute spectra and invariants, and
// verify the closed-form predictions against the numeric oracle.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specgraph/graph.hpp"
#include "specgraph/graph_ops.hpp"
#include "specgraph/invariants.hpp"
#include "specgraph/linalg.hpp"
#include "specgraph/spectral.hpp"

namespace sg = specgraph;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_parse = 2;
constexpr int exit_domain = 3;

/// Round to 12 significant digits through text so every emitted float is the
/// shortest value that round-trips at that precision.
double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

struct CommonOptions {
    std::string gen;
    std::string input;
    std::string output;
    std::string format = "json";
    double solver_tol = sg::default_solver_tol;
    double group_tol = sg::default_group_tol;
    double match_tol = 1e-7;
    long long max_order = 4096;
};

void add_io_options(CLI::App* cmd, CommonOptions& opt, bool with_input) {
    if (with_input) {
        cmd->add_option("--gen", opt.gen,
                        "generator spec: k:n | complete:n | cycle:n | star:n | path:n | petersen");
        cmd->add_option("--in", opt.input, "input graph file (edge-list text or JSON)");
    }
    cmd->add_option("-o,--out", opt.output, "output file (default: stdout)");
    cmd->add_option("--format", opt.format, "output format: json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--solver-tol", opt.solver_tol, "eigensolver tolerance");
    cmd->add_option("--group-tol", opt.group_tol, "eigenvalue grouping tolerance");
    cmd->add_option("--match-tol", opt.match_tol, "verification match tolerance");
    cmd->add_option("--max-order", opt.max_order, "largest matrix order the eigensolver accepts");
}

void validate_tolerances(const CommonOptions& opt) {
    if (opt.solver_tol <= 0 || opt.group_tol <= 0 || opt.match_tol <= 0) {
        throw CLI::ValidationError("tolerances must be strictly positive");
    }
    if (!(opt.solver_tol < opt.group_tol && opt.group_tol <= opt.match_tol)) {
        throw CLI::ValidationError("tolerances must satisfy solver < grouping <= match");
    }
    if (opt.max_order < 1) {
        throw CLI::ValidationError("--max-order must be positive");
    }
}

sg::Graph generate(const std::string& spec) {
    if (spec == "petersen") return sg::petersen();
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("generator spec '" + spec + "': expected name:n or petersen");
    }
    const std::string name = spec.substr(0, colon);
    int n = 0;
    try {
        size_t used = 0;
        n = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
        throw std::invalid_argument("generator spec '" + spec + "': bad vertex count");
    }
    if (name == "k" || name == "complete") return sg::complete(n);
    if (name == "cycle") return sg::cycle(n);
    if (name == "star") return sg::star(n);
    if (name == "path") return sg::path(n);
    throw std::invalid_argument("generator spec '" + spec + "': unknown generator '" + name + "'");
}

sg::Graph load_graph(const CommonOptions& opt) {
    if (opt.gen.empty() == opt.input.empty()) {
        throw std::invalid_argument("provide exactly one of --gen or --in");
    }
    if (!opt.gen.empty()) return generate(opt.gen);
    std::ifstream in(opt.input);
    if (!in) throw std::invalid_argument("cannot open '" + opt.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return sg::graph_from_json_string(text);
    }
    std::istringstream stream(text);
    return sg::read_edge_list(stream);
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot write '" + opt.output + "'");
    out << text;
}

json graph_json(const sg::Graph& g) {
    json j;
    j["p"] = g.order();
    auto arr = json::array();
    for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j;
}

std::string graph_text(const sg::Graph& g, const std::string& format) {
    if (format == "json") return graph_json(g).dump() + "\n";
    std::ostringstream out;
    if (format == "csv") {
        out << "u,v\n";
        for (const auto& [u, v] : g.edges()) out << u << ',' << v << '\n';
        return out.str();
    }
    sg::write_edge_list(g, out);
    return out.str();
}

void check_order(long long order, const CommonOptions& opt) {
    if (order > opt.max_order) {
        throw sg::DomainError("graph order " + std::to_string(order) + " exceeds --max-order " +
                              std::to_string(opt.max_order));
    }
}

std::vector<sg::OperationKind> parse_ops(const std::string& list) {
    std::vector<sg::OperationKind> ops;
    std::istringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty()) ops.push_back(sg::OperationKind::parse(token));
    }
    if (ops.empty()) throw std::invalid_argument("--ops: expected a comma-separated list");
    return ops;
}

// ---- subcommand bodies ------------------------------------------------------

int run_build(const CommonOptions& opt) {
    emit(opt, graph_text(load_graph(opt), opt.format));
    return exit_ok;
}

int run_op(const CommonOptions& opt, const std::string& op_spec) {
    const sg::Graph g = load_graph(opt);
    const sg::OperationKind op = sg::OperationKind::parse(op_spec);
    check_order(op.output_order(g.order()), opt);
    const sg::Graph result = sg::apply(g, op);
    if (opt.format == "json") {
        json j;
        j["operation"] = op.id();
        j["graph"] = graph_json(result);
        j["contract"] = {{"p", op.output_order(g.order())}, {"q", op.output_size(g.size())}};
        j["actual"] = {{"p", result.order()}, {"q", result.size()}};
        emit(opt, j.dump() + "\n");
        return exit_ok;
    }
    std::ostringstream out;
    out << "# " << op.id() << ": contract p=" << op.output_order(g.order())
        << " q=" << op.output_size(g.size()) << ", actual p=" << result.order()
        << " q=" << result.size() << "\n"
        << graph_text(result, opt.format);
    emit(opt, out.str());
    return exit_ok;
}

int run_spectrum(const CommonOptions& opt, const std::string& matrix_name) {
    const sg::Graph g = load_graph(opt);
    check_order(g.order(), opt);
    const sg::MatrixKind kind = sg::matrix_kind_from_string(matrix_name);
    const sg::EnergyReport report = sg::energy(g, kind, opt.solver_tol, opt.group_tol);
    if (opt.format == "json") {
        json j;
        j["matrix"] = sg::to_string(kind);
        j["p"] = g.order();
        j["q"] = g.size();
        auto groups = json::array();
        for (const auto& grp : report.spectrum.groups()) {
            groups.push_back({round12(grp.value), grp.multiplicity});
        }
        j["spectrum"] = std::move(groups);
        j["energy"] = round12(report.value);
        emit(opt, j.dump() + "\n");
        return exit_ok;
    }
    std::ostringstream out;
    if (opt.format == "csv") {
        out << "value,multiplicity\n";
        for (const auto& grp : report.spectrum.groups()) {
            out << fmt12(grp.value) << ',' << grp.multiplicity << '\n';
        }
        out << "# energy," << fmt12(report.value) << '\n';
    } else {
        out << sg::to_string(kind) << " spectrum of p=" << g.order() << " q=" << g.size() << "\n";
        for (const auto& grp : report.spectrum.groups()) {
            out << "  " << fmt12(grp.value) << "  x" << grp.multiplicity << "\n";
        }
        out << "energy = " << fmt12(report.value) << "\n";
    }
    emit(opt, out.str());
    return exit_ok;
}

int run_invariants(const CommonOptions& opt) {
    const sg::Graph g = load_graph(opt);
    check_order(g.order(), opt);
    if (g.order() < 1) throw sg::EmptyGraphError("invariants require a non-empty graph");
    const sg::InvariantReport rep = sg::invariant_report(g, opt.solver_tol, opt.group_tol);
    auto opt_json = [](const std::optional<double>& v) {
        return v ? json(round12(*v)) : json(nullptr);
    };
    if (opt.format == "json") {
        json j;
        j["p"] = rep.p;
        j["q"] = rep.q;
        j["connected"] = rep.connected;
        j["energy"] = round12(rep.energy);
        j["randic_energy"] = opt_json(rep.randic_energy);
        j["kemeny"] = opt_json(rep.kemeny);
        j["degree_kirchhoff"] = opt_json(rep.kirchhoff);
        j["spanning_trees"] = round12(rep.spanning_trees);
        j["spanning_trees_nearest_int"] = rep.spanning_trees_nearest_int;
        j["integral"] = rep.integral;
        j["randic_integral"] = rep.randic_integral ? json(*rep.randic_integral) : json(nullptr);
        emit(opt, j.dump() + "\n");
        return exit_ok;
    }
    auto opt_text = [](const std::optional<double>& v) {
        return v ? fmt12(*v) : std::string("undefined");
    };
    std::ostringstream out;
    const char* sep = opt.format == "csv" ? "," : " = ";
    if (opt.format == "csv") out << "name,value\n";
    out << "p" << sep << rep.p << "\n"
        << "q" << sep << rep.q << "\n"
        << "connected" << sep << (rep.connected ? "true" : "false") << "\n"
        << "energy" << sep << fmt12(rep.energy) << "\n"
        << "randic_energy" << sep << opt_text(rep.randic_energy) << "\n"
        << "kemeny" << sep << opt_text(rep.kemeny) << "\n"
        << "degree_kirchhoff" << sep << opt_text(rep.kirchhoff) << "\n"
        << "spanning_trees" << sep << fmt12(rep.spanning_trees) << "\n"
        << "spanning_trees_nearest_int" << sep << rep.spanning_trees_nearest_int << "\n"
        << "integral" << sep << (rep.integral ? "true" : "false") << "\n"
        << "randic_integral" << sep
        << (rep.randic_integral ? (*rep.randic_integral ? "true" : "false") : "undefined") << "\n";
    emit(opt, out.str());
    return exit_ok;
}

int run_verify(const CommonOptions& opt, const std::string& ops_list, const std::string& mode) {
    const sg::Graph g = load_graph(opt);
    check_order(g.order(), opt);
    const auto ops = parse_ops(ops_list);
    for (const auto& op : ops) check_order(op.output_order(g.order()), opt);

    sg::VerifyOptions vopt;
    vopt.solver_tol = opt.solver_tol;
    vopt.group_tol = opt.group_tol;
    vopt.match_tol = opt.match_tol;
    vopt.as_printed = (mode == "both" || mode == "as_printed");
    vopt.corrected = (mode == "both" || mode == "corrected");

    const auto records = sg::verify_all(g, ops, vopt);

    bool fatal_mismatch = false;
    for (const auto& rec : records) {
        if (rec.verdict == sg::Verdict::Mismatch && !rec.formula_id.ends_with("/as_printed")) {
            fatal_mismatch = true;
        }
    }

    std::ostringstream out;
    if (opt.format == "json") {
        json j;
        j["graph"] = graph_json(g);
        auto arr = json::array();
        for (const auto& rec : records) {
            json r;
            r["formula_id"] = rec.formula_id;
            r["closed_form"] = round12(rec.closed_form);
            r["oracle"] = round12(rec.oracle);
            r["abs_diff"] = round12(rec.abs_diff);
            r["verdict"] = sg::to_string(rec.verdict);
            r["note"] = rec.note;
            arr.push_back(std::move(r));
        }
        j["records"] = std::move(arr);
        out << j.dump() << "\n";
    } else if (opt.format == "csv") {
        out << "formula_id,closed_form,oracle,abs_diff,verdict,note\n";
        for (const auto& rec : records) {
            out << rec.formula_id << ',' << fmt12(rec.closed_form) << ',' << fmt12(rec.oracle)
                << ',' << fmt12(rec.abs_diff) << ',' << sg::to_string(rec.verdict) << ','
                << csv_quote(rec.note) << '\n';
        }
    } else {
        for (const auto& rec : records) {
            out << (rec.verdict == sg::Verdict::Match ? "MATCH    " : "MISMATCH ") << rec.formula_id
                << "  closed_form=" << fmt12(rec.closed_form) << "  oracle=" << fmt12(rec.oracle)
                << "  abs_diff=" << fmt12(rec.abs_diff);
            if (!rec.note.empty()) out << "  # " << rec.note;
            out << "\n";
        }
    }
    emit(opt, out.str());
    return fatal_mismatch ? exit_mismatch : exit_ok;
}

int run_catalog(const CommonOptions& opt, const std::string& family, int max_m) {
    const sg::Graph g = load_graph(opt);
    if (max_m < 1) throw std::invalid_argument("--max-m must be positive");

    std::ostringstream text;
    json j;
    j["family"] = family;
    j["base"] = graph_json(g);

    if (family == "duplicate-vs-shadow") {
        // Iterated duplicates against the matching shadow: same order, equal
        // adjacency energies, Randic energies drifting apart by the factor 2^m.
        auto entries = json::array();
        for (int m = 1; m <= max_m; ++m) {
            const auto dup_op = sg::OperationKind::duplicate_iter(m);
            const auto shadow_op = sg::OperationKind::shadow(1 << m);
            check_order(dup_op.output_order(g.order()), opt);
            const sg::Graph a = sg::apply(g, dup_op);
            const sg::Graph b = sg::apply(g, shadow_op);
            const auto adj = sg::are_equienergetic(a, b, sg::MatrixKind::Adjacency, opt.solver_tol);
            const auto ran = sg::are_equienergetic(a, b, sg::MatrixKind::Randic, opt.solver_tol);
            json e;
            e["m"] = m;
            e["pair"] = {dup_op.id(), shadow_op.id()};
            e["order"] = a.order();
            e["adjacency_energy"] = {round12(adj.energy_a), round12(adj.energy_b)};
            e["adjacency_equienergetic"] = adj.equal;
            e["randic_energy"] = {round12(ran.energy_a), round12(ran.energy_b)};
            e["randic_equienergetic"] = ran.equal;
            e["randic_energy_gap"] = round12(ran.diff);
            e["isomorphism_checked"] = false;
            entries.push_back(std::move(e));
            text << dup_op.id() << " vs " << shadow_op.id() << " (order " << a.order()
                 << "): adjacency " << fmt12(adj.energy_a) << " / " << fmt12(adj.energy_b)
                 << (adj.equal ? " equal" : " differ") << ", randic " << fmt12(ran.energy_a)
                 << " / " << fmt12(ran.energy_b) << (ran.equal ? " equal" : " differ") << "\n";
        }
        j["pairs"] = std::move(entries);
    } else if (family == "shadow-randic-integral") {
        if (g.has_isolated_vertex()) {
            throw sg::IsolatedVertexError("randic integrality needs every degree positive");
        }
        auto entries = json::array();
        const bool base_integral = sg::is_randic_integral(g, opt.solver_tol);
        j["base_randic_integral"] = base_integral;
        text << "base randic-integral: " << (base_integral ? "true" : "false") << "\n";
        for (int m = 2; m <= max_m; ++m) {
            const auto op = sg::OperationKind::shadow(m);
            check_order(op.output_order(g.order()), opt);
            const bool hit = sg::is_randic_integral(sg::apply(g, op), opt.solver_tol);
            json e;
            e["op"] = op.id();
            e["randic_integral"] = hit;
            entries.push_back(std::move(e));
            text << op.id() << ": randic-integral " << (hit ? "true" : "false") << "\n";
        }
        j["entries"] = std::move(entries);
    } else {
        throw std::invalid_argument("unknown family '" + family +
                                    "' (expected duplicate-vs-shadow or shadow-randic-integral)");
    }

    if (opt.format == "json") {
        emit(opt, j.dump() + "\n");
    } else {
        emit(opt, text.str());
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph operations: constructions, spectra, energies, invariants, "
                 "and closed-form verification against the numeric oracle"};
    app.require_subcommand(1);
    app.footer("SPECTRAL_SEED is reserved and unused: all computation is deterministic.");

    CommonOptions opt;
    std::string op_spec, matrix_name = "adjacency", ops_list, mode = "both";
    std::string family = "duplicate-vs-shadow";
    int max_m = 3;

    auto* build = app.add_subcommand("build", "emit a generated or loaded graph");
    add_io_options(build, opt, true);

    auto* opcmd = app.add_subcommand("op", "apply one operation and emit the result");
    add_io_options(opcmd, opt, true);
    opcmd->add_option("--apply", op_spec,
                      "operation spec: splitting:m | shadow:m | dup:m | h1:m[:i:j] | h2:m | h3:m")
        ->required();

    auto* speccmd = app.add_subcommand("spectrum", "grouped spectrum and energy of one matrix");
    add_io_options(speccmd, opt, true);
    speccmd->add_option("--matrix", matrix_name, "adjacency | randic | normalized-laplacian");

    auto* invcmd = app.add_subcommand("invariants", "energies, Kemeny, Kirchhoff, tree count, "
                                                    "integrality flags");
    add_io_options(invcmd, opt, true);

    auto* verifycmd = app.add_subcommand("verify", "closed forms vs numeric oracle per operation");
    add_io_options(verifycmd, opt, true);
    verifycmd->add_option("--ops", ops_list, "comma-separated operation specs")->required();
    verifycmd->add_option("--mode", mode, "as_printed | corrected | both")
        ->check(CLI::IsMember({"as_printed", "corrected", "both"}));

    auto* catcmd = app.add_subcommand("catalog", "equienergetic and integral families");
    add_io_options(catcmd, opt, true);
    catcmd->add_option("--family", family, "duplicate-vs-shadow | shadow-randic-integral");
    catcmd->add_option("--base", opt.gen, "generator spec for the base graph (alias of --gen)");
    catcmd->add_option("--max-m", max_m, "largest operation parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        validate_tolerances(opt);
        if (build->parsed()) return run_build(opt);
        if (opcmd->parsed()) return run_op(opt, op_spec);
        if (speccmd->parsed()) return run_spectrum(opt, matrix_name);
        if (invcmd->parsed()) return run_invariants(opt);
        if (verifycmd->parsed()) return run_verify(opt, ops_list, mode);
        if (catcmd->parsed()) return run_catalog(opt, family, max_m);
        std::cerr << "no subcommand\n";
        return exit_parse;
    } catch (const sg::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const sg::NoConvergenceError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return exit_domain;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
}
