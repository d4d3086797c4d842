// tropmat: batch front end over JSON instances. Every subcommand reads one
// instance (file path or "-" for standard input), writes a JSON report to
// standard output and exits 0 for ok/found/inside/feasible, 1 for violated/
// infeasible/not-found results (with a witness in the payload), 2 for input
// or schema errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tropmat/ops.hpp"

namespace {

using tropmat::json;

json read_instance(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw tropmat::InputError("cannot open \"" + path + "\"");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw tropmat::InputError("malformed JSON in \"" + path + "\"");
    return parsed;
}

int emit(const json& report) {
    std::cout << report.dump(2) << "\n";
    return tropmat::ops::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical matroid toolkit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string pin;
    std::string kind;
    bool want_trace = false;
    bool two_cocircuit = false;
    bool corank2 = false;
    std::uint64_t seed = 0;
    int param_n = -1, param_d = -1, param_k = -1, param_edges = -1, param_rows = -1,
        param_cols = -1, param_classes = -1;
    std::string matroid_kind;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "instance file, or - for standard input");
    };

    auto* c_membership = app.add_subcommand("membership", "max-plus hull membership with certificate");
    add_input(c_membership);
    auto* c_basis = app.add_subcommand("colorful-basis", "greedy covering-basis search");
    add_input(c_basis);
    c_basis->add_option("--pin", pin, "element that must stay in the basis");
    c_basis->add_flag("--trace", want_trace, "include the exchange trace");
    auto* c_verify = app.add_subcommand("verify-condition", "basis/cocircuit coverage condition");
    add_input(c_verify);
    c_verify->add_flag("--two-cocircuit", two_cocircuit, "check cocircuit pairs instead");
    auto* c_two = app.add_subcommand("two-cocircuit", "cocircuit-pair driven basis search");
    add_input(c_two);
    c_two->add_flag("--trace", want_trace, "include the exchange trace");
    auto* c_km_verify = app.add_subcommand("km-verify", "Euclidean basis/cocircuit condition");
    add_input(c_km_verify);
    c_km_verify->add_flag("--corank2", corank2, "check minimal sets meeting every basis twice");
    auto* c_km_basis = app.add_subcommand("km-basis", "exhaustive Euclidean covering-basis search");
    add_input(c_km_basis);
    c_km_basis->add_option("--pin", pin, "element that must be in the basis");
    auto* c_clp = app.add_subcommand("clp-solve", "tropical colorful linear program");
    add_input(c_clp);
    auto* c_3dm = app.add_subcommand("clp-from-3dm", "encode a 3-dimensional matching instance");
    add_input(c_3dm);
    auto* c_horn = app.add_subcommand("horn-solve", "max-plus {-inf,0} system via unit propagation");
    add_input(c_horn);
    auto* c_realize = app.add_subcommand("realize-complex", "configuration realizing a complex");
    add_input(c_realize);
    auto* c_support = app.add_subcommand("support-complex", "support complex of a configuration");
    add_input(c_support);
    auto* c_info = app.add_subcommand("matroid-info", "rank, bases, cocircuits, dual");
    add_input(c_info);
    auto* c_clutter = app.add_subcommand("clutter-check", "basis exchange test with blocker");
    add_input(c_clutter);
    auto* c_gen = app.add_subcommand("gen-instance", "emit a fixture or random instance");
    c_gen->add_option("kind", kind, "fig1|fig2|random-3dm|random-clp|random-config")->required();
    c_gen->add_option("--seed", seed, "random seed");
    c_gen->add_option("--n", param_n, "element count (random-config)");
    c_gen->add_option("--d", param_d, "ambient dimension (random-config)");
    c_gen->add_option("--k", param_k, "part size (random-3dm)");
    c_gen->add_option("--edges", param_edges, "hyperedge count (random-3dm)");
    c_gen->add_option("--rows", param_rows, "matrix rows (random-clp)");
    c_gen->add_option("--cols", param_cols, "matrix columns (random-clp)");
    c_gen->add_option("--classes", param_classes, "color class count (random-clp)");
    c_gen->add_option("--matroid-kind", matroid_kind,
                      "partition|uniform|graphic|explicit|truncation|any (random-config)");

    CLI11_PARSE(app, argc, argv);

    try {
        namespace ops = tropmat::ops;
        std::optional<std::string> pin_opt;
        if (!pin.empty()) pin_opt = pin;

        if (c_gen->parsed()) {
            json params = json::object();
            if (param_n >= 0) params["n"] = param_n;
            if (param_d >= 0) params["d"] = param_d;
            if (param_k >= 0) params["k"] = param_k;
            if (param_edges >= 0) params["edges"] = param_edges;
            if (param_rows >= 0) params["rows"] = param_rows;
            if (param_cols >= 0) params["cols"] = param_cols;
            if (param_classes >= 0) params["classes"] = param_classes;
            if (!matroid_kind.empty()) params["kind"] = matroid_kind;
            return emit(ops::gen_instance(kind, params, seed));
        }

        json instance = read_instance(input);
        if (c_membership->parsed()) return emit(ops::membership(instance));
        if (c_basis->parsed()) return emit(ops::colorful_basis(instance, pin_opt, want_trace));
        if (c_verify->parsed()) return emit(ops::verify_condition(instance, two_cocircuit));
        if (c_two->parsed()) return emit(ops::two_cocircuit_basis(instance, want_trace));
        if (c_km_verify->parsed()) return emit(ops::km_verify(instance, corank2));
        if (c_km_basis->parsed()) return emit(ops::km_basis(instance, pin_opt));
        if (c_clp->parsed()) return emit(ops::clp_solve(instance));
        if (c_3dm->parsed()) return emit(ops::clp_from_3dm(instance));
        if (c_horn->parsed()) return emit(ops::horn_solve(instance));
        if (c_realize->parsed()) return emit(ops::realize_complex_op(instance));
        if (c_support->parsed()) return emit(ops::support_complex_op(instance));
        if (c_info->parsed()) return emit(ops::matroid_info(instance));
        if (c_clutter->parsed()) return emit(ops::clutter_check(instance));
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const tropmat::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
