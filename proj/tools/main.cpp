#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "stabred/document.hpp"
#include "stabred/dot.hpp"
#include "stabred/errors.hpp"

namespace {

using stabred::DomainError;
using stabred::Err;
using stabred::FiberGraph;
using stabred::Int;
using stabred::json;
using stabred::SplittingPlan;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError(Err::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError(Err::ParseError, "cannot write '" + path + "'");
    out << content;
}

stabred::ParsedDocument load_graph(const std::string& path) {
    return stabred::parse_document(read_file(path));
}

SplittingPlan load_plan(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw DomainError(Err::ParseError, std::string("plan file: ") + e.what());
    }
    if (!doc.is_object())
        throw DomainError(Err::SchemaError, "plan file must be an object mapping id -> count");
    SplittingPlan plan;
    for (const auto& [id, value] : doc.items())
        plan.overrides[id] = stabred::json_to_int(value, "plan." + id);
    return plan;
}

Int parse_int(const std::string& text, const std::string& what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw DomainError(Err::SchemaError, what + ": '" + text + "' is not an integer");
    }
}

void emit(const json& value) { std::cout << value.dump(2) << std::endl; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable reduction of curves under tame base change, computed on weighted "
                 "dual graphs"};
    app.require_subcommand(1);

    std::string graph_path, dot_path, plan_path;
    std::string opt_a, opt_b, opt_n, opt_p = "0", opt_r;
    bool flag_search = false, flag_probe = false;

    auto add_graph_arg = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "graph document (JSON), or - for stdin")
            ->required();
    };
    auto add_dot_opt = [&](CLI::App* sub) {
        sub->add_option("--dot", dot_path, "write DOT output to this path");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the SNC fiber invariants");
    add_graph_arg(validate_cmd);
    add_dot_opt(validate_cmd);

    CLI::App* genus_cmd = app.add_subcommand("genus", "arithmetic genus of the fiber");
    add_graph_arg(genus_cmd);

    CLI::App* saito_cmd = app.add_subcommand("saito", "evaluate Saito's criterion");
    add_graph_arg(saito_cmd);

    CLI::App* degree_cmd =
        app.add_subcommand("degree", "principal components and minimal tame degree");
    add_graph_arg(degree_cmd);

    CLI::App* local_cmd =
        app.add_subcommand("local", "local invariants of a node under base change");
    local_cmd->add_option("--a", opt_a, "multiplicity of the first branch")->required();
    local_cmd->add_option("--b", opt_b, "multiplicity of the second branch")->required();
    local_cmd->add_option("--n", opt_n, "base-change degree")->required();
    local_cmd->add_option("--p", opt_p, "residue characteristic (default 0)");

    CLI::App* jh_cmd = app.add_subcommand("jh", "Jung-Hirzebruch continued fraction of n/r");
    jh_cmd->add_option("--n", opt_n, "numerator")->required();
    jh_cmd->add_option("--r", opt_r, "denominator, coprime to n")->required();

    CLI::App* basechange_cmd =
        app.add_subcommand("basechange", "tame base change + normalization + resolution");
    add_graph_arg(basechange_cmd);
    basechange_cmd->add_option("--n", opt_n, "base-change degree")->required();
    basechange_cmd->add_option("--plan", plan_path, "splitting plan file (JSON id -> count)");
    add_dot_opt(basechange_cmd);

    CLI::App* search_cmd =
        app.add_subcommand("search", "enumerate all consistent splitting plans");
    add_graph_arg(search_cmd);
    search_cmd->add_option("--n", opt_n, "base-change degree")->required();

    CLI::App* contract_cmd =
        app.add_subcommand("contract", "contract non-reduced chains to semi-stability");
    add_graph_arg(contract_cmd);
    add_dot_opt(contract_cmd);

    CLI::App* stable_cmd =
        app.add_subcommand("stable", "stable dual graph of an everywhere-reduced fiber");
    add_graph_arg(stable_cmd);
    add_dot_opt(stable_cmd);

    CLI::App* pipeline_cmd = app.add_subcommand(
        "pipeline", "full run: validate, Saito, degree, base change, contraction, stable model");
    add_graph_arg(pipeline_cmd);
    pipeline_cmd->add_flag("--search", flag_search,
                           "enumerate all splitting plans instead of using one");
    pipeline_cmd->add_flag("--probe-minimality", flag_probe,
                           "also verify that every proper divisor of n fails");
    pipeline_cmd->add_option("--plan", plan_path, "splitting plan file (JSON id -> count)");
    add_dot_opt(pipeline_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            if (!dot_path.empty()) write_file(dot_path, stabred::emit_dot(doc.graph));
            emit(json{{"report", to_json(stabred::validate(doc.graph))},
                      {"graph", to_json(doc.graph)}});
        } else if (genus_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            emit(json{{"genus", stabred::int_to_json(stabred::genus(doc.graph))}});
        } else if (saito_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            emit(to_json(stabred::saito_check(doc.graph)));
        } else if (degree_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            emit(to_json(stabred::minimal_degree(doc.graph)));
        } else if (local_cmd->parsed()) {
            Int a = parse_int(opt_a, "--a"), b = parse_int(opt_b, "--b");
            Int n = parse_int(opt_n, "--n"), p = parse_int(opt_p, "--p");
            auto params = stabred::node_params(a, b, n, p);
            json out = to_json(params);
            if (!params.regular())
                out["chain"] = to_json(stabred::resolve_node(params, params.a_dd, params.b_dd));
            emit(out);
        } else if (jh_cmd->parsed()) {
            Int n = parse_int(opt_n, "--n"), r = parse_int(opt_r, "--r");
            json terms = json::array();
            for (const Int& b : stabred::jung_hirzebruch(n, r))
                terms.push_back(stabred::int_to_json(b));
            emit(json{{"n", stabred::int_to_json(n)},
                      {"r", stabred::int_to_json(r)},
                      {"terms", terms}});
        } else if (basechange_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            SplittingPlan plan;
            if (!plan_path.empty()) plan = load_plan(plan_path);
            else if (doc.splitting) plan = *doc.splitting;
            Int n = parse_int(opt_n, "--n");
            FiberGraph out = stabred::transform(doc.graph, n, plan);
            if (!dot_path.empty()) write_file(dot_path, stabred::emit_dot(out));
            json covers = json::array();
            for (const auto& c : stabred::cover_table(doc.graph, n, plan))
                covers.push_back(to_json(c));
            emit(json{{"graph", to_json(out)}, {"covers", covers}});
        } else if (search_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            Int n = parse_int(opt_n, "--n");
            json plans = json::array();
            for (const auto& [plan, out] : stabred::search_splittings(doc.graph, n))
                plans.push_back(json{{"plan", to_json(plan)}, {"graph", to_json(out)}});
            emit(json{{"plans", plans}});
        } else if (contract_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            auto [out, trace] = stabred::contract_chains(doc.graph);
            if (!dot_path.empty()) write_file(dot_path, stabred::emit_dot(out));
            emit(json{{"graph", to_json(out)},
                      {"trace", to_json(trace)},
                      {"nodal", out.has_self_loops()}});
        } else if (stable_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            stabred::ReducedGraph out = stabred::to_stable(doc.graph);
            if (!dot_path.empty()) write_file(dot_path, stabred::emit_dot(out));
            emit(json{{"graph", to_json(out)}});
        } else if (pipeline_cmd->parsed()) {
            auto doc = load_graph(graph_path);
            std::optional<SplittingPlan> plan;
            if (!flag_search) {
                if (!plan_path.empty()) plan = load_plan(plan_path);
                else if (doc.splitting) plan = *doc.splitting;
                else plan = SplittingPlan{};
            }
            stabred::PipelineReport report = stabred::run(doc.graph, plan);
            json out = to_json(report);
            if (flag_probe) out["minimality_probe"] = to_json(stabred::probe_minimality(doc.graph));
            if (!dot_path.empty()) {
                for (const stabred::Stage& stage : report.stages) {
                    std::string dot =
                        std::holds_alternative<FiberGraph>(stage.graph)
                            ? stabred::emit_dot(std::get<FiberGraph>(stage.graph))
                            : stabred::emit_dot(std::get<stabred::ReducedGraph>(stage.graph));
                    write_file(dot_path + "-" + stage.name + ".dot", dot);
                }
            }
            emit(out);
        }
    } catch (const DomainError& e) {
        emit(json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}});
        std::cerr << e.what() << std::endl;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
