// Command-line front end: closed-form bounds, graph analysis, tight
// worst-case instance generation, exhaustive oracle runs and best-response
// dynamics over the graph formats described in the README.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netcoord/netcoord.hpp"

namespace {

using namespace netcoord;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidParams: return 2;
        case ErrorCode::ParseError: return 3;
        case ErrorCode::ProfileMismatch: return 4;
        case ErrorCode::InternalRealizationFailure: return 5;
        case ErrorCode::TooLarge: return 6;
        default: return 7;
    }
}

std::string fmt_approx(const Rational& r) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", approx(r));
    return buffer;
}

std::string both(const Rational& r) { return format_rational(r) + " (" + fmt_approx(r) + ")"; }

struct ParamArgs {
    std::string alpha, beta, gamma;

    Params validate() const {
        return Params::validate(parse_rational(alpha), parse_rational(beta), parse_rational(gamma));
    }
};

void add_param_flags(CLI::App* cmd, ParamArgs& args) {
    cmd->add_option("-a,--alpha", args.alpha, "payoff for A-A coordination (rational)")->required();
    cmd->add_option("-b,--beta", args.beta, "payoff for B-B coordination (rational)")->required();
    cmd->add_option("-g,--gamma", args.gamma, "cross-strategy payoff (rational)")->required();
}

void emit(const json& doc, const std::string& format, const std::string& text) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_bound(const ParamArgs& args, const std::string& format) {
    BoundReport report = poa_upper_bound(args.validate());
    std::string text = "bound: " + both(report.bound) + "\n" +
                       "corollary bound (gamma = 0): " + both(report.corollary_bound) + "\n" +
                       "all-B ratio (gamma = beta): " + both(report.all_b_ratio) + "\n";
    if (report.degenerate) text += "degenerate: alpha = beta = gamma, every profile has equal welfare\n";
    emit(to_json(report), format, text);
    return 0;
}

int cmd_analyze(const std::string& graph_path, const ParamArgs& args, const std::string& format) {
    Params params = args.validate();
    GraphDocument doc = load_graph_file(graph_path);
    if (!doc.profile)
        throw Error(ErrorCode::ProfileMismatch, "graph file '" + graph_path + "' has no \"strategies\"");
    const Graph& g = doc.graph;
    const Profile& s = *doc.profile;

    EdgeState state = classify_edges(g, s);
    Rational welfare = social_welfare(g, s, params);
    Rational optimal = optimal_welfare(g, params);
    NashReport nash = nash_report(g, s, params);
    Decomposition d = decompose(g, s);
    BoundReport bound = poa_upper_bound(params);

    std::optional<Rational> ratio;
    if (welfare != 0) ratio = quotient(state, params);

    std::optional<bool> decomposition_check, mediant, frontier_counting;
    std::optional<bool> uniform_bound;
    if (nash.is_nash) {
        decomposition_check = nash_decomposition_check(g, s, params);
        if (ratio) mediant = mediant_check(state, d, params);
        if (params.gamma() < params.beta()) frontier_counting = frontier_counting_check(g, s, params);
    }
    if (!d.uniform_edges.empty()) uniform_bound = uniform_part_bound_check(d.uniform_state, params);

    json out{{"graph", {{"nodes", g.node_count()}, {"edges", g.edge_count()}}},
             {"params",
              {{"alpha", format_rational(params.alpha())},
               {"beta", format_rational(params.beta())},
               {"gamma", format_rational(params.gamma())}}},
             {"edge_state", to_json(state)},
             {"social_welfare", format_rational(welfare)},
             {"optimal_welfare", format_rational(optimal)},
             {"quotient", ratio ? json(format_rational(*ratio)) : json(nullptr)},
             {"nash", to_json(nash)},
             {"decomposition",
              {{"frontier_edge_count", d.frontier_edges.size()},
               {"uniform_edge_count", d.uniform_edges.size()},
               {"frontier_state", to_json(d.frontier_state)},
               {"uniform_state", to_json(d.uniform_state)}}},
             {"bound", format_rational(bound.bound)}};
    auto flag = [](const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); };
    out["checks"] = {{"nash_decomposition", flag(decomposition_check)},
                     {"mediant", flag(mediant)},
                     {"uniform_part_bound", flag(uniform_bound)},
                     {"frontier_counting", flag(frontier_counting)}};

    auto show = [](const std::optional<bool>& v) {
        return !v ? std::string("skipped") : (*v ? std::string("pass") : std::string("FAIL"));
    };
    std::string text;
    text += "graph: " + std::to_string(g.node_count()) + " nodes, " + std::to_string(g.edge_count()) +
            " edges\n";
    text += "edge state: A=" + format_rational(state.a_edges) + " B=" + format_rational(state.b_edges) +
            " C=" + format_rational(state.c_edges) + "\n";
    text += "social welfare: " + both(welfare) + "\n";
    text += "optimal welfare: " + both(optimal) + "\n";
    text += "quotient: " + (ratio ? both(*ratio) : std::string("undefined (zero welfare)")) + "\n";
    text += std::string("nash equilibrium: ") + (nash.is_nash ? "true" : "false") + "\n";
    for (const auto& dev : nash.deviators)
        text += "  deviator " + dev.node + ": " + format_rational(dev.current_utility) + " -> " +
                format_rational(dev.deviation_utility) + "\n";
    text += "decomposition: frontier " + std::to_string(d.frontier_edges.size()) + " edges (" +
            format_rational(d.frontier_state.a_edges) + ", " + format_rational(d.frontier_state.b_edges) +
            ", " + format_rational(d.frontier_state.c_edges) + "), uniform " +
            std::to_string(d.uniform_edges.size()) + " edges (" + format_rational(d.uniform_state.a_edges) +
            ", " + format_rational(d.uniform_state.b_edges) + ", " +
            format_rational(d.uniform_state.c_edges) + ")\n";
    text += "checks: nash_decomposition=" + show(decomposition_check) + " mediant=" + show(mediant) +
            " uniform_part_bound=" + show(uniform_bound) +
            " frontier_counting=" + show(frontier_counting) + "\n";
    text += "bound: " + both(bound.bound) + "\n";
    emit(out, format, text);
    return 0;
}

int cmd_worst_case(const ParamArgs& args, const std::string& out_path, const std::string& format) {
    WorstCaseReport report = worst_case_report(args.validate());
    if (!out_path.empty())
        write_text_file(out_path, graph_to_json(report.graph, &report.profile).dump(2) + "\n");
    std::string text;
    text += std::string("construction: ") + (report.all_b ? "all-B" : "C-edge") + "\n";
    text += "instance: " + std::to_string(report.graph.node_count()) + " nodes, " +
            std::to_string(report.graph.edge_count()) + " edges" +
            (out_path.empty() ? "" : " -> " + out_path) + "\n";
    text += "achieved state: (" + format_rational(report.achieved_state.a_edges) + ", " +
            format_rational(report.achieved_state.b_edges) + ", " +
            format_rational(report.achieved_state.c_edges) + ")\n";
    text += "social welfare: " + both(report.social_welfare_value) + "\n";
    text += "optimal welfare: " + both(report.optimal_welfare_value) + "\n";
    text += "achieved ratio: " + both(report.achieved_ratio) + "\n";
    text += "bound: " + both(report.bound) + "\n";
    text += std::string("exact match: ") + (report.exact_match ? "true" : "false") + "\n";
    emit(to_json(report), format, text);
    return 0;
}

int cmd_oracle_graph(const std::string& graph_path, const ParamArgs& args, std::size_t cap,
                     const std::string& format) {
    Params params = args.validate();
    GraphDocument doc = load_graph_file(graph_path);
    OracleResult result = exact_poa(doc.graph, params, cap);
    std::string text;
    text += "graph: " + std::to_string(doc.graph.node_count()) + " nodes, " +
            std::to_string(doc.graph.edge_count()) + " edges\n";
    text += "nash count: " + std::to_string(result.nash_profiles.size()) + "\n";
    text += "worst NE welfare: " + both(result.worst_ne_welfare) + "\n";
    text += "optimal welfare: " + both(result.optimal_welfare) + "\n";
    text += "exact PoA: " + both(result.exact_poa) + "\n";
    text += "bound: " + both(result.bound) + "\n";
    text += "margin: " + both(result.margin) + "\n";
    emit(to_json(result, doc.graph), format, text);
    return result.exact_poa > result.bound ? 1 : 0;
}

int cmd_oracle_campaign(const std::string& campaign_path, std::size_t cap, bool cap_set,
                        const std::string& format) {
    std::ifstream in(campaign_path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open campaign config '" + campaign_path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorCode::ParseError, "malformed campaign config JSON");
    CampaignConfig config = campaign_config_from_json(doc);
    if (cap_set) config.cap = cap;
    CampaignReport report = verify_bound_campaign(config);
    std::string text;
    text += "graphs: " + std::to_string(report.graphs.size()) + " analyzed, " +
            std::to_string(report.graphs_skipped_empty) + " skipped (no edges)\n";
    text += "equilibria checked: " + std::to_string(report.nash_checked) + "\n";
    text += "violations: " + std::to_string(report.violations.size()) + "\n";
    for (const auto& v : report.violations) text += "  " + v + "\n";
    char wall[64];
    std::snprintf(wall, sizeof(wall), "%.1f", report.wall_time_ms);
    text += "wall time: " + std::string(wall) + " ms\n";
    emit(to_json(report), format, text);
    return report.ok() ? 0 : 1;
}

int cmd_dynamics(const std::string& graph_path, const ParamArgs& args, const std::string& schedule_name,
                 std::uint64_t seed, const std::string& format) {
    Params params = args.validate();
    GraphDocument doc = load_graph_file(graph_path);
    Profile start = doc.profile ? *doc.profile : Profile::uniform(doc.graph, Strategy::B);
    Schedule schedule =
        schedule_name == "random" ? Schedule::RandomPermutationPerRound : Schedule::RoundRobin;
    DynamicsTrace trace = run_dynamics(doc.graph, start, params, schedule, seed);
    bool final_nash = is_nash(doc.graph, trace.final, params);

    json out = to_json(trace, doc.graph, schedule, seed);
    out["final_is_nash"] = final_nash;
    std::string text;
    text += "schedule: " + schedule_name + ", seed " + std::to_string(seed) + "\n";
    std::size_t i = 0;
    for (const auto& step : trace.steps)
        text += "step " + std::to_string(++i) + ": " + step.node + " " + strategy_char(step.from) + "->" +
                strategy_char(step.to) + " (potential " + format_rational(step.potential_after) + ")\n";
    text += "steps: " + std::to_string(trace.steps.size()) +
            ", converged: " + (trace.converged ? "true" : "false") + "\n";
    text += "final:";
    for (const auto& [id, s] : trace.final.to_map(doc.graph))
        text += " " + id + "=" + strategy_char(s);
    text += "\n";
    text += std::string("final is nash: ") + (final_nash ? "true" : "false") + "\n";
    emit(out, format, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Networked coordination games: exact equilibrium analysis, price-of-anarchy "
                 "bounds and tight worst-case instances"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    ParamArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "closed-form price-of-anarchy upper bound");
    add_param_flags(bound, bound_args);

    ParamArgs analyze_args;
    std::string analyze_graph;
    CLI::App* analyze = app.add_subcommand("analyze", "welfare, equilibrium and decomposition report");
    add_param_flags(analyze, analyze_args);
    analyze->add_option("--graph", analyze_graph, "graph file (JSON or edge list, strategies required)")
        ->required();

    ParamArgs worst_args;
    std::string worst_out;
    CLI::App* worst = app.add_subcommand("worst-case", "construct a tight worst-case equilibrium instance");
    add_param_flags(worst, worst_args);
    worst->add_option("--out", worst_out, "write the instance JSON to this file");

    ParamArgs oracle_args;
    std::string oracle_graph, oracle_campaign;
    std::size_t cap = kDefaultEnumerationCap;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive equilibrium enumeration and exact PoA");
    auto* oracle_graph_opt = oracle->add_option("--graph", oracle_graph, "graph file to analyze");
    auto* oracle_campaign_opt =
        oracle->add_option("--campaign", oracle_campaign, "campaign config JSON file");
    oracle_graph_opt->excludes(oracle_campaign_opt);
    auto* cap_opt = oracle->add_option("--cap", cap, "node cap for the 2^|V| enumeration");
    oracle->add_option("-a,--alpha", oracle_args.alpha, "payoff for A-A coordination (rational)");
    oracle->add_option("-b,--beta", oracle_args.beta, "payoff for B-B coordination (rational)");
    oracle->add_option("-g,--gamma", oracle_args.gamma, "cross-strategy payoff (rational)");

    ParamArgs dynamics_args;
    std::string dynamics_graph, schedule = "round-robin";
    std::uint64_t seed = 0;
    CLI::App* dynamics = app.add_subcommand("dynamics", "run strict best-response dynamics");
    add_param_flags(dynamics, dynamics_args);
    dynamics->add_option("--graph", dynamics_graph, "graph file; strategies default to all-B")->required();
    dynamics->add_option("--schedule", schedule, "node visiting order")
        ->check(CLI::IsMember({"round-robin", "random"}));
    dynamics->add_option("--seed", seed, "PRNG seed for the random schedule");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(bound_args, format);
        if (analyze->parsed()) return cmd_analyze(analyze_graph, analyze_args, format);
        if (worst->parsed()) return cmd_worst_case(worst_args, worst_out, format);
        if (oracle->parsed()) {
            if (!oracle_campaign.empty())
                return cmd_oracle_campaign(oracle_campaign, cap, !cap_opt->empty(), format);
            if (oracle_graph.empty())
                throw Error(ErrorCode::ParseError, "oracle needs --graph or --campaign");
            return cmd_oracle_graph(oracle_graph, oracle_args, cap, format);
        }
        if (dynamics->parsed()) return cmd_dynamics(dynamics_graph, dynamics_args, schedule, seed, format);
    } catch (const netcoord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}
