#include <netform/dynamics.hpp>
#include <netform/efficiency.hpp>
#include <netform/io.hpp>
#include <netform/scenario.hpp>
#include <netform/stability.hpp>
#include <netform/sweep.hpp>
#include <netform/thresholds.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace netform;

namespace
{
    enum ExitCode
    {
        Success = 0,
        ValidationError = 1,
        CapError = 2
    };

    struct Common
    {
        std::string scenario;
        std::string out;
        std::optional<std::uint64_t> seed;
        std::optional<std::string> space;
        std::optional<std::size_t> max_steps;
        std::optional<double> epsilon;
        unsigned workers = 0;
    };

    void add_common(CLI::App & cmd, Common & common, bool needs_out)
    {
        cmd.add_option("--scenario", common.scenario, "scenario file")->required()->check(CLI::ExistingFile);
        auto out = cmd.add_option("--out", common.out, "output path");
        if (needs_out)
            out->required();
        cmd.add_option("--seed", common.seed, "override the scenario seed");
        cmd.add_option("--space", common.space, "override the search space")->check(CLI::IsMember({"full", "inter"}));
        cmd.add_option("--max-steps", common.max_steps, "override max_steps");
        cmd.add_option("--epsilon", common.epsilon, "override epsilon");
        cmd.add_option("--workers", common.workers, "worker threads, 0 = hardware concurrency");
    }

    auto load(const Common & common) -> Scenario
    {
        Scenario s = load_scenario(common.scenario);
        if (common.seed)
            s.seed = common.seed;
        if (common.space)
            s.space = parse_space(*common.space);
        if (common.max_steps)
            s.max_steps = *common.max_steps;
        if (common.epsilon)
            s.epsilon = *common.epsilon;
        s.validate();
        return s;
    }

    auto real(double v) -> std::string
    {
        return format_real(v);
    }

    auto open_out(const std::string & path) -> std::ofstream
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error{"cannot write " + path};
        return out;
    }

    auto cmd_eval(const Common & common, const std::string & network_path) -> int
    {
        auto scenario = load(common);
        auto society = scenario.society();
        auto network = read_edge_list_file(network_path, society.node_count());
        auto u = payoffs(network, society);

        std::ofstream file;
        std::ostream * csv = nullptr;
        if (! common.out.empty()) {
            file = open_out(common.out);
            csv = &file;
            *csv << "node,group,degree,payoff\n";
        }
        std::cout << "node  group  degree  payoff\n";
        for (int i = 0 ; i < society.node_count() ; ++i) {
            auto k = static_cast<std::size_t>(i);
            std::printf("%4d  %5d  %6d  %s\n", i, society.partition.group_of(i), network.degree(i), real(u[k]).c_str());
            if (csv)
                *csv << i << ',' << society.partition.group_of(i) << ',' << network.degree(i) << ',' << real(u[k]) << '\n';
        }
        auto counts = count_connections(network, society.partition);
        std::cout << "edges " << network.edge_count() << " (intra " << counts.intra << ", inter " << counts.inter << ")\n"
                  << "welfare " << real(welfare(network, society)) << '\n'
                  << "pairwise stable " << (is_pairwise_stable(network, society) ? "yes" : "no") << '\n';
        return Success;
    }

    void print_boundaries(const char * label, const std::vector<double> & values)
    {
        std::cout << label;
        for (double v : values)
            std::cout << ' ' << real(v);
        std::cout << '\n';
    }

    auto cmd_classify(const Common & common) -> int
    {
        auto scenario = load(common);
        auto society = scenario.society();
        auto params = society.params;
        int m = society.partition.group_count();

        if (params.cost >= y3(params.delta)) {
            std::cerr << "outside the closed-form range: cost " << real(params.cost) << " >= y3 = " << real(y3(params.delta)) << '\n';
            return ValidationError;
        }

        if (m == 2) {
            int s1 = scenario.group_sizes[0], s2 = scenario.group_sizes[1];
            double f = scenario.coordination.at(0);
            std::cout << "groups " << s1 << ' ' << s2 << "  F12 " << real(f) << '\n';
            print_boundaries("stable boundaries", stable_boundaries(s1, s2, params));
            print_boundaries("efficient boundaries", efficient_boundaries(s1, s2, params));
            auto stable = classify_two_group_stable(s1, s2, params, f);
            auto efficient = classify_two_group_efficient(s1, s2, params, f);
            auto [slo, shi] = predicted_interconnections(stable, s1, s2);
            auto [elo, ehi] = predicted_interconnections(efficient, s1, s2);
            std::cout << "stable regime " << stable.describe() << "  interconnections " << format_count(slo, shi) << '\n'
                      << "efficient regime " << efficient.describe() << "  interconnections " << format_count(elo, ehi) << '\n'
                      << "stable equals efficient " << (stability_efficiency_overlap(s1, s2, params, f) ? "yes" : "no") << '\n'
                      << "overlap intervals";
            for (auto [lo, hi] : overlap_intervals(s1, s2, params))
                std::cout << " [" << real(lo) << ", " << real(hi) << ']';
            std::cout << '\n';
            return Success;
        }

        std::cout << "groups";
        for (int s : scenario.group_sizes)
            std::cout << ' ' << s;
        std::cout << '\n';
        for (int a = 0 ; a < m ; ++a)
            for (int b = a + 1 ; b < m ; ++b) {
                auto r = redundancy_bounds(society.partition.size_of(a), society.partition.size_of(b), params);
                std::cout << "pair " << a << '-' << b << "  F " << real(society.coordination.at(a, b))
                          << "  redundant above " << real(r.redundant_lb) << "  maximal above " << real(r.maximal_lb) << '\n';
            }
        if (m > 1)
            for (int centre = 0 ; centre < m ; ++centre)
                std::cout << "star centred on " << centre << "  sufficient for stability "
                          << (minimally_connected_sufficient(GroupGraph::star(m, centre), society.coordination, society.partition, params)
                              ? "yes" : "no") << '\n';
        return Success;
    }

    auto cmd_sweep(const Common & common, const std::string & param, double from, double to, double step,
        const std::string & svg) -> int
    {
        auto scenario = load(common);
        SweepSpec spec{parse_sweep_parameter(param), from, to, step};
        auto rows = run_sweep(scenario, spec, common.workers);
        if (common.out.empty())
            write_sweep_csv(std::cout, spec.parameter, rows);
        else {
            auto out = open_out(common.out);
            write_sweep_csv(out, spec.parameter, rows);
        }
        if (! svg.empty()) {
            auto out = open_out(svg);
            write_sweep_svg(out, spec.parameter, rows);
        }
        return Success;
    }

    struct DynamicsArgs
    {
        std::string script;
        std::string start;
        std::string final;
        std::optional<std::size_t> window;
        bool invariant = false;
    };

    auto cmd_dynamics(const Common & common, const DynamicsArgs & args) -> int
    {
        auto scenario = load(common);
        if (args.window)
            scenario.convergence_window = *args.window;
        auto society = scenario.society();
        int n = society.node_count();

        std::optional<PairSelector> selector;
        if (! args.script.empty())
            selector = PairSelector::scripted(read_pair_script_file(args.script, n));
        else if (scenario.seed)
            selector = PairSelector::seeded_uniform(*scenario.seed);
        else
            throw InvalidModel{"dynamics needs a seed (scenario key or --seed) or --script"};

        Network start = args.start.empty() ? Network(n) : read_edge_list_file(args.start, n);
        RunOptions options{scenario.max_steps, scenario.convergence_window};
        auto trace = args.invariant ? run_from_invariant_set(start, std::move(*selector), society, options)
                                    : run(start, std::move(*selector), society, options);

        if (! common.out.empty()) {
            auto out = open_out(common.out);
            write_trace_csv(out, trace);
        }
        if (! args.final.empty())
            write_edge_list_file(args.final, trace.final);

        auto counts = count_connections(trace.final, society.partition);
        std::cout << "periods " << trace.steps.size() << '\n'
                  << "converged " << (trace.converged ? "yes" : "no") << '\n';
        if (trace.steps_to_convergence)
            std::cout << "steps to convergence " << *trace.steps_to_convergence << '\n';
        std::cout << "final intra " << counts.intra << " inter " << counts.inter << '\n'
                  << "final welfare " << real(welfare(trace.final, society)) << '\n';
        return Success;
    }

    void write_network_set(const std::filesystem::path & dir, const std::vector<Network> & networks, const Society & society)
    {
        std::filesystem::create_directories(dir);
        auto summary = open_out((dir / "summary.csv").string());
        summary << "index,edge_count,inter_count,welfare\n";
        for (std::size_t t = 0 ; t < networks.size() ; ++t) {
            char name[32];
            std::snprintf(name, sizeof name, "network_%06zu.edges", t);
            write_edge_list_file(dir / name, networks[t]);
            summary << t << ',' << networks[t].edge_count() << ',' << count_connections(networks[t], society.partition).inter
                    << ',' << real(welfare(networks[t], society)) << '\n';
        }
    }

    auto cmd_stable(const Common & common) -> int
    {
        auto scenario = load(common);
        auto society = scenario.society();
        auto space = scenario.search_space();
        auto stable = enumerate_stable(space, society, common.workers);
        write_network_set(common.out, stable, society);
        std::cout << "space " << space.label() << " (" << space.cardinality() << " networks)\n"
                  << "pairwise stable " << stable.size() << '\n';
        return Success;
    }

    auto cmd_efficient(const Common & common) -> int
    {
        auto scenario = load(common);
        auto society = scenario.society();
        auto space = scenario.search_space();
        auto best = efficient_search(space, society, common.workers);
        write_network_set(common.out, best.argmax, society);
        std::cout << "space " << space.label() << " (" << space.cardinality() << " networks)\n"
                  << "best welfare " << real(best.best_welfare) << '\n'
                  << "efficient networks " << best.argmax.size() << '\n';
        return Success;
    }

    auto cmd_poa(const Common & common) -> int
    {
        auto scenario = load(common);
        auto society = scenario.society();
        auto poa = price_of_anarchy(scenario.search_space(), society, common.workers);
        std::cout << "space " << poa.space << '\n'
                  << "max welfare " << real(poa.max_welfare) << '\n'
                  << "min stable welfare " << real(poa.min_stable_welfare) << '\n'
                  << "stable networks " << poa.stable_count << '\n'
                  << "price of anarchy " << real(poa.value) << '\n';
        return Success;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"netform: group-structured network formation"};
    app.require_subcommand(1);

    Common eval_c, classify_c, sweep_c, dyn_c, stable_c, eff_c, poa_c;

    std::string network_path;
    auto eval = app.add_subcommand("eval", "per-node payoffs and welfare of a network");
    add_common(*eval, eval_c, false);
    eval->add_option("--network", network_path, "edge-list file")->required()->check(CLI::ExistingFile);

    auto classify = app.add_subcommand("classify", "closed-form regimes and boundaries");
    add_common(*classify, classify_c, false);

    std::string param, svg;
    double from = 0.0, to = 1.0, step = 0.01;
    auto sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    add_common(*sweep, sweep_c, false);
    sweep->add_option("--param", param, "F12 | s1 | delta | cost")->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--step", step)->required();
    sweep->add_option("--svg", svg, "also write a plot");

    DynamicsArgs dyn_args;
    auto dynamics = app.add_subcommand("dynamics", "run the formation process");
    add_common(*dynamics, dyn_c, false);
    dynamics->add_option("--script", dyn_args.script, "pair script, one \"i j\" per line")->check(CLI::ExistingFile);
    dynamics->add_option("--start", dyn_args.start, "start network edge list (default empty)")->check(CLI::ExistingFile);
    dynamics->add_option("--final", dyn_args.final, "write the final network here");
    dynamics->add_option("--window", dyn_args.window, "override convergence_window");
    dynamics->add_flag("--invariant-check", dyn_args.invariant, "assert the run stays free of interconnections");

    auto stable = app.add_subcommand("stable", "enumerate pairwise-stable networks into a directory");
    add_common(*stable, stable_c, true);
    auto efficient = app.add_subcommand("efficient", "enumerate welfare-maximising networks into a directory");
    add_common(*efficient, eff_c, true);
    auto poa = app.add_subcommand("poa", "price of anarchy over the search space");
    add_common(*poa, poa_c, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? Success : ValidationError;
    }

    try {
        if (*eval)
            return cmd_eval(eval_c, network_path);
        if (*classify)
            return cmd_classify(classify_c);
        if (*sweep)
            return cmd_sweep(sweep_c, param, from, to, step, svg);
        if (*dynamics)
            return cmd_dynamics(dyn_c, dyn_args);
        if (*stable)
            return cmd_stable(stable_c);
        if (*efficient)
            return cmd_efficient(eff_c);
        if (*poa)
            return cmd_poa(poa_c);
    }
    catch (const CapExceeded & e) {
        std::cerr << "error: " << e.what() << '\n';
        return CapError;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return ValidationError;
    }
    return ValidationError;
}
