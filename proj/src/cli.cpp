#include "kcr/cli.hpp"

#include <ostream>
#include <vector>

#include "CLI11.hpp"
#include "kcr/congestion.hpp"
#include "kcr/hardness.hpp"
#include "kcr/io.hpp"
#include "kcr/oracle.hpp"
#include "kcr/random.hpp"

namespace kcr::cli {

namespace {

const char* verdict_word(bool yes) { return yes ? "YES" : "NO"; }

/// Runs a command body, mapping library errors to exit code 2.
template <typename Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const ResourceExhausted& e) {
        err << "error: resource exhausted: " << e.what() << '\n';
    } catch (const io::FormatError& e) {
        err << "error: malformed input: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return ExitCode::error;
}

const char* branch_name(HighCongestionResult::Branch branch) {
    switch (branch) {
        case HighCongestionResult::Branch::unroutable: return "unroutable demand";
        case HighCongestionResult::Branch::trivial: return "offset 0";
        case HighCongestionResult::Branch::direct: return "direct product";
        case HighCongestionResult::Branch::subsets: return "subset scan";
    }
    return "";
}

}  // namespace

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        io::InstanceFile file = io::parse_instance(io::read_file(options.input));
        const std::size_t k = file.demands.size();

        std::uint32_t congestion = 0;
        if (options.offset) {
            const std::size_t d = *options.offset;
            if (d > k || (d == k && k > 0)) {
                throw InvalidInput("offset d=" + std::to_string(d) + " needs d < k (k=" + std::to_string(k) + ")");
            }
            congestion = static_cast<std::uint32_t>(k - d);
            if (file.congestion && *file.congestion != congestion) {
                throw InvalidInput("file congestion " + std::to_string(*file.congestion) + " differs from k-d=" +
                                   std::to_string(congestion));
            }
        } else {
            if (options.algorithm == Algorithm::subset) throw InvalidInput("the subset algorithm needs --d");
            if (!file.congestion) throw InvalidInput("instance has no congestion and no --d was given");
            congestion = *file.congestion;
        }

        Algorithm algorithm = options.algorithm;
        if (algorithm == Algorithm::automatic) {
            algorithm = options.offset && k > 3 * *options.offset ? Algorithm::subset : Algorithm::product;
        }

        Instance inst{file.graph, file.demands, congestion == 0 ? 1u : congestion};
        std::optional<RoutingWitness> witness;
        out << "algorithm: " << (algorithm == Algorithm::subset ? "subset" : "product") << '\n';
        out << "vertices: " << inst.graph.num_vertices() << "\nedges: " << inst.graph.num_edges() << '\n';
        out << "demands: " << k << "\ncongestion: " << congestion << '\n';

        if (algorithm == Algorithm::subset) {
            HighCongestionOptions hc{options.state_cap, options.jobs, options.deterministic};
            HighCongestionResult r = solve_high_congestion(inst.graph, inst.demands, *options.offset, hc);
            out << "offset: " << *options.offset << "\nbranch: " << branch_name(r.branch) << '\n';
            out << "subsets tried: " << r.subsets_tried << "\nstates visited: " << r.states_visited << '\n';
            if (!r.chosen_subset.empty()) {
                out << "chosen subset:";
                for (auto i : r.chosen_subset) out << ' ' << i;
                out << '\n';
            }
            witness = std::move(r.witness);
        } else {
            if (congestion == 0) {
                // k = d = 0: nothing to route.
                witness = RoutingWitness{};
            } else {
                CongestionResult r = solve_congestion(inst.graph, inst.demands, congestion, {options.state_cap});
                out << "subsets tried: 0\nstates visited: " << r.states_visited << '\n';
                witness = std::move(r.witness);
            }
        }
        out << "verdict: " << verdict_word(witness.has_value()) << '\n';
        if (!witness) return int{ExitCode::no};

        RoutingVerdict verdict = check_routing(inst, *witness);
        if (!verdict.accepted()) throw Error("internal: solver witness rejected: " + verdict.message);
        if (options.witness_out) {
            io::write_file(*options.witness_out, io::serialize_witness(*witness));
            out << "witness: " << options.witness_out->string() << '\n';
        }
        return int{ExitCode::yes};
    });
}

int cmd_check(const std::filesystem::path& input, const std::filesystem::path& witness, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        Instance inst = io::parse_instance(io::read_file(input)).instance();
        RoutingWitness w = io::parse_witness(io::read_file(witness));
        RoutingVerdict verdict = check_routing(inst, w);
        if (verdict.accepted()) {
            CongestionProfile profile = congestion_profile(inst.graph, w.paths);
            out << "accepted: max congestion " << profile.max() << " <= " << inst.congestion << '\n';
            return int{ExitCode::yes};
        }
        out << "rejected: " << verdict.message << '\n';
        return int{ExitCode::no};
    });
}

int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Instance inst = io::parse_instance(io::read_file(options.input)).instance();
        OracleCaps caps;
        caps.combinations = options.combination_cap;
        OracleResult r = brute_force_routing(inst, caps);
        out << "demands: " << inst.demands.size() << "\ncongestion: " << inst.congestion << '\n';
        out << "combinations explored: " << r.combinations_explored << '\n';
        out << "verdict: " << verdict_word(r.witness.has_value()) << '\n';
        return int{r.witness ? ExitCode::yes : ExitCode::no};
    });
}

int cmd_gen_hard(const GenHardOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        PsiInstance psi = io::parse_psi(io::read_file(options.psi));
        HardInstance hi = generate_hard_instance(pad_partition(psi), options.strict_regular);
        io::write_file(options.out, io::serialize_instance(io::from_instance(hi.routing)));
        if (options.map_out) io::write_file(*options.map_out, io::serialize_hard_map(hi));
        out << "k: " << hi.k << "\nh: " << hi.h << "\nn: " << hi.n << '\n';
        out << "vertices: " << hi.routing.graph.num_vertices() << "\nedges: " << hi.routing.graph.num_edges() << '\n';
        out << "demands: " << hi.routing.demands.size() << "\ncongestion: " << hi.routing.congestion << '\n';
        return int{ExitCode::yes};
    });
}

int cmd_gen_random(const GenRandomOptions& options, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RandomInstanceParams params{options.vertices, options.edges, options.demands, options.congestion,
                                    options.routable};
        Instance inst = random_instance(params, options.seed);
        io::write_file(options.out, io::serialize_instance(io::from_instance(inst)));
        out << "wrote " << options.out.string() << '\n';
        return int{ExitCode::yes};
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact congestion routing of demand pairs in acyclic digraphs", "kcr"};
    app.require_subcommand(1);

    SolveOptions solve;
    std::string algorithm = "auto";
    std::size_t offset = 0;
    std::string witness_out;
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance; exit 0 = YES, 1 = NO, 2 = error");
    solve_cmd->add_option("input", solve.input, "Instance file")->required();
    solve_cmd->add_option("--algorithm", algorithm, "auto, product, or subset")
        ->check(CLI::IsMember({"auto", "product", "subset"}));
    auto* offset_opt = solve_cmd->add_option("--d", offset, "Offset d; congestion becomes k-d");
    auto* witness_opt = solve_cmd->add_option("--witness", witness_out, "Write the witness here on YES");
    solve_cmd->add_option("--deterministic", solve.deterministic, "Report the lexicographically first subset");
    solve_cmd->add_option("--jobs", solve.jobs, "Threads for the subset scan (0 = all)");
    solve_cmd->add_option("--cap", solve.state_cap, "State cap of the disjoint-paths search");

    std::filesystem::path check_input, check_witness;
    auto* check_cmd = app.add_subcommand("check", "Verify a witness; exit 0 = accepted, 1 = rejected");
    check_cmd->add_option("input", check_input, "Instance file")->required();
    check_cmd->add_option("witness", check_witness, "Witness file")->required();

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decision for small instances");
    oracle_cmd->add_option("input", oracle.input, "Instance file")->required();
    oracle_cmd->add_option("--cap", oracle.combination_cap, "Maximum path combinations");

    GenHardOptions hard;
    std::string map_out;
    auto* hard_cmd = app.add_subcommand("gen-hard", "Routing instance from a partitioned subgraph isomorphism input");
    hard_cmd->add_option("psi", hard.psi, "kcr-psi input file")->required();
    hard_cmd->add_option("out", hard.out, "Instance output file")->required();
    auto* map_opt = hard_cmd->add_option("--map", map_out, "Write vertex and demand roles here");
    hard_cmd->add_flag("--strict-regular", hard.strict_regular, "Require a 3-regular pattern");

    GenRandomOptions random;
    auto* random_cmd = app.add_subcommand("gen-random", "Seeded random DAG instance");
    random_cmd->add_option("--n", random.vertices, "Vertices")->required();
    random_cmd->add_option("--m", random.edges, "Edges")->required();
    random_cmd->add_option("--k", random.demands, "Demands")->required();
    random_cmd->add_option("--c", random.congestion, "Congestion")->required();
    random_cmd->add_option("--seed", random.seed, "Seed");
    random_cmd->add_flag("--routable", random.routable, "Draw targets reachable from their sources");
    random_cmd->add_option("out", random.out, "Instance output file")->required();

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::yes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::error;
    }

    if (solve_cmd->parsed()) {
        if (algorithm == "product") solve.algorithm = Algorithm::product;
        if (algorithm == "subset") solve.algorithm = Algorithm::subset;
        if (offset_opt->count() > 0) solve.offset = offset;
        if (witness_opt->count() > 0) solve.witness_out = witness_out;
        return cmd_solve(solve, out, err);
    }
    if (check_cmd->parsed()) return cmd_check(check_input, check_witness, out, err);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, out, err);
    if (hard_cmd->parsed()) {
        if (map_opt->count() > 0) hard.map_out = map_out;
        return cmd_gen_hard(hard, out, err);
    }
    if (random_cmd->parsed()) return cmd_gen_random(random, out, err);
    return ExitCode::error;
}

}  // namespace kcr::cli
