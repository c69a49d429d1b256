#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dlrigid/analyze.hpp"
#include "dlrigid/construction.hpp"
#include "dlrigid/global_rigidity.hpp"
#include "dlrigid/io.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) dlrigid::fail(dlrigid::ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const dlrigid::json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code_for(const dlrigid::Error& e) {
    switch (e.code()) {
        case dlrigid::ErrorCode::ParseError: return 2;
        case dlrigid::ErrorCode::TheoremViolation:
        case dlrigid::ErrorCode::Internal: return 4;
        default: return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis of two-dimensional direction-length frameworks"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string mode = "dbal";
    std::uint64_t seed = 0;
    int trials = 3;
    int moves = 5;
    bool ears = false;
    bool separations = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("input", input, "graph file, JSON or line format, - for stdin");
        }
        cmd->add_option("--seed", seed, "seed for all randomness (default 0)");
        cmd->add_option("--trials", trials, "rank-oracle trials per prime (default 3)");
    };

    auto* cmd_analyze =
        app.add_subcommand("analyze", "report counts, independence, circuit class, "
                                      "M-connectivity, rigidity and balance verdicts");
    add_common(cmd_analyze, true);
    cmd_analyze->add_flag("--ears", ears, "include an ear decomposition into mixed circuits");
    cmd_analyze->add_flag("--separations", separations, "include all 2-separations");

    auto* cmd_certify = app.add_subcommand(
        "certify", "emit an inductive-construction certificate from K3+/K3-");
    add_common(cmd_certify, true);
    cmd_certify->add_option("--mode", mode, "dbal (default) or mconn")
        ->check(CLI::IsMember({"dbal", "mconn"}));

    auto* cmd_replay =
        app.add_subcommand("replay", "rebuild the graph described by a certificate");
    cmd_replay->add_option("input", input, "certificate JSON, - for stdin");

    auto* cmd_generate =
        app.add_subcommand("generate", "random forward construction from K3+/K3-");
    add_common(cmd_generate, false);
    cmd_generate->add_option("--moves", moves, "number of forward moves (default 5)");
    cmd_generate->add_option("--mode", mode, "dbal (default) or mconn")
        ->check(CLI::IsMember({"dbal", "mconn"}));

    auto* cmd_witness = app.add_subcommand(
        "witness", "equivalent non-congruent realisation for an unbalanced graph");
    add_common(cmd_witness, true);

    auto* cmd_dot = app.add_subcommand("export-dot", "graph as DOT, direction edges dashed");
    cmd_dot->add_option("input", input, "graph file, JSON or line format, - for stdin");

    CLI11_PARSE(app, argc, argv);

    try {
        dlrigid::ConstructionMode cmode = mode == "dbal"
                                              ? dlrigid::ConstructionMode::DirectionBalanced
                                              : dlrigid::ConstructionMode::MConnOnly;
        if (*cmd_analyze) {
            dlrigid::MixedGraph g = dlrigid::load_graph(read_input(input));
            dlrigid::AnalyzeOptions opt{seed, trials, ears, separations};
            emit(dlrigid::report_to_json(dlrigid::analyze(g, opt)));
        } else if (*cmd_certify) {
            dlrigid::MixedGraph g = dlrigid::load_graph(read_input(input));
            dlrigid::MatroidView m(g, seed, trials);
            emit(dlrigid::certificate_to_json(dlrigid::decompose(m, cmode)));
        } else if (*cmd_replay) {
            dlrigid::json j;
            try {
                j = dlrigid::json::parse(read_input(input));
            } catch (const dlrigid::json::exception& e) {
                dlrigid::fail(dlrigid::ErrorCode::ParseError, e.what());
            }
            emit(dlrigid::graph_to_json(dlrigid::replay(dlrigid::certificate_from_json(j))));
        } else if (*cmd_generate) {
            auto [g, cert] = dlrigid::random_construct(seed, moves, cmode);
            dlrigid::json j;
            j["graph"] = dlrigid::graph_to_json(g);
            j["certificate"] = dlrigid::certificate_to_json(cert);
            emit(j);
        } else if (*cmd_witness) {
            dlrigid::MixedGraph g = dlrigid::load_graph(read_input(input));
            dlrigid::RealisationQ p = dlrigid::generic_realisation(g, seed);
            dlrigid::Witness w = dlrigid::build_witness(g, p);
            emit(dlrigid::witness_to_json(g, p, w));
        } else if (*cmd_dot) {
            dlrigid::MixedGraph g = dlrigid::load_graph(read_input(input));
            std::cout << dlrigid::to_dot(g);
        }
    } catch (const dlrigid::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
