#include "rigidrank/families.hpp"
#include "rigidrank/graph.hpp"
#include "rigidrank/modular.hpp"
#include "rigidrank/rigidity.hpp"
#include "rigidrank/serialize.hpp"
#include "rigidrank/trimming.hpp"
#include "rigidrank/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace rigidrank;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RIGIDRANK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

Configuration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open configuration file: " + path);
    return read_configuration(in);
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic planar rigidity toolkit for 4-valent graphs"};
    app.require_subcommand(1);
    std::uint64_t seed = default_seed();

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a family graph (edge-list format)");
    std::string gen_spec, gen_out, gen_dot, gen_config_out;
    gen->add_option("familyspec", gen_spec,
                    "e.g. chained-k5me:k=3, chained-k4:k=4, k3-prism:n=6, complete:l=5, "
                    "cycle:n=6, random-regular:d=4,n=20,seed=7")
        ->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_option("--dot", gen_dot, "also write a DOT rendering to this file");
    gen->add_option("--config-out", gen_config_out,
                    "also write a sampled general-position configuration");
    gen->add_option("--seed", seed, "seed for configuration sampling");

    // rank
    auto* rank = app.add_subcommand("rank", "Rigidity-matrix rank (exact or generic estimate)");
    std::string rank_graph, rank_config;
    bool rank_generic = false;
    int rank_trials = kDefaultGenericTrials;
    rank->add_option("-g,--graph", rank_graph, "edge-list file")->required();
    rank->add_option("-c,--config", rank_config, "configuration file (exact rank at p)");
    rank->add_flag("--generic", rank_generic, "Monte-Carlo generic rank estimate");
    rank->add_option("--trials", rank_trials, "trials for the generic estimate");
    rank->add_option("--seed", seed, "seed for the generic estimate");

    // trim
    auto* trim_cmd = app.add_subcommand("trim", "Run the (generic) trimming process");
    std::string trim_graph;
    bool trim_generic = false;
    trim_cmd->add_option("-g,--graph", trim_graph, "edge-list file")->required();
    trim_cmd->add_flag("--generic", trim_generic, "generic trimming (rule 3 enabled)");

    // classify
    auto* cls = app.add_subcommand("classify", "Trimmed / generically-trimmed / A4 / B4 flags");
    std::string cls_graph;
    cls->add_option("-g,--graph", cls_graph, "edge-list file")->required();

    // check
    auto* check = app.add_subcommand("check", "Evaluate the theorem lower bounds");
    std::string check_graph, check_config;
    check->add_option("-g,--graph", check_graph, "edge-list file")->required();
    check->add_option("-c,--config", check_config, "general-position configuration file");
    check->add_option("--seed", seed, "seed for the generic estimate");

    // survey
    auto* sur = app.add_subcommand("survey", "Bound survey over family instances (CSV)");
    std::string sur_spec, sur_out;
    int sur_count = 1;
    sur->add_option("--spec", sur_spec, "familyspec; ranges allowed, e.g. chained-k5me:k=2..6");
    sur->add_option("--count", sur_count, "instance count (random-regular) or 0 for header only");
    sur->add_option("--seed", seed, "master seed");
    sur->add_option("-o,--output", sur_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            FamilySpec spec = FamilySpec::parse(gen_spec);
            Graph g = spec.build();
            std::ofstream file;
            write_edge_list(open_sink(file, gen_out), g);
            if (!gen_dot.empty()) {
                std::ofstream dot(gen_dot);
                if (!dot) throw std::runtime_error("cannot open dot file: " + gen_dot);
                write_dot(dot, g);
            }
            if (!gen_config_out.empty()) {
                std::ofstream cfg(gen_config_out);
                if (!cfg) throw std::runtime_error("cannot open config file: " + gen_config_out);
                write_configuration(cfg, sample_general_position(g.vertex_count(), seed));
            }
            return 0;
        }
        if (*rank) {
            Graph g = load_graph(rank_graph);
            RankResult r;
            if (rank_generic) {
                r = generic_rank(g, rank_trials, seed);
            } else if (!rank_config.empty()) {
                r = rank_at(g, load_configuration(rank_config));
            } else {
                throw CLI::ValidationError("rank", "need either --config or --generic");
            }
            std::cout << to_json(r).dump(2) << "\n";
            return 0;
        }
        if (*trim_cmd) {
            Graph g = load_graph(trim_graph);
            TrimTrace t = trim_generic ? generic_trim(g) : trim(g);
            std::cout << to_json(t).dump(2) << "\n";
            return 0;
        }
        if (*cls) {
            std::cout << to_json(classify(load_graph(cls_graph))).dump(2) << "\n";
            return 0;
        }
        if (*check) {
            Graph g = load_graph(check_graph);
            std::optional<Configuration> p;
            if (!check_config.empty()) p = load_configuration(check_config);
            BoundReport rep = check_bounds(g, p, seed);
            std::cout << to_json(rep).dump(2) << "\n";
            return rep.all_satisfied() ? 0 : 1;
        }
        if (*sur) {
            FamilySpec spec = sur_spec.empty() ? FamilySpec{} : FamilySpec::parse(sur_spec);
            std::ofstream file;
            int violations = survey(spec, sur_count, seed, open_sink(file, sur_out));
            return violations == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
