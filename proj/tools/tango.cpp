#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tango/peephole.hpp"
#include "tango/qasm.hpp"
#include "tango/report.hpp"
#include "tango/verifier.hpp"

namespace {

using namespace tango;

struct Options {
    std::string arch = "q20";
    RouterConfig router;
    PlacementConfig placement;
    std::string router_mode = "two-stage";
};

void add_config_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("-a,--arch", opt.arch, "q20, rochester, or file:<path>");
    cmd->add_option("--alpha", opt.placement.alpha, "mapped-factor weight");
    cmd->add_option("--beta", opt.placement.beta, "unmapped-factor weight");
    cmd->add_option("--gamma", opt.placement.gamma, "layer-weight decay base");
    cmd->add_option("--delta", opt.router.delta, "SWAP decay increment");
    cmd->add_option("--reward", opt.router.reward_value, "bidirectional-look reward");
    cmd->add_option("--w", opt.router.w, "extended-layer discount");
    cmd->add_option("--window", opt.router.window, "extended-layer size");
    cmd->add_option("--candidate-k", opt.router.candidate_k,
                    "leading two-qubit gates defining SWAP candidates (0 = front layer)");
    cmd->add_option("--runs", opt.router.runs, "independent runs, best kept");
    cmd->add_option("--seed", opt.router.seed, "tie-break seed for runs > 0");
    cmd->add_flag_callback("--no-peephole",
                           [&opt] { opt.router.peephole = false; },
                           "skip gate cancellation");
    cmd->add_flag("--emit-swaps", opt.router.emit_swaps,
                  "keep SWAP macros in the output (implies --no-peephole)");
    cmd->add_option("--router", opt.router_mode,
                    "two-stage (default) or distance-only (ablation)")
        ->check(CLI::IsMember({"two-stage", "distance-only"}));
}

void finish_config(Options& opt) {
    if (const char* env = std::getenv("TANGO_SEED"))
        opt.router.seed = std::strtoull(env, nullptr, 10);
    if (opt.router.emit_swaps) opt.router.peephole = false;
    opt.router.mode = opt.router_mode == "distance-only"
                          ? RouterConfig::Mode::DistanceOnly
                          : RouterConfig::Mode::TwoStage;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    return static_cast<bool>(out);
}

int cmd_map(const Options& opt, const std::string& input, const std::string& output,
            const std::string& report_path) {
    CouplingGraph graph;
    LogicalCircuit circuit;
    try {
        graph = resolve_arch(opt.arch);
        std::vector<std::string> warnings;
        circuit = parse_qasm_file(input, &warnings);
        for (const std::string& w : warnings)
            std::cerr << "warning: " << input << ": " << w << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        std::string name = std::filesystem::path(input).filename().string();
        CompileOutcome out =
            compile_circuit(name, circuit, graph, opt.router, opt.placement);
        if (!output.empty() &&
            !write_file(output, serialize_qasm(out.circuit.gates, graph.num_physical,
                                               circuit.num_cbits))) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        if (!report_path.empty() && !write_file(report_path, report_json(out.report))) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return 2;
        }
        std::cout << name << ": cnot " << out.report.cnot_in << " -> "
                  << out.report.cnot_out << ", depth " << out.report.depth_in << " -> "
                  << out.report.depth_out << ", swaps " << out.report.swaps << ", "
                  << out.report.runtime_s << " s\n";
        return 0;
    } catch (const TooManyQubits& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_bench(const Options& opt, const std::string& suite, const std::string& csv_path,
              int jobs) {
    CouplingGraph graph;
    try {
        graph = resolve_arch(opt.arch);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!std::filesystem::is_directory(suite)) {
        std::cerr << "error: suite directory " << suite << " not found\n";
        return 2;
    }
    BenchResult result = run_bench_suite(suite, graph, opt.router, opt.placement, jobs);
    if (result.reports.empty() && result.failures.empty()) {
        std::cerr << "error: no .qasm files in " << suite << "\n";
        return 2;
    }
    for (const std::string& f : result.failures)
        std::cerr << "failed: " << f << "\n";
    if (!csv_path.empty() && !write_file(csv_path, bench_csv(result))) {
        std::cerr << "error: cannot write " << csv_path << "\n";
        return 2;
    }
    std::cout << result.reports.size() << " circuit(s) compiled, "
              << result.failures.size() << " failed\n";
    return result.failures.empty() ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& logical_path,
               const std::string& physical_path, const std::string& map_path) {
    try {
        CouplingGraph graph = resolve_arch(opt.arch);
        LogicalCircuit logical = parse_qasm_file(logical_path);
        LogicalCircuit physical = parse_qasm_file(physical_path);

        std::ifstream map_in(map_path);
        if (!map_in) {
            std::cerr << "error: cannot open " << map_path << "\n";
            return 2;
        }
        nlohmann::json j = nlohmann::json::parse(map_in);
        std::vector<int> initial = j.at("initial").get<std::vector<int>>();
        std::vector<int> final = j.at("final").get<std::vector<int>>();

        std::vector<int> violations = check_connectivity(physical.gates, graph);
        for (int idx : violations) {
            const Gate& g = physical.gates[idx];
            std::cout << "violation: gate " << idx << " " << gate_name(g.kind) << " q["
                      << g.q0 << "],q[" << g.q1 << "] is not a coupling edge\n";
        }
        if (!violations.empty()) return 1;

        std::vector<Gate> phys_gates;
        for (const Gate& g : physical.gates)
            if (g.kind != GateKind::Measure) phys_gates.push_back(g);
        LogicalCircuit logical_core = logical;
        logical_core.gates.clear();
        for (const Gate& g : logical.gates)
            if (g.kind != GateKind::Measure) logical_core.gates.push_back(g);

        try {
            bool ok = equivalent(logical_core, phys_gates, graph.num_physical, initial,
                                 final);
            if (!ok) {
                std::cout << "violation: circuits are not equivalent under the given "
                             "mappings\n";
                return 1;
            }
            std::cout << "ok: legal and equivalent\n";
        } catch (const TooManyQubits&) {
            std::cout << "ok: legal; equivalence skipped (n>12)\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qubit mapping compiler"};
    app.require_subcommand(1);

    Options opt;
    std::string input, output, report_path, suite, csv_path;
    std::string logical_path, physical_path, map_path;
    int jobs = 1;

    CLI::App* map = app.add_subcommand("map", "compile one circuit");
    map->add_option("-i,--input", input, "input .qasm")->required();
    map->add_option("-o,--output", output, "mapped .qasm to write");
    map->add_option("-r,--report", report_path, "JSON report to write");
    add_config_flags(map, opt);

    CLI::App* bench = app.add_subcommand("bench", "compile a directory of circuits");
    bench->add_option("--suite", suite, "directory of .qasm files")->required();
    bench->add_option("--csv", csv_path, "CSV report to write")->required();
    bench->add_option("--jobs", jobs, "worker threads");
    add_config_flags(bench, opt);

    CLI::App* verify = app.add_subcommand("verify", "check a mapped circuit");
    verify->add_option("--logical", logical_path, "original .qasm")->required();
    verify->add_option("--physical", physical_path, "mapped .qasm")->required();
    verify->add_option("--map", map_path, "JSON with initial/final arrays")->required();
    verify->add_option("-a,--arch", opt.arch, "q20, rochester, or file:<path>");

    CLI11_PARSE(app, argc, argv);
    finish_config(opt);

    if (map->parsed()) return cmd_map(opt, input, output, report_path);
    if (bench->parsed()) return cmd_bench(opt, suite, csv_path, jobs);
    return cmd_verify(opt, logical_path, physical_path, map_path);
}
