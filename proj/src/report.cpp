#include "tango/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "tango/qasm.hpp"

namespace tango {

namespace {

int count_cnots(const std::vector<Gate>& gates) {
    int n = 0;
    for (const Gate& g : gates) {
        if (g.kind == GateKind::CX) ++n;
        else if (g.kind == GateKind::Swap) n += 3;
    }
    return n;
}

std::string format_runtime(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    return buf;
}

} // namespace

CompileOutcome compile_circuit(const std::string& name, const LogicalCircuit& circuit,
                               const CouplingGraph& graph, const RouterConfig& router,
                               const PlacementConfig& placement) {
    CompileOutcome out;
    out.report.benchmark = name;
    out.report.qubits = circuit.num_qubits;
    out.report.cnot_in = count_cnots(circuit.gates);
    out.report.depth_in = compute_depth(circuit);
    out.report.router = router;
    out.report.placement = placement;

    auto t0 = std::chrono::steady_clock::now();
    PassResult best = run_pipeline(circuit, graph, router, placement);
    auto t1 = std::chrono::steady_clock::now();

    out.report.runtime_s = std::chrono::duration<double>(t1 - t0).count();
    out.report.cnot_out = count_cnots(best.circuit.gates);
    out.report.depth_out = compute_depth(best.circuit.gates, best.circuit.num_physical);
    out.report.swaps = best.swaps;
    out.report.pass = best.pass;
    out.report.run = best.run;
    out.report.initial = best.circuit.initial.log2phys;
    out.report.final = best.circuit.final.log2phys;
    out.circuit = std::move(best.circuit);
    return out;
}

std::string report_json(const CompileReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["benchmark"] = r.benchmark;
    j["qubits"] = r.qubits;
    j["cnot_in"] = r.cnot_in;
    j["depth_in"] = r.depth_in;
    j["cnot_out"] = r.cnot_out;
    j["depth_out"] = r.depth_out;
    j["runtime_s"] = format_runtime(r.runtime_s);
    j["swaps"] = r.swaps;
    j["pass"] = r.pass;
    j["run"] = r.run;
    j["initial"] = r.initial;
    j["final"] = r.final;
    nlohmann::ordered_json cfg;
    cfg["alpha"] = r.placement.alpha;
    cfg["beta"] = r.placement.beta;
    cfg["gamma"] = r.placement.gamma;
    cfg["delta"] = r.router.delta;
    cfg["reward"] = r.router.reward_value;
    cfg["w"] = r.router.w;
    cfg["window"] = r.router.window;
    cfg["candidate_k"] = r.router.candidate_k;
    cfg["runs"] = r.router.runs;
    cfg["seed"] = r.router.seed;
    cfg["peephole"] = r.router.peephole;
    cfg["emit_swaps"] = r.router.emit_swaps;
    cfg["router"] = r.router.mode == RouterConfig::Mode::TwoStage ? "two-stage"
                                                                  : "distance-only";
    j["config"] = cfg;
    return j.dump(2) + "\n";
}

std::string csv_header() {
    return "benchmark,qubits,cnot_in,depth_in,cnot_out,depth_out,runtime_s,swaps";
}

std::string csv_row(const CompileReport& r) {
    std::string row = r.benchmark;
    row += ',' + std::to_string(r.qubits);
    row += ',' + std::to_string(r.cnot_in);
    row += ',' + std::to_string(r.depth_in);
    row += ',' + std::to_string(r.cnot_out);
    row += ',' + std::to_string(r.depth_out);
    row += ',' + format_runtime(r.runtime_s);
    row += ',' + std::to_string(r.swaps);
    return row;
}

BenchResult run_bench_suite(const std::string& dir, const CouplingGraph& graph,
                            const RouterConfig& router, const PlacementConfig& placement,
                            int jobs) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".qasm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.filename().string() < b.filename().string();
              });

    const int n = static_cast<int>(files.size());
    std::vector<CompileReport> slots(n);
    std::vector<std::string> errors(n);
    if (jobs < 1) jobs = 1;
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
    for (int i = 0; i < n; ++i) {
        const std::string name = files[i].filename().string();
        try {
            LogicalCircuit c = parse_qasm_file(files[i].string());
            slots[i] = compile_circuit(name, c, graph, router, placement).report;
        } catch (const std::exception& e) {
            errors[i] = name + ": " + e.what();
        }
    }

    BenchResult result;
    for (int i = 0; i < n; ++i) {
        if (!errors[i].empty())
            result.failures.push_back(errors[i]);
        else
            result.reports.push_back(std::move(slots[i]));
    }
    return result;
}

std::string bench_csv(const BenchResult& result) {
    std::string out = csv_header() + "\n";
    for (const CompileReport& r : result.reports) out += csv_row(r) + "\n";
    return out;
}

} // namespace tango
