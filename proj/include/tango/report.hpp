#pragma once

#include <string>
#include <vector>

#include "tango/architecture.hpp"
#include "tango/circuit.hpp"
#include "tango/router.hpp"

namespace tango {

struct CompileReport {
    std::string benchmark;
    int qubits = 0;
    int cnot_in = 0;
    int depth_in = 0;
    int cnot_out = 0;
    int depth_out = 0;
    double runtime_s = 0.0;
    int swaps = 0;
    int pass = 0;
    int run = 0;
    std::vector<int> initial; // wire -> position, complete
    std::vector<int> final;
    RouterConfig router;
    PlacementConfig placement;
};

/// Run the pipeline and recount the metrics from the emitted circuit.
/// The result carries the mapped circuit for serialization.
struct CompileOutcome {
    CompileReport report;
    PhysicalCircuit circuit;
};

CompileOutcome compile_circuit(const std::string& name, const LogicalCircuit& circuit,
                               const CouplingGraph& graph, const RouterConfig& router,
                               const PlacementConfig& placement);

std::string report_json(const CompileReport& report);

std::string csv_header();
std::string csv_row(const CompileReport& report);

struct BenchResult {
    std::vector<CompileReport> reports; // sorted by benchmark name
    std::vector<std::string> failures;
};

/// Compile every .qasm file in a directory; rows come out in filename order
/// whatever the worker count.
BenchResult run_bench_suite(const std::string& dir, const CouplingGraph& graph,
                            const RouterConfig& router, const PlacementConfig& placement,
                            int jobs);

std::string bench_csv(const BenchResult& result);

} // namespace tango
