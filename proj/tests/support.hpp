#pragma once

#include <vector>

#include "tango/circuit.hpp"

namespace tango::test {

inline Gate cx(int a, int b) {
    Gate g;
    g.kind = GateKind::CX;
    g.q0 = a;
    g.q1 = b;
    return g;
}

inline Gate sq(GateKind kind, int q, std::vector<double> params = {}) {
    Gate g;
    g.kind = kind;
    g.q0 = q;
    g.params = std::move(params);
    return g;
}

inline Gate swap_macro(int a, int b) {
    Gate g;
    g.kind = GateKind::Swap;
    g.q0 = a;
    g.q1 = b;
    return g;
}

inline LogicalCircuit circuit_of(int num_qubits, std::vector<Gate> gates) {
    LogicalCircuit c;
    c.num_qubits = num_qubits;
    c.gates = std::move(gates);
    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) c.gates[i].id = i;
    return c;
}

/// Longest weighted path over the dependency DAG: 1 per gate, 3 per SWAP,
/// 0 per barrier. Independent oracle for compute_depth.
inline int longest_path_depth(const LogicalCircuit& c) {
    DependencyDag dag = build_dag(c);
    std::vector<int> len(c.gates.size(), 0);
    int depth = 0;
    for (const Gate& g : c.gates) {
        int w = g.kind == GateKind::Swap ? 3 : g.kind == GateKind::Barrier ? 0 : 1;
        int best = 0;
        for (int p : dag.predecessors[g.id]) best = std::max(best, len[p]);
        len[g.id] = best + w;
        depth = std::max(depth, len[g.id]);
    }
    return depth;
}

} // namespace tango::test
