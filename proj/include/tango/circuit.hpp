#pragma once

#include <string>
#include <vector>

namespace tango {

enum class GateKind {
    X, Y, Z, H, S, Sdg, T, Tdg,
    RX, RY, RZ, U1, U2, U3, Id,
    CX, Swap,
    Measure, Barrier,
};

bool is_two_qubit(GateKind k);
bool is_single_qubit(GateKind k);
int param_count(GateKind k);
const char* gate_name(GateKind k); // lower-case QASM mnemonic

struct Gate {
    int id = -1;
    GateKind kind = GateKind::Id;
    int q0 = -1;
    int q1 = -1; // -1 unless two-qubit
    std::vector<double> params;
    int cbit = -1; // measure target bit

    int num_qubits() const { return q1 < 0 ? 1 : 2; }
    bool touches(int q) const { return q0 == q || q1 == q; }
};

struct LogicalCircuit {
    int num_qubits = 0;
    int num_cbits = 0;
    std::vector<Gate> gates; // ids dense 0..n-1 in order

    int count_two_qubit() const;
};

/// Gate-dependency structure: per-gate predecessor list (last prior gate on
/// each operand qubit) and the longest-path layer of each gate, 0-based.
struct DependencyDag {
    std::vector<std::vector<int>> predecessors;
    // Most recent earlier *two-qubit* gate per operand qubit (-1 if none);
    // single-qubit gates in between never block routing.
    std::vector<std::vector<int>> blocking_predecessors;
    std::vector<int> layer;
};

DependencyDag build_dag(const LogicalCircuit& circuit);

/// Unexecuted two-qubit gates whose two-qubit predecessors are all executed.
std::vector<int> front_layer(const LogicalCircuit& circuit, const DependencyDag& dag,
                             const std::vector<bool>& executed);

/// The next up-to-`window` unexecuted two-qubit gates in topological (id)
/// order after the front layer, excluding front-layer members.
std::vector<int> extended_layer(const LogicalCircuit& circuit, const DependencyDag& dag,
                                const std::vector<bool>& executed, int window);

LogicalCircuit reverse_circuit(const LogicalCircuit& circuit);

/// ASAP depth: singles and measures +1, two-qubit gates max+1, SWAP max+3,
/// barriers ignored.
int compute_depth(const std::vector<Gate>& gates, int num_qubits);
int compute_depth(const LogicalCircuit& circuit);

int count_two_qubit(const std::vector<Gate>& gates);

} // namespace tango
