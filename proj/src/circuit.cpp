#include "tango/circuit.hpp"

#include <algorithm>
#include <cassert>

namespace tango {

bool is_two_qubit(GateKind k) { return k == GateKind::CX || k == GateKind::Swap; }

bool is_single_qubit(GateKind k) {
    switch (k) {
    case GateKind::X: case GateKind::Y: case GateKind::Z:
    case GateKind::H: case GateKind::S: case GateKind::Sdg:
    case GateKind::T: case GateKind::Tdg:
    case GateKind::RX: case GateKind::RY: case GateKind::RZ:
    case GateKind::U1: case GateKind::U2: case GateKind::U3:
    case GateKind::Id:
        return true;
    default:
        return false;
    }
}

int param_count(GateKind k) {
    switch (k) {
    case GateKind::RX: case GateKind::RY: case GateKind::RZ: case GateKind::U1:
        return 1;
    case GateKind::U2:
        return 2;
    case GateKind::U3:
        return 3;
    default:
        return 0;
    }
}

const char* gate_name(GateKind k) {
    switch (k) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U1: return "u1";
    case GateKind::U2: return "u2";
    case GateKind::U3: return "u3";
    case GateKind::Id: return "id";
    case GateKind::CX: return "cx";
    case GateKind::Swap: return "swap";
    case GateKind::Measure: return "measure";
    case GateKind::Barrier: return "barrier";
    }
    return "?";
}

int LogicalCircuit::count_two_qubit() const { return tango::count_two_qubit(gates); }

int count_two_qubit(const std::vector<Gate>& gates) {
    int n = 0;
    for (const Gate& g : gates)
        if (is_two_qubit(g.kind)) ++n;
    return n;
}

DependencyDag build_dag(const LogicalCircuit& circuit) {
    const int n = static_cast<int>(circuit.gates.size());
    DependencyDag dag;
    dag.predecessors.resize(n);
    dag.blocking_predecessors.resize(n);
    dag.layer.assign(n, 0);

    std::vector<int> last_gate(circuit.num_qubits, -1);
    std::vector<int> last_two_qubit(circuit.num_qubits, -1);

    for (const Gate& g : circuit.gates) {
        assert(g.id >= 0 && g.id < n);
        int layer = 0;
        auto visit = [&](int q) {
            if (q < 0) return;
            if (last_gate[q] >= 0) {
                dag.predecessors[g.id].push_back(last_gate[q]);
                layer = std::max(layer, dag.layer[last_gate[q]] + 1);
            }
            if (last_two_qubit[q] >= 0)
                dag.blocking_predecessors[g.id].push_back(last_two_qubit[q]);
        };
        visit(g.q0);
        visit(g.q1);
        dag.layer[g.id] = layer;
        if (g.q0 >= 0) last_gate[g.q0] = g.id;
        if (g.q1 >= 0) last_gate[g.q1] = g.id;
        if (is_two_qubit(g.kind)) {
            last_two_qubit[g.q0] = g.id;
            last_two_qubit[g.q1] = g.id;
        }
    }
    return dag;
}

std::vector<int> front_layer(const LogicalCircuit& circuit, const DependencyDag& dag,
                             const std::vector<bool>& executed) {
    std::vector<int> front;
    for (const Gate& g : circuit.gates) {
        if (!is_two_qubit(g.kind) || executed[g.id]) continue;
        bool ready = true;
        for (int p : dag.blocking_predecessors[g.id])
            if (!executed[p]) { ready = false; break; }
        if (ready) front.push_back(g.id);
    }
    return front;
}

std::vector<int> extended_layer(const LogicalCircuit& circuit, const DependencyDag& dag,
                                const std::vector<bool>& executed, int window) {
    std::vector<int> ext;
    if (window <= 0) return ext;
    std::vector<int> front = front_layer(circuit, dag, executed);
    for (const Gate& g : circuit.gates) {
        if (!is_two_qubit(g.kind) || executed[g.id]) continue;
        if (std::binary_search(front.begin(), front.end(), g.id)) continue;
        ext.push_back(g.id);
        if (static_cast<int>(ext.size()) == window) break;
    }
    return ext;
}

LogicalCircuit reverse_circuit(const LogicalCircuit& circuit) {
    LogicalCircuit out;
    out.num_qubits = circuit.num_qubits;
    out.num_cbits = circuit.num_cbits;
    out.gates.assign(circuit.gates.rbegin(), circuit.gates.rend());
    for (int i = 0; i < static_cast<int>(out.gates.size()); ++i)
        out.gates[i].id = i;
    return out;
}

int compute_depth(const std::vector<Gate>& gates, int num_qubits) {
    std::vector<int> dp(num_qubits, 0);
    for (const Gate& g : gates) {
        switch (g.kind) {
        case GateKind::Barrier:
            break;
        case GateKind::CX: {
            int d = std::max(dp[g.q0], dp[g.q1]) + 1;
            dp[g.q0] = dp[g.q1] = d;
            break;
        }
        case GateKind::Swap: {
            int d = std::max(dp[g.q0], dp[g.q1]) + 3;
            dp[g.q0] = dp[g.q1] = d;
            break;
        }
        default:
            dp[g.q0] += 1;
            break;
        }
    }
    return dp.empty() ? 0 : *std::max_element(dp.begin(), dp.end());
}

int compute_depth(const LogicalCircuit& circuit) {
    return compute_depth(circuit.gates, circuit.num_qubits);
}

} // namespace tango
