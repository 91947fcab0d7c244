#include "tango/randgen.hpp"

namespace tango {

LogicalCircuit random_circuit(const RandomCircuitSpec& spec, std::mt19937_64& rng) {
    LogicalCircuit c;
    c.num_qubits = spec.num_qubits;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick_qubit(0, spec.num_qubits - 1);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);

    static const GateKind singles[] = {GateKind::X,   GateKind::H,  GateKind::T,
                                       GateKind::Tdg, GateKind::S,  GateKind::Sdg,
                                       GateKind::Z};
    std::uniform_int_distribution<int> pick_single(0, std::size(singles) - 1);

    for (int i = 0; i < spec.num_gates; ++i) {
        Gate g;
        g.id = i;
        if (spec.num_qubits >= 2 && coin(rng) < spec.two_qubit_fraction) {
            g.kind = GateKind::CX;
            g.q0 = pick_qubit(rng);
            do {
                g.q1 = pick_qubit(rng);
            } while (g.q1 == g.q0);
        } else if (spec.parameterized && coin(rng) < 0.25) {
            g.kind = coin(rng) < 0.5 ? GateKind::RZ : GateKind::U1;
            g.q0 = pick_qubit(rng);
            g.params.push_back(angle(rng));
        } else {
            g.kind = singles[pick_single(rng)];
            g.q0 = pick_qubit(rng);
        }
        c.gates.push_back(std::move(g));
    }
    return c;
}

CouplingGraph random_connected_graph(int num_nodes, double extra_edge_prob,
                                     std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < num_nodes; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    for (int u = 0; u < num_nodes; ++u)
        for (int v = u + 1; v < num_nodes; ++v)
            if (coin(rng) < extra_edge_prob) edges.emplace_back(u, v);
    return make_graph(num_nodes, std::move(edges));
}

} // namespace tango
