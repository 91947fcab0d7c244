#pragma once

#include <random>

#include "tango/architecture.hpp"
#include "tango/circuit.hpp"

namespace tango {

struct RandomCircuitSpec {
    int num_qubits = 4;
    int num_gates = 20;
    double two_qubit_fraction = 0.5;
    bool parameterized = true; // include rz/u1 rotations
};

LogicalCircuit random_circuit(const RandomCircuitSpec& spec, std::mt19937_64& rng);

/// Random spanning tree plus extra edges; always connected.
CouplingGraph random_connected_graph(int num_nodes, double extra_edge_prob,
                                     std::mt19937_64& rng);

} // namespace tango
