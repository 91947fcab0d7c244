#pragma once

#include <random>
#include <vector>

#include "tango/architecture.hpp"
#include "tango/circuit.hpp"

namespace tango {

/// Partial bijection between wires (logical qubits, plus any ancilla wire
/// ids the router introduces) and physical positions. -1 means unassigned.
struct Mapping {
    std::vector<int> log2phys;
    std::vector<int> phys2log;

    Mapping() = default;
    Mapping(int num_wires, int num_physical)
        : log2phys(num_wires, -1), phys2log(num_physical, -1) {}

    void assign(int wire, int pos) {
        log2phys[wire] = pos;
        phys2log[pos] = wire;
    }
    bool complete() const {
        for (int p : log2phys)
            if (p < 0) return false;
        return true;
    }
};

/// Layer-discounted gate/qubit/pair weights.
struct WeightTable {
    double gamma = 0.99;
    std::vector<double> gate_weight;  // gamma^layer per gate
    std::vector<double> qubit_weight; // sum of gate weights touching the qubit
    // interaction weights, e[q] = sorted (neighbor, weight) pairs
    std::vector<std::vector<std::pair<int, double>>> pair_weight;

    double pair(int q, int w) const;
};

struct PlacementConfig {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 0.99;
};

WeightTable compute_weights(const LogicalCircuit& circuit, const DependencyDag& dag,
                            double gamma);

/// Pull toward already-placed interaction partners of q when q sits at pos.
double score_mapped(int q, int pos, const Mapping& mapping, const WeightTable& weights,
                    const CouplingGraph& graph);

/// Room for q's still-unplaced interaction partners around pos; negative when
/// free neighborhood is too small.
double score_unmapped(int q, int pos, const Mapping& mapping, const WeightTable& weights,
                      const CouplingGraph& graph);

/// Place every logical qubit: heaviest first at the device center, the rest
/// by argmax of the Z-scored combination of both factors. Deterministic;
/// pass `rng` to randomize exact ties (multi-run mode).
Mapping place_all(const LogicalCircuit& circuit, const CouplingGraph& graph,
                  const PlacementConfig& config, std::mt19937_64* rng = nullptr);

} // namespace tango
