#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <utility>
#include <vector>

#include "tango/architecture.hpp"
#include "tango/circuit.hpp"
#include "tango/placement.hpp"

namespace tango {

struct RouterConfig {
    double delta = 0.001;        // decay increment per SWAP
    double reward_value = 0.5;   // bidirectional-look bonus
    double w = 0.5;              // extended-layer discount
    int window = 20;             // extended-layer size
    int candidate_k = 0;         // leading two-qubit gates defining the SWAP
                                 // candidate set; 0 = whole front layer
    int decay_reset = 5;         // decay resets after this many SWAPs without
                                 // an execution
    int runs = 3;
    std::uint64_t seed = 0;
    bool peephole = true;
    bool emit_swaps = false;     // keep SWAP macros in the output
    enum class Mode { TwoStage, DistanceOnly } mode = Mode::TwoStage;
};

using SwapEdge = std::pair<int, int>; // physical positions, first < second

/// Output of one routing pass. Gate operands are physical positions; SWAPs
/// are macro gates until the optimizer decomposes them. Mappings are complete
/// bijections over all positions (wires >= the logical count are ancillas).
struct PhysicalCircuit {
    int num_physical = 0;
    std::vector<Gate> gates;
    Mapping initial;
    Mapping final;
    int swaps_inserted = 0;
    std::vector<int> final_dp; // depth tracker at end of routing (route() only)
};

/// Routing bookkeeping: current mapping, per-position depth tracker DP,
/// per-wire single-qubit buffers SG (they travel with the logical state),
/// per-position record REC of the last emitted two-qubit gate, and decay.
struct RoutingState {
    Mapping mapping;
    std::vector<int> dp;
    std::vector<std::deque<int>> sg;
    std::vector<int> rec;
    std::vector<double> decay;
    std::vector<Gate> emitted;
    std::vector<bool> executed;
};

class Router {
public:
    Router(const LogicalCircuit& circuit, const CouplingGraph& graph,
           const Mapping& initial, const RouterConfig& config,
           std::mt19937_64* rng = nullptr);

    PhysicalCircuit run();

    bool is_executable(int gate_id) const;
    void buffer_single(const Gate& gate);
    void execute_gate(int gate_id);
    void balance_before_swap(int gate_id);
    std::vector<SwapEdge> swap_candidates() const;
    int h_exec2q(SwapEdge swap) const;
    double h_decay(SwapEdge swap) const;
    double dp_term(SwapEdge swap) const;
    double reward_term(SwapEdge swap) const;
    SwapEdge select_swap();
    void apply_swap(SwapEdge swap);

    std::vector<int> front() const;
    std::vector<int> extended(int window) const;
    int remaining_two_qubit() const { return remaining_2q_; }
    RoutingState& state() { return st_; }
    const RoutingState& state() const { return st_; }

private:
    void advance(int qubit);
    int head(int qubit) const; // gate id at the cursor, -1 past the end
    int gate_distance(int gate_id) const;
    int blocked_gate() const;  // front gate with minimal distance
    double h_decay_on(SwapEdge swap, const std::vector<int>& front_ids,
                      const std::vector<int>& ext_ids) const;
    void flush_buffer(int wire);
    void reset_decay();
    template <typename Score>
    int pick_min(const std::vector<Score>& scores, const std::vector<char>& eligible);

    const LogicalCircuit& circuit_;
    const CouplingGraph& graph_;
    RouterConfig cfg_;
    std::mt19937_64* rng_;

    RoutingState st_;
    std::vector<std::vector<int>> qubit_gates_; // per logical qubit, gate ids
    std::vector<int> cursor_;                   // per logical qubit
    std::vector<std::pair<int, int>> list_pos_; // per gate: index in q0/q1 lists
    std::vector<Gate> measures_;
    int remaining_2q_ = 0;
    int swaps_since_exec_ = 0;
    int stuck_ = 0; // DistanceOnly progress backstop
    int scan_from_ = 0;
    int swaps_inserted_ = 0;
};

PhysicalCircuit route(const LogicalCircuit& circuit, const CouplingGraph& graph,
                      const Mapping& initial, const RouterConfig& config,
                      std::mt19937_64* rng = nullptr);

struct PassResult {
    PhysicalCircuit circuit; // optimized per config
    int depth = 0;
    int cnot = 0;
    int swaps = 0;
    int pass = 0; // 1..3
    int run = 0;  // seed index
};

/// Forward/reverse/forward traversal per run, peephole each pass, keep the
/// (depth, cnot, pass) minimum across runs. Measures are re-attached through
/// the winner's final mapping.
PassResult run_pipeline(const LogicalCircuit& circuit, const CouplingGraph& graph,
                        const RouterConfig& config, const PlacementConfig& placement);

} // namespace tango
