#include "tango/placement.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace tango {

double WeightTable::pair(int q, int w) const {
    for (auto& [nbr, e] : pair_weight[q])
        if (nbr == w) return e;
    return 0.0;
}

WeightTable compute_weights(const LogicalCircuit& circuit, const DependencyDag& dag,
                            double gamma) {
    WeightTable t;
    t.gamma = gamma;
    t.gate_weight.resize(circuit.gates.size());
    t.qubit_weight.assign(circuit.num_qubits, 0.0);
    t.pair_weight.resize(circuit.num_qubits);

    std::map<std::pair<int, int>, double> pairs;
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) {
            t.gate_weight[g.id] = 0.0;
            continue;
        }
        double w = std::pow(gamma, dag.layer[g.id]);
        t.gate_weight[g.id] = w;
        t.qubit_weight[g.q0] += w;
        if (g.q1 >= 0) {
            t.qubit_weight[g.q1] += w;
            pairs[{std::min(g.q0, g.q1), std::max(g.q0, g.q1)}] += w;
        }
    }
    for (auto& [qw, e] : pairs) {
        t.pair_weight[qw.first].emplace_back(qw.second, e);
        t.pair_weight[qw.second].emplace_back(qw.first, e);
    }
    return t;
}

double score_mapped(int q, int pos, const Mapping& mapping, const WeightTable& weights,
                    const CouplingGraph& graph) {
    double sum = 0.0;
    const double dia = graph.diameter;
    for (auto& [w, e] : weights.pair_weight[q]) {
        int pw = mapping.log2phys[w];
        if (pw < 0) continue;
        sum += (1.0 - graph.d(pos, pw) / dia) * e;
    }
    return sum;
}

double score_unmapped(int q, int pos, const Mapping& mapping, const WeightTable& weights,
                      const CouplingGraph& graph) {
    int unplaced = 0;
    double weight_sum = 0.0;
    for (auto& [u, e] : weights.pair_weight[q]) {
        if (mapping.log2phys[u] >= 0) continue;
        ++unplaced;
        weight_sum += e;
    }
    int free_neighbors = 0;
    for (int nbr : graph.adj[pos])
        if (mapping.phys2log[nbr] < 0) ++free_neighbors;
    int denom = std::max(free_neighbors, unplaced);
    if (denom == 0) return 0.0;
    return (free_neighbors - unplaced) * weight_sum / denom;
}

namespace {

// Z-scores over the candidate population; all-zero when the spread vanishes.
std::vector<double> zscores(const std::vector<double>& values) {
    const size_t n = values.size();
    std::vector<double> z(n, 0.0);
    if (n == 0) return z;
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    if (var <= 0.0) return z;
    double sd = std::sqrt(var);
    for (size_t i = 0; i < n; ++i) z[i] = (values[i] - mean) / sd;
    return z;
}

// Index of the max, lowest index on ties; with rng, a uniform pick among ties.
template <typename T>
int pick_best(const std::vector<T>& score, std::mt19937_64* rng) {
    int best = 0;
    int ties = 1;
    for (int i = 1; i < static_cast<int>(score.size()); ++i) {
        if (score[i] > score[best]) {
            best = i;
            ties = 1;
        } else if (rng && score[i] == score[best]) {
            ++ties;
            if (std::uniform_int_distribution<int>(1, ties)(*rng) == 1) best = i;
        }
    }
    return best;
}

} // namespace

Mapping place_all(const LogicalCircuit& circuit, const CouplingGraph& graph,
                  const PlacementConfig& config, std::mt19937_64* rng) {
    if (circuit.num_qubits > graph.num_physical)
        throw TooManyQubits("circuit needs " + std::to_string(circuit.num_qubits) +
                            " qubits but device has " +
                            std::to_string(graph.num_physical));

    DependencyDag dag = build_dag(circuit);
    WeightTable weights = compute_weights(circuit, dag, config.gamma);

    std::vector<int> order(circuit.num_qubits);
    for (int i = 0; i < circuit.num_qubits; ++i) order[i] = i;
    if (rng) {
        // shuffle first so equal-weight qubits land in random relative order
        std::shuffle(order.begin(), order.end(), *rng);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return weights.qubit_weight[a] > weights.qubit_weight[b];
        });
    } else {
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (weights.qubit_weight[a] != weights.qubit_weight[b])
                return weights.qubit_weight[a] > weights.qubit_weight[b];
            return a < b;
        });
    }

    Mapping mapping(circuit.num_qubits, graph.num_physical);

    bool first_active = true;
    for (int q : order) {
        if (weights.qubit_weight[q] <= 0.0) break; // gate-less tail handled below
        std::vector<int> free_nodes;
        for (int p = 0; p < graph.num_physical; ++p)
            if (mapping.phys2log[p] < 0) free_nodes.push_back(p);

        if (first_active) {
            mapping.assign(q, center(graph));
            first_active = false;
            continue;
        }
        std::vector<double> fp(free_nodes.size()), fup(free_nodes.size());
        for (size_t i = 0; i < free_nodes.size(); ++i) {
            fp[i] = score_mapped(q, free_nodes[i], mapping, weights, graph);
            fup[i] = score_unmapped(q, free_nodes[i], mapping, weights, graph);
        }
        std::vector<double> fpz = zscores(fp);
        std::vector<double> fupz = zscores(fup);
        std::vector<double> combined(free_nodes.size());
        for (size_t i = 0; i < free_nodes.size(); ++i)
            combined[i] = config.alpha * fpz[i] + config.beta * fupz[i];
        mapping.assign(q, free_nodes[pick_best(combined, rng)]);
    }

    // qubits with no gates go to the remaining free nodes, lowest index first
    int next_free = 0;
    for (int q = 0; q < circuit.num_qubits; ++q) {
        if (mapping.log2phys[q] >= 0) continue;
        while (mapping.phys2log[next_free] >= 0) ++next_free;
        mapping.assign(q, next_free);
    }
    return mapping;
}

} // namespace tango
