#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tango/errors.hpp"

namespace tango {

/// Connectivity of a physical device: undirected edges, all-pairs hop
/// distances, diameter. Immutable after construction.
struct CouplingGraph {
    int num_physical = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted
    std::vector<std::vector<int>> adj;      // sorted neighbor lists
    std::vector<int> dist;                  // row-major num_physical^2
    std::vector<uint8_t> adjacent;          // row-major adjacency matrix
    int diameter = 0;

    int d(int a, int b) const { return dist[a * num_physical + b]; }
    bool has_edge(int a, int b) const { return adjacent[a * num_physical + b] != 0; }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

/// Build a graph from an undirected edge list. Throws ArchError on self
/// loops or a disconnected result. Duplicate edges are deduplicated.
CouplingGraph make_graph(int num_physical, std::vector<std::pair<int, int>> edges);

/// Built-in topologies: "q20" (20 qubits, dense) and "rochester" (53 qubits,
/// sparse). Throws ArchError for unknown names.
CouplingGraph builtin(const std::string& name);

/// Parse "N\nu v\n..." edge-list text.
CouplingGraph load_edges(const std::string& text);

/// Resolve a CLI selector: "q20", "rochester", or "file:<path>".
CouplingGraph resolve_arch(const std::string& selector);

/// All-pairs hop distances, BFS per source (OpenMP across sources).
/// Unreachable pairs hold -1.
std::vector<int> all_pairs_bfs(int num_nodes, const std::vector<std::vector<int>>& adj);

/// Serial Floyd-Warshall reference for the BFS kernel.
std::vector<int> all_pairs_floyd_warshall(int num_nodes,
                                          const std::vector<std::pair<int, int>>& edges);

/// Eccentricity-minimal node; ties broken by maximum degree, then lowest index.
int center(const CouplingGraph& graph);

} // namespace tango
