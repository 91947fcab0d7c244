#include "tango/architecture.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tango {

namespace {

// IBM Q20 (Tokyo): 4x5 grid with row/column links plus the crossed diagonals.
const std::vector<std::pair<int, int>>& q20_edges() {
    static const std::vector<std::pair<int, int>> e = {
        // rows
        {0, 1},   {1, 2},   {2, 3},   {3, 4},
        {5, 6},   {6, 7},   {7, 8},   {8, 9},
        {10, 11}, {11, 12}, {12, 13}, {13, 14},
        {15, 16}, {16, 17}, {17, 18}, {18, 19},
        // columns
        {0, 5},   {1, 6},   {2, 7},   {3, 8},   {4, 9},
        {5, 10},  {6, 11},  {7, 12},  {8, 13},  {9, 14},
        {10, 15}, {11, 16}, {12, 17}, {13, 18}, {14, 19},
        // crossed diagonals
        {1, 7},   {2, 6},   {3, 9},   {4, 8},
        {5, 11},  {6, 10},  {7, 13},  {8, 12},
        {11, 17}, {12, 16}, {13, 19}, {14, 18},
    };
    return e;
}

// IBM Rochester, 53 qubits.
const std::vector<std::pair<int, int>>& rochester_edges() {
    static const std::vector<std::pair<int, int>> e = {
        {0, 1},   {1, 2},   {2, 3},   {3, 4},
        {0, 5},   {4, 6},   {5, 9},   {6, 13},
        {7, 8},   {8, 9},   {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14},
        {7, 16},  {11, 17}, {14, 15}, {15, 18},
        {16, 19}, {17, 23}, {18, 27},
        {19, 20}, {20, 21}, {21, 22}, {22, 23}, {23, 24}, {24, 25}, {25, 26}, {26, 27},
        {21, 28}, {25, 29},
        {28, 32}, {29, 36},
        {30, 31}, {31, 32}, {32, 33}, {33, 34}, {34, 35}, {35, 36}, {36, 37},
        {30, 39}, {34, 40}, {37, 38}, {38, 41},
        {39, 42}, {40, 46}, {41, 50},
        {42, 43}, {43, 44}, {44, 45}, {45, 46}, {46, 47}, {47, 48}, {48, 49}, {49, 50},
        {44, 51}, {48, 52},
    };
    return e;
}

} // namespace

std::vector<int> all_pairs_bfs(int num_nodes, const std::vector<std::vector<int>>& adj) {
    std::vector<int> dist(static_cast<size_t>(num_nodes) * num_nodes, -1);
#pragma omp parallel for schedule(dynamic)
    for (int src = 0; src < num_nodes; ++src) {
        int* row = dist.data() + static_cast<size_t>(src) * num_nodes;
        std::vector<int> queue;
        queue.reserve(num_nodes);
        queue.push_back(src);
        row[src] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : adj[v]) {
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

std::vector<int> all_pairs_floyd_warshall(int num_nodes,
                                          const std::vector<std::pair<int, int>>& edges) {
    const int inf = num_nodes + 1;
    std::vector<int> dist(static_cast<size_t>(num_nodes) * num_nodes, inf);
    for (int v = 0; v < num_nodes; ++v) dist[v * num_nodes + v] = 0;
    for (auto [u, v] : edges) {
        dist[u * num_nodes + v] = 1;
        dist[v * num_nodes + u] = 1;
    }
    for (int k = 0; k < num_nodes; ++k)
        for (int i = 0; i < num_nodes; ++i) {
            int dik = dist[i * num_nodes + k];
            if (dik >= inf) continue;
            for (int j = 0; j < num_nodes; ++j) {
                int via = dik + dist[k * num_nodes + j];
                if (via < dist[i * num_nodes + j]) dist[i * num_nodes + j] = via;
            }
        }
    for (int& d : dist)
        if (d >= inf) d = -1;
    return dist;
}

CouplingGraph make_graph(int num_physical, std::vector<std::pair<int, int>> edges) {
    if (num_physical <= 0)
        throw ArchError("graph must have at least one node");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw ArchError("self loop on node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= num_physical || v >= num_physical)
            throw ArchError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    CouplingGraph g;
    g.num_physical = num_physical;
    g.edges = std::move(edges);
    g.adj.resize(num_physical);
    g.adjacent.assign(static_cast<size_t>(num_physical) * num_physical, 0);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
        g.adjacent[u * num_physical + v] = 1;
        g.adjacent[v * num_physical + u] = 1;
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());

    g.dist = all_pairs_bfs(num_physical, g.adj);
    g.diameter = 0;
    for (int d : g.dist) {
        if (d < 0)
            throw ArchError("graph is disconnected");
        g.diameter = std::max(g.diameter, d);
    }
    return g;
}

CouplingGraph builtin(const std::string& name) {
    if (name == "q20") return make_graph(20, q20_edges());
    if (name == "rochester") return make_graph(53, rochester_edges());
    throw ArchError("unknown architecture '" + name + "'");
}

CouplingGraph load_edges(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n))
        throw ArchError("edge list: missing node-count line");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v))
            throw ArchError("edge list: dangling endpoint");
        edges.emplace_back(u, v);
    }
    if (!in.eof()) {
        in.clear();
        std::string junk;
        in >> junk;
        throw ArchError("edge list: unexpected token '" + junk + "'");
    }
    return make_graph(n, std::move(edges));
}

CouplingGraph resolve_arch(const std::string& selector) {
    if (selector.rfind("file:", 0) == 0) {
        std::string path = selector.substr(5);
        std::ifstream in(path);
        if (!in)
            throw ArchError("cannot open architecture file " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return load_edges(ss.str());
    }
    return builtin(selector);
}

int center(const CouplingGraph& graph) {
    int best = -1;
    int best_ecc = 0;
    for (int v = 0; v < graph.num_physical; ++v) {
        int ecc = 0;
        for (int w = 0; w < graph.num_physical; ++w)
            ecc = std::max(ecc, graph.d(v, w));
        bool better = best < 0 || ecc < best_ecc ||
                      (ecc == best_ecc && graph.degree(v) > graph.degree(best));
        if (better) {
            best = v;
            best_ecc = ecc;
        }
    }
    return best;
}

} // namespace tango
