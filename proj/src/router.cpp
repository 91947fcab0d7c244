#include "tango/router.hpp"

#include <algorithm>
#include <cassert>

#include "tango/peephole.hpp"

namespace tango {

namespace {

SwapEdge normalized(int a, int b) { return a < b ? SwapEdge{a, b} : SwapEdge{b, a}; }

std::uint64_t mix_seed(std::uint64_t seed, int run) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(run + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

} // namespace

Router::Router(const LogicalCircuit& circuit, const CouplingGraph& graph,
               const Mapping& initial, const RouterConfig& config, std::mt19937_64* rng)
    : circuit_(circuit), graph_(graph), cfg_(config), rng_(rng) {
    const int nl = circuit.num_qubits;
    const int np = graph.num_physical;
    if (nl > np)
        throw TooManyQubits("circuit needs " + std::to_string(nl) +
                            " qubits but device has " + std::to_string(np));

    // complete the mapping over ancilla wires so SWAPs can track every slot
    st_.mapping = Mapping(np, np);
    for (int q = 0; q < nl; ++q) {
        int p = initial.log2phys.size() > static_cast<size_t>(q) ? initial.log2phys[q] : -1;
        if (p < 0 || p >= np)
            throw std::invalid_argument("initial mapping must cover all logical qubits");
        st_.mapping.assign(q, p);
    }
    int next_wire = nl;
    for (int w = nl; w < static_cast<int>(initial.log2phys.size()); ++w)
        if (initial.log2phys[w] >= 0) st_.mapping.assign(w, initial.log2phys[w]);
    for (int p = 0; p < np; ++p) {
        if (st_.mapping.phys2log[p] >= 0) continue;
        while (next_wire < np && st_.mapping.log2phys[next_wire] >= 0) ++next_wire;
        st_.mapping.assign(next_wire, p);
    }

    st_.dp.assign(np, 0);
    st_.sg.resize(np); // indexed by wire
    st_.rec.assign(np, -1);
    st_.decay.assign(np, 1.0);
    st_.executed.assign(circuit.gates.size(), false);

    qubit_gates_.resize(nl);
    cursor_.assign(nl, 0);
    list_pos_.assign(circuit.gates.size(), {-1, -1});
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Measure) {
            measures_.push_back(g);
            continue;
        }
        if (g.kind == GateKind::Barrier) continue;
        list_pos_[g.id].first = static_cast<int>(qubit_gates_[g.q0].size());
        qubit_gates_[g.q0].push_back(g.id);
        if (g.q1 >= 0) {
            list_pos_[g.id].second = static_cast<int>(qubit_gates_[g.q1].size());
            qubit_gates_[g.q1].push_back(g.id);
            ++remaining_2q_;
        }
    }
    for (int q = 0; q < nl; ++q) advance(q);
}

void Router::advance(int qubit) {
    auto& list = qubit_gates_[qubit];
    while (cursor_[qubit] < static_cast<int>(list.size())) {
        const Gate& g = circuit_.gates[list[cursor_[qubit]]];
        if (is_two_qubit(g.kind)) break;
        buffer_single(g);
        ++cursor_[qubit];
    }
}

int Router::head(int qubit) const {
    const auto& list = qubit_gates_[qubit];
    if (cursor_[qubit] >= static_cast<int>(list.size())) return -1;
    return list[cursor_[qubit]];
}

std::vector<int> Router::front() const {
    std::vector<int> f;
    for (int q = 0; q < circuit_.num_qubits; ++q) {
        int gid = head(q);
        if (gid < 0) continue;
        const Gate& g = circuit_.gates[gid];
        if (q != g.q0) continue; // count each gate once
        if (head(g.q1) == gid) f.push_back(gid);
    }
    std::sort(f.begin(), f.end());
    return f;
}

std::vector<int> Router::extended(int window) const {
    std::vector<int> ext;
    if (window <= 0) return ext;
    std::vector<int> f = front();
    // skip the fully-executed prefix
    int start = scan_from_;
    const int n = static_cast<int>(circuit_.gates.size());
    for (int id = start; id < n && static_cast<int>(ext.size()) < window; ++id) {
        const Gate& g = circuit_.gates[id];
        if (!is_two_qubit(g.kind) || st_.executed[id]) continue;
        if (std::binary_search(f.begin(), f.end(), id)) continue;
        ext.push_back(id);
    }
    return ext;
}

bool Router::is_executable(int gate_id) const {
    const Gate& g = circuit_.gates[gate_id];
    return graph_.has_edge(st_.mapping.log2phys[g.q0], st_.mapping.log2phys[g.q1]);
}

void Router::buffer_single(const Gate& gate) {
    st_.sg[gate.q0].push_back(gate.id);
}

void Router::flush_buffer(int wire) {
    int pos = st_.mapping.log2phys[wire];
    auto& buf = st_.sg[wire];
    while (!buf.empty()) {
        const Gate& g = circuit_.gates[buf.front()];
        buf.pop_front();
        Gate out = g;
        out.id = static_cast<int>(st_.emitted.size());
        out.q0 = pos;
        st_.emitted.push_back(out);
        st_.executed[g.id] = true;
        st_.dp[pos] += 1;

    }
}

void Router::reset_decay() {
    std::fill(st_.decay.begin(), st_.decay.end(), 1.0);
}

void Router::execute_gate(int gate_id) {
    assert(is_executable(gate_id));
    const Gate& g = circuit_.gates[gate_id];
    flush_buffer(g.q0);
    flush_buffer(g.q1);
    int pc = st_.mapping.log2phys[g.q0];
    int pt = st_.mapping.log2phys[g.q1];

    Gate out = g;
    out.id = static_cast<int>(st_.emitted.size());
    out.q0 = pc;
    out.q1 = pt;
    st_.emitted.push_back(out);

    int d = std::max(st_.dp[pc], st_.dp[pt]) + 1;
    st_.dp[pc] = st_.dp[pt] = d;

    st_.rec[pc] = st_.rec[pt] = out.id;
    st_.executed[gate_id] = true;
    --remaining_2q_;

    ++cursor_[g.q0];
    ++cursor_[g.q1];
    advance(g.q0);
    advance(g.q1);

    while (scan_from_ < static_cast<int>(circuit_.gates.size())) {
        const Gate& s = circuit_.gates[scan_from_];
        if (is_two_qubit(s.kind) && !st_.executed[s.id]) break;
        ++scan_from_;
    }

    reset_decay();
    swaps_since_exec_ = 0;
    stuck_ = 0;
}

void Router::balance_before_swap(int gate_id) {
    const Gate& g = circuit_.gates[gate_id];
    int p0 = st_.mapping.log2phys[g.q0];
    int p1 = st_.mapping.log2phys[g.q1];
    // pop from the shallower side; ties go to the control's qubit
    int s_pos = st_.dp[p0] <= st_.dp[p1] ? p0 : p1;
    int s_wire = st_.mapping.phys2log[s_pos];
    int diff = std::abs(st_.dp[p0] - st_.dp[p1]);
    int k = std::min<int>(diff, static_cast<int>(st_.sg[s_wire].size()));
    for (int i = 0; i < k; ++i) {
        const Gate& sg_gate = circuit_.gates[st_.sg[s_wire].front()];
        st_.sg[s_wire].pop_front();
        Gate out = sg_gate;
        out.id = static_cast<int>(st_.emitted.size());
        out.q0 = s_pos;
        st_.emitted.push_back(out);
        st_.executed[sg_gate.id] = true;
        st_.dp[s_pos] += 1;

    }
}

std::vector<SwapEdge> Router::swap_candidates() const {
    std::vector<int> qubits;
    if (cfg_.candidate_k <= 0) {
        for (int gid : front()) {
            qubits.push_back(circuit_.gates[gid].q0);
            qubits.push_back(circuit_.gates[gid].q1);
        }
    } else {
        int found = 0;
        for (int id = scan_from_;
             id < static_cast<int>(circuit_.gates.size()) && found < cfg_.candidate_k; ++id) {
            const Gate& g = circuit_.gates[id];
            if (!is_two_qubit(g.kind) || st_.executed[id]) continue;
            qubits.push_back(g.q0);
            qubits.push_back(g.q1);
            ++found;
        }
    }
    std::vector<SwapEdge> cands;
    for (int q : qubits) {
        int p = st_.mapping.log2phys[q];
        for (int nbr : graph_.adj[p]) cands.push_back(normalized(p, nbr));
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

int Router::h_exec2q(SwapEdge swap) const {
    const int wa = st_.mapping.phys2log[swap.first];
    const int wb = st_.mapping.phys2log[swap.second];
    auto phys_of = [&](int wire) {
        int p = st_.mapping.log2phys[wire];
        if (p == swap.first) return swap.second;
        if (p == swap.second) return swap.first;
        return p;
    };

    std::vector<int> pos = cursor_;
    auto skip_singles = [&](int q) {
        const auto& list = qubit_gates_[q];
        while (pos[q] < static_cast<int>(list.size()) &&
               !is_two_qubit(circuit_.gates[list[pos[q]]].kind))
            ++pos[q];
    };
    auto scratch_head = [&](int q) -> int {
        const auto& list = qubit_gates_[q];
        return pos[q] < static_cast<int>(list.size()) ? list[pos[q]] : -1;
    };

    int count = 0;
    std::vector<int> work;
    const int nl = circuit_.num_qubits;
    if (wa < nl) work.push_back(wa);
    if (wb < nl) work.push_back(wb);
    while (!work.empty()) {
        int q = work.back();
        work.pop_back();
        skip_singles(q);
        int gid = scratch_head(q);
        if (gid < 0) continue;
        const Gate& g = circuit_.gates[gid];
        int other = g.q0 == q ? g.q1 : g.q0;
        skip_singles(other);
        if (scratch_head(other) != gid) continue;
        if (!graph_.has_edge(phys_of(g.q0), phys_of(g.q1))) continue;
        ++pos[g.q0];
        ++pos[g.q1];
        ++count;
        work.push_back(g.q0);
        work.push_back(g.q1);
    }
    return count;
}

double Router::h_decay_on(SwapEdge swap, const std::vector<int>& front_ids,
                          const std::vector<int>& ext_ids) const {
    auto phys_of = [&](int wire) {
        int p = st_.mapping.log2phys[wire];
        if (p == swap.first) return swap.second;
        if (p == swap.second) return swap.first;
        return p;
    };
    auto dist_sum = [&](const std::vector<int>& ids) {
        double sum = 0.0;
        for (int gid : ids) {
            const Gate& g = circuit_.gates[gid];
            sum += graph_.d(phys_of(g.q0), phys_of(g.q1));
        }
        return sum;
    };
    double score = dist_sum(front_ids) / static_cast<double>(front_ids.size());
    if (!ext_ids.empty())
        score += cfg_.w * dist_sum(ext_ids) / static_cast<double>(ext_ids.size());
    return std::max(st_.decay[swap.first], st_.decay[swap.second]) * score;
}

double Router::h_decay(SwapEdge swap) const {
    return h_decay_on(swap, front(), extended(cfg_.window));
}

double Router::dp_term(SwapEdge swap) const {
    int global = *std::max_element(st_.dp.begin(), st_.dp.end());
    int post = std::max(global, std::max(st_.dp[swap.first], st_.dp[swap.second]) + 3);
    return static_cast<double>(post) / static_cast<double>(global + 3);
}

double Router::reward_term(SwapEdge swap) const {
    int ra = st_.rec[swap.first];
    int rb = st_.rec[swap.second];
    return (ra >= 0 && ra == rb) ? cfg_.reward_value : 0.0;
}

template <typename Score>
int Router::pick_min(const std::vector<Score>& scores, const std::vector<char>& eligible) {
    int best = -1;
    int ties = 0;
    for (int i = 0; i < static_cast<int>(scores.size()); ++i) {
        if (!eligible[i]) continue;
        if (best < 0 || scores[i] < scores[best]) {
            best = i;
            ties = 1;
        } else if (rng_ && scores[i] == scores[best]) {
            ++ties;
            if (std::uniform_int_distribution<int>(1, ties)(*rng_) == 1) best = i;
        }
    }
    return best;
}

SwapEdge Router::select_swap() {
    std::vector<SwapEdge> cands = swap_candidates();
    assert(!cands.empty() && "no SWAP candidate on a connected graph");
    const int n = static_cast<int>(cands.size());
    std::vector<int> f = front();
    std::vector<int> ext = extended(cfg_.window);

    std::vector<double> decay_score(n);
#pragma omp parallel for schedule(static) if (n >= 16)
    for (int i = 0; i < n; ++i) decay_score[i] = h_decay_on(cands[i], f, ext);

    // DistanceOnly picks by h_decay alone; after too long without progress it
    // drops to the guaranteed distance-reducing move below.
    const int progress_limit = 2 * graph_.num_physical + graph_.diameter + 16;
    if (cfg_.mode == RouterConfig::Mode::DistanceOnly && stuck_ <= progress_limit) {
        std::vector<char> all(n, 1);
        return cands[pick_min(decay_score, all)];
    }

    if (cfg_.mode == RouterConfig::Mode::TwoStage) {
        std::vector<int> exec_score(n);
#pragma omp parallel for schedule(static) if (n >= 16)
        for (int i = 0; i < n; ++i) exec_score[i] = h_exec2q(cands[i]);
        int mes = *std::max_element(exec_score.begin(), exec_score.end());
        if (mes > 0) {
            std::vector<char> eligible(n, 0);
            std::vector<double> refine(n, 0.0);
            for (int i = 0; i < n; ++i) {
                if (exec_score[i] != mes) continue;
                eligible[i] = 1;
                refine[i] = decay_score[i] + dp_term(cands[i]) - reward_term(cands[i]);
            }
            return cands[pick_min(refine, eligible)];
        }
    }

    // MES = 0 (or the DistanceOnly backstop): shrink the closest blocked
    // gate's distance by one
    int gstar = blocked_gate();
    const Gate& g = circuit_.gates[gstar];
    int p0 = st_.mapping.log2phys[g.q0];
    int p1 = st_.mapping.log2phys[g.q1];
    int d0 = graph_.d(p0, p1);
    auto enables = [&](SwapEdge e) {
        if (e.first != p0 && e.second != p0 && e.first != p1 && e.second != p1)
            return false;
        auto phys_of = [&](int wire) {
            int p = st_.mapping.log2phys[wire];
            if (p == e.first) return e.second;
            if (p == e.second) return e.first;
            return p;
        };
        return graph_.d(phys_of(g.q0), phys_of(g.q1)) == d0 - 1;
    };
    std::vector<char> eligible(n, 0);
    bool any = false;
    for (int i = 0; i < n; ++i) {
        eligible[i] = enables(cands[i]) ? 1 : 0;
        any = any || eligible[i];
    }
    if (!any) {
        // candidate prefix missed the blocked gate; widen to its incident edges
        cands.clear();
        for (int p : {p0, p1})
            for (int nbr : graph_.adj[p]) cands.push_back(normalized(p, nbr));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        decay_score.assign(cands.size(), 0.0);
        eligible.assign(cands.size(), 0);
        for (int i = 0; i < static_cast<int>(cands.size()); ++i) {
            eligible[i] = enables(cands[i]) ? 1 : 0;
            any = any || eligible[i];
            decay_score[i] = h_decay_on(cands[i], f, ext);
        }
        assert(any && "a distance-reducing SWAP always exists on a connected graph");
    }
    return cands[pick_min(decay_score, eligible)];
}

void Router::apply_swap(SwapEdge swap) {
    int pa = swap.first, pb = swap.second;
    int wa = st_.mapping.phys2log[pa];
    int wb = st_.mapping.phys2log[pb];
    st_.mapping.phys2log[pa] = wb;
    st_.mapping.phys2log[pb] = wa;
    st_.mapping.log2phys[wa] = pb;
    st_.mapping.log2phys[wb] = pa;

    int d = std::max(st_.dp[pa], st_.dp[pb]) + 3;
    st_.dp[pa] = st_.dp[pb] = d;

    st_.decay[pa] += cfg_.delta;
    st_.decay[pb] += cfg_.delta;

    Gate out;
    out.id = static_cast<int>(st_.emitted.size());
    out.kind = GateKind::Swap;
    out.q0 = pa;
    out.q1 = pb;
    st_.emitted.push_back(out);
    st_.rec[pa] = st_.rec[pb] = out.id;
    ++swaps_inserted_;

    ++stuck_;
    if (++swaps_since_exec_ >= cfg_.decay_reset) {
        reset_decay();
        swaps_since_exec_ = 0;
    }
}

int Router::gate_distance(int gate_id) const {
    const Gate& g = circuit_.gates[gate_id];
    return graph_.d(st_.mapping.log2phys[g.q0], st_.mapping.log2phys[g.q1]);
}

int Router::blocked_gate() const {
    int best = -1;
    int best_d = 0;
    for (int gid : front()) {
        int d = gate_distance(gid);
        if (best < 0 || d < best_d) {
            best = gid;
            best_d = d;
        }
    }
    assert(best >= 0);
    return best;
}

PhysicalCircuit Router::run() {
    Mapping initial_full = st_.mapping;
    while (true) {
        // execute every executable front gate, cascading
        bool progress = true;
        while (progress) {
            progress = false;
            for (int gid : front()) {
                if (is_executable(gid)) {
                    execute_gate(gid);
                    progress = true;
                    break;
                }
            }
        }
        if (remaining_2q_ == 0) break;
        balance_before_swap(blocked_gate());
        apply_swap(select_swap());
    }
    for (int q = 0; q < circuit_.num_qubits; ++q) flush_buffer(q);
    for (const Gate& m : measures_) {
        Gate out = m;
        out.id = static_cast<int>(st_.emitted.size());
        out.q0 = st_.mapping.log2phys[m.q0];
        st_.emitted.push_back(out);
        st_.dp[out.q0] += 1;

    }

    PhysicalCircuit out;
    out.num_physical = graph_.num_physical;
    out.gates = st_.emitted;
    out.initial = initial_full;
    out.final = st_.mapping;
    out.swaps_inserted = swaps_inserted_;
    out.final_dp = st_.dp;
    return out;
}

PhysicalCircuit route(const LogicalCircuit& circuit, const CouplingGraph& graph,
                      const Mapping& initial, const RouterConfig& config,
                      std::mt19937_64* rng) {
    Router r(circuit, graph, initial, config, rng);
    return r.run();
}

namespace {

PhysicalCircuit reverse_pass(const PhysicalCircuit& routed) {
    PhysicalCircuit out;
    out.num_physical = routed.num_physical;
    out.gates.assign(routed.gates.rbegin(), routed.gates.rend());
    for (int i = 0; i < static_cast<int>(out.gates.size()); ++i) out.gates[i].id = i;
    out.initial = routed.final;
    out.final = routed.initial;
    out.swaps_inserted = routed.swaps_inserted;
    return out;
}

} // namespace

PassResult run_pipeline(const LogicalCircuit& circuit, const CouplingGraph& graph,
                        const RouterConfig& config, const PlacementConfig& placement) {
    // measures are held out and re-attached through the winner's final mapping
    LogicalCircuit core;
    core.num_qubits = circuit.num_qubits;
    core.num_cbits = circuit.num_cbits;
    std::vector<Gate> measures;
    for (const Gate& g : circuit.gates) {
        if (g.kind == GateKind::Measure) {
            measures.push_back(g);
            continue;
        }
        if (g.kind == GateKind::Barrier) continue;
        Gate h = g;
        h.id = static_cast<int>(core.gates.size());
        core.gates.push_back(h);
    }
    LogicalCircuit reversed = reverse_circuit(core);

    auto finalize = [&](const PhysicalCircuit& p) {
        if (config.emit_swaps) return p;
        if (config.peephole) return optimize(p);
        return decompose_swaps_naive(p);
    };

    PassResult best;
    bool have_best = false;
    for (int run = 0; run < std::max(1, config.runs); ++run) {
        std::mt19937_64 engine(mix_seed(config.seed, run));
        std::mt19937_64* rng = run == 0 ? nullptr : &engine;

        Mapping m0 = place_all(core, graph, placement, rng);
        PhysicalCircuit p1 = route(core, graph, m0, config, rng);
        PhysicalCircuit p2r = route(reversed, graph, p1.final, config, rng);
        PhysicalCircuit p3 = route(core, graph, p2r.final, config, rng);
        PhysicalCircuit p2 = reverse_pass(p2r);

        const PhysicalCircuit* passes[3] = {&p1, &p2, &p3};
        for (int i = 0; i < 3; ++i) {
            PassResult r;
            r.circuit = finalize(*passes[i]);
            r.swaps = passes[i]->swaps_inserted;
            r.pass = i + 1;
            r.run = run;
            r.cnot = 0;
            for (const Gate& g : r.circuit.gates) {
                if (g.kind == GateKind::CX) ++r.cnot;
                else if (g.kind == GateKind::Swap) r.cnot += 3;
            }
            r.depth = compute_depth(r.circuit.gates, r.circuit.num_physical);
            auto key = [](const PassResult& x) {
                return std::make_tuple(x.depth, x.cnot, x.pass);
            };
            if (!have_best || key(r) < key(best)) {
                best = std::move(r);
                have_best = true;
            }
        }
    }

    for (const Gate& m : measures) {
        Gate out = m;
        out.id = static_cast<int>(best.circuit.gates.size());
        out.q0 = best.circuit.final.log2phys[m.q0];
        best.circuit.gates.push_back(out);
    }
    return best;
}

} // namespace tango
