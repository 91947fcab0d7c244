#include "tango/peephole.hpp"

#include <array>
#include <cmath>
#include <deque>

namespace tango {

namespace {

constexpr double kAngleEps = 1e-12;
constexpr int kLookThrough = 4; // commuting gates to walk past, per wire

PhysicalCircuit decompose_impl(const PhysicalCircuit& circuit, bool adaptive) {
    PhysicalCircuit out = circuit;
    out.gates.clear();
    out.gates.reserve(circuit.gates.size() + 2 * circuit.swaps_inserted);
    std::vector<int> last2q(circuit.num_physical, -1); // index into out.gates

    auto emit = [&](GateKind kind, int a, int b) {
        Gate g;
        g.id = static_cast<int>(out.gates.size());
        g.kind = kind;
        g.q0 = a;
        g.q1 = b;
        out.gates.push_back(g);
        if (b >= 0) last2q[a] = last2q[b] = g.id;
    };

    for (const Gate& g : circuit.gates) {
        if (g.kind != GateKind::Swap) {
            Gate h = g;
            h.id = static_cast<int>(out.gates.size());
            out.gates.push_back(h);
            if (h.q1 >= 0) last2q[h.q0] = last2q[h.q1] = h.id;
            continue;
        }
        int c = std::min(g.q0, g.q1);
        int t = std::max(g.q0, g.q1);
        if (adaptive && last2q[g.q0] >= 0 && last2q[g.q0] == last2q[g.q1]) {
            const Gate& prev = out.gates[last2q[g.q0]];
            c = prev.q0;
            t = prev.q1;
        }
        emit(GateKind::CX, c, t);
        emit(GateKind::CX, t, c);
        emit(GateKind::CX, c, t);
    }
    return out;
}

// Commutation classes on a shared wire: a CNOT control commutes with diagonal
// gates and other controls; a CNOT target commutes with X and other targets.
enum class WireClass { ZLike, XLike, Opaque };

bool is_diagonal(GateKind k) {
    switch (k) {
    case GateKind::Z: case GateKind::S: case GateKind::Sdg:
    case GateKind::T: case GateKind::Tdg:
    case GateKind::RZ: case GateKind::U1:
        return true;
    default:
        return false;
    }
}

WireClass wire_class(const Gate& g, int wire) {
    if (g.kind == GateKind::CX)
        return g.q0 == wire ? WireClass::ZLike : WireClass::XLike;
    if (is_diagonal(g.kind)) return WireClass::ZLike;
    if (g.kind == GateKind::X) return WireClass::XLike;
    return WireClass::Opaque;
}

bool inverse_singles(GateKind a, GateKind b) {
    switch (a) {
    case GateKind::X: case GateKind::Y: case GateKind::Z: case GateKind::H:
        return a == b;
    case GateKind::S: return b == GateKind::Sdg;
    case GateKind::Sdg: return b == GateKind::S;
    case GateKind::T: return b == GateKind::Tdg;
    case GateKind::Tdg: return b == GateKind::T;
    default: return false;
    }
}

bool mergeable_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ ||
           k == GateKind::U1;
}

bool angle_is_trivial(double theta) {
    double r = std::remainder(theta, 2.0 * M_PI);
    return std::abs(r) < kAngleEps;
}

struct Rewriter {
    std::vector<Gate> gates;
    std::vector<bool> alive;
    // doubly linked list per operand slot (slot 0 = q0's wire, 1 = q1's)
    std::vector<std::array<int, 2>> nxt, prv;
    std::deque<int> queue;

    explicit Rewriter(const std::vector<Gate>& input, int num_wires)
        : gates(input),
          alive(input.size(), true),
          nxt(input.size(), {-1, -1}),
          prv(input.size(), {-1, -1}) {
        std::vector<int> last(num_wires, -1);
        for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
            const Gate& g = gates[i];
            if (g.kind == GateKind::Barrier) {
                alive[i] = false;
                continue;
            }
            for (int s = 0; s < (g.q1 >= 0 ? 2 : 1); ++s) {
                int w = s == 0 ? g.q0 : g.q1;
                prv[i][s] = last[w];
                if (last[w] >= 0) {
                    const Gate& p = gates[last[w]];
                    nxt[last[w]][p.q0 == w ? 0 : 1] = i;
                }
                last[w] = i;
            }
            queue.push_back(i);
        }
    }

    int slot(int i, int wire) const { return gates[i].q0 == wire ? 0 : 1; }
    int next_on(int i, int wire) const { return nxt[i][slot(i, wire)]; }
    int prev_on(int i, int wire) const { return prv[i][slot(i, wire)]; }

    void requeue(int i) {
        if (i >= 0 && alive[i]) queue.push_back(i);
    }

    void erase(int i) {
        const Gate& g = gates[i];
        for (int s = 0; s < (g.q1 >= 0 ? 2 : 1); ++s) {
            int p = prv[i][s];
            int n = nxt[i][s];
            int w = s == 0 ? g.q0 : g.q1;
            if (p >= 0) nxt[p][slot(p, w)] = n;
            if (n >= 0) prv[n][slot(n, w)] = p;
            requeue(n);
            // the gap just shrank: everything whose forward window could now
            // reach past this spot needs another look
            for (int back = p, steps = 0; back >= 0 && steps <= kLookThrough;
                 ++steps) {
                requeue(back);
                back = prv[back][slot(back, w)];
            }
        }
        alive[i] = false;
    }

    bool try_single(int i) {
        Gate& gi = gates[i];
        const int w = gi.q0;
        if (gi.kind == GateKind::Id) {
            erase(i);
            return true;
        }
        const WireClass cls = wire_class(gi, w);
        int j = next_on(i, w);
        for (int walked = 0; j >= 0 && walked <= kLookThrough; ++walked) {
            Gate& gj = gates[j];
            if (gj.q1 < 0 && gj.kind != GateKind::Measure) {
                if (inverse_singles(gi.kind, gj.kind)) {
                    erase(j);
                    erase(i);
                    return true;
                }
                if (mergeable_rotation(gi.kind) && gj.kind == gi.kind) {
                    gi.params[0] += gj.params[0];
                    erase(j);
                    if (angle_is_trivial(gi.params[0]))
                        erase(i);
                    else
                        requeue(i);
                    return true;
                }
            }
            if (cls == WireClass::Opaque || wire_class(gj, w) != cls) break;
            j = next_on(j, w);
        }
        return false;
    }

    bool try_cx(int i) {
        const Gate& gi = gates[i];
        const int c = gi.q0, t = gi.q1;
        auto scan = [&](int wire, WireClass cls) {
            int j = next_on(i, wire);
            for (int walked = 0; j >= 0 && walked <= kLookThrough; ++walked) {
                const Gate& gj = gates[j];
                if (gj.kind == GateKind::CX && gj.q0 == c && gj.q1 == t) return j;
                if (wire_class(gj, wire) != cls) return -1;
                j = next_on(j, wire);
            }
            return -1;
        };
        int jc = scan(c, WireClass::ZLike);
        if (jc < 0) return false;
        int jt = scan(t, WireClass::XLike);
        if (jt != jc) return false;
        erase(jc);
        erase(i);
        return true;
    }

    std::vector<Gate> run() {
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            if (!alive[i]) continue;
            const Gate& g = gates[i];
            if (g.kind == GateKind::Measure) continue;
            if (g.kind == GateKind::CX)
                try_cx(i);
            else if (g.q1 < 0)
                try_single(i);
        }
        std::vector<Gate> out;
        out.reserve(gates.size());
        for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
            if (!alive[i]) continue;
            Gate g = gates[i];
            g.id = static_cast<int>(out.size());
            out.push_back(g);
        }
        return out;
    }
};

} // namespace

PhysicalCircuit decompose_swaps(const PhysicalCircuit& circuit) {
    return decompose_impl(circuit, true);
}

PhysicalCircuit decompose_swaps_naive(const PhysicalCircuit& circuit) {
    return decompose_impl(circuit, false);
}

PhysicalCircuit cancel_and_commute(const PhysicalCircuit& circuit) {
    PhysicalCircuit out = circuit;
    Rewriter rw(circuit.gates, circuit.num_physical);
    out.gates = rw.run();
    return out;
}

PhysicalCircuit optimize(const PhysicalCircuit& circuit) {
    return cancel_and_commute(decompose_swaps(circuit));
}

} // namespace tango
