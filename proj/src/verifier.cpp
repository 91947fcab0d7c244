#include "tango/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "tango/router.hpp"

namespace tango {

namespace {

constexpr int kMaxDenseQubits = 12;

struct Mat2 {
    cxd m00, m01, m10, m11;
};

Mat2 gate_matrix(const Gate& g) {
    using namespace std::complex_literals;
    const double isq2 = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -1i, 1i, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {isq2, isq2, isq2, -isq2};
    case GateKind::S: return {1, 0, 0, 1i};
    case GateKind::Sdg: return {1, 0, 0, -1i};
    case GateKind::T: return {1, 0, 0, std::polar(1.0, M_PI / 4)};
    case GateKind::Tdg: return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
    case GateKind::Id: return {1, 0, 0, 1};
    case GateKind::RX: {
        double h = g.params[0] / 2;
        return {std::cos(h), -1i * std::sin(h), -1i * std::sin(h), std::cos(h)};
    }
    case GateKind::RY: {
        double h = g.params[0] / 2;
        return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
    }
    case GateKind::RZ: {
        double h = g.params[0] / 2;
        return {std::polar(1.0, -h), 0, 0, std::polar(1.0, h)};
    }
    case GateKind::U1:
        return {1, 0, 0, std::polar(1.0, g.params[0])};
    case GateKind::U2: {
        double phi = g.params[0], lam = g.params[1];
        return {isq2, -isq2 * std::polar(1.0, lam),
                isq2 * std::polar(1.0, phi), isq2 * std::polar(1.0, phi + lam)};
    }
    case GateKind::U3: {
        double th = g.params[0] / 2, phi = g.params[1], lam = g.params[2];
        return {std::cos(th), -std::sin(th) * std::polar(1.0, lam),
                std::sin(th) * std::polar(1.0, phi),
                std::cos(th) * std::polar(1.0, phi + lam)};
    }
    default:
        break;
    }
    return {1, 0, 0, 1};
}

void apply_1q(std::vector<cxd>& u, size_t dim, int qubit, const Mat2& m, bool parallel) {
    const size_t bit = size_t{1} << qubit;
    const size_t half = dim / 2;
    const size_t low_mask = bit - 1;
#pragma omp parallel for schedule(static) if (parallel && dim >= 128)
    for (size_t i = 0; i < half; ++i) {
        size_t r0 = ((i & ~low_mask) << 1) | (i & low_mask);
        size_t r1 = r0 | bit;
        cxd* row0 = u.data() + r0 * dim;
        cxd* row1 = u.data() + r1 * dim;
        for (size_t c = 0; c < dim; ++c) {
            cxd a = row0[c], b = row1[c];
            row0[c] = m.m00 * a + m.m01 * b;
            row1[c] = m.m10 * a + m.m11 * b;
        }
    }
}

void apply_cx(std::vector<cxd>& u, size_t dim, int control, int target, bool parallel) {
    const size_t cbit = size_t{1} << control;
    const size_t tbit = size_t{1} << target;
#pragma omp parallel for schedule(static) if (parallel && dim >= 128)
    for (size_t r = 0; r < dim; ++r) {
        if ((r & cbit) && !(r & tbit)) {
            cxd* row0 = u.data() + r * dim;
            cxd* row1 = u.data() + (r | tbit) * dim;
            for (size_t c = 0; c < dim; ++c) std::swap(row0[c], row1[c]);
        }
    }
}

UnitaryMatrix unitary_impl(const std::vector<Gate>& gates, int num_qubits, bool parallel) {
    if (num_qubits > kMaxDenseQubits)
        throw TooManyQubits("dense unitary limited to " +
                            std::to_string(kMaxDenseQubits) + " qubits, got " +
                            std::to_string(num_qubits));
    UnitaryMatrix u;
    u.num_qubits = num_qubits;
    const size_t dim = u.dim();
    u.a.assign(dim * dim, cxd{0, 0});
    for (size_t i = 0; i < dim; ++i) u.a[i * dim + i] = 1.0;

    for (const Gate& g : gates) {
        switch (g.kind) {
        case GateKind::Measure:
        case GateKind::Barrier:
            break;
        case GateKind::CX:
            apply_cx(u.a, dim, g.q0, g.q1, parallel);
            break;
        case GateKind::Swap:
            apply_cx(u.a, dim, g.q0, g.q1, parallel);
            apply_cx(u.a, dim, g.q1, g.q0, parallel);
            apply_cx(u.a, dim, g.q0, g.q1, parallel);
            break;
        default:
            apply_1q(u.a, dim, g.q0, gate_matrix(g), parallel);
            break;
        }
    }
    return u;
}

} // namespace

UnitaryMatrix unitary_of(const std::vector<Gate>& gates, int num_qubits) {
    return unitary_impl(gates, num_qubits, true);
}

UnitaryMatrix unitary_of_serial(const std::vector<Gate>& gates, int num_qubits) {
    return unitary_impl(gates, num_qubits, false);
}

std::vector<int> check_connectivity(const std::vector<Gate>& gates,
                                    const CouplingGraph& graph) {
    std::vector<int> violations;
    for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
        const Gate& g = gates[i];
        if (g.q1 >= 0 && !graph.has_edge(g.q0, g.q1)) violations.push_back(i);
    }
    return violations;
}

std::vector<int> check_connectivity(const PhysicalCircuit& circuit,
                                    const CouplingGraph& graph) {
    return check_connectivity(circuit.gates, graph);
}

bool approx_equal_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                              double tolerance) {
    if (a.num_qubits != b.num_qubits || a.a.size() != b.a.size()) return false;
    size_t anchor = 0;
    double best = -1.0;
    for (size_t i = 0; i < a.a.size(); ++i) {
        double mag = std::abs(a.a[i]);
        if (mag > best) {
            best = mag;
            anchor = i;
        }
    }
    if (best < tolerance) // zero matrix is not a unitary
        return false;
    cxd phase = b.a[anchor] / a.a[anchor];
    if (std::abs(std::abs(phase) - 1.0) > tolerance) return false;
    for (size_t i = 0; i < a.a.size(); ++i)
        if (std::abs(phase * a.a[i] - b.a[i]) > tolerance) return false;
    return true;
}

bool equivalent(const LogicalCircuit& logical, const std::vector<Gate>& physical_gates,
                int num_physical, const std::vector<int>& initial_log2phys,
                const std::vector<int>& final_log2phys, double tolerance) {
    const int nl = logical.num_qubits;

    // restrict to positions actually involved
    std::vector<bool> used(num_physical, false);
    for (const Gate& g : physical_gates) {
        if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) continue;
        used[g.q0] = true;
        if (g.q1 >= 0) used[g.q1] = true;
    }
    for (int w = 0; w < nl; ++w) {
        used[initial_log2phys[w]] = true;
        used[final_log2phys[w]] = true;
    }
    std::vector<int> pos_index(num_physical, -1);
    int m = 0;
    for (int p = 0; p < num_physical; ++p)
        if (used[p]) pos_index[p] = m++;
    if (m > kMaxDenseQubits)
        throw TooManyQubits("equivalence check involves " + std::to_string(m) +
                            " physical qubits (cap " +
                            std::to_string(kMaxDenseQubits) + ")");

    // wires at the used positions; logical wires keep their ids, ancilla
    // wires are compacted after them
    std::vector<int> wire_at_init(m, -1), wire_at_final(m, -1);
    auto fill = [&](const std::vector<int>& l2p, std::vector<int>& out) {
        for (int w = 0; w < static_cast<int>(l2p.size()); ++w) {
            int p = l2p[w];
            if (p >= 0 && used[p]) out[pos_index[p]] = w;
        }
    };
    fill(initial_log2phys, wire_at_init);
    fill(final_log2phys, wire_at_final);
    // positions never named by the mapping arrays hold an implicit idle wire
    // pinned in place
    std::vector<int> wires;
    for (int cp = 0; cp < m; ++cp) {
        if (wire_at_init[cp] < 0) wire_at_init[cp] = 1000000 + cp;
        if (wire_at_final[cp] < 0) wire_at_final[cp] = 1000000 + cp;
        wires.push_back(wire_at_init[cp]);
    }
    std::sort(wires.begin(), wires.end());
    {
        std::vector<int> wf = wire_at_final;
        std::sort(wf.begin(), wf.end());
        if (wf != wires) return false; // mappings disagree on the wire set
    }
    auto compact_wire = [&](int w) {
        return static_cast<int>(std::lower_bound(wires.begin(), wires.end(), w) -
                                wires.begin());
    };

    // sigma[cw] = compact position of that wire
    std::vector<int> sigma_init(m), sigma_final(m);
    for (int cp = 0; cp < m; ++cp) {
        sigma_init[compact_wire(wire_at_init[cp])] = cp;
        sigma_final[compact_wire(wire_at_final[cp])] = cp;
    }

    // physical unitary over compact positions
    std::vector<Gate> phys;
    phys.reserve(physical_gates.size());
    for (const Gate& g : physical_gates) {
        if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) continue;
        Gate h = g;
        h.q0 = pos_index[g.q0];
        if (g.q1 >= 0) h.q1 = pos_index[g.q1];
        phys.push_back(h);
    }
    UnitaryMatrix up = unitary_of(phys, m);

    // logical unitary padded with identity wires; logical wire w occupies
    // compact wire compact_wire(w) == w because logical ids sort first
    std::vector<Gate> log;
    log.reserve(logical.gates.size());
    for (const Gate& g : logical.gates) {
        if (g.kind == GateKind::Measure || g.kind == GateKind::Barrier) continue;
        log.push_back(g);
    }
    UnitaryMatrix ul = unitary_of(log, m);

    const size_t dim = size_t{1} << m;
    auto permute_index = [m](size_t x, const std::vector<int>& sigma) {
        size_t y = 0;
        for (int w = 0; w < m; ++w)
            if (x & (size_t{1} << w)) y |= size_t{1} << sigma[w];
        return y;
    };

    // A = U_phys * P_init  (column x of A = column perm(x) of U_phys)
    UnitaryMatrix lhs;
    lhs.num_qubits = m;
    lhs.a.resize(dim * dim);
    for (size_t x = 0; x < dim; ++x) {
        size_t px = permute_index(x, sigma_init);
        for (size_t r = 0; r < dim; ++r) lhs.a[r * dim + x] = up.a[r * dim + px];
    }
    // B = P_final * U_log  (row perm(x) of B = row x of U_log)
    UnitaryMatrix rhs;
    rhs.num_qubits = m;
    rhs.a.resize(dim * dim);
    for (size_t x = 0; x < dim; ++x) {
        size_t px = permute_index(x, sigma_final);
        for (size_t c = 0; c < dim; ++c) rhs.a[px * dim + c] = ul.a[x * dim + c];
    }
    return approx_equal_up_to_phase(lhs, rhs, tolerance);
}

bool equivalent(const LogicalCircuit& logical, const PhysicalCircuit& physical,
                double tolerance) {
    return equivalent(logical, physical.gates, physical.num_physical,
                      physical.initial.log2phys, physical.final.log2phys, tolerance);
}

} // namespace tango
