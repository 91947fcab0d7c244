#include <doctest.h>

#include <random>

#include "tango/peephole.hpp"
#include "tango/randgen.hpp"
#include "tango/router.hpp"
#include "tango/verifier.hpp"
#include "support.hpp"

using namespace tango;
using namespace tango::test;

namespace {

PhysicalCircuit phys(int n, std::vector<Gate> gates) {
    PhysicalCircuit p;
    p.num_physical = n;
    p.gates = std::move(gates);
    for (int i = 0; i < static_cast<int>(p.gates.size()); ++i) p.gates[i].id = i;
    p.initial = Mapping(n, n);
    p.final = Mapping(n, n);
    for (int i = 0; i < n; ++i) {
        p.initial.assign(i, i);
        p.final.assign(i, i);
    }
    return p;
}

bool same_unitary(const PhysicalCircuit& a, const PhysicalCircuit& b) {
    UnitaryMatrix ua = unitary_of(a.gates, a.num_physical);
    UnitaryMatrix ub = unitary_of(b.gates, b.num_physical);
    return approx_equal_up_to_phase(ua, ub, 1e-8);
}

int cx_count(const PhysicalCircuit& p) {
    int n = 0;
    for (const Gate& g : p.gates)
        if (g.kind == GateKind::CX) ++n;
    return n;
}

} // namespace

TEST_CASE("decompose_swaps default orientation") {
    PhysicalCircuit in = phys(4, {swap_macro(2, 3)});
    PhysicalCircuit out = decompose_swaps(in);
    REQUIRE(out.gates.size() == 3);
    CHECK(out.gates[0].kind == GateKind::CX);
    CHECK(out.gates[0].q0 == 2);
    CHECK(out.gates[0].q1 == 3);
    CHECK(out.gates[1].q0 == 3);
    CHECK(out.gates[1].q1 == 2);
    CHECK(out.gates[2].q0 == 2);
    CHECK(out.gates[2].q1 == 3);
    CHECK(same_unitary(in, out));
}

TEST_CASE("decompose_swaps aligns with the preceding CX, either direction") {
    for (bool reversed : {false, true}) {
        Gate lead = reversed ? cx(3, 2) : cx(2, 3);
        PhysicalCircuit in = phys(4, {lead, swap_macro(2, 3)});
        PhysicalCircuit out = decompose_swaps(in);
        REQUIRE(out.gates.size() == 4);
        // first expanded CX matches the leading gate, enabling cancellation
        CHECK(out.gates[1].q0 == lead.q0);
        CHECK(out.gates[1].q1 == lead.q1);
        CHECK(same_unitary(in, out));

        PhysicalCircuit opt = optimize(in);
        CHECK(cx_count(opt) == 2);
        CHECK(same_unitary(in, opt));
    }
}

TEST_CASE("adjacent self-inverse singles cancel") {
    PhysicalCircuit in = phys(1, {sq(GateKind::X, 0), sq(GateKind::X, 0)});
    CHECK(cancel_and_commute(in).gates.empty());

    PhysicalCircuit sdg = phys(1, {sq(GateKind::S, 0), sq(GateKind::Sdg, 0)});
    CHECK(cancel_and_commute(sdg).gates.empty());

    PhysicalCircuit hxh = phys(1, {sq(GateKind::H, 0), sq(GateKind::X, 0),
                                   sq(GateKind::H, 0)});
    CHECK(cancel_and_commute(hxh).gates.size() == 3); // H does not commute past X
}

TEST_CASE("rotation merging") {
    PhysicalCircuit in = phys(1, {sq(GateKind::RZ, 0, {0.4}), sq(GateKind::RZ, 0, {0.5})});
    PhysicalCircuit out = cancel_and_commute(in);
    REQUIRE(out.gates.size() == 1);
    CHECK(out.gates[0].params[0] == doctest::Approx(0.9));

    PhysicalCircuit zero =
        phys(1, {sq(GateKind::U1, 0, {1.1}), sq(GateKind::U1, 0, {-1.1})});
    CHECK(cancel_and_commute(zero).gates.empty());

    PhysicalCircuit wrap = phys(1, {sq(GateKind::RX, 0, {M_PI}), sq(GateKind::RX, 0, {M_PI})});
    CHECK(cancel_and_commute(wrap).gates.empty()); // 2*pi rotation
}

TEST_CASE("diagonal gates commute through controls to cancel") {
    PhysicalCircuit in = phys(2, {sq(GateKind::T, 0), cx(0, 1), sq(GateKind::Tdg, 0)});
    PhysicalCircuit out = cancel_and_commute(in);
    REQUIRE(out.gates.size() == 1);
    CHECK(out.gates[0].kind == GateKind::CX);
    CHECK(same_unitary(in, out));

    // X slides along the target wire
    PhysicalCircuit xt = phys(2, {sq(GateKind::X, 1), cx(0, 1), sq(GateKind::X, 1)});
    PhysicalCircuit xout = cancel_and_commute(xt);
    REQUIRE(xout.gates.size() == 1);
    CHECK(same_unitary(xt, xout));

    // but X does not slide along the control wire
    PhysicalCircuit xc = phys(2, {sq(GateKind::X, 0), cx(0, 1), sq(GateKind::X, 0)});
    CHECK(cancel_and_commute(xc).gates.size() == 3);
}

TEST_CASE("shared-control and shared-target CX cancellation") {
    PhysicalCircuit in = phys(3, {cx(0, 1), cx(0, 2), cx(0, 1)});
    PhysicalCircuit out = cancel_and_commute(in);
    REQUIRE(out.gates.size() == 1);
    CHECK(out.gates[0].q0 == 0);
    CHECK(out.gates[0].q1 == 2);
    CHECK(same_unitary(in, out));

    PhysicalCircuit tgt = phys(3, {cx(0, 2), cx(1, 2), cx(0, 2)});
    PhysicalCircuit tout = cancel_and_commute(tgt);
    REQUIRE(tout.gates.size() == 1);
    CHECK(tout.gates[0].q0 == 1);
    CHECK(same_unitary(tgt, tout));

    // reversed CX blocks the move
    PhysicalCircuit blocked = phys(2, {cx(0, 1), cx(1, 0), cx(0, 1)});
    CHECK(cancel_and_commute(blocked).gates.size() == 3);
}

TEST_CASE("seven-CNOT routed block reduces to five with depth four") {
    PhysicalCircuit in =
        phys(4, {cx(0, 1), cx(2, 3), swap_macro(2, 3), cx(1, 2), cx(0, 1)});
    PhysicalCircuit naive = decompose_swaps_naive(in);
    CHECK(cx_count(naive) == 7);
    CHECK(compute_depth(naive.gates, 4) == 6);

    PhysicalCircuit opt = optimize(in);
    CHECK(cx_count(opt) == 5);
    CHECK(compute_depth(opt.gates, 4) == 4);
    CHECK(same_unitary(naive, opt));
}

TEST_CASE("optimize is idempotent and monotone on random routed circuits") {
    std::mt19937_64 rng(808);
    CouplingGraph q20 = builtin("q20");
    for (int trial = 0; trial < 10; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<int>(rng() % 5);
        spec.num_gates = 12 + static_cast<int>(rng() % 40);
        LogicalCircuit c = random_circuit(spec, rng);
        RouterConfig cfg;
        cfg.runs = 1;
        PhysicalCircuit routed = route(c, q20, place_all(c, q20, {}), cfg);
        PhysicalCircuit naive = decompose_swaps_naive(routed);
        PhysicalCircuit opt = optimize(routed);

        CHECK(cx_count(opt) <= cx_count(naive));
        CHECK(compute_depth(opt.gates, 20) <= compute_depth(naive.gates, 20));
        CHECK(same_unitary(naive, opt));

        PhysicalCircuit twice = optimize(opt);
        REQUIRE(twice.gates.size() == opt.gates.size());
        for (size_t i = 0; i < opt.gates.size(); ++i) {
            CHECK(twice.gates[i].kind == opt.gates[i].kind);
            CHECK(twice.gates[i].q0 == opt.gates[i].q0);
            CHECK(twice.gates[i].q1 == opt.gates[i].q1);
        }

        // legality: operand pairs only ever come from existing pairs
        CHECK(check_connectivity(opt, q20).empty());
    }
}
