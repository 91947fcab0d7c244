#include <doctest.h>

#include <random>

#include "tango/randgen.hpp"
#include "tango/router.hpp"
#include "tango/verifier.hpp"
#include "support.hpp"

using namespace tango;
using namespace tango::test;

namespace {

bool is_unitary(const UnitaryMatrix& u, double tol) {
    const size_t dim = u.dim();
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            cxd sum = 0;
            for (size_t k = 0; k < dim; ++k)
                sum += u.at(i, k) * std::conj(u.at(j, k));
            cxd want = i == j ? cxd{1, 0} : cxd{0, 0};
            if (std::abs(sum - want) > tol) return false;
        }
    return true;
}

} // namespace

TEST_CASE("unitary_of basics") {
    UnitaryMatrix id = unitary_of({}, 2);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(id.at(i, j) == (i == j ? cxd{1, 0} : cxd{0, 0}));

    UnitaryMatrix x = unitary_of({sq(GateKind::X, 0)}, 1);
    CHECK(x.at(0, 0) == cxd{0, 0});
    CHECK(x.at(0, 1) == cxd{1, 0});
    CHECK(x.at(1, 0) == cxd{1, 0});
    CHECK(x.at(1, 1) == cxd{0, 0});

    UnitaryMatrix cc = unitary_of({cx(0, 1), cx(0, 1)}, 2);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(std::abs(cc.at(i, j) - (i == j ? cxd{1, 0} : cxd{0, 0})) < 1e-12);

    CHECK_THROWS_AS(unitary_of({}, 13), TooManyQubits);
}

TEST_CASE("unitary_of output is unitary; omp and serial kernels agree") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<int>(rng() % 5);
        spec.num_gates = 25;
        LogicalCircuit c = random_circuit(spec, rng);
        UnitaryMatrix u = unitary_of(c.gates, spec.num_qubits);
        CHECK(is_unitary(u, 1e-9));
        UnitaryMatrix s = unitary_of_serial(c.gates, spec.num_qubits);
        for (size_t i = 0; i < u.a.size(); ++i) CHECK(u.a[i] == s.a[i]);
    }
}

TEST_CASE("swap macro equals three CNOTs") {
    UnitaryMatrix sw = unitary_of({swap_macro(0, 1)}, 2);
    // |01> <-> |10>
    CHECK(std::abs(sw.at(1, 2) - cxd{1, 0}) < 1e-12);
    CHECK(std::abs(sw.at(2, 1) - cxd{1, 0}) < 1e-12);
    CHECK(std::abs(sw.at(0, 0) - cxd{1, 0}) < 1e-12);
    CHECK(std::abs(sw.at(3, 3) - cxd{1, 0}) < 1e-12);
}

TEST_CASE("check_connectivity") {
    std::vector<std::pair<int, int>> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CouplingGraph p5 = make_graph(5, e);
    CHECK(check_connectivity({cx(0, 1), sq(GateKind::H, 3), cx(3, 4)}, p5).empty());
    std::vector<int> v = check_connectivity({cx(0, 1), cx(0, 4)}, p5);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == 1);
}

TEST_CASE("equivalent: reflexive, phase-invariant, and violation-sensitive") {
    std::mt19937_64 rng(21);
    RandomCircuitSpec spec;
    spec.num_qubits = 3;
    spec.num_gates = 20;
    LogicalCircuit c = random_circuit(spec, rng);

    std::vector<int> identity = {0, 1, 2};
    CHECK(equivalent(c, c.gates, 3, identity, identity));

    // rz equals u1 up to a global phase
    LogicalCircuit lhs = circuit_of(1, {sq(GateKind::RZ, 0, {1.3})});
    LogicalCircuit rhs = circuit_of(1, {sq(GateKind::U1, 0, {1.3})});
    std::vector<int> id1 = {0};
    CHECK(equivalent(lhs, rhs.gates, 1, id1, id1));

    // a stray X flips the verdict
    LogicalCircuit broken = c;
    Gate stray = sq(GateKind::X, 1);
    stray.id = static_cast<int>(broken.gates.size());
    broken.gates.push_back(stray);
    CHECK(!equivalent(c, broken.gates, 3, identity, identity));
}

TEST_CASE("equivalent understands swap-induced permutations") {
    // physical: swap wires 0,1 then act on position 1 = logical 0
    LogicalCircuit logical = circuit_of(2, {sq(GateKind::H, 0)});
    std::vector<Gate> phys = {swap_macro(0, 1), sq(GateKind::H, 1)};
    std::vector<int> initial = {0, 1};
    std::vector<int> final = {1, 0};
    CHECK(equivalent(logical, phys, 2, initial, final));
    std::vector<int> wrong_final = {0, 1};
    CHECK(!equivalent(logical, phys, 2, initial, wrong_final));
}
