#include <doctest.h>

#include <cmath>
#include <random>

#include "tango/qasm.hpp"
#include "tango/randgen.hpp"
#include "support.hpp"

using namespace tango;
using namespace tango::test;

TEST_CASE("parse minimal program") {
    LogicalCircuit c = parse_qasm(
        "OPENQASM 2.0; include \"qelib1.inc\"; qreg q[2]; cx q[0],q[1];");
    CHECK(c.num_qubits == 2);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::CX);
    CHECK(c.gates[0].q0 == 0);
    CHECK(c.gates[0].q1 == 1);
}

TEST_CASE("angle expression evaluation") {
    LogicalCircuit c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nu1(pi/4) q[0];");
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0].kind == GateKind::U1);
    CHECK(c.gates[0].params[0] == doctest::Approx(0.7853981633974483).epsilon(1e-15));

    c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nu3(-pi/2, 2*pi, pi-1) q[0];");
    CHECK(c.gates[0].params[0] == doctest::Approx(-M_PI / 2));
    CHECK(c.gates[0].params[1] == doctest::Approx(2 * M_PI));
    CHECK(c.gates[0].params[2] == doctest::Approx(M_PI - 1));
}

TEST_CASE("unsupported and malformed inputs raise structured errors") {
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0; qreg q[3]; ccx q[0],q[1],q[2];"),
                    QasmError);
    try {
        parse_qasm("OPENQASM 2.0;\nqreg q[3];\nccx q[0],q[1],q[2];");
        FAIL("expected error");
    } catch (const QasmError& e) {
        CHECK(e.kind() == QasmError::Kind::UnsupportedGate);
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("ccx") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0; qreg q[2]; cx q[0],q[5];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0; qreg q[2]; cx q[0] q[1];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 3.0; qreg q[2];"), QasmError);
    CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0; qreg q[2]; if (c==1) x q[0];"), QasmError);
}

TEST_CASE("comments, whitespace, broadcast, measure, barrier") {
    std::vector<std::string> warnings;
    LogicalCircuit c = parse_qasm("OPENQASM 2.0;\n"
                                  "// a comment\n"
                                  "include \"qelib1.inc\";\n"
                                  "qreg a[2];\n"
                                  "qreg b[1];\n"
                                  "creg c[3];\n"
                                  "h a;\n"
                                  "barrier a[0], b[0];\n"
                                  "cx a[1], b[0];\n"
                                  "measure a[0] -> c[0];\n"
                                  "x b[0];\n",
                                  &warnings);
    CHECK(c.num_qubits == 3);
    CHECK(c.num_cbits == 3);
    REQUIRE(warnings.size() == 1);
    // h broadcast over a -> 2 gates; barrier dropped; measure pinned last
    REQUIRE(c.gates.size() == 5);
    CHECK(c.gates[0].kind == GateKind::H);
    CHECK(c.gates[1].kind == GateKind::H);
    CHECK(c.gates[2].kind == GateKind::CX);
    CHECK(c.gates[2].q1 == 2); // b[0] flattened after a
    CHECK(c.gates[3].kind == GateKind::X);
    CHECK(c.gates[4].kind == GateKind::Measure);
    CHECK(c.gates[4].cbit == 0);
}

TEST_CASE("serialize basics") {
    std::string empty = serialize_qasm(std::vector<Gate>{}, 20);
    CHECK(empty.find("qreg q[20];") != std::string::npos);
    CHECK(empty.find("cx") == std::string::npos);

    std::string one = serialize_qasm({cx(3, 7)}, 8);
    CHECK(one.find("cx q[3],q[7];") != std::string::npos);
}

TEST_CASE("round-trip identity on random circuits") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<int>(rng() % 6);
        spec.num_gates = 30;
        LogicalCircuit c = random_circuit(spec, rng);
        LogicalCircuit back = parse_qasm(serialize_qasm(c));
        LogicalCircuit twice = parse_qasm(serialize_qasm(back));
        REQUIRE(back.gates.size() == c.gates.size());
        for (size_t i = 0; i < c.gates.size(); ++i) {
            CHECK(back.gates[i].kind == c.gates[i].kind);
            CHECK(back.gates[i].q0 == c.gates[i].q0);
            CHECK(back.gates[i].q1 == c.gates[i].q1);
            REQUIRE(back.gates[i].params.size() == c.gates[i].params.size());
            for (size_t k = 0; k < c.gates[i].params.size(); ++k)
                CHECK(std::abs(back.gates[i].params[k] - c.gates[i].params[k]) < 1e-12);
            // parse(serialize(parse(f))) == parse(f), exactly
            CHECK(twice.gates[i].params == back.gates[i].params);
        }
    }
}

TEST_CASE("parser is total under mutation fuzzing") {
    const std::string base = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[4];\n"
                             "h q[0];\ncx q[0],q[1];\nu1(pi/2) q[2];\ncx q[2],q[3];\n";
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 300; ++trial) {
        std::string mutated = base;
        int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            size_t pos = rng() % mutated.size();
            switch (rng() % 3) {
            case 0: mutated[pos] = static_cast<char>(rng() % 127 + 1); break;
            case 1: mutated.erase(pos, 1); break;
            default: mutated.insert(pos, 1, static_cast<char>(rng() % 127 + 1)); break;
            }
            if (mutated.empty()) mutated = "x";
        }
        try {
            parse_qasm(mutated);
        } catch (const QasmError&) {
            // structured failure is the contract
        }
    }
    CHECK(true);
}
