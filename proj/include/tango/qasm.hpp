#pragma once

#include <string>
#include <vector>

#include "tango/circuit.hpp"
#include "tango/errors.hpp"

namespace tango {

/// Parse the OpenQASM 2.0 subset used by the benchmark corpus: qreg/creg,
/// the qelib1 single-qubit set, cx, swap, measure, barrier, and angle
/// expressions over pi. Multiple qregs are flattened to one 0-based index
/// space in declaration order. Barriers are dropped (a warning is recorded),
/// measures are moved to the end of the gate list.
LogicalCircuit parse_qasm(const std::string& text,
                          std::vector<std::string>* warnings = nullptr);

LogicalCircuit parse_qasm_file(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);

std::string serialize_qasm(const std::vector<Gate>& gates, int num_qubits,
                           int num_cbits = 0);
std::string serialize_qasm(const LogicalCircuit& circuit);

} // namespace tango
