#pragma once

#include <complex>
#include <vector>

#include "tango/architecture.hpp"
#include "tango/circuit.hpp"
#include "tango/placement.hpp"

namespace tango {

struct PhysicalCircuit; // router.hpp

using cxd = std::complex<double>;

/// Dense 2^n x 2^n unitary, row-major, qubit 0 = least significant bit.
struct UnitaryMatrix {
    int num_qubits = 0;
    std::vector<cxd> a;

    size_t dim() const { return size_t{1} << num_qubits; }
    cxd& at(size_t r, size_t c) { return a[r * dim() + c]; }
    const cxd& at(size_t r, size_t c) const { return a[r * dim() + c]; }
};

/// Product of the gate matrices in circuit order. Measures and barriers are
/// skipped. Throws TooManyQubits above 12 qubits.
UnitaryMatrix unitary_of(const std::vector<Gate>& gates, int num_qubits);

/// Serial reference for the OpenMP gate-application kernel.
UnitaryMatrix unitary_of_serial(const std::vector<Gate>& gates, int num_qubits);

/// Indices of two-qubit gates whose operand pair is not a coupling edge.
std::vector<int> check_connectivity(const PhysicalCircuit& circuit,
                                    const CouplingGraph& graph);
std::vector<int> check_connectivity(const std::vector<Gate>& gates,
                                    const CouplingGraph& graph);

/// True iff the mapped circuit equals the logical one up to the wire
/// permutations given by the initial/final mappings and a global phase.
/// Mappings must be complete over the physical positions they name.
bool equivalent(const LogicalCircuit& logical, const PhysicalCircuit& physical,
                double tolerance = 1e-8);
bool equivalent(const LogicalCircuit& logical, const std::vector<Gate>& physical_gates,
                int num_physical, const std::vector<int>& initial_log2phys,
                const std::vector<int>& final_log2phys, double tolerance = 1e-8);

bool approx_equal_up_to_phase(const UnitaryMatrix& a, const UnitaryMatrix& b,
                              double tolerance);

} // namespace tango
