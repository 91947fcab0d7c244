#pragma once

#include "tango/router.hpp"

namespace tango {

/// Expand SWAP macros into three CNOTs, orienting each decomposition so its
/// first CNOT matches the direction of the last two-qubit gate shared by both
/// operands (the REC record at insertion time), which lets the cancellation
/// pass absorb it. Falls back to lower-index-control order.
PhysicalCircuit decompose_swaps(const PhysicalCircuit& circuit);

/// Fixed-orientation expansion, no cancellation setup.
PhysicalCircuit decompose_swaps_naive(const PhysicalCircuit& circuit);

/// Cancel/merge to a fixpoint: self-inverse pairs, dagger pairs, rotation
/// merges, and CNOT pairs reachable across commuting gates (shared-control /
/// shared-target CNOTs, diagonal gates on control wires, X on target wires).
/// Gate order is otherwise preserved; gate count and depth never increase.
PhysicalCircuit cancel_and_commute(const PhysicalCircuit& circuit);

/// decompose_swaps followed by cancel_and_commute.
PhysicalCircuit optimize(const PhysicalCircuit& circuit);

} // namespace tango
