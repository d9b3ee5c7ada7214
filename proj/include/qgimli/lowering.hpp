#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qgimli/circuit.hpp"

namespace qgimli {

/// The 15-gate H/T/T-dagger/CNOT realization of CCNOT(control0, control1,
/// target): 6 CNOT, 2 H, 7 T-family gates, exact (no global phase).
std::vector<Gate> toffoli_replacement(std::uint32_t control0,
                                      std::uint32_t control1,
                                      std::uint32_t target);

/// Replaces every CCNOT in place by its 15-gate sequence; all other gates
/// and the output permutation are preserved verbatim.
Circuit lower_toffoli(const Circuit& circuit);

/// Dense 8x8 complex matrix over a declared 3-wire window.
using UnitaryMatrix = std::array<std::array<std::complex<double>, 8>, 8>;

UnitaryMatrix identity_unitary();

/// CCNOT with window[0], window[1] as controls and window[2] as target.
UnitaryMatrix ccnot_unitary();

/// Product of the gates' 8x8 embeddings in list order (later gates multiply
/// on the left). window[p] is the physical wire of basis bit p, window[0]
/// most significant. Operands outside the window are rejected.
UnitaryMatrix block_unitary(std::span<const Gate> gates,
                            const std::array<std::uint32_t, 3>& window);

double max_entry_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);
bool is_unitary(const UnitaryMatrix& u, double tolerance);

}  // namespace qgimli
