#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgimli/circuit.hpp"

namespace qgimli {

/// SWAP gates that, appended after the circuit's gate list, move every bit to
/// its logical output position (making the output permutation the identity).
std::vector<Gate> output_perm_swap_layer(const Circuit& circuit);

/// OpenQASM-2.0-compatible text: header, one register, one line per gate in
/// list order, then the output permutation as trailing `// perm w -> p`
/// comments. With emit_swaps the permutation is materialized as a marked
/// SWAP section instead and the trailing permutation is the identity.
/// Byte-for-byte deterministic for a given circuit.
std::string export_qasm(const Circuit& circuit, bool emit_swaps = false);

/// Subset parser for files produced by export_qasm.
Circuit import_qasm(std::istream& in);
Circuit import_qasm(const std::string& text);

/// {width, gates, output_perm} as JSON; with emit_swaps an extra swap_layer
/// array is included.
std::string export_json(const Circuit& circuit, bool emit_swaps = false);

}  // namespace qgimli
